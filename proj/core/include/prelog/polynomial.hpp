#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "prelog/int_matrix.hpp"

namespace prelog {

/// Variable name -> weight.
using Grading = std::map<std::string, int>;

/// A monomial in named variables. Exponents are strictly positive; absent
/// variables have exponent zero. Ordering is lexicographic on (name, exponent)
/// pairs and only serves as a container key.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::map<std::string, int> exponents);

  static Monomial variable(const std::string& name, int exponent = 1);

  const std::map<std::string, int>& exponents() const { return exps_; }
  int exponent(const std::string& name) const;
  bool is_one() const { return exps_.empty(); }
  int total_exponent() const;
  int weighted_degree(const Grading& grading) const;

  /// Componentwise quotient this / m, or nullopt if m does not divide this.
  std::optional<Monomial> divide(const Monomial& m) const;

  /// The part of this monomial in the given variables, and the rest.
  std::pair<Monomial, Monomial> split(const std::vector<std::string>& names) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

  /// e.g. "H^2*E"; with `inverse` set, "H^-2E^-1" (juxtaposed, negated exponents).
  std::string to_string(const std::vector<std::string>& order = {}, bool inverse = false,
                        bool explicit_star = true) const;

private:
  std::map<std::string, int> exps_;
};

/// Integer polynomial in named variables, kept in canonical form (no zero
/// coefficients). Homogeneity is a property that can be queried against a
/// grading, not an invariant of the type.
class GradedPoly {
public:
  using Terms = std::map<Monomial, Integer>;

  GradedPoly() = default;
  GradedPoly(long constant);  // NOLINT: integers promote to constants
  GradedPoly(const Integer& constant);
  explicit GradedPoly(const Monomial& m, const Integer& coeff = Integer(1));

  static GradedPoly variable(const std::string& name);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Integer coefficient(const Monomial& m) const;
  Integer constant_term() const { return coefficient(Monomial()); }
  void add_term(const Monomial& m, const Integer& coeff);

  std::vector<std::string> variables() const;

  /// Weighted degree if homogeneous (zero counts as homogeneous of any degree,
  /// reported as nullopt together with is_zero()).
  std::optional<int> homogeneous_degree(const Grading& grading) const;
  bool is_homogeneous(const Grading& grading) const;

  /// Substitute each listed variable by a polynomial; others are kept.
  GradedPoly substitute(const std::map<std::string, GradedPoly>& images) const;

  /// Terms whose monomial has weighted degree d.
  GradedPoly homogeneous_part(const Grading& grading, int d) const;

  GradedPoly pow(unsigned e) const;

  GradedPoly& operator+=(const GradedPoly& o);
  GradedPoly& operator-=(const GradedPoly& o);
  GradedPoly& operator*=(const Integer& k);

  friend GradedPoly operator+(GradedPoly a, const GradedPoly& b) { return a += b; }
  friend GradedPoly operator-(GradedPoly a, const GradedPoly& b) { return a -= b; }
  friend GradedPoly operator-(GradedPoly a) { return a *= Integer(-1); }
  friend GradedPoly operator*(const GradedPoly& a, const GradedPoly& b);
  friend GradedPoly operator*(const Integer& k, GradedPoly a) { return a *= k; }
  friend bool operator==(const GradedPoly&, const GradedPoly&) = default;

  /// Parseable text ("2*H - E^2*F"). Variables inside a monomial follow
  /// `order` when given, otherwise name order.
  std::string to_string(const std::vector<std::string>& order = {}) const;

private:
  Terms terms_;
};

/// Signed-exponent terms straight from the parser.
using LaurentTerms = std::map<std::map<std::string, int>, Integer>;

/// Parse polynomial text: integer coefficients, '+', '-', '*', '^', parentheses
/// and implicit multiplication ("6H^-1E^-2"). When `names` is non-empty, runs
/// of identifier characters are split greedily into the declared names, so
/// "R1R2" reads as R1*R2; otherwise every identifier is a variable.
LaurentTerms parse_laurent(std::string_view text, const std::vector<std::string>& names = {});

/// Parse a polynomial with nonnegative exponents; throws ParseError otherwise.
GradedPoly parse_poly(std::string_view text, const std::vector<std::string>& names = {});

}  // namespace prelog
