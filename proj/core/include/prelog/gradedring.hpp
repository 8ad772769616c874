#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "prelog/int_matrix.hpp"
#include "prelog/polynomial.hpp"

namespace prelog {

struct VarSpec {
  std::string name;
  int degree = 1;

  friend bool operator==(const VarSpec&, const VarSpec&) = default;
};

using VarList = std::vector<VarSpec>;

Grading grading_of(const VarList& vars);
std::vector<std::string> names_of(const VarList& vars);

/// Throws ConfigError on duplicate names, empty names or degree < 1.
void validate_vars(const VarList& vars);

/// All monomials of weighted degree d. The exponent of the first variable runs
/// from high to low, then the second, and so on: for {H,E,F} in degree 2 this
/// gives [H^2, HE, E^2, F].
std::vector<Monomial> mono_basis(const VarList& vars, int d);

/// Inverse polynomial sum c_a x^{-a}. Monomials are stored with positive
/// exponents; the inverse reading is implied.
class SoclePoly {
public:
  SoclePoly() = default;
  SoclePoly(VarList vars, int top_degree);

  /// Accepts either inverse notation ("H^-3 - 6H^-1E^-2") or the plain
  /// evaluation notation ("H^3 - 6*H*E^2"); mixing both in one term is an
  /// error. Every term must have weighted degree `top_degree`.
  static SoclePoly parse(std::string_view text, const VarList& vars, int top_degree);

  /// Build from positive-exponent terms; throws DegreeError on a term of the
  /// wrong degree.
  static SoclePoly from_terms(const VarList& vars, int top_degree, const GradedPoly& terms);

  const VarList& vars() const { return vars_; }
  int top_degree() const { return top_; }
  const GradedPoly& terms() const { return terms_; }
  Integer coefficient(const Monomial& m) const { return terms_.coefficient(m); }

  /// Sum of coefficient(m) * socle coefficient over the terms of p. Terms of
  /// other degrees contribute nothing.
  Integer evaluate(const GradedPoly& p) const;

  /// Inverse notation, e.g. "H^-3 - 6H^-1E^-2 - 30E^-3 - E^-1F^-1".
  std::string to_string() const;

  friend bool operator==(const SoclePoly&, const SoclePoly&) = default;

private:
  VarList vars_;
  int top_ = 0;
  GradedPoly terms_;
};

/// p acting on f: x^m . x^{-a} = x^{-(a-m)} when a >= m, else 0. The result
/// has top degree f.top_degree() - deg p. Throws DegreeError when p is not
/// homogeneous.
SoclePoly contract(const GradedPoly& p, const SoclePoly& f);

/// The constant term of contract(p*q, f). Throws DegreeError unless
/// deg p + deg q = top degree.
Integer pair(const GradedPoly& p, const GradedPoly& q, const SoclePoly& f);

/// Rows mono_basis(d), columns mono_basis(top - d), entries pair(row, col).
IntMatrix pairing_matrix(const VarList& vars, const SoclePoly& f, int d);

}  // namespace prelog
