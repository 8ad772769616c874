#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "prelog/exactlin.hpp"
#include "prelog/gradedring.hpp"

namespace prelog {

/// pi^*(ambient) + j_*(exceptional) on a blow-up; on any other ring the
/// exceptional part is zero and `ambient` is the whole class.
struct ChowClass {
  GradedPoly ambient;
  GradedPoly exceptional;

  ChowClass() = default;
  ChowClass(GradedPoly a) : ambient(std::move(a)) {}  // NOLINT: plain polynomials are ambient classes
  ChowClass(GradedPoly a, GradedPoly e) : ambient(std::move(a)), exceptional(std::move(e)) {}

  static ChowClass pi(GradedPoly a) { return ChowClass(std::move(a)); }
  static ChowClass j(GradedPoly e) { return ChowClass(GradedPoly(), std::move(e)); }

  bool is_zero() const { return ambient.is_zero() && exceptional.is_zero(); }

  ChowClass& operator+=(const ChowClass& o);
  ChowClass& operator-=(const ChowClass& o);
  friend ChowClass operator+(ChowClass a, const ChowClass& b) { return a += b; }
  friend ChowClass operator-(ChowClass a, const ChowClass& b) { return a -= b; }
  friend ChowClass operator*(const Integer& k, ChowClass a);
  friend bool operator==(const ChowClass&, const ChowClass&) = default;

  std::string to_string() const;
};

class VarietyRing;
using RingPtr = std::shared_ptr<const VarietyRing>;

/// Rank-2 projective bundle data: xi^2 + c1*xi + c2 = 0 over `base`.
struct BundleInfo {
  RingPtr base;
  std::string xi;
  GradedPoly c1;
  GradedPoly c2;
};

struct BlowupPresentation {
  RingPtr ambient;      // X, socle-presented
  RingPtr exceptional;  // E, a rank-2 bundle over the center
  std::map<std::string, GradedPoly> center_pullback;  // X variable -> class on the center
  GradedPoly zeta;      // j_*a . j_*b = -j_*(a b zeta)
};

/// A numerical class group in degree d, computed as the image lattice of the
/// pairing between the degree-d and the degree-(dim-d) spanning sets.
struct GradedPiece {
  int degree = 0;
  std::vector<ChowClass> spanning;
  std::vector<ChowClass> cospanning;
  IntMatrix pairing;  // spanning x cospanning
  IntMatrix basis;    // HNF rows of the image lattice
  std::vector<std::size_t> pivots;
  std::vector<ChowClass> representatives;  // representatives[i] pairs to basis row i
  std::size_t rank = 0;
};

class VarietyRing {
public:
  struct Socle {
    SoclePoly socle;
  };
  using Presentation = std::variant<Socle, BlowupPresentation>;

  static RingPtr make_socle(std::string name, SoclePoly socle, bool kunneth_valid = false, std::string note = {});
  static RingPtr make_bundle(std::string name, SoclePoly socle, BundleInfo bundle, std::string note = {});
  static RingPtr make_blowup(std::string name, BlowupPresentation blowup, std::string note = {});

  const std::string& name() const { return name_; }
  int dim() const { return dim_; }
  /// Generators of the ring; for a blow-up, those of the ambient variety.
  const VarList& vars() const { return vars_; }
  const Grading& grading() const { return grading_; }
  bool kunneth_valid() const { return kunneth_valid_; }
  const std::string& note() const { return note_; }

  bool is_blowup() const { return std::holds_alternative<BlowupPresentation>(presentation_); }
  const SoclePoly& socle() const;  // throws for blow-ups
  const BlowupPresentation& blowup() const;  // throws for socle rings
  const std::optional<BundleInfo>& bundle() const { return bundle_; }

  ChowClass multiply(const ChowClass& a, const ChowClass& b) const;
  /// Top-degree evaluation; components of lower degree evaluate to zero.
  Integer degree(const ChowClass& a) const;

  /// Throws DegreeError unless every term of `a` has codimension d.
  void check_degree(const ChowClass& a, int d) const;

  std::vector<ChowClass> spanning(int d) const;
  /// Cached; safe to call from several threads.
  std::shared_ptr<const GradedPiece> graded_piece(int d) const;
  std::size_t rank(int d) const { return graded_piece(d)->rank; }

  /// Pairing vector of `a` against the degree-(dim-d) spanning set.
  IntVector pairing_vector(const ChowClass& a, int d) const;
  /// Lattice coordinates in graded_piece(d); throws MapError when the class
  /// is not in the lattice (cannot happen for integral classes).
  IntVector coordinates(const ChowClass& a, int d) const;
  /// The class sum x_i * representatives[i].
  ChowClass from_coordinates(const IntVector& x, int d) const;

  /// Parse "poly" as an ambient class, checking the variable names.
  ChowClass parse_class(const std::string& ambient, const std::string& exceptional = {}) const;

private:
  VarietyRing() = default;
  void check_range(int d) const;

  std::string name_;
  int dim_ = 0;
  VarList vars_;
  Grading grading_;
  bool kunneth_valid_ = false;
  std::string note_;
  Presentation presentation_;
  std::optional<BundleInfo> bundle_;

  mutable std::mutex cache_mutex_;
  mutable std::map<int, std::shared_ptr<const GradedPiece>> cache_;
};

/// xi^k = a*xi + b in a rank-2 bundle ring; returns (a, b).
std::pair<GradedPoly, GradedPoly> reduce_xi_power(const BundleInfo& bundle, int k);

/// pi_*: after reducing powers of xi, the xi-linear coefficient.
GradedPoly bundle_pushforward(const BundleInfo& bundle, const GradedPoly& y);

}  // namespace prelog
