#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "prelog/variety_ring.hpp"

namespace prelog {

class InclusionMap;
using MapPtr = std::shared_ptr<const InclusionMap>;

/// Source = A x F with A's variables shared by the target. Pullback is a ring
/// map on target generators (unlisted generators map to themselves).
/// Pushforward writes a class as sum pull(a_k) * g_k over the declared
/// generators g_k of the factor F and returns sum a_k * image(g_k).
struct KunnethEmbedding {
  std::map<std::string, GradedPoly> pull;
  RingPtr factor;
  std::vector<std::pair<GradedPoly, GradedPoly>> generators;  // (g in F, image in target)
};

/// Exceptional divisor E of a blow-up: pull (a, g) -> i^*(a) - g*zeta, push g -> j_*(g).
struct ExceptionalEmbedding {};

/// Section of a rank-2 bundle cut out by `sigma`: push x -> x*sigma,
/// pull y -> pi_*(y*sigma).
struct SectionEmbedding {
  GradedPoly sigma;
};

/// Strict transform Y of a divisor of X containing the blow-up center Z.
/// `ambient` is Y -> X and `center` is Z -> Y; sigma cuts out E restricted to Y.
///   pull: pi^*(a) + j_*(g)  ->  ambient.pull(a) + center.push(pi_*(g*sigma))
///   push: y  ->  pi^*(ambient.push(y)) - j_*(center.pull(y))
struct StrictTransformEmbedding {
  MapPtr ambient;
  MapPtr center;
  GradedPoly sigma;
};

using EmbeddingData = std::variant<KunnethEmbedding, ExceptionalEmbedding, SectionEmbedding, StrictTransformEmbedding>;

/// A closed embedding source -> target with its pullback and pushforward.
class InclusionMap {
public:
  InclusionMap(std::string name, RingPtr source, RingPtr target, EmbeddingData data);

  const std::string& name() const { return name_; }
  const RingPtr& source() const { return source_; }
  const RingPtr& target() const { return target_; }
  int codim() const { return target_->dim() - source_->dim(); }
  const EmbeddingData& data() const { return data_; }

  /// Class on target -> class on source.
  ChowClass pull(const ChowClass& x) const;
  /// Class on source -> class on target.
  ChowClass push(const ChowClass& y) const;

  /// Num^d(target) -> Num^d(source) in lattice coordinates.
  IntMatrix pullback_matrix(int d) const;
  /// Num^d(source) -> Num^{d+codim}(target) in lattice coordinates.
  IntMatrix pushforward_matrix(int d) const;

  /// Structural checks: variable coverage, degrees, section shape. Throws MapError.
  void validate() const;

private:
  ChowClass push_kunneth(const KunnethEmbedding& k, const GradedPoly& y) const;

  std::string name_;
  RingPtr source_;
  RingPtr target_;
  EmbeddingData data_;
};

struct ProjectionFormulaReport {
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::string first_failure;
  bool ok() const { return failures == 0; }
};

/// deg(push(y) * x) = deg(y * pull(x)) over all spanning classes of
/// complementary degree.
ProjectionFormulaReport check_adjointness(const InclusionMap& map);

/// push(pull(x) * y) = x * push(y) in lattice coordinates, for spanning x of
/// target degree a and spanning y of source degree b.
ProjectionFormulaReport check_projection_formula(const InclusionMap& map);

/// Pull(x*x') = pull(x)*pull(x') numerically, over pairs of target generators.
ProjectionFormulaReport check_pullback_multiplicative(const InclusionMap& map);

}  // namespace prelog
