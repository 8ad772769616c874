#pragma once

#include <map>
#include <string>
#include <vector>

#include "prelog/inclusion.hpp"
#include "prelog/variety_ring.hpp"

namespace prelog {

/// Same socle ring with variables renamed (old -> new). Unlisted names are kept.
RingPtr rename_ring(const RingPtr& ring, const std::map<std::string, std::string>& renames, std::string name);

/// Product of two socle-presented rings; the socle is the product of socles.
/// Requires one factor flagged Kunneth-valid unless `override_validity`.
/// Variables of `w` that collide with names of `v` get a trailing prime.
RingPtr kunneth(const RingPtr& v, const RingPtr& w, std::string name, bool override_validity = false);

/// P(V) over `base` with xi^2 + c1*xi + c2 = 0, xi of degree 1.
RingPtr proj_bundle_rank2(const RingPtr& base, const std::string& xi, const GradedPoly& c1, const GradedPoly& c2,
                          std::string name);

/// Same, from the relation polynomial itself. Throws ConfigError unless the
/// relation is monic quadratic in xi with base-class coefficients.
RingPtr proj_bundle_rank2(const RingPtr& base, const std::string& xi, const GradedPoly& relation, std::string name);

/// Blow-up of `ambient` along a center with pullback `center_pullback`
/// (ambient variables -> classes on the base of `exceptional`).
RingPtr blowup(const RingPtr& ambient, std::map<std::string, GradedPoly> center_pullback, const RingPtr& exceptional,
               GradedPoly zeta, std::string name);

struct SwapSpec {
  std::map<std::string, std::string> renames;              // ambient variables
  std::map<std::string, GradedPoly> exceptional_images;   // automorphism of the exceptional ring
  std::string ambient_name;  // name of the renamed ambient; defaults to "<name>.ambient"
};

/// Exchange the two factors of a product-built ring by renaming. For a
/// blow-up the ambient is renamed and the exceptional ring is kept, with the
/// center pullback and zeta transported through `exceptional_images`, which
/// must preserve the exceptional socle.
RingPtr swap_factors(const RingPtr& ring, const SwapSpec& spec, std::string name);

struct PullbackSolution {
  GradedPoly value;
  IntVector coefficients;  // in the ansatz basis
  bool unique = false;
};

/// Solves deg_S(i^*(x) * y) = deg_T(x * push(y)) for i^*(x) in the span of
/// `ansatz`, y over the source spanning set of complementary degree. Throws
/// MapError when there is no integer solution or it is not unique.
PullbackSolution solve_unknown_pullback(const GradedPoly& x, const InclusionMap& map,
                                        const std::vector<GradedPoly>& ansatz);

}  // namespace prelog
