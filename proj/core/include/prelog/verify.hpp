#pragma once

#include <string>
#include <vector>

#include "prelog/report.hpp"
#include "prelog/scenario.hpp"

namespace prelog {

struct VerifyOptions {
  /// Check ids to run; an entry X selects id X and every id starting "X.".
  /// Empty runs everything.
  std::vector<std::string> only;
};

bool selected(const std::string& id, const std::vector<std::string>& only);

/// Evaluates every selected expectation of the scenario against freshly
/// computed values. Never throws on a failed computation: the error text
/// becomes the computed value of a failing check.
///
/// Recognized ids:
///   degree.<ring>.<monomial>          top-degree evaluation
///   rank_vector.<ring>                ranks of Num^d for d = 0..dim
///   y1.rederived_socle_matches        see rederive_y1_socle
///   ranks.components|pairs.km1|pairs.k|triples.km1
///   delta.*, rho.*, rho_prime.*, delta_prime.*
///                                     shape, rank, rank_mod.<p>, invariant_factors
///   coker.free_rank, coker.torsion, ker_rho.rank, commutativity
///   prelog.rank, prelog.M_shape
///   cycles.prelog.<name>, cycles.basis, cycles.independent
///   solve.<map>.<var>, solve.<map>.<var>.unique
///   saturation (gcd of maximal minors), sat.rank_mod.<p>, sat.kernel_mod.<p>,
///   sat.index, sat.half_sum, sat.rank
///   maps.adjointness, maps.projection_formula, maps.pullback_multiplicative
Report run_verification(const Scenario& s, const VerifyOptions& opts = {});

/// Expectation table with citations, one line per entry.
std::string expectation_table(const ScenarioDoc& doc);

}  // namespace prelog
