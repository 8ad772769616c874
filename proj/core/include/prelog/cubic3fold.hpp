#pragma once

#include "prelog/scenario.hpp"
#include "prelog/verify.hpp"

namespace prelog {

/// Degeneration of a cubic threefold into four components:
///   Y1 = L_C x L_C, Y2 = Bl(L_C x Q), Y3 = Bl(Q x L_C), Y4 = Q x Q,
/// with L_C the blow-up of P^3 along a genus-4 curve C of degree 6, Q a
/// quadric threefold and S = P^1 x P^1. Y1 and Y4 do not meet.
ScenarioDoc cubic_threefold_doc();

Scenario build_cubic_threefold();

/// The socle of Y1 recomputed from the pieces: for a degree-6 monomial
/// m = m_low * m_up * D^c,
///   c = 0: deg_{L_C}(m_low) * deg_{L_C}(m_up)
///   c = 1: degree on the divisor D = P(N) over P(N') over C, after
///          h, H -> 6P, e -> -gamma, E -> -Gamma, f -> -gamma P, F -> -Gamma P
///   c = 2: deg_{CxC}(Delta^2)
/// Needs the rings lc, LC, Dint, CxC and Y1; throws ConfigError otherwise.
SoclePoly rederive_y1_socle(const Scenario& s);

}  // namespace prelog
