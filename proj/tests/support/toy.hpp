#pragma once

// Two copies of P^1 x P^1 glued along a fiber: the smallest configuration
// whose double locus has trivial normal bundles on both sides.

#include "prelog/constructions.hpp"
#include "prelog/prelog_complex.hpp"

namespace toy {

using namespace prelog;

inline RingPtr quadric(const std::string& name, const std::string& a, const std::string& b) {
  return VarietyRing::make_socle(name, SoclePoly::parse(a + "^-1" + b + "^-1", {{a, 1}, {b, 1}}, 2), true);
}

inline RingPtr line() { return VarietyRing::make_socle("D", SoclePoly::parse("t^-1", {{"t", 1}}, 1), true); }

/// D = {a = 0} in the quadric with coordinates (a, b).
inline MapPtr fiber(const RingPtr& d, const RingPtr& y, const std::string& a, const std::string& b) {
  KunnethEmbedding k;
  k.pull = {{a, GradedPoly()}, {b, GradedPoly::variable("t")}};
  k.factor = d;
  k.generators = {{GradedPoly(1), GradedPoly::variable(a)},
                  {GradedPoly::variable("t"), GradedPoly::variable(a) * GradedPoly::variable(b)}};
  auto m = std::make_shared<InclusionMap>("D->" + y->name(), d, y, k);
  m->validate();
  return m;
}

inline SncConfig two_quadrics() {
  auto y1 = quadric("Y1", "a1", "b1");
  auto y2 = quadric("Y2", "a2", "b2");
  auto d = line();
  SncConfig cfg;
  cfg.components = {{1, y1}, {2, y2}};
  cfg.pairs = {{1, 2, d, fiber(d, y1, "a1", "b1"), fiber(d, y2, "a2", "b2")}};
  cfg.validate();
  return cfg;
}

/// Two planes glued along a line: normal bundles O(1) on both sides, so the
/// diagram cannot commute.
inline SncConfig two_planes() {
  auto plane = [](const std::string& name, const std::string& h) {
    return VarietyRing::make_socle(name, SoclePoly::parse(h + "^-2", {{h, 1}}, 2), true);
  };
  auto y1 = plane("P1", "h");
  auto y2 = plane("P2", "k");
  auto d = line();
  auto to = [&](const RingPtr& y, const std::string& h) {
    KunnethEmbedding e;
    e.pull = {{h, GradedPoly::variable("t")}};
    e.factor = d;
    e.generators = {{GradedPoly(1), GradedPoly::variable(h)},
                    {GradedPoly::variable("t"), GradedPoly::variable(h) * GradedPoly::variable(h)}};
    return std::make_shared<InclusionMap>("D->" + y->name(), d, y, e);
  };
  SncConfig cfg;
  cfg.components = {{1, y1}, {2, y2}};
  cfg.pairs = {{1, 2, d, to(y1, "h"), to(y2, "k")}};
  cfg.validate();
  return cfg;
}

}  // namespace toy
