#include <gtest/gtest.h>

#include "prelog/cubic3fold.hpp"
#include "prelog/errors.hpp"
#include "support/oracle.hpp"

using namespace prelog;

namespace {

const Scenario& cubic() {
  static const Scenario s = build_cubic_threefold();
  return s;
}

std::vector<std::pair<std::string, int>> weights(const VarList& vars) {
  std::vector<std::pair<std::string, int>> out;
  for (const auto& v : vars) out.emplace_back(v.name, v.degree);
  return out;
}

// Gram rank of a socle ring from monomials and raw socle coefficients.
std::vector<std::size_t> socle_gram_ranks(const SoclePoly& socle) {
  const auto w = weights(socle.vars());
  std::vector<std::size_t> out;
  for (int d = 0; d <= socle.top_degree(); ++d) {
    const auto rows = oracle::monomials(w, d);
    const auto cols = oracle::monomials(w, socle.top_degree() - d);
    out.push_back(oracle::gram_rank(rows, cols, [&](const Monomial& a, const Monomial& b) {
      return oracle::socle_degree(socle.terms(), GradedPoly(a * b));
    }));
  }
  return out;
}

// Blow-up classes pi^*a + j_*g paired by the blow-up product rules, with
// degrees read off the socles of X and E.
struct BlowupOracle {
  const BlowupPresentation& b;

  Integer deg_x(const GradedPoly& p) const { return oracle::socle_degree(b.ambient->socle().terms(), p); }
  Integer deg_e(const GradedPoly& p) const { return oracle::socle_degree(b.exceptional->socle().terms(), p); }

  Integer pair(const ChowClass& x, const ChowClass& y) const {
    const auto restrict_x = x.ambient.substitute(b.center_pullback);
    const auto restrict_y = y.ambient.substitute(b.center_pullback);
    return deg_x(x.ambient * y.ambient) + deg_e(restrict_x * y.exceptional) + deg_e(x.exceptional * restrict_y) -
           deg_e(x.exceptional * y.exceptional * b.zeta);
  }

  std::vector<ChowClass> spanning(int d) const {
    std::vector<ChowClass> out;
    for (const auto& m : oracle::monomials(weights(b.ambient->vars()), d)) out.push_back(ChowClass::pi(GradedPoly(m)));
    if (d >= 1)
      for (const auto& m : oracle::monomials(weights(b.exceptional->vars()), d - 1))
        out.push_back(ChowClass::j(GradedPoly(m)));
    return out;
  }
};

}  // namespace

TEST(Cubic, PublishedRingDegrees) {
  const auto& s = cubic();
  auto deg = [&](const std::string& ring, const std::string& p) {
    return s.ring(ring)->degree(s.ring(ring)->parse_class(p));
  };
  EXPECT_EQ(deg("LC", "H^3"), 1);
  EXPECT_EQ(deg("LC", "H*E^2"), -6);
  EXPECT_EQ(deg("LC", "E^3"), -30);
  EXPECT_EQ(deg("LC", "E*F"), -1);
  EXPECT_EQ(deg("Q", "S^3"), 2);
  EXPECT_EQ(deg("Q", "S*L"), 1);
  EXPECT_EQ(deg("CxC", "Delta^2"), -6);
}

TEST(Cubic, LcDegreesFromBlowupFormulas) {
  // Blow-up of P^3 along a curve of degree 6 and genus 4:
  // H E^2 = -deg C, E^3 = -deg N_C = -(4 deg C + 2g - 2).
  const long deg_c = 6, genus = 4;
  const auto& lc = cubic().ring("LC");
  EXPECT_EQ(lc->degree(lc->parse_class("H*E^2")), -deg_c);
  EXPECT_EQ(lc->degree(lc->parse_class("E^3")), -(4 * deg_c + 2 * genus - 2));
  EXPECT_EQ(lc->degree(lc->parse_class("H^2*E")), 0);
}

TEST(Cubic, SocleRanksMatchGramOracle) {
  const auto& s = cubic();
  for (const auto* name : {"LC", "Q", "S", "CxC", "Y1", "Y4", "Y12", "Y24", "N", "Dint"}) {
    const auto& ring = s.ring(name);
    const auto expected = socle_gram_ranks(ring->socle());
    for (int d = 0; d <= ring->dim(); ++d) EXPECT_EQ(ring->rank(d), expected[d]) << name << " degree " << d;
  }
  const std::vector<std::size_t> y1{1, 4, 8, 11, 8, 4, 1};
  EXPECT_EQ(socle_gram_ranks(s.ring("Y1")->socle()), y1);
  const std::vector<std::size_t> n{1, 5, 10, 10, 5, 1};
  EXPECT_EQ(socle_gram_ranks(s.ring("N")->socle()), n);
}

TEST(Cubic, BlowupRanksMatchGramOracle) {
  const auto& y2 = cubic().ring("Y2");
  const BlowupOracle o{y2->blowup()};
  std::vector<std::size_t> ranks;
  for (int d = 0; d <= 6; ++d) {
    const auto rows = o.spanning(d);
    const auto cols = o.spanning(6 - d);
    ranks.push_back(oracle::gram_rank(rows, cols, [&](const ChowClass& a, const ChowClass& b) { return o.pair(a, b); }));
    EXPECT_EQ(y2->rank(d), ranks.back()) << "degree " << d;
  }
  EXPECT_EQ(ranks, (std::vector<std::size_t>{1, 4, 9, 12, 9, 4, 1}));
}

TEST(Cubic, BlowupProductMatchesOracle) {
  const auto& y2 = cubic().ring("Y2");
  const BlowupOracle o{y2->blowup()};
  for (int d = 0; d <= 6; ++d) {
    const auto rows = y2->spanning(d);
    const auto cols = y2->spanning(6 - d);
    for (std::size_t i = 0; i < rows.size(); i += 3)
      for (std::size_t j = 0; j < cols.size(); j += 2)
        ASSERT_EQ(y2->degree(y2->multiply(rows[i], cols[j])), o.pair(rows[i], cols[j]))
            << rows[i].to_string() << " . " << cols[j].to_string();
  }
}

TEST(Cubic, Y1SocleRederivation) {
  const auto& s = cubic();
  EXPECT_EQ(rederive_y1_socle(s), s.ring("Y1")->socle());
  auto deg = [&](const std::string& p) { return s.ring("Y1")->degree(s.ring("Y1")->parse_class(p)); };
  EXPECT_EQ(deg("h^3*H^3"), 1);
  EXPECT_EQ(deg("e*F*D"), 1);
  EXPECT_EQ(deg("e^2*E*D"), 30);
  EXPECT_EQ(deg("h*e*E*D"), 6);
  EXPECT_EQ(deg("D^2"), -6);
}

TEST(Cubic, SwapIsAnIsomorphism) {
  const auto& s = cubic();
  const auto& y2 = s.ring("Y2");
  const auto& y3 = s.ring("Y3");
  const std::map<std::string, GradedPoly> amb{{"h", parse_poly("H")}, {"e", parse_poly("E")}, {"f", parse_poly("F")},
                                              {"S", parse_poly("s")}, {"L", parse_poly("l")}};
  const std::map<std::string, GradedPoly> exc{{"r1", parse_poly("R1")},
                                              {"r2", parse_poly("R2")},
                                              {"R1", parse_poly("r1")},
                                              {"R2", parse_poly("r2")},
                                              {"xi", parse_poly("xi - r1 - r2 + R1 + R2")}};
  for (int d = 0; d <= 6; ++d) {
    EXPECT_EQ(y2->rank(d), y3->rank(d));
    const auto rows = y2->spanning(d);
    const auto cols = y2->spanning(6 - d);
    for (std::size_t i = 0; i < rows.size(); i += 2)
      for (std::size_t j = 0; j < cols.size(); j += 3) {
        const ChowClass a(rows[i].ambient.substitute(amb), rows[i].exceptional.substitute(exc));
        const ChowClass b(cols[j].ambient.substitute(amb), cols[j].exceptional.substitute(exc));
        ASSERT_EQ(y2->degree(y2->multiply(rows[i], cols[j])), y3->degree(y3->multiply(a, b)));
      }
  }
}

TEST(Cubic, ComplexShape) {
  const auto r = compute_prelog(cubic().cfg, 3);
  EXPECT_EQ(r.delta.rows(), 39u);
  EXPECT_EQ(r.delta.cols(), 32u);
  EXPECT_EQ(oracle::rational_rank(r.delta), 22u);
  EXPECT_EQ(oracle::modular_rank(r.delta, 2), 21u);
  EXPECT_EQ(oracle::rational_rank(r.rho), 22u);
  EXPECT_EQ(r.rho * r.delta, r.delta_prime * r.rho_prime);
  EXPECT_EQ(oracle::rational_rank(r.M), 6u);
  EXPECT_EQ(r.rank_triples_km1, 12u);
  EXPECT_EQ(oracle::rational_rank(r.rho_prime), 11u);
}

TEST(Cubic, PerturbedSocleIsDetected) {
  auto doc = cubic_threefold_doc();
  for (auto& r : doc.rings)
    if (auto* sd = std::get_if<SocleRingDef>(&r); sd && sd->name == "Y1") sd->socle += " + h^-3H^-3";
  const auto s = instantiate(doc);
  const auto rep = run_verification(s, {{"y1", "degree.Y1"}});
  ASSERT_EQ(rep.checks.size(), 6u);
  EXPECT_FALSE(rep.passed());
  for (const auto& c : rep.checks) {
    if (c.id == "y1.rederived_socle_matches" || c.id == "degree.Y1.h^3*H^3")
      EXPECT_EQ(c.status, CheckStatus::fail) << c.id;
    else
      EXPECT_EQ(c.status, CheckStatus::pass) << c.id;
  }
}

TEST(Cubic, PerturbedPublishedConstantFails) {
  auto doc = cubic_threefold_doc();
  for (auto& e : doc.expectations)
    if (e.id == "coker.torsion") e.expected = "[3]";
  const auto rep = run_verification(instantiate(doc), {{"coker"}});
  EXPECT_EQ(rep.count(CheckStatus::fail), 1u);
  EXPECT_EQ(rep.exit_code(), 1);
}

TEST(Cubic, FullVerificationPasses) {
  const auto rep = run_verification(cubic());
  for (const auto& c : rep.checks) EXPECT_NE(c.status, CheckStatus::fail) << c.id << " computed " << c.computed;
  EXPECT_EQ(rep.count(CheckStatus::info), 1u);
  EXPECT_EQ(rep.summary.prelog_rank, 6u);
  EXPECT_EQ(rep.summary.invariant_factors, IntVector{2});
  EXPECT_EQ(rep.summary.saturation_index, Integer(2));
  EXPECT_EQ(rep.summary.generator_count, 6u);
}
