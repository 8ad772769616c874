#include "prelog/cubic3fold.hpp"

#include "prelog/errors.hpp"

namespace prelog {

namespace {

const char* const kLcSocle = "H^-3 - 6H^-1E^-2 - 30E^-3 - E^-1F^-1";

const char* const kY1Socle =
    "(h^-3 - 6h^-1e^-2 - 30e^-3 - e^-1f^-1)(H^-3 - 6H^-1E^-2 - 30E^-3 - E^-1F^-1)"
    " + 30e^-2E^-1D^-1 + 30e^-1E^-2D^-1 + 6h^-1e^-1E^-1D^-1 + 6e^-1H^-1E^-1D^-1"
    " + E^-1f^-1D^-1 + e^-1F^-1D^-1 - 6D^-2";

using Gens = std::vector<std::pair<std::string, std::string>>;

// Pushforwards of {1, x1, x2, x1x2} from S into L_C and Q.
Gens s_generators(const std::string& x1, const std::string& x2, const std::string& one, const std::string& line,
                  const std::string& point) {
  return {{"1", one}, {x1, line}, {x2, line}, {x1 + "*" + x2, point}};
}

Gens lc_upper() { return s_generators("R1", "R2", "2*H - E", "H^2 - 3*F", "H^3"); }
Gens lc_lower() { return s_generators("r1", "r2", "2*h - e", "h^2 - 3*f", "h^3"); }
Gens q_upper() { return s_generators("R1", "R2", "S", "L", "S*L"); }
Gens q_lower() { return s_generators("r1", "r2", "s", "l", "s*l"); }

// Restrictions of L_C and Q generators to S, in either set of S variables.
std::map<std::string, std::string> lc_pull(const std::string& h, const std::string& e, const std::string& f,
                                           const std::string& x1, const std::string& x2) {
  return {{h, x1 + " + " + x2}, {e, "3*" + x1 + " + 3*" + x2}, {f, x1 + "*" + x2}};
}

std::map<std::string, std::string> q_pull(const std::string& s, const std::string& l, const std::string& x1,
                                          const std::string& x2) {
  return {{s, x1 + " + " + x2}, {l, x1 + "*" + x2}};
}

KunnethMapDef kmap(std::string name, std::string source, std::string target, std::map<std::string, std::string> pull,
                   std::string factor, Gens gens) {
  return KunnethMapDef{std::move(name), std::move(source), std::move(target), std::move(pull), {},
                       std::move(factor), std::move(gens)};
}

Expectation ex(std::string id, std::string expected, int criterion, std::string description, std::string citation) {
  return Expectation{std::move(id), std::move(description), std::move(expected), std::move(citation), criterion};
}

std::vector<Expectation> expectations() {
  std::vector<Expectation> e;
  auto add = [&](std::string id, std::string expected, int criterion, std::string description,
                 std::string citation) {
    e.push_back(ex(std::move(id), std::move(expected), criterion, std::move(description), std::move(citation)));
  };

  add("degree.LC.H^3", "1", 1, "deg H^3 on L_C", "socle of L_C, term H^-3");
  add("degree.LC.H*E^2", "-6", 1, "deg HE^2 on L_C", "socle of L_C, term -6H^-1E^-2");
  add("degree.LC.E^3", "-30", 1, "deg E^3 on L_C", "socle of L_C, term -30E^-3");
  add("degree.LC.E*F", "-1", 1, "deg EF on L_C", "socle of L_C, term -E^-1F^-1");
  add("degree.Q.S^3", "2", 1, "deg S^3 on Q", "socle of Q, term 2S^-3");
  add("degree.Q.S*L", "1", 1, "deg SL on Q", "socle of Q, term S^-1L^-1");
  add("degree.CxC.Delta^2", "-6", 1, "self-intersection of the diagonal of C x C",
      "socle of C x C, Euler characteristic of C");

  add("y1.rederived_socle_matches", "true", 2, "Y1 socle recomputed from L_C, C x C and D",
      "socle of L_C x L_C with the D-linear terms");
  add("degree.Y1.h^3*H^3", "1", 2, "point x point on Y1", "socle of L_C x L_C, product term");
  add("degree.Y1.e*F*D", "1", 2, "coefficient of e^-1F^-1D^-1", "socle of L_C x L_C, D-linear term");
  add("degree.Y1.e^2*E*D", "30", 2, "coefficient of e^-2E^-1D^-1", "socle of L_C x L_C, D-linear term");
  add("degree.Y1.h*e*E*D", "6", 2, "coefficient of h^-1e^-1E^-1D^-1", "socle of L_C x L_C, D-linear term");
  add("degree.Y1.D^2", "-6", 2, "D^2 on Y1", "socle of L_C x L_C, term -6D^-2");

  add("ranks.components", "39", 3, "sum of rank Num^3(Y_i)", "reduced prelog diagram, Z^39");
  add("ranks.pairs.km1", "32", 3, "sum of rank Num^2(Y_ij)", "reduced prelog diagram, Z^32");
  add("ranks.pairs.k", "32", 3, "sum of rank Num^3(Y_ij)", "reduced prelog diagram, Z^32");
  {
    auto t = ex("ranks.triples.km1", "11", 3, "sum of rank Num^2(Y_ijk); two copies of Num^2(S x S)",
                "reduced prelog diagram, displayed as Z^11");
    t.informational = true;
    e.push_back(t);
    auto img = ex("rho_prime.rank", "11", 3, "rank of rho' into the triple sum in degree 2",
                  "reduced prelog diagram, displayed as Z^11");
    img.informational = true;
    e.push_back(img);
  }
  add("rank_vector.Y1", "[1,4,8,11,8,4,1]", 3, "ranks of Num^d(Y1)", "Gram ranks of the Y1 socle");
  add("rank_vector.Y2", "[1,4,9,12,9,4,1]", 3, "ranks of Num^d(Y2)", "Gram ranks of the blow-up ring");
  add("rank_vector.Y3", "[1,4,9,12,9,4,1]", 3, "ranks of Num^d(Y3)", "Gram ranks of the blow-up ring");
  add("rank_vector.Y4", "[1,2,3,4,3,2,1]", 3, "ranks of Num^d(Y4)", "Gram ranks of Q x Q");
  add("rank_vector.N", "[1,5,10,10,5,1]", 3, "ranks of Num^d(Y23)", "Gram ranks of the P^1-bundle over S x S");

  for (const char* m : {"delta", "rho"}) {
    const std::string n = m;
    const std::string sym = n == "delta" ? "delta" : "rho";
    add(n + ".shape", n == "delta" ? "[39,32]" : "[32,39]", 4, "shape of " + sym, "reduced prelog diagram");
    add(n + ".rank", "22", 4, "rank of " + sym + " over Q", "rank 22 in every characteristic except 2");
    for (int p : {2, 3, 5, 7, 11, 13})
      add(n + ".rank_mod." + std::to_string(p), p == 2 ? "21" : "22", 4,
          "rank of " + sym + " mod " + std::to_string(p), "rank 22 in every characteristic except 2");
    add(n + ".invariant_factors", R"({"1":21,"2":1})", 4, "invariant factor multiplicities of " + sym,
        "rank 22 in every characteristic except 2");
  }

  add("coker.free_rank", "17", 5, "free rank of coker delta", "coker delta = Z^17 + Z/2");
  add("coker.torsion", "[2]", 5, "torsion of coker delta", "coker delta = Z^17 + Z/2");
  add("ker_rho.rank", "17", 5, "rank of ker rho", "ker rho = Z^17");
  add("commutativity", "true", 6, "rho delta = delta' rho' entry by entry", "Friedman condition");
  add("prelog.rank", "6", 7, "rank of M = coker projection * ker rho", "prelog group mod torsion = Z^6");
  add("prelog.M_shape", "[17,17]", 7, "shape of M", "prelog group mod torsion = Z^6");

  for (const char* z : {"Z03", "Z30", "Z12", "Z21", "ZDelta", "ZD"})
    add(std::string("cycles.prelog.") + z, "true", 8, std::string("rho(") + z + ") = 0",
        "generator cycles of the prelog group");
  add("cycles.basis", "true", 8, "cycle images span the image of M", "generator cycles form a Z-basis mod torsion");
  add("cycles.independent", "true", 8, "cycle images are independent", "generator cycles form a Z-basis mod torsion");

  add("solve.Y12->Y1.D", R"("e*R1*R2 + 3*f*R1 + 3*f*R2")", 9, "pullback of D to Y12",
      "restriction of D to L_C x S, unique solution");
  add("solve.Y12->Y1.D.unique", "true", 9, "the D pullback to Y12 is unique", "unique solution");
  add("solve.Y13->Y1.D", R"("r1*r2*E + 3*r1*F + 3*r2*F")", 9, "pullback of D to Y13",
      "restriction of D to S x L_C, by symmetry");
  add("solve.Y13->Y1.D.unique", "true", 9, "the D pullback to Y13 is unique", "unique solution");

  add("saturation", "2", 10, "gcd of maximal minors of the cycle matrix N", "gcd of maximal minors equals 2");
  add("sat.rank_mod.2", "5", 10, "rank of N mod 2", "N has rank 5 in characteristic 2");
  add("sat.rank_mod.3", "6", 10, "rank of N mod 3", "full rank outside characteristic 2");
  add("sat.kernel_mod.2", "[[1,1,1,1,1,1]]", 10, "kernel of N mod 2", "kernel generated by the sum of generators");
  add("sat.index", "2", 10, "index of span(N) in its saturation", "saturated group adds half the sum");
  add("sat.half_sum", "true", 10, "span(N) plus half the column sum is saturated",
      "saturated group adds half the sum");
  add("sat.rank", "6", 10, "rank of the saturated prelog group", "saturated prelog group = Z^6");

  add("maps.adjointness", "0", 11, "failures of deg(push y . x) = deg(y . pull x)", "projection formula");
  add("maps.projection_formula", "0", 11, "failures of push(pull x . y) = x . push y", "projection formula");
  add("maps.pullback_multiplicative", "0", 11, "failures of pull(x x') = pull x pull x'", "pullback is a ring map");
  return e;
}

}  // namespace

ScenarioDoc cubic_threefold_doc() {
  ScenarioDoc d;
  d.id = "cubic-threefold";
  d.description = "Four-component degeneration of a cubic threefold, degree-3 prelog Chow group";
  d.degree = 3;

  auto& r = d.rings;
  r.push_back(SocleRingDef{"LC", {{"H", 1}, {"E", 1}, {"F", 2}}, 3, kLcSocle, false,
                           "blow-up of P^3 along C; H hyperplane, E exceptional, F fiber class"});
  r.push_back(RenameRingDef{"lc", "LC", {{"H", "h"}, {"E", "e"}, {"F", "f"}}});
  r.push_back(SocleRingDef{"Q", {{"S", 1}, {"L", 2}}, 3, "2S^-3 + S^-1L^-1", true, "quadric threefold"});
  r.push_back(RenameRingDef{"q", "Q", {{"S", "s"}, {"L", "l"}}});
  r.push_back(SocleRingDef{"S", {{"R1", 1}, {"R2", 1}}, 2, "R1^-1R2^-1", true, "P^1 x P^1"});
  r.push_back(RenameRingDef{"sr", "S", {{"R1", "r1"}, {"R2", "r2"}}});
  r.push_back(KunnethRingDef{"SS", "sr", "S", false});
  r.push_back(SocleRingDef{"CxC",
                           {{"p", 1}, {"P", 1}, {"Delta", 1}},
                           2,
                           "p^-1P^-1 + p^-1Delta^-1 + Delta^-1P^-1 - 6Delta^-2",
                           false,
                           "C x C with the diagonal"});
  r.push_back(SocleRingDef{"C", {{"P", 1}}, 1, "P^-1", true, "the curve C"});
  r.push_back(BundleRingDef{"Dg", "C", "gamma", "gamma^2 + 30*P*gamma"});
  r.push_back(BundleRingDef{"Dint", "Dg", "Gamma", "Gamma^2 + 30*P*Gamma"});
  r.push_back(SocleRingDef{"Y1",
                           {{"h", 1}, {"e", 1}, {"f", 2}, {"H", 1}, {"E", 1}, {"F", 2}, {"D", 3}},
                           6,
                           kY1Socle,
                           false,
                           "L_C x L_C; D lies over C x C"});
  r.push_back(KunnethRingDef{"LCxQ", "lc", "Q", false});
  r.push_back(BundleRingDef{"N", "SS", "xi", "(xi - r1 - r2)*(xi + R1 + R2)"});
  r.push_back(BlowupRingDef{"Y2",
                            "LCxQ",
                            "N",
                            {{"h", "r1 + r2"}, {"e", "3*r1 + 3*r2"}, {"f", "r1*r2"}, {"S", "R1 + R2"}, {"L", "R1*R2"}},
                            "xi"});
  r.push_back(SwapRingDef{"Y3",
                          "Y2",
                          {{"h", "H"}, {"e", "E"}, {"f", "F"}, {"S", "s"}, {"L", "l"}},
                          {{"r1", "R1"}, {"r2", "R2"}, {"R1", "r1"}, {"R2", "r2"}, {"xi", "xi - r1 - r2 + R1 + R2"}},
                          "QxLC"});
  r.push_back(KunnethRingDef{"Y4", "q", "Q", false});
  r.push_back(KunnethRingDef{"Y12", "lc", "S", false});
  r.push_back(KunnethRingDef{"Y13", "sr", "LC", false});
  r.push_back(KunnethRingDef{"Y24", "sr", "Q", false});
  r.push_back(KunnethRingDef{"Y34", "q", "S", false});

  auto& m = d.maps;
  {
    auto y121 = kmap("Y12->Y1", "Y12", "Y1", lc_pull("H", "E", "F", "R1", "R2"), "S", lc_upper());
    y121.solve.push_back({"D", {"h*R1*R2", "e*R1*R2", "h^2*(R1 + R2)", "f*(R1 + R2)"}});
    m.push_back(y121);
    auto y131 = kmap("Y13->Y1", "Y13", "Y1", lc_pull("h", "e", "f", "r1", "r2"), "sr", lc_lower());
    y131.solve.push_back({"D", {"H*r1*r2", "E*r1*r2", "H^2*(r1 + r2)", "F*(r1 + r2)"}});
    m.push_back(y131);
  }
  m.push_back(kmap("Y24->Y4", "Y24", "Y4", q_pull("s", "l", "r1", "r2"), "sr", q_lower()));
  m.push_back(kmap("Y34->Y4", "Y34", "Y4", q_pull("S", "L", "R1", "R2"), "S", q_upper()));
  m.push_back(ExceptionalMapDef{"Y23->Y2", "N", "Y2"});
  m.push_back(ExceptionalMapDef{"Y23->Y3", "N", "Y3"});

  // Pairs meeting Y2 or Y3 go through the unblown products first.
  m.push_back(kmap("Y12->LCxQ", "Y12", "LCxQ", q_pull("S", "L", "R1", "R2"), "S", q_upper()));
  m.push_back(kmap("Y24->LCxQ", "Y24", "LCxQ", lc_pull("h", "e", "f", "r1", "r2"), "sr", lc_lower()));
  m.push_back(kmap("Y13->QxLC", "Y13", "QxLC", q_pull("s", "l", "r1", "r2"), "sr", q_lower()));
  m.push_back(kmap("Y34->QxLC", "Y34", "QxLC", lc_pull("H", "E", "F", "R1", "R2"), "S", lc_upper()));

  m.push_back(kmap("Y123->Y12", "SS", "Y12", lc_pull("h", "e", "f", "r1", "r2"), "sr", lc_lower()));
  m.push_back(kmap("Y123->Y13", "SS", "Y13", lc_pull("H", "E", "F", "R1", "R2"), "S", lc_upper()));
  m.push_back(SectionMapDef{"Y123->Y23", "SS", "N", "xi + R1 + R2"});
  m.push_back(SectionMapDef{"Y234->Y23", "SS", "N", "xi - r1 - r2"});
  m.push_back(kmap("Y234->Y24", "SS", "Y24", q_pull("S", "L", "R1", "R2"), "S", q_upper()));
  m.push_back(kmap("Y234->Y34", "SS", "Y34", q_pull("s", "l", "r1", "r2"), "sr", q_lower()));

  m.push_back(StrictMapDef{"Y12->Y2", "Y12", "Y2", "Y12->LCxQ", "Y123->Y12", "xi + R1 + R2"});
  m.push_back(StrictMapDef{"Y24->Y2", "Y24", "Y2", "Y24->LCxQ", "Y234->Y24", "xi - r1 - r2"});
  m.push_back(StrictMapDef{"Y13->Y3", "Y13", "Y3", "Y13->QxLC", "Y123->Y13", "xi + R1 + R2"});
  m.push_back(StrictMapDef{"Y34->Y3", "Y34", "Y3", "Y34->QxLC", "Y234->Y34", "xi - r1 - r2"});

  d.components = {{1, "Y1"}, {2, "Y2"}, {3, "Y3"}, {4, "Y4"}};
  // Y1 and Y4 are disjoint: there is no pair (1,4).
  d.pairs = {{1, 2, "Y12", "Y12->Y1", "Y12->Y2"},
             {1, 3, "Y13", "Y13->Y1", "Y13->Y3"},
             {2, 3, "N", "Y23->Y2", "Y23->Y3"},
             {2, 4, "Y24", "Y24->Y2", "Y24->Y4"},
             {3, 4, "Y34", "Y34->Y3", "Y34->Y4"}};
  d.triples = {{1, 2, 3, "SS", "Y123->Y12", "Y123->Y13", "Y123->Y23"},
               {2, 3, 4, "SS", "Y234->Y23", "Y234->Y24", "Y234->Y34"}};

  const std::string diag_s = "r1*r2 + R1*r2 + r1*R2 + R1*R2";
  d.cycles = {
      {"Z03", {{1, "h^3", ""}, {2, "h^3", ""}}},
      {"Z30", {{1, "H^3", ""}, {3, "H^3", ""}}},
      {"Z12", {{1, "(h^2 - 2*f)*H", ""}, {2, "(h^2 - 2*f)*S", ""}}},
      {"Z21", {{1, "h*(H^2 - 2*F)", ""}, {3, "s*(H^2 - 2*F)", ""}}},
      {"ZDelta",
       {{1, "h^3 + h^2*H + h*H^2 + H^3 - D", ""}, {2, "", diag_s}, {3, "", diag_s}, {4, "s*l + s*L + S*l + S*L", ""}}},
      {"ZD", {{1, "D - e*F - f*E", ""}}},
  };

  d.expectations = expectations();
  return d;
}

Scenario build_cubic_threefold() { return instantiate(cubic_threefold_doc()); }

SoclePoly rederive_y1_socle(const Scenario& s) {
  const auto& lc = s.ring("lc");
  const auto& LC = s.ring("LC");
  const auto& dint = s.ring("Dint");
  const auto& cxc = s.ring("CxC");
  const auto& y1 = s.ring("Y1");

  const std::vector<std::string> lower = names_of(lc->vars());
  const std::vector<std::string> upper = names_of(LC->vars());
  const std::map<std::string, GradedPoly> to_d{
      {"h", parse_poly("6*P")},          {"H", parse_poly("6*P")},
      {"e", parse_poly("-gamma")},       {"E", parse_poly("-Gamma")},
      {"f", parse_poly("-gamma*P")},     {"F", parse_poly("-Gamma*P")},
  };
  const Integer delta2 = cxc->degree(parse_poly("Delta^2"));

  GradedPoly terms;
  for (const auto& mono : mono_basis(y1->vars(), y1->dim())) {
    const int c = mono.exponent("D");
    const Monomial rest = c == 0 ? mono : *mono.divide(Monomial::variable("D", c));
    Integer value;
    if (c == 0) {
      const auto [lo, up] = rest.split(lower);
      value = lc->degree(GradedPoly(lo)) * LC->degree(GradedPoly(up));
    } else if (c == 1) {
      value = dint->degree(GradedPoly(rest).substitute(to_d));
    } else if (c == 2) {
      value = delta2;
    } else {
      throw ConfigError("Y1 monomial with D^" + std::to_string(c));
    }
    if (value != 0) terms.add_term(mono, value);
  }
  return SoclePoly::from_terms(y1->vars(), y1->dim(), terms);
}

}  // namespace prelog
