#include "prelog/constructions.hpp"

#include <algorithm>
#include <set>

#include "prelog/errors.hpp"

namespace prelog {

namespace {

std::map<std::string, GradedPoly> as_substitution(const std::map<std::string, std::string>& renames) {
  std::map<std::string, GradedPoly> sub;
  for (const auto& [from, to] : renames) sub.emplace(from, GradedPoly::variable(to));
  return sub;
}

VarList renamed_vars(const VarList& vars, const std::map<std::string, std::string>& renames) {
  VarList out;
  for (const auto& v : vars) {
    auto it = renames.find(v.name);
    out.push_back({it == renames.end() ? v.name : it->second, v.degree});
  }
  validate_vars(out);
  return out;
}

}  // namespace

RingPtr rename_ring(const RingPtr& ring, const std::map<std::string, std::string>& renames, std::string name) {
  if (ring->is_blowup() || ring->bundle()) throw ConfigError("rename_ring: '" + ring->name() + "' is not a plain socle ring");
  VarList vars = renamed_vars(ring->vars(), renames);
  GradedPoly terms = ring->socle().terms().substitute(as_substitution(renames));
  return VarietyRing::make_socle(std::move(name), SoclePoly::from_terms(vars, ring->dim(), terms),
                                 ring->kunneth_valid(), "renamed from " + ring->name());
}

RingPtr kunneth(const RingPtr& v, const RingPtr& w, std::string name, bool override_validity) {
  if (v->is_blowup() || w->is_blowup()) throw ConfigError("kunneth: factors must be socle-presented");
  if (!override_validity && !v->kunneth_valid() && !w->kunneth_valid())
    throw ConfigError("kunneth: neither '" + v->name() + "' nor '" + w->name() +
                      "' is flagged as a linear variety; the product socle would not be justified");
  std::set<std::string> taken;
  for (const auto& x : v->vars()) taken.insert(x.name);
  std::map<std::string, std::string> renames;
  for (const auto& x : w->vars()) {
    if (!taken.count(x.name)) continue;
    std::string fresh = x.name + "'";
    while (taken.count(fresh)) fresh += "'";
    renames[x.name] = fresh;
    taken.insert(fresh);
  }
  VarList vars = v->vars();
  for (const auto& x : renamed_vars(w->vars(), renames)) vars.push_back(x);
  GradedPoly wterms = w->socle().terms().substitute(as_substitution(renames));
  GradedPoly terms = v->socle().terms() * wterms;
  std::string note = v->name() + " x " + w->name();
  if (!renames.empty()) note += " (colliding names primed)";
  return VarietyRing::make_socle(std::move(name), SoclePoly::from_terms(vars, v->dim() + w->dim(), terms),
                                 v->kunneth_valid() && w->kunneth_valid(), note);
}

RingPtr proj_bundle_rank2(const RingPtr& base, const std::string& xi, const GradedPoly& c1, const GradedPoly& c2,
                          std::string name) {
  if (base->is_blowup()) throw ConfigError("proj_bundle_rank2: base must be socle-presented");
  for (const auto& v : base->vars())
    if (v.name == xi) throw ConfigError("proj_bundle_rank2: '" + xi + "' is already a base variable");
  auto d1 = c1.homogeneous_degree(base->grading());
  auto d2 = c2.homogeneous_degree(base->grading());
  if ((!c1.is_zero() && (!d1 || *d1 != 1)) || (!c2.is_zero() && (!d2 || *d2 != 2)))
    throw ConfigError("proj_bundle_rank2: Chern classes must be homogeneous of degrees 1 and 2");

  BundleInfo info{base, xi, c1, c2};
  VarList vars = base->vars();
  vars.push_back({xi, 1});
  const int dim = base->dim() + 1;
  GradedPoly terms;
  for (const auto& m : mono_basis(vars, dim)) {
    const int k = m.exponent(xi);
    if (k == 0) continue;
    auto a = reduce_xi_power(info, k).first;
    Integer val = base->degree(ChowClass(a * GradedPoly(m.split({xi}).second)));
    terms.add_term(m, val);
  }
  return VarietyRing::make_bundle(std::move(name), SoclePoly::from_terms(vars, dim, terms), std::move(info),
                                  "rank-2 projective bundle over " + base->name());
}

RingPtr proj_bundle_rank2(const RingPtr& base, const std::string& xi, const GradedPoly& relation, std::string name) {
  GradedPoly c1, c2;
  const auto base_names = names_of(base->vars());
  for (const auto& [m, c] : relation.terms()) {
    auto [xpart, rest] = m.split({xi});
    const int k = xpart.exponent(xi);
    if (k == 2) {
      if (!rest.is_one() || c != 1) throw ConfigError("proj_bundle_rank2: relation is not monic in " + xi);
    } else if (k == 1) {
      c1.add_term(rest, c);
    } else if (k == 0) {
      c2.add_term(rest, c);
    } else {
      throw ConfigError("proj_bundle_rank2: relation has degree > 2 in " + xi);
    }
  }
  if (relation.coefficient(Monomial::variable(xi, 2)) != 1)
    throw ConfigError("proj_bundle_rank2: relation is not monic quadratic in " + xi);
  for (const auto& p : {c1, c2})
    for (const auto& n : p.variables())
      if (std::find(base_names.begin(), base_names.end(), n) == base_names.end())
        throw ConfigError("proj_bundle_rank2: coefficient uses unknown variable '" + n + "'");
  return proj_bundle_rank2(base, xi, c1, c2, std::move(name));
}

RingPtr blowup(const RingPtr& ambient, std::map<std::string, GradedPoly> center_pullback, const RingPtr& exceptional,
               GradedPoly zeta, std::string name) {
  if (!exceptional->bundle()) throw ConfigError("blowup: exceptional ring must be a projective bundle");
  const auto& base = exceptional->bundle()->base;
  const auto base_names = names_of(base->vars());
  for (const auto& v : ambient->vars()) {
    auto it = center_pullback.find(v.name);
    if (it == center_pullback.end()) throw ConfigError("blowup: no center pullback for '" + v.name + "'");
    for (const auto& n : it->second.variables())
      if (std::find(base_names.begin(), base_names.end(), n) == base_names.end())
        throw ConfigError("blowup: pullback of '" + v.name + "' uses '" + n + "', not a center variable");
    auto d = it->second.homogeneous_degree(base->grading());
    if (!it->second.is_zero() && (!d || *d != v.degree))
      throw ConfigError("blowup: pullback of '" + v.name + "' has the wrong degree");
  }
  auto zd = zeta.homogeneous_degree(exceptional->grading());
  if (!zd || *zd != 1) throw ConfigError("blowup: zeta must be a degree-one class on the exceptional divisor");
  return VarietyRing::make_blowup(std::move(name),
                                  BlowupPresentation{ambient, exceptional, std::move(center_pullback), std::move(zeta)},
                                  "blow-up of " + ambient->name() + " along " + base->name());
}

RingPtr swap_factors(const RingPtr& ring, const SwapSpec& spec, std::string name) {
  if (!ring->is_blowup()) {
    if (!spec.exceptional_images.empty()) throw ConfigError("swap_factors: '" + ring->name() + "' has no exceptional ring");
    return rename_ring(ring, spec.renames, std::move(name));
  }
  const auto& bl = ring->blowup();
  const auto& E = bl.exceptional;
  for (const auto& m : mono_basis(E->vars(), E->dim())) {
    GradedPoly img = GradedPoly(m).substitute(spec.exceptional_images);
    if (E->degree(ChowClass(img)) != E->degree(ChowClass(GradedPoly(m))))
      throw ConfigError("swap_factors: exceptional substitution does not preserve the degree of " + m.to_string());
  }
  auto ambient = rename_ring(bl.ambient, spec.renames,
                             spec.ambient_name.empty() ? name + ".ambient" : spec.ambient_name);
  std::map<std::string, GradedPoly> pull;
  for (const auto& [v, img] : bl.center_pullback) {
    auto it = spec.renames.find(v);
    pull.emplace(it == spec.renames.end() ? v : it->second, img.substitute(spec.exceptional_images));
  }
  return blowup(ambient, std::move(pull), E, bl.zeta.substitute(spec.exceptional_images), std::move(name));
}

PullbackSolution solve_unknown_pullback(const GradedPoly& x, const InclusionMap& map,
                                        const std::vector<GradedPoly>& ansatz) {
  const auto& S = *map.source();
  const auto& T = *map.target();
  auto dx = x.homogeneous_degree(T.grading());
  if (!dx) throw MapError(map.name() + ": class to pull back must be homogeneous and nonzero");
  const int e = S.dim() - *dx;
  if (e < 0) throw MapError(map.name() + ": class degree exceeds the source dimension");
  const auto ys = S.spanning(e);
  IntMatrix A(ys.size(), ansatz.size());
  IntVector b(ys.size());
  for (std::size_t r = 0; r < ys.size(); ++r) {
    for (std::size_t k = 0; k < ansatz.size(); ++k) A(r, k) = S.degree(S.multiply(ChowClass(ansatz[k]), ys[r]));
    b[r] = T.degree(T.multiply(ChowClass(x), map.push(ys[r])));
  }
  auto sol = solve_integer(A, b);
  if (!sol) throw MapError(map.name() + ": no integer solution for the pullback of " + x.to_string());
  if (!sol->unique) throw MapError(map.name() + ": the pullback of " + x.to_string() + " is not determined by the ansatz");
  PullbackSolution out;
  out.coefficients = sol->x;
  out.unique = true;
  for (std::size_t k = 0; k < ansatz.size(); ++k)
    if (sol->x[k] != 0) out.value += sol->x[k] * ansatz[k];
  return out;
}

}  // namespace prelog
