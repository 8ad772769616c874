#include "prelog/scenario.hpp"

#include <algorithm>

#include "prelog/errors.hpp"

namespace prelog {

const std::string& def_name(const RingDef& d) {
  return std::visit([](const auto& x) -> const std::string& { return x.name; }, d);
}

const std::string& def_name(const MapDef& d) {
  return std::visit([](const auto& x) -> const std::string& { return x.name; }, d);
}

const RingPtr& Scenario::ring(const std::string& name) const {
  auto it = rings.find(name);
  if (it == rings.end()) throw ConfigError("unknown ring '" + name + "'");
  return it->second;
}

const MapPtr& Scenario::map(const std::string& name) const {
  auto it = maps.find(name);
  if (it == maps.end()) throw ConfigError("unknown map '" + name + "'");
  return it->second;
}

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

GradedPoly poly_in(const std::string& text, const VarList& vars, const std::string& where) {
  const auto names = names_of(vars);
  GradedPoly p = parse_poly(text, names);
  for (const auto& v : p.variables())
    if (std::find(names.begin(), names.end(), v) == names.end())
      throw ParseError(where + ": unknown variable '" + v + "' in '" + text + "'");
  return p;
}

const VarList& exceptional_vars(const RingPtr& r, const std::string& where) {
  if (!r->is_blowup()) throw ConfigError(where + ": ring '" + r->name() + "' is not a blow-up");
  return r->blowup().exceptional->vars();
}

class Builder {
public:
  explicit Builder(const ScenarioDoc& doc) { s_.doc = doc; }

  Scenario run() {
    for (const auto& d : s_.doc.rings) guarded("ring '" + def_name(d) + "'", [&] { add_ring(d); });
    for (const auto& d : s_.doc.maps) guarded("map '" + def_name(d) + "'", [&] { add_map(d); });
    guarded("configuration", [&] { build_config(); });
    for (const auto& c : s_.doc.cycles) guarded("cycle '" + c.name + "'", [&] { add_cycle(c); });
    return std::move(s_);
  }

private:
  template <class F>
  void guarded(const std::string& what, F&& f) {
    try {
      f();
    } catch (const Error& e) {
      throw ConfigError(what + ": " + e.what());
    }
  }

  void put_ring(const std::string& name, RingPtr r) {
    if (!s_.rings.emplace(name, std::move(r)).second) throw ConfigError("duplicate ring name '" + name + "'");
  }

  std::map<std::string, GradedPoly> polys(const std::map<std::string, std::string>& texts, const VarList& vars,
                                          const std::string& where) {
    std::map<std::string, GradedPoly> out;
    for (const auto& [k, t] : texts) out.emplace(k, poly_in(t, vars, where));
    return out;
  }

  void add_ring(const RingDef& def) {
    std::visit(
        overloaded{
            [&](const SocleRingDef& d) {
              auto f = SoclePoly::parse(d.socle, d.vars, d.dim);
              put_ring(d.name, VarietyRing::make_socle(d.name, std::move(f), d.kunneth_valid, d.note));
            },
            [&](const RenameRingDef& d) { put_ring(d.name, rename_ring(s_.ring(d.source), d.renames, d.name)); },
            [&](const KunnethRingDef& d) {
              put_ring(d.name, kunneth(s_.ring(d.first), s_.ring(d.second), d.name, d.override_validity));
            },
            [&](const BundleRingDef& d) {
              const auto& base = s_.ring(d.base);
              VarList vars = base->vars();
              vars.push_back({d.xi, 1});
              put_ring(d.name, proj_bundle_rank2(base, d.xi, poly_in(d.relation, vars, "relation"), d.name));
            },
            [&](const BlowupRingDef& d) {
              const auto& X = s_.ring(d.ambient);
              const auto& E = s_.ring(d.exceptional);
              if (!E->bundle()) throw ConfigError("'" + d.exceptional + "' is not a projective bundle");
              auto pull = polys(d.center_pullback, E->bundle()->base->vars(), "center pullback");
              put_ring(d.name, blowup(X, std::move(pull), E, poly_in(d.zeta, E->vars(), "zeta"), d.name));
            },
            [&](const SwapRingDef& d) {
              const auto& src = s_.ring(d.source);
              SwapSpec spec;
              spec.renames = d.renames;
              spec.ambient_name = d.ambient_name;
              if (!d.exceptional_images.empty())
                spec.exceptional_images = polys(d.exceptional_images, exceptional_vars(src, "swap"), "swap");
              auto r = swap_factors(src, spec, d.name);
              if (r->is_blowup() && !d.ambient_name.empty()) put_ring(d.ambient_name, r->blowup().ambient);
              put_ring(d.name, std::move(r));
            },
        },
        def);
  }

  void put_map(MapPtr m) {
    m->validate();
    const std::string name = m->name();
    if (!s_.maps.emplace(name, std::move(m)).second) throw ConfigError("duplicate map name '" + name + "'");
  }

  void add_map(const MapDef& def) {
    std::visit(
        overloaded{
            [&](const KunnethMapDef& d) {
              const auto& src = s_.ring(d.source);
              const auto& tgt = s_.ring(d.target);
              KunnethEmbedding k;
              k.pull = polys(d.pull, src->vars(), "pullback");
              k.factor = s_.ring(d.factor);
              for (const auto& [g, img] : d.generators)
                k.generators.emplace_back(poly_in(g, k.factor->vars(), "generator"),
                                          poly_in(img, tgt->vars(), "generator image"));
              if (!d.solve.empty()) {
                // The pushforward does not depend on the pullback, so the
                // partial map is enough to set up the equations.
                InclusionMap partial(d.name, src, tgt, k);
                for (const auto& sd : d.solve) {
                  std::vector<GradedPoly> ansatz;
                  for (const auto& a : sd.ansatz) ansatz.push_back(poly_in(a, src->vars(), "ansatz"));
                  auto sol = solve_unknown_pullback(poly_in(sd.var, tgt->vars(), "solve"), partial, ansatz);
                  k.pull[sd.var] = sol.value;
                  s_.solved.push_back({d.name, sd.var, std::move(sol)});
                }
              }
              put_map(std::make_shared<InclusionMap>(d.name, src, tgt, std::move(k)));
            },
            [&](const ExceptionalMapDef& d) {
              put_map(std::make_shared<InclusionMap>(d.name, s_.ring(d.source), s_.ring(d.target),
                                                     ExceptionalEmbedding{}));
            },
            [&](const SectionMapDef& d) {
              const auto& tgt = s_.ring(d.target);
              put_map(std::make_shared<InclusionMap>(d.name, s_.ring(d.source), tgt,
                                                     SectionEmbedding{poly_in(d.sigma, tgt->vars(), "sigma")}));
            },
            [&](const StrictMapDef& d) {
              const auto& tgt = s_.ring(d.target);
              StrictTransformEmbedding st{s_.map(d.ambient_map), s_.map(d.center_map),
                                          poly_in(d.sigma, exceptional_vars(tgt, "strict transform"), "sigma")};
              put_map(std::make_shared<InclusionMap>(d.name, s_.ring(d.source), tgt, std::move(st)));
            },
        },
        def);
  }

  void build_config() {
    for (const auto& c : s_.doc.components) s_.cfg.components.push_back({c.index, s_.ring(c.ring)});
    for (const auto& p : s_.doc.pairs)
      s_.cfg.pairs.push_back({p.i, p.j, s_.ring(p.ring), s_.map(p.map_i), s_.map(p.map_j)});
    for (const auto& t : s_.doc.triples)
      s_.cfg.triples.push_back(
          {t.i, t.j, t.k, s_.ring(t.ring), s_.map(t.map_ij), s_.map(t.map_ik), s_.map(t.map_jk)});
    s_.cfg.validate();
  }

  void add_cycle(const CycleDef& def) {
    PrelogCycle c;
    c.name = def.name;
    for (const auto& e : def.entries) {
      const auto& ring = s_.cfg.components[s_.cfg.component_position(e.component)].ring;
      ChowClass cls = ring->parse_class(e.ambient, e.exceptional);
      ring->check_degree(cls, s_.doc.degree);
      c.classes[e.component] += cls;
    }
    s_.cycles.push_back(std::move(c));
  }

  Scenario s_;
};

}  // namespace

Scenario instantiate(const ScenarioDoc& doc) { return Builder(doc).run(); }

}  // namespace prelog
