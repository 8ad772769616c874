#include <json.hpp>

#include "prelog/errors.hpp"
#include "prelog/scenario.hpp"

namespace prelog {

using nlohmann::json;

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

json vars_json(const VarList& vars) {
  json a = json::array();
  for (const auto& v : vars) a.push_back({{"name", v.name}, {"degree", v.degree}});
  return a;
}

VarList vars_from(const json& a) {
  VarList vars;
  for (const auto& v : a) vars.push_back({v.at("name").get<std::string>(), v.at("degree").get<int>()});
  return vars;
}

json ring_json(const RingDef& def) {
  return std::visit(
      overloaded{
          [](const SocleRingDef& d) {
            json j{{"kind", "socle"}, {"name", d.name}, {"vars", vars_json(d.vars)},
                   {"dim", d.dim},    {"socle", d.socle}, {"kunneth_valid", d.kunneth_valid}};
            if (!d.note.empty()) j["note"] = d.note;
            return j;
          },
          [](const RenameRingDef& d) {
            return json{{"kind", "rename"}, {"name", d.name}, {"source", d.source}, {"renames", d.renames}};
          },
          [](const KunnethRingDef& d) {
            return json{{"kind", "kunneth"},
                        {"name", d.name},
                        {"factors", {d.first, d.second}},
                        {"override_validity", d.override_validity}};
          },
          [](const BundleRingDef& d) {
            return json{{"kind", "bundle"}, {"name", d.name}, {"base", d.base}, {"xi", d.xi}, {"relation", d.relation}};
          },
          [](const BlowupRingDef& d) {
            return json{{"kind", "blowup"},         {"name", d.name},
                        {"ambient", d.ambient},     {"exceptional", d.exceptional},
                        {"center_pullback", d.center_pullback}, {"zeta", d.zeta}};
          },
          [](const SwapRingDef& d) {
            return json{{"kind", "swap"},
                        {"name", d.name},
                        {"source", d.source},
                        {"renames", d.renames},
                        {"exceptional_images", d.exceptional_images},
                        {"ambient_name", d.ambient_name}};
          },
      },
      def);
}

template <class T>
T opt(const json& j, const char* key, T fallback) {
  auto it = j.find(key);
  return it == j.end() ? fallback : it->get<T>();
}

RingDef ring_from(const json& j) {
  const auto kind = j.at("kind").get<std::string>();
  const auto name = j.at("name").get<std::string>();
  if (kind == "socle")
    return SocleRingDef{name, vars_from(j.at("vars")), j.at("dim").get<int>(), j.at("socle").get<std::string>(),
                        opt<bool>(j, "kunneth_valid", false), opt<std::string>(j, "note", "")};
  if (kind == "rename")
    return RenameRingDef{name, j.at("source").get<std::string>(),
                         j.at("renames").get<std::map<std::string, std::string>>()};
  if (kind == "kunneth") {
    const auto& f = j.at("factors");
    if (f.size() != 2) throw ParseError("ring '" + name + "': kunneth needs exactly two factors");
    return KunnethRingDef{name, f[0].get<std::string>(), f[1].get<std::string>(),
                          opt<bool>(j, "override_validity", false)};
  }
  if (kind == "bundle")
    return BundleRingDef{name, j.at("base").get<std::string>(), j.at("xi").get<std::string>(),
                         j.at("relation").get<std::string>()};
  if (kind == "blowup")
    return BlowupRingDef{name, j.at("ambient").get<std::string>(), j.at("exceptional").get<std::string>(),
                         j.at("center_pullback").get<std::map<std::string, std::string>>(),
                         j.at("zeta").get<std::string>()};
  if (kind == "swap")
    return SwapRingDef{name, j.at("source").get<std::string>(),
                       j.at("renames").get<std::map<std::string, std::string>>(),
                       opt<std::map<std::string, std::string>>(j, "exceptional_images", {}),
                       opt<std::string>(j, "ambient_name", "")};
  throw ParseError("ring '" + name + "': unknown kind '" + kind + "'");
}

json map_json(const MapDef& def) {
  return std::visit(
      overloaded{
          [](const KunnethMapDef& d) {
            json solve = json::array();
            for (const auto& s : d.solve) solve.push_back({{"var", s.var}, {"ansatz", s.ansatz}});
            json gens = json::array();
            for (const auto& [g, img] : d.generators) gens.push_back({g, img});
            return json{{"kind", "kunneth"}, {"name", d.name}, {"source", d.source}, {"target", d.target},
                        {"pull", d.pull},    {"solve", solve},  {"factor", d.factor}, {"generators", gens}};
          },
          [](const ExceptionalMapDef& d) {
            return json{{"kind", "exceptional"}, {"name", d.name}, {"source", d.source}, {"target", d.target}};
          },
          [](const SectionMapDef& d) {
            return json{
                {"kind", "section"}, {"name", d.name}, {"source", d.source}, {"target", d.target}, {"sigma", d.sigma}};
          },
          [](const StrictMapDef& d) {
            return json{{"kind", "strict"},          {"name", d.name},
                        {"source", d.source},        {"target", d.target},
                        {"ambient_map", d.ambient_map}, {"center_map", d.center_map},
                        {"sigma", d.sigma}};
          },
      },
      def);
}

MapDef map_from(const json& j) {
  const auto kind = j.at("kind").get<std::string>();
  const auto name = j.at("name").get<std::string>();
  const auto source = j.at("source").get<std::string>();
  const auto target = j.at("target").get<std::string>();
  if (kind == "kunneth") {
    KunnethMapDef d{name, source, target, j.at("pull").get<std::map<std::string, std::string>>(), {},
                    j.at("factor").get<std::string>(), {}};
    if (auto it = j.find("solve"); it != j.end())
      for (const auto& s : *it)
        d.solve.push_back({s.at("var").get<std::string>(), s.at("ansatz").get<std::vector<std::string>>()});
    for (const auto& g : j.at("generators")) {
      if (g.size() != 2) throw ParseError("map '" + name + "': generator entries are [generator, image] pairs");
      d.generators.emplace_back(g[0].get<std::string>(), g[1].get<std::string>());
    }
    return d;
  }
  if (kind == "exceptional") return ExceptionalMapDef{name, source, target};
  if (kind == "section") return SectionMapDef{name, source, target, j.at("sigma").get<std::string>()};
  if (kind == "strict")
    return StrictMapDef{name, source, target, j.at("ambient_map").get<std::string>(),
                        j.at("center_map").get<std::string>(), j.at("sigma").get<std::string>()};
  throw ParseError("map '" + name + "': unknown kind '" + kind + "'");
}

}  // namespace

std::string scenario_to_json(const ScenarioDoc& doc, int indent) {
  json j;
  j["id"] = doc.id;
  j["description"] = doc.description;
  j["degree"] = doc.degree;
  j["rings"] = json::array();
  for (const auto& r : doc.rings) j["rings"].push_back(ring_json(r));
  j["maps"] = json::array();
  for (const auto& m : doc.maps) j["maps"].push_back(map_json(m));
  j["components"] = json::array();
  for (const auto& c : doc.components) j["components"].push_back({{"index", c.index}, {"ring", c.ring}});
  j["pairs"] = json::array();
  for (const auto& p : doc.pairs)
    j["pairs"].push_back({{"i", p.i}, {"j", p.j}, {"ring", p.ring}, {"map_i", p.map_i}, {"map_j", p.map_j}});
  j["triples"] = json::array();
  for (const auto& t : doc.triples)
    j["triples"].push_back({{"i", t.i},
                            {"j", t.j},
                            {"k", t.k},
                            {"ring", t.ring},
                            {"map_ij", t.map_ij},
                            {"map_ik", t.map_ik},
                            {"map_jk", t.map_jk}});
  j["cycles"] = json::array();
  for (const auto& c : doc.cycles) {
    json entries = json::array();
    for (const auto& e : c.entries) {
      json x{{"component", e.component}, {"ambient", e.ambient}};
      if (!e.exceptional.empty()) x["exceptional"] = e.exceptional;
      entries.push_back(x);
    }
    j["cycles"].push_back({{"name", c.name}, {"entries", entries}});
  }
  j["expectations"] = json::array();
  for (const auto& e : doc.expectations) {
    json x{{"id", e.id},
           {"description", e.description},
           {"expected", json::parse(e.expected)},
           {"citation", e.citation},
           {"criterion", e.criterion}};
    if (e.informational) x["informational"] = true;
    j["expectations"].push_back(x);
  }
  return j.dump(indent);
}

ScenarioDoc scenario_from_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    ScenarioDoc doc;
    doc.id = j.at("id").get<std::string>();
    doc.description = opt<std::string>(j, "description", "");
    doc.degree = j.at("degree").get<int>();
    for (const auto& r : j.at("rings")) doc.rings.push_back(ring_from(r));
    for (const auto& m : j.at("maps")) doc.maps.push_back(map_from(m));
    for (const auto& c : j.at("components"))
      doc.components.push_back({c.at("index").get<int>(), c.at("ring").get<std::string>()});
    for (const auto& p : j.value("pairs", json::array()))
      doc.pairs.push_back({p.at("i").get<int>(), p.at("j").get<int>(), p.at("ring").get<std::string>(),
                           p.at("map_i").get<std::string>(), p.at("map_j").get<std::string>()});
    for (const auto& t : j.value("triples", json::array()))
      doc.triples.push_back({t.at("i").get<int>(), t.at("j").get<int>(), t.at("k").get<int>(),
                             t.at("ring").get<std::string>(), t.at("map_ij").get<std::string>(),
                             t.at("map_ik").get<std::string>(), t.at("map_jk").get<std::string>()});
    for (const auto& c : j.value("cycles", json::array())) {
      CycleDef cd{c.at("name").get<std::string>(), {}};
      for (const auto& e : c.at("entries"))
        cd.entries.push_back({e.at("component").get<int>(), opt<std::string>(e, "ambient", ""),
                              opt<std::string>(e, "exceptional", "")});
      doc.cycles.push_back(std::move(cd));
    }
    for (const auto& e : j.value("expectations", json::array()))
      doc.expectations.push_back({e.at("id").get<std::string>(), opt<std::string>(e, "description", ""),
                                  e.at("expected").dump(), opt<std::string>(e, "citation", ""),
                                  opt<int>(e, "criterion", 0), opt<bool>(e, "informational", false)});
    return doc;
  } catch (const json::exception& e) {
    throw ParseError(std::string("scenario JSON: ") + e.what());
  }
}

}  // namespace prelog
