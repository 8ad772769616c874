#pragma once

#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "prelog/constructions.hpp"
#include "prelog/prelog_complex.hpp"

namespace prelog {

// Declarative scenario document. Every polynomial is text in the variables of
// the ring it lives on; rings and maps may only refer to earlier entries.

struct SocleRingDef {
  std::string name;
  VarList vars;
  int dim = 0;
  std::string socle;
  bool kunneth_valid = false;
  std::string note;
};

struct RenameRingDef {
  std::string name;
  std::string source;
  std::map<std::string, std::string> renames;
};

struct KunnethRingDef {
  std::string name;
  std::string first, second;
  bool override_validity = false;
};

struct BundleRingDef {
  std::string name;
  std::string base;
  std::string xi;
  std::string relation;  // monic quadratic in xi
};

struct BlowupRingDef {
  std::string name;
  std::string ambient;
  std::string exceptional;
  std::map<std::string, std::string> center_pullback;
  std::string zeta;
};

struct SwapRingDef {
  std::string name;
  std::string source;
  std::map<std::string, std::string> renames;
  std::map<std::string, std::string> exceptional_images;
  std::string ambient_name;
};

using RingDef = std::variant<SocleRingDef, RenameRingDef, KunnethRingDef, BundleRingDef, BlowupRingDef, SwapRingDef>;

/// Pull back `var` by solving for it in the span of `ansatz`.
struct SolveDirective {
  std::string var;
  std::vector<std::string> ansatz;
};

struct KunnethMapDef {
  std::string name, source, target;
  std::map<std::string, std::string> pull;
  std::vector<SolveDirective> solve;
  std::string factor;
  std::vector<std::pair<std::string, std::string>> generators;
};

struct ExceptionalMapDef {
  std::string name, source, target;
};

struct SectionMapDef {
  std::string name, source, target;
  std::string sigma;
};

struct StrictMapDef {
  std::string name, source, target;
  std::string ambient_map, center_map;
  std::string sigma;
};

using MapDef = std::variant<KunnethMapDef, ExceptionalMapDef, SectionMapDef, StrictMapDef>;

struct ComponentDef {
  int index = 0;
  std::string ring;
};

struct PairDef {
  int i = 0, j = 0;
  std::string ring, map_i, map_j;
};

struct TripleDef {
  int i = 0, j = 0, k = 0;
  std::string ring, map_ij, map_ik, map_jk;
};

struct CycleEntryDef {
  int component = 0;
  std::string ambient;
  std::string exceptional;
};

struct CycleDef {
  std::string name;
  std::vector<CycleEntryDef> entries;
};

/// A published constant with the place it comes from. `expected` is JSON text.
struct Expectation {
  std::string id;
  std::string description;
  std::string expected;
  std::string citation;
  int criterion = 0;  // acceptance criterion number, 0 for none
  bool informational = false;  // a mismatch is reported, not failed
};

struct ScenarioDoc {
  std::string id;
  std::string description;
  int degree = 0;
  std::vector<RingDef> rings;
  std::vector<MapDef> maps;
  std::vector<ComponentDef> components;
  std::vector<PairDef> pairs;
  std::vector<TripleDef> triples;
  std::vector<CycleDef> cycles;
  std::vector<Expectation> expectations;
};

const std::string& def_name(const RingDef& d);
const std::string& def_name(const MapDef& d);

struct SolvedPullback {
  std::string map;
  std::string var;
  PullbackSolution solution;
};

struct Scenario {
  ScenarioDoc doc;
  std::map<std::string, RingPtr> rings;
  std::map<std::string, MapPtr> maps;
  SncConfig cfg;
  std::vector<PrelogCycle> cycles;
  std::vector<SolvedPullback> solved;

  const RingPtr& ring(const std::string& name) const;
  const MapPtr& map(const std::string& name) const;
};

/// Build every ring and map, solve pullback directives, assemble the SNC
/// configuration and parse the cycles. Throws ConfigError naming the
/// offending entry.
Scenario instantiate(const ScenarioDoc& doc);

std::string scenario_to_json(const ScenarioDoc& doc, int indent = 2);
/// Throws ParseError on malformed JSON or missing fields.
ScenarioDoc scenario_from_json(const std::string& text);

}  // namespace prelog
