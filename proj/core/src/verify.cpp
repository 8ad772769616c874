#include "prelog/verify.hpp"

#include <functional>
#include <iomanip>
#include <optional>
#include <sstream>

#include "json_util.hpp"
#include "prelog/cubic3fold.hpp"
#include "prelog/errors.hpp"

namespace prelog {

using nlohmann::json;

bool selected(const std::string& id, const std::vector<std::string>& only) {
  if (only.empty()) return true;
  for (const auto& x : only)
    if (id == x || (id.size() > x.size() && id.compare(0, x.size(), x) == 0 && id[x.size()] == '.')) return true;
  return false;
}

namespace {

std::vector<std::string> split_dots(const std::string& id, std::size_t max_parts) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (parts.size() + 1 < max_parts) {
    auto dot = id.find('.', start);
    if (dot == std::string::npos) break;
    parts.push_back(id.substr(start, dot - start));
    start = dot + 1;
  }
  parts.push_back(id.substr(start));
  return parts;
}

unsigned long prime_of(const std::string& text) {
  std::size_t used = 0;
  unsigned long p = 0;
  try {
    p = std::stoul(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || !is_prime(p)) throw ConfigError("'" + text + "' is not a prime");
  return p;
}

json factor_counts(const IntVector& factors) {
  json j = json::object();
  for (const auto& f : factors) {
    const auto key = f.get_str();
    j[key] = j.value(key, 0) + 1;
  }
  return j;
}

json shape(const IntMatrix& m) { return json::array({m.rows(), m.cols()}); }

// Lazily computed quantities shared between checks.
class Evaluator {
public:
  explicit Evaluator(const Scenario& s) : s_(s) {}

  const PrelogResult& prelog() {
    if (!prelog_) prelog_ = compute_prelog(s_.cfg, s_.doc.degree);
    return *prelog_;
  }

  const CycleReport& cycles() {
    if (!cycles_) cycles_ = verify_prelog_cycles(s_.cfg, prelog(), s_.cycles);
    return *cycles_;
  }

  const SaturationResult& saturation() {
    if (!saturation_) saturation_ = saturate_prelog(cycles().N);
    return *saturation_;
  }

  json compute(const std::string& id) {
    const auto parts = split_dots(id, 3);
    const auto& head = parts[0];
    if (head == "degree" && parts.size() == 3) {
      const auto& ring = s_.ring(parts[1]);
      return detail::int_json(ring->degree(ring->parse_class(parts[2])));
    }
    if (head == "rank_vector" && parts.size() == 2) {
      const auto& ring = s_.ring(parts[1]);
      json a = json::array();
      for (int d = 0; d <= ring->dim(); ++d) a.push_back(ring->rank(d));
      return a;
    }
    if (id == "y1.rederived_socle_matches") return rederived_matches();
    if (id == "ranks.components") return prelog().rank_components;
    if (id == "ranks.pairs.km1") return prelog().rank_pairs_km1;
    if (id == "ranks.pairs.k") return prelog().rank_pairs_k;
    if (id == "ranks.triples.km1") return prelog().rank_triples_km1;
    if ((head == "delta" || head == "rho" || head == "rho_prime" || head == "delta_prime") && parts.size() >= 2) return map_quantity(head, id.substr(head.size() + 1));
    if (id == "coker.free_rank") return prelog().coker.free_rank;
    if (id == "coker.torsion") return detail::vector_json(prelog().coker.invariant_factors);
    if (id == "ker_rho.rank") return prelog().kernel.cols();
    if (id == "commutativity") {
      const auto& c = prelog().commutativity;
      return c.commutes;
    }
    if (id == "prelog.rank") return prelog().prelog_rank;
    if (id == "prelog.M_shape") return shape(prelog().M);
    if (head == "cycles") return cycle_quantity(id);
    if (head == "solve") return solve_quantity(id);
    if (id == "saturation") return detail::int_json(saturation().gcd_minors);
    if (head == "sat") return saturation_quantity(id);
    if (head == "maps" && parts.size() == 2) return map_failures(parts[1]);
    throw ConfigError("no evaluator for check id '" + id + "'");
  }

  /// Solutions are compared as polynomials, everything else as JSON values.
  bool matches(const std::string& id, const json& expected, const json& computed) const {
    if (id.rfind("solve.", 0) == 0 && expected.is_string() && computed.is_string()) {
      const auto* solved = find_solution(id);
      if (solved) {
        const auto names = names_of(s_.map(solved->map)->source()->vars());
        return parse_poly(expected.get<std::string>(), names) == parse_poly(computed.get<std::string>(), names);
      }
    }
    return expected == computed;
  }

private:
  json rederived_matches() {
    return rederive_y1_socle(s_) == s_.ring("Y1")->socle();
  }

  json map_quantity(const std::string& which, const std::string& what) {
    const auto& p = prelog();
    const IntMatrix& m = which == "delta"       ? p.delta
                         : which == "rho"       ? p.rho
                         : which == "rho_prime" ? p.rho_prime
                                                : p.delta_prime;
    if (what == "shape") return shape(m);
    if (what == "rank") return rank(m);
    if (what.rfind("rank_mod.", 0) == 0) return rank_mod_p(m, prime_of(what.substr(9)));
    if (what == "invariant_factors") return factor_counts(snf(m).invariant_factors());
    throw ConfigError("no evaluator for '" + which + "." + what + "'");
  }

  json cycle_quantity(const std::string& id) {
    const auto& rep = cycles();
    if (id == "cycles.basis") return rep.basis_of_prelog_image;
    if (id == "cycles.independent") return rep.independent;
    if (id.rfind("cycles.prelog.", 0) == 0) {
      const auto name = id.substr(14);
      for (const auto& c : rep.cycles)
        if (c.name == name) return c.prelog;
      throw ConfigError("unknown cycle '" + name + "'");
    }
    throw ConfigError("no evaluator for '" + id + "'");
  }

  const SolvedPullback* find_solution(const std::string& id) const {
    for (const auto& sp : s_.solved) {
      const auto base = "solve." + sp.map + "." + sp.var;
      if (id == base || id == base + ".unique") return &sp;
    }
    return nullptr;
  }

  json solve_quantity(const std::string& id) {
    const auto* sp = find_solution(id);
    if (!sp) throw ConfigError("no solved pullback for '" + id + "'");
    if (id.size() > 7 && id.compare(id.size() - 7, 7, ".unique") == 0) return sp->solution.unique;
    return sp->solution.value.to_string(names_of(s_.map(sp->map)->source()->vars()));
  }

  json saturation_quantity(const std::string& id) {
    const auto& sat = saturation();
    const auto parts = split_dots(id, 3);
    if (parts.size() == 3 && parts[1] == "rank_mod") return rank_mod_p(sat.N, prime_of(parts[2]));
    if (parts.size() == 3 && parts[1] == "kernel_mod") {
      const auto k = kernel_mod_p(sat.N, prime_of(parts[2]));
      return detail::matrix_json(k.transpose());
    }
    if (id == "sat.index") return detail::int_json(sat.index);
    if (id == "sat.rank") return sat.saturated.cols();
    if (id == "sat.half_sum") {
      IntVector sum(sat.N.rows());
      for (std::size_t c = 0; c < sat.N.cols(); ++c)
        for (std::size_t r = 0; r < sat.N.rows(); ++r) sum[r] += sat.N(r, c);
      for (auto& x : sum) {
        if (!mpz_divisible_ui_p(x.get_mpz_t(), 2)) return false;
        x /= 2;
      }
      const IntMatrix with_half = sat.N.hstack(IntMatrix::from_columns({sum}, sat.N.rows()));
      return same_column_lattice(with_half, sat.saturated);
    }
    throw ConfigError("no evaluator for '" + id + "'");
  }

  json map_failures(const std::string& kind) {
    std::size_t failures = 0;
    for (const auto& [name, map] : s_.maps) {
      ProjectionFormulaReport r;
      if (kind == "adjointness")
        r = check_adjointness(*map);
      else if (kind == "projection_formula")
        r = check_projection_formula(*map);
      else if (kind == "pullback_multiplicative")
        r = check_pullback_multiplicative(*map);
      else
        throw ConfigError("no evaluator for 'maps." + kind + "'");
      failures += r.failures;
    }
    return failures;
  }

  const Scenario& s_;
  std::optional<PrelogResult> prelog_;
  std::optional<CycleReport> cycles_;
  std::optional<SaturationResult> saturation_;
};

template <class F>
auto attempt(F&& f) -> std::optional<decltype(f())> {
  try {
    return f();
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace

Report run_verification(const Scenario& s, const VerifyOptions& opts) {
  Report report;
  report.tool_version = version();
  report.scenario_id = s.doc.id;

  Evaluator ev(s);
  for (const auto& e : s.doc.expectations) {
    if (!selected(e.id, opts.only)) continue;
    Check c{e.id, e.description, e.citation, e.expected, "null", CheckStatus::fail, e.criterion};
    try {
      const json expected = json::parse(e.expected);
      const json computed = ev.compute(e.id);
      c.computed = computed.dump();
      if (ev.matches(e.id, expected, computed))
        c.status = CheckStatus::pass;
      else
        c.status = e.informational ? CheckStatus::info : CheckStatus::fail;
    } catch (const std::exception& err) {
      c.computed = json{{"error", err.what()}}.dump();
      c.status = CheckStatus::fail;
    }
    report.checks.push_back(std::move(c));
  }

  if (auto r = attempt([&] { return ev.prelog().prelog_rank; })) report.summary.prelog_rank = *r;
  if (auto r = attempt([&] { return ev.prelog().coker.invariant_factors; })) report.summary.invariant_factors = *r;
  if (auto r = attempt([&] { return ev.cycles().cycles.size(); })) report.summary.generator_count = *r;
  if (auto r = attempt([&] { return ev.saturation().index; })) report.summary.saturation_index = *r;
  return report;
}

std::string expectation_table(const ScenarioDoc& doc) {
  std::ostringstream os;
  std::size_t w = 2;
  for (const auto& e : doc.expectations) w = std::max(w, e.id.size());
  os << std::left << std::setw(4) << "AC" << std::setw(static_cast<int>(w) + 2) << "id" << std::setw(20)
     << "expected"
     << "citation\n";
  for (const auto& e : doc.expectations) {
    os << std::setw(4) << (e.criterion ? std::to_string(e.criterion) : std::string("-"))
       << std::setw(static_cast<int>(w) + 2) << e.id << std::setw(20) << e.expected << e.citation
       << (e.informational ? " (informational)" : "") << '\n';
  }
  return os.str();
}

}  // namespace prelog
