#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "prelog/cubic3fold.hpp"
#include "prelog/errors.hpp"
#include "prelog/report.hpp"
#include "prelog/verify.hpp"

namespace prelog::cli {

using nlohmann::json;

namespace {

// Integers past the 53-bit range become strings, as in the report.
json int_json(const Integer& x) {
  static const Integer safe("9007199254740991");
  if (abs(x) <= safe) return x.get_si();
  return x.get_str();
}

json matrix_json(const IntMatrix& m) {
  json a = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(int_json(m(r, c)));
    a.push_back(row);
  }
  return a;
}

json classes_json(const std::vector<ChowClass>& cs) {
  json a = json::array();
  for (const auto& c : cs) a.push_back(c.to_string());
  return a;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text, std::ostream& out) {
  if (path == "-") {
    out << text << '\n';
    return;
  }
  std::ofstream f(path);
  if (!f || !(f << text << '\n')) throw ConfigError("cannot write '" + path + "'");
}

std::string kind_of(const VarietyRing& r) {
  if (r.is_blowup()) return "blowup";
  if (r.bundle()) return "bundle";
  return "socle";
}

std::string generators_text(const VarList& vars) {
  std::string s;
  for (const auto& v : vars) s += (s.empty() ? "" : " ") + v.name + "(" + std::to_string(v.degree) + ")";
  return s;
}

void print_matrix(std::ostream& out, const IntMatrix& m, const std::string& indent) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out << indent << '[';
    for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? " " : "") << std::setw(4) << m(r, c);
    out << " ]\n";
  }
}

struct RingArgs {
  std::string name;
  int degree = -1;
  bool json = false;
};

int cmd_ring(const Scenario& s, const RingArgs& a, std::ostream& out) {
  const auto& ring = s.ring(a.name);
  std::vector<std::size_t> ranks;
  for (int d = 0; d <= ring->dim(); ++d) ranks.push_back(ring->rank(d));

  if (a.json) {
    json j{{"name", ring->name()}, {"dim", ring->dim()}, {"kind", kind_of(*ring)}, {"ranks", ranks}};
    j["generators"] = json::array();
    for (const auto& v : ring->vars()) j["generators"].push_back({{"name", v.name}, {"degree", v.degree}});
    j["socle"] = ring->is_blowup() ? json(nullptr) : json(ring->socle().to_string());
    if (a.degree >= 0) {
      const auto piece = ring->graded_piece(a.degree);
      j["degree"] = a.degree;
      j["rank"] = piece->rank;
      j["spanning"] = classes_json(piece->spanning);
      j["cospanning"] = classes_json(piece->cospanning);
      j["pairing"] = matrix_json(piece->pairing);
      j["basis"] = matrix_json(piece->basis);
      j["representatives"] = classes_json(piece->representatives);
    }
    out << j.dump(2) << '\n';
    return kOk;
  }

  out << "ring " << ring->name() << "  (" << kind_of(*ring) << ", dim " << ring->dim() << ")\n";
  out << "generators: " << generators_text(ring->vars()) << '\n';
  if (ring->is_blowup()) {
    const auto& b = ring->blowup();
    out << "blow-up of " << b.ambient->name() << ", exceptional divisor " << b.exceptional->name()
        << ", zeta = " << b.zeta.to_string() << '\n';
  } else {
    out << "socle: " << ring->socle().to_string() << '\n';
  }
  if (!ring->note().empty()) out << "note: " << ring->note() << '\n';
  out << "ranks:";
  for (auto r : ranks) out << ' ' << r;
  out << '\n';
  if (a.degree < 0) return kOk;

  const auto piece = ring->graded_piece(a.degree);
  out << "\nNum^" << a.degree << ": rank " << piece->rank << '\n';
  out << "spanning:  ";
  for (const auto& c : piece->spanning) out << ' ' << c.to_string();
  out << "\ncospanning:";
  for (const auto& c : piece->cospanning) out << ' ' << c.to_string();
  out << "\npairing matrix:\n";
  print_matrix(out, piece->pairing, "  ");
  out << "lattice basis:\n";
  print_matrix(out, piece->basis, "  ");
  out << "representatives:";
  for (const auto& c : piece->representatives) out << ' ' << c.to_string();
  out << '\n';
  return kOk;
}

struct ComplexArgs {
  int degree = 0;
  unsigned long prime = 0;
  bool ranks = false;
  bool json = false;
};

int cmd_complex(const Scenario& s, const ComplexArgs& a, std::ostream& out) {
  const int k = a.degree > 0 ? a.degree : s.doc.degree;
  if (a.prime != 0 && !is_prime(a.prime)) throw ConfigError("--char " + std::to_string(a.prime) + " is not a prime");

  struct Named {
    const char* name;
    IntMatrix m;
  };
  const std::vector<Named> maps{{"delta", build_delta(s.cfg, k)},
                                {"rho", build_rho(s.cfg, k)},
                                {"rho'", build_rho_prime(s.cfg, k)},
                                {"delta'", build_delta_prime(s.cfg, k)}};
  auto rank_of = [&](const IntMatrix& m) { return a.prime ? rank_mod_p(m, a.prime) : rank(m); };
  const auto coker = cokernel(maps[0].m);
  const auto ker_rho = kernel_saturated(maps[1].m);
  const auto comm = check_commutativity(s.cfg, k);
  const std::string field = a.prime ? "F_" + std::to_string(a.prime) : "Q";

  if (a.json) {
    json j{{"degree", k}, {"field", field}};
    for (const auto& n : maps)
      j["maps"][n.name] = {{"rows", n.m.rows()}, {"cols", n.m.cols()}, {"rank", rank_of(n.m)}};
    json torsion = json::array();
    for (const auto& t : coker.invariant_factors) torsion.push_back(int_json(t));
    j["coker_delta"] = {{"free_rank", coker.free_rank}, {"torsion", torsion}};
    j["ker_rho_rank"] = ker_rho.cols();
    j["commutes"] = comm.commutes;
    if (a.ranks) {
      auto blocks = [&](const BlockLayout& l) { return json(l.sizes); };
      j["blocks"] = {{"components", blocks(component_layout(s.cfg, k))},
                     {"pairs_km1", blocks(pair_layout(s.cfg, k - 1))},
                     {"pairs_k", blocks(pair_layout(s.cfg, k))},
                     {"triples_km1", blocks(triple_layout(s.cfg, k - 1))}};
    }
    out << j.dump(2) << '\n';
    return kOk;
  }

  out << "prelog complex in degree " << k << ", ranks over " << field << "\n\n";
  out << std::left << std::setw(8) << "map" << std::setw(10) << "shape"
      << "rank\n";
  for (const auto& n : maps)
    out << std::setw(8) << n.name << std::setw(10) << (std::to_string(n.m.rows()) + "x" + std::to_string(n.m.cols()))
        << rank_of(n.m) << '\n';
  out << "\ncoker delta: Z^" << coker.free_rank;
  for (const auto& t : coker.invariant_factors) out << " + Z/" << t;
  out << "\nker rho: Z^" << ker_rho.cols() << '\n';
  out << "rho delta = delta' rho': " << (comm.commutes ? "holds" : "FAILS") << '\n';
  for (const auto& d : comm.diagnostics) out << "  " << d << '\n';
  if (comm.commutes) {
    const auto result = compute_prelog(s.cfg, k);
    out << "prelog rank (mod torsion): " << result.prelog_rank << '\n';
  }

  if (a.ranks) {
    out << "\nblock ranks\n";
    auto row = [&](const std::string& label, const std::string& ring, std::size_t km1, std::size_t kk) {
      out << "  " << std::setw(12) << label << std::setw(8) << ring << "Num^" << k - 1 << " " << std::setw(4) << km1
          << "Num^" << k << " " << kk << '\n';
    };
    for (const auto& c : s.cfg.components)
      row("Y" + std::to_string(c.index), c.ring->name(), c.ring->rank(k - 1), c.ring->rank(k));
    for (const auto& p : s.cfg.pairs)
      row("Y" + std::to_string(p.i) + std::to_string(p.j), p.ring->name(), p.ring->rank(k - 1), p.ring->rank(k));
    for (const auto& t : s.cfg.triples)
      row("Y" + std::to_string(t.i) + std::to_string(t.j) + std::to_string(t.k), t.ring->name(), t.ring->rank(k - 1),
          t.ring->rank(k));
  }
  return kOk;
}

struct VerifyArgs {
  std::string json_path;
  std::vector<std::string> only;
};

int cmd_verify(const Scenario& s, const VerifyArgs& a, std::ostream& out) {
  VerifyOptions opts;
  opts.only = a.only;
  const Report report = run_verification(s, opts);
  if (report.checks.empty()) throw ConfigError("no check matches the --only selection");
  if (a.json_path == "-") {
    out << report.to_json() << '\n';
  } else {
    out << report.table();
    if (!a.json_path.empty()) write_file(a.json_path, report.to_json(), out);
  }
  return report.exit_code() == 0 ? kOk : kChecksFailed;
}

struct ReportArgs {
  std::string scenario_out;
};

int cmd_report(const Scenario& s, const ReportArgs& a, std::ostream& out) {
  const int k = s.doc.degree;
  out << "scenario " << s.doc.id << ": " << s.doc.description << "\n\n";
  out << "ranks of Num^d\n";
  for (const auto& [name, ring] : s.rings) {
    out << "  " << std::left << std::setw(8) << name << " dim " << ring->dim() << ":";
    for (int d = 0; d <= ring->dim(); ++d) out << ' ' << ring->rank(d);
    out << '\n';
  }
  out << "\nblock sums in degree " << k << '\n';
  const auto sum = [](const BlockLayout& l) { return l.total; };
  out << "  components Num^" << k << ": " << sum(component_layout(s.cfg, k)) << '\n';
  out << "  pairs Num^" << k - 1 << ": " << sum(pair_layout(s.cfg, k - 1)) << '\n';
  out << "  pairs Num^" << k << ": " << sum(pair_layout(s.cfg, k)) << '\n';
  out << "  triples Num^" << k - 1 << ": " << sum(triple_layout(s.cfg, k - 1)) << '\n';
  out << "\nexpectations\n" << expectation_table(s.doc);
  if (!a.scenario_out.empty()) write_file(a.scenario_out, scenario_to_json(s.doc), out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical Chow rings and prelog Chow groups of SNC degenerations", "prelogchow"};
  app.set_version_flag("--version", version());
  app.require_subcommand(1);

  std::string scenario_path;
  app.add_option("--scenario", scenario_path, "scenario JSON file (default: built-in cubic threefold)");

  RingArgs ring_args;
  auto* ring = app.add_subcommand("ring", "show generators, socle and graded pieces of a ring");
  ring->add_option("name", ring_args.name, "ring name")->required();
  ring->add_option("--degree", ring_args.degree, "graded piece to print")->check(CLI::NonNegativeNumber);
  ring->add_flag("--json", ring_args.json, "JSON output");

  ComplexArgs complex_args;
  auto* complex = app.add_subcommand("complex", "maps of the prelog complex with their ranks");
  complex->add_option("--degree", complex_args.degree, "cycle degree k (default: scenario degree)")
      ->check(CLI::PositiveNumber);
  complex->add_option("--char", complex_args.prime, "compute ranks modulo this prime");
  complex->add_flag("--ranks", complex_args.ranks, "also print block ranks");
  complex->add_flag("--json", complex_args.json, "JSON output");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "check every expectation of the scenario");
  verify->add_option("--json", verify_args.json_path, "write the JSON report here ('-' for stdout)");
  verify->add_option("--only", verify_args.only, "check id or id prefix; repeatable");

  ReportArgs report_args;
  auto* report = app.add_subcommand("report", "rank tables and the expectation registry");
  report->add_option("--scenario-out", report_args.scenario_out, "write the scenario JSON here ('-' for stdout)");

  std::vector<const char*> argv{"prelogchow"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const Scenario s =
        scenario_path.empty() ? build_cubic_threefold() : instantiate(scenario_from_json(read_file(scenario_path)));
    if (*ring) return cmd_ring(s, ring_args, out);
    if (*complex) return cmd_complex(s, complex_args, out);
    if (*verify) return cmd_verify(s, verify_args, out);
    return cmd_report(s, report_args, out);
  } catch (const std::exception& e) {
    err << "prelogchow: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace prelog::cli
