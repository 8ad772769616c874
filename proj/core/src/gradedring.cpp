#include "prelog/gradedring.hpp"

#include <set>
#include <sstream>

#include "prelog/errors.hpp"

namespace prelog {

Grading grading_of(const VarList& vars) {
  Grading g;
  for (const auto& v : vars) g[v.name] = v.degree;
  return g;
}

std::vector<std::string> names_of(const VarList& vars) {
  std::vector<std::string> out;
  out.reserve(vars.size());
  for (const auto& v : vars) out.push_back(v.name);
  return out;
}

void validate_vars(const VarList& vars) {
  std::set<std::string> seen;
  for (const auto& v : vars) {
    if (v.name.empty()) throw ConfigError("empty variable name");
    if (v.degree < 1) throw ConfigError("variable '" + v.name + "' has degree < 1");
    if (!seen.insert(v.name).second) throw ConfigError("duplicate variable '" + v.name + "'");
  }
}

namespace {

void enumerate(const VarList& vars, std::size_t i, int remaining, std::map<std::string, int>& cur,
               std::vector<Monomial>& out) {
  if (i == vars.size()) {
    if (remaining == 0) out.emplace_back(cur);
    return;
  }
  const auto& v = vars[i];
  for (int e = remaining / v.degree; e >= 0; --e) {
    cur[v.name] = e;
    enumerate(vars, i + 1, remaining - e * v.degree, cur, out);
  }
  cur.erase(v.name);
}

}  // namespace

std::vector<Monomial> mono_basis(const VarList& vars, int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  std::map<std::string, int> cur;
  enumerate(vars, 0, d, cur, out);
  return out;
}

// ---------------------------------------------------------------- SoclePoly

SoclePoly::SoclePoly(VarList vars, int top_degree) : vars_(std::move(vars)), top_(top_degree) {
  validate_vars(vars_);
}

SoclePoly SoclePoly::from_terms(const VarList& vars, int top_degree, const GradedPoly& terms) {
  SoclePoly f(vars, top_degree);
  const Grading g = grading_of(vars);
  for (const auto& [m, c] : terms.terms()) {
    if (m.weighted_degree(g) != top_degree)
      throw DegreeError("socle term " + m.to_string() + " has degree " + std::to_string(m.weighted_degree(g)) +
                        ", expected " + std::to_string(top_degree));
    f.terms_.add_term(m, c);
  }
  return f;
}

SoclePoly SoclePoly::parse(std::string_view text, const VarList& vars, int top_degree) {
  GradedPoly terms;
  for (const auto& [exps, c] : parse_laurent(text, names_of(vars))) {
    bool neg = false, pos = false;
    std::map<std::string, int> m;
    for (const auto& [n, e] : exps) {
      (e < 0 ? neg : pos) = true;
      m[n] = e < 0 ? -e : e;
    }
    if (neg && pos) throw ParseError("socle term mixes inverse and plain exponents in '" + std::string(text) + "'");
    terms.add_term(Monomial(std::move(m)), c);
  }
  return from_terms(vars, top_degree, terms);
}

Integer SoclePoly::evaluate(const GradedPoly& p) const {
  Integer s = 0;
  for (const auto& [m, c] : p.terms()) {
    auto it = terms_.terms().find(m);
    if (it != terms_.terms().end()) s += c * it->second;
  }
  return s;
}

std::string SoclePoly::to_string() const {
  if (terms_.is_zero()) return "0";
  const auto order = names_of(vars_);
  std::ostringstream os;
  bool first = true;
  // Print in mono_basis order so the leading variable's high powers come first.
  for (const auto& m : mono_basis(vars_, top_)) {
    const Integer c = terms_.coefficient(m);
    if (c == 0) continue;
    Integer a = abs(c);
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    if (m.is_one()) {
      os << a;
      continue;
    }
    if (a != 1) os << a;
    os << m.to_string(order, true, false);
  }
  return os.str();
}

// ---------------------------------------------------------------- contraction

SoclePoly contract(const GradedPoly& p, const SoclePoly& f) {
  const Grading g = grading_of(f.vars());
  if (p.is_zero()) return SoclePoly(f.vars(), f.top_degree());
  auto d = p.homogeneous_degree(g);
  if (!d) throw DegreeError("contract: '" + p.to_string() + "' is not homogeneous");
  GradedPoly out;
  for (const auto& [mp, cp] : p.terms())
    for (const auto& [mf, cf] : f.terms().terms())
      if (auto q = mf.divide(mp)) out.add_term(*q, cp * cf);
  return SoclePoly::from_terms(f.vars(), f.top_degree() - *d, out);
}

Integer pair(const GradedPoly& p, const GradedPoly& q, const SoclePoly& f) {
  const Grading g = grading_of(f.vars());
  if (p.is_zero() || q.is_zero()) return 0;
  auto dp = p.homogeneous_degree(g), dq = q.homogeneous_degree(g);
  if (!dp || !dq) throw DegreeError("pair: inhomogeneous argument");
  if (*dp + *dq != f.top_degree())
    throw DegreeError("pair: degrees " + std::to_string(*dp) + " + " + std::to_string(*dq) +
                      " do not add up to " + std::to_string(f.top_degree()));
  return contract(p * q, f).coefficient(Monomial());
}

IntMatrix pairing_matrix(const VarList& vars, const SoclePoly& f, int d) {
  if (d < 0 || d > f.top_degree()) throw DegreeError("pairing_matrix: degree out of range");
  const auto rows = mono_basis(vars, d);
  const auto cols = mono_basis(vars, f.top_degree() - d);
  IntMatrix P(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) P(i, j) = f.coefficient(rows[i] * cols[j]);
  return P;
}

}  // namespace prelog
