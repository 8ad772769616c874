#include "prelog/variety_ring.hpp"

#include <algorithm>
#include <set>

#include "prelog/errors.hpp"

namespace prelog {

// ---------------------------------------------------------------- ChowClass

ChowClass& ChowClass::operator+=(const ChowClass& o) {
  ambient += o.ambient;
  exceptional += o.exceptional;
  return *this;
}

ChowClass& ChowClass::operator-=(const ChowClass& o) {
  ambient -= o.ambient;
  exceptional -= o.exceptional;
  return *this;
}

ChowClass operator*(const Integer& k, ChowClass a) {
  a.ambient *= k;
  a.exceptional *= k;
  return a;
}

std::string ChowClass::to_string() const {
  if (exceptional.is_zero()) return ambient.to_string();
  if (ambient.is_zero()) return "j_*(" + exceptional.to_string() + ")";
  return "pi^*(" + ambient.to_string() + ") + j_*(" + exceptional.to_string() + ")";
}

// ---------------------------------------------------------------- bundles

std::pair<GradedPoly, GradedPoly> reduce_xi_power(const BundleInfo& bundle, int k) {
  if (k < 0) throw DegreeError("negative power of " + bundle.xi);
  if (k == 0) return {GradedPoly(), GradedPoly(1)};
  GradedPoly a(1), b;
  for (int i = 1; i < k; ++i) {
    GradedPoly na = b - a * bundle.c1;
    GradedPoly nb = -(a * bundle.c2);
    a = std::move(na);
    b = std::move(nb);
  }
  return {a, b};
}

GradedPoly bundle_pushforward(const BundleInfo& bundle, const GradedPoly& y) {
  std::map<int, GradedPoly> linear;  // k -> xi-linear coefficient of xi^k
  GradedPoly out;
  for (const auto& [m, c] : y.terms()) {
    const int k = m.exponent(bundle.xi);
    if (k == 0) continue;
    auto it = linear.find(k);
    if (it == linear.end()) it = linear.emplace(k, reduce_xi_power(bundle, k).first).first;
    auto rest = m.split({bundle.xi}).second;
    out += c * (it->second * GradedPoly(rest));
  }
  return out;
}

// ---------------------------------------------------------------- VarietyRing

RingPtr VarietyRing::make_socle(std::string name, SoclePoly socle, bool kunneth_valid, std::string note) {
  std::shared_ptr<VarietyRing> r(new VarietyRing());
  r->name_ = std::move(name);
  r->dim_ = socle.top_degree();
  r->vars_ = socle.vars();
  r->grading_ = grading_of(r->vars_);
  r->kunneth_valid_ = kunneth_valid;
  r->note_ = std::move(note);
  r->presentation_ = Socle{std::move(socle)};
  return r;
}

RingPtr VarietyRing::make_bundle(std::string name, SoclePoly socle, BundleInfo bundle, std::string note) {
  if (!bundle.base) throw ConfigError("bundle '" + name + "' has no base ring");
  std::shared_ptr<VarietyRing> r(new VarietyRing());
  r->name_ = std::move(name);
  r->dim_ = socle.top_degree();
  r->vars_ = socle.vars();
  r->grading_ = grading_of(r->vars_);
  r->kunneth_valid_ = bundle.base->kunneth_valid();
  r->note_ = std::move(note);
  r->presentation_ = Socle{std::move(socle)};
  r->bundle_ = std::move(bundle);
  return r;
}

RingPtr VarietyRing::make_blowup(std::string name, BlowupPresentation blowup, std::string note) {
  if (!blowup.ambient || !blowup.exceptional) throw ConfigError("blow-up '" + name + "' is missing a ring");
  if (blowup.ambient->is_blowup()) throw ConfigError("blow-up '" + name + "': iterated blow-ups are not supported");
  if (blowup.exceptional->dim() != blowup.ambient->dim() - 1)
    throw ConfigError("blow-up '" + name + "': exceptional divisor has the wrong dimension");
  std::shared_ptr<VarietyRing> r(new VarietyRing());
  r->name_ = std::move(name);
  r->dim_ = blowup.ambient->dim();
  r->vars_ = blowup.ambient->vars();
  r->grading_ = grading_of(r->vars_);
  r->note_ = std::move(note);
  r->presentation_ = std::move(blowup);
  return r;
}

const SoclePoly& VarietyRing::socle() const {
  if (auto* s = std::get_if<Socle>(&presentation_)) return s->socle;
  throw ConfigError("ring '" + name_ + "' is a blow-up and has no socle polynomial");
}

const BlowupPresentation& VarietyRing::blowup() const {
  if (auto* b = std::get_if<BlowupPresentation>(&presentation_)) return *b;
  throw ConfigError("ring '" + name_ + "' is not a blow-up");
}

ChowClass VarietyRing::multiply(const ChowClass& a, const ChowClass& b) const {
  if (std::holds_alternative<Socle>(presentation_)) {
    if (!a.exceptional.is_zero() || !b.exceptional.is_zero())
      throw MapError("ring '" + name_ + "' has no exceptional classes");
    return ChowClass(a.ambient * b.ambient);
  }
  const auto& bl = std::get<BlowupPresentation>(presentation_);
  GradedPoly ex;
  if (!b.exceptional.is_zero()) ex += a.ambient.substitute(bl.center_pullback) * b.exceptional;
  if (!a.exceptional.is_zero()) {
    ex += b.ambient.substitute(bl.center_pullback) * a.exceptional;
    if (!b.exceptional.is_zero()) ex -= a.exceptional * b.exceptional * bl.zeta;
  }
  return ChowClass(a.ambient * b.ambient, std::move(ex));
}

Integer VarietyRing::degree(const ChowClass& a) const {
  if (auto* s = std::get_if<Socle>(&presentation_)) {
    if (!a.exceptional.is_zero()) throw MapError("ring '" + name_ + "' has no exceptional classes");
    return s->socle.evaluate(a.ambient);
  }
  const auto& bl = std::get<BlowupPresentation>(presentation_);
  return bl.ambient->degree(ChowClass(a.ambient)) + bl.exceptional->degree(ChowClass(a.exceptional));
}

void VarietyRing::check_range(int d) const {
  if (d < 0 || d > dim_)
    throw DegreeError("ring '" + name_ + "': degree " + std::to_string(d) + " outside [0, " + std::to_string(dim_) +
                      "]");
}

void VarietyRing::check_degree(const ChowClass& a, int d) const {
  for (const auto& [m, c] : a.ambient.terms())
    if (m.weighted_degree(grading_) != d)
      throw DegreeError("ring '" + name_ + "': term " + m.to_string() + " is not of degree " + std::to_string(d));
  if (a.exceptional.is_zero()) return;
  if (!is_blowup()) throw MapError("ring '" + name_ + "' has no exceptional classes");
  const auto& eg = blowup().exceptional->grading();
  for (const auto& [m, c] : a.exceptional.terms())
    if (m.weighted_degree(eg) != d - 1)
      throw DegreeError("ring '" + name_ + "': exceptional term " + m.to_string() + " is not of degree " +
                        std::to_string(d - 1));
}

std::vector<ChowClass> VarietyRing::spanning(int d) const {
  check_range(d);
  std::vector<ChowClass> out;
  for (auto& m : mono_basis(vars_, d)) out.emplace_back(GradedPoly(m));
  if (is_blowup() && d >= 1)
    for (auto& m : mono_basis(blowup().exceptional->vars(), d - 1)) out.push_back(ChowClass::j(GradedPoly(m)));
  return out;
}

std::shared_ptr<const GradedPiece> VarietyRing::graded_piece(int d) const {
  check_range(d);
  std::lock_guard<std::mutex> lock(cache_mutex_);
  if (auto it = cache_.find(d); it != cache_.end()) return it->second;

  auto piece = std::make_shared<GradedPiece>();
  piece->degree = d;
  piece->spanning = spanning(d);
  piece->cospanning = spanning(dim_ - d);
  const auto& sp = piece->spanning;
  const auto& co = piece->cospanning;
  piece->pairing = IntMatrix(sp.size(), co.size());
  if (auto* s = std::get_if<Socle>(&presentation_)) {
    // Spanning classes are single monomials here; read the socle directly.
    for (std::size_t i = 0; i < sp.size(); ++i) {
      const Monomial& mi = sp[i].ambient.terms().begin()->first;
      for (std::size_t j = 0; j < co.size(); ++j)
        piece->pairing(i, j) = s->socle.coefficient(mi * co[j].ambient.terms().begin()->first);
    }
  } else {
    for (std::size_t i = 0; i < sp.size(); ++i)
      for (std::size_t j = 0; j < co.size(); ++j) piece->pairing(i, j) = degree(multiply(sp[i], co[j]));
  }

  HermiteForm h = hnf(piece->pairing);
  piece->rank = h.rank;
  piece->pivots = h.pivots;
  std::vector<std::size_t> top(h.rank);
  for (std::size_t i = 0; i < h.rank; ++i) top[i] = i;
  piece->basis = h.H.select_rows(top);
  for (std::size_t i = 0; i < h.rank; ++i) {
    ChowClass rep;
    for (std::size_t j = 0; j < sp.size(); ++j)
      if (h.U(i, j) != 0) rep += h.U(i, j) * sp[j];
    piece->representatives.push_back(std::move(rep));
  }
  cache_.emplace(d, piece);
  return piece;
}

IntVector VarietyRing::pairing_vector(const ChowClass& a, int d) const {
  check_range(d);
  check_degree(a, d);
  auto piece = graded_piece(d);
  IntVector v(piece->cospanning.size());
  if (a.is_zero()) return v;
  for (std::size_t j = 0; j < v.size(); ++j) v[j] = degree(multiply(a, piece->cospanning[j]));
  return v;
}

IntVector VarietyRing::coordinates(const ChowClass& a, int d) const {
  auto piece = graded_piece(d);
  auto x = echelon_coordinates(piece->basis, piece->pivots, pairing_vector(a, d));
  if (!x) throw MapError("ring '" + name_ + "': class " + a.to_string() + " is not in the degree-" + std::to_string(d) +
                         " lattice");
  return *x;
}

ChowClass VarietyRing::from_coordinates(const IntVector& x, int d) const {
  auto piece = graded_piece(d);
  if (x.size() != piece->rank) throw DegreeError("from_coordinates: wrong number of coordinates");
  ChowClass out;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0) out += x[i] * piece->representatives[i];
  return out;
}

ChowClass VarietyRing::parse_class(const std::string& ambient, const std::string& exceptional) const {
  auto check = [this](const GradedPoly& p, const VarList& vars) {
    auto names = names_of(vars);
    for (const auto& v : p.variables())
      if (std::find(names.begin(), names.end(), v) == names.end())
        throw ParseError("ring '" + name_ + "' has no variable '" + v + "'");
  };
  ChowClass c;
  if (!ambient.empty()) {
    c.ambient = parse_poly(ambient, names_of(vars_));
    check(c.ambient, vars_);
  }
  if (!exceptional.empty()) {
    if (!is_blowup()) throw ParseError("ring '" + name_ + "' has no exceptional classes");
    const auto& evars = blowup().exceptional->vars();
    c.exceptional = parse_poly(exceptional, names_of(evars));
    check(c.exceptional, evars);
  }
  return c;
}

}  // namespace prelog
