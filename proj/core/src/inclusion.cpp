#include "prelog/inclusion.hpp"

#include <algorithm>
#include <set>

#include "prelog/errors.hpp"

namespace prelog {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

bool contains(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

// sigma must read xi + (degree-one class on the base).
void check_section_class(const std::string& map_name, const BundleInfo& bundle, const GradedPoly& sigma) {
  const auto base_names = names_of(bundle.base->vars());
  const Grading g = grading_of(bundle.base->vars());
  Integer xi_coeff = 0;
  for (const auto& [m, c] : sigma.terms()) {
    if (m == Monomial::variable(bundle.xi)) {
      xi_coeff = c;
      continue;
    }
    for (const auto& [n, e] : m.exponents())
      if (!contains(base_names, n))
        throw MapError(map_name + ": section class " + sigma.to_string() + " involves '" + n + "'");
    if (m.weighted_degree(g) != 1)
      throw MapError(map_name + ": section class " + sigma.to_string() + " is not of degree 1");
  }
  if (xi_coeff != 1)
    throw MapError(map_name + ": section class " + sigma.to_string() + " must have " + bundle.xi +
                   "-coefficient 1");
}

const BundleInfo& bundle_of(const std::string& map_name, const RingPtr& ring) {
  if (!ring->bundle()) throw MapError(map_name + ": ring '" + ring->name() + "' is not a projective bundle");
  return *ring->bundle();
}

}  // namespace

InclusionMap::InclusionMap(std::string name, RingPtr source, RingPtr target, EmbeddingData data)
    : name_(std::move(name)), source_(std::move(source)), target_(std::move(target)), data_(std::move(data)) {
  if (!source_ || !target_) throw MapError(name_ + ": missing ring");
  if (codim() < 0) throw MapError(name_ + ": source has larger dimension than target");
}

ChowClass InclusionMap::pull(const ChowClass& x) const {
  return std::visit(
      overloaded{
          [&](const KunnethEmbedding& k) -> ChowClass {
            if (!x.exceptional.is_zero()) throw MapError(name_ + ": target has no exceptional classes");
            return ChowClass(x.ambient.substitute(k.pull));
          },
          [&](const ExceptionalEmbedding&) -> ChowClass {
            const auto& bl = target_->blowup();
            return ChowClass(x.ambient.substitute(bl.center_pullback) - x.exceptional * bl.zeta);
          },
          [&](const SectionEmbedding& s) -> ChowClass {
            return ChowClass(bundle_pushforward(bundle_of(name_, target_), x.ambient * s.sigma));
          },
          [&](const StrictTransformEmbedding& s) -> ChowClass {
            ChowClass out = s.ambient->pull(ChowClass(x.ambient));
            if (!x.exceptional.is_zero()) {
              const auto& bundle = bundle_of(name_, target_->blowup().exceptional);
              out += s.center->push(ChowClass(bundle_pushforward(bundle, x.exceptional * s.sigma)));
            }
            return out;
          },
      },
      data_);
}

ChowClass InclusionMap::push(const ChowClass& y) const {
  if (!y.exceptional.is_zero()) throw MapError(name_ + ": source classes have no exceptional part");
  return std::visit(overloaded{
                        [&](const KunnethEmbedding& k) { return push_kunneth(k, y.ambient); },
                        [&](const ExceptionalEmbedding&) { return ChowClass::j(y.ambient); },
                        [&](const SectionEmbedding& s) { return ChowClass(y.ambient * s.sigma); },
                        [&](const StrictTransformEmbedding& s) {
                          return ChowClass(s.ambient->push(y).ambient, -s.center->pull(y).ambient);
                        },
                    },
                    data_);
}

ChowClass InclusionMap::push_kunneth(const KunnethEmbedding& k, const GradedPoly& y) const {
  const auto factor_names = names_of(k.factor->vars());
  const Grading& fg = k.factor->grading();
  GradedPoly out;
  std::map<Monomial, GradedPoly> images;
  for (const auto& [m, c] : y.terms()) {
    auto [emb, kept] = m.split(factor_names);
    auto it = images.find(emb);
    if (it == images.end()) {
      const int dd = emb.weighted_degree(fg);
      GradedPoly image;
      if (dd <= k.factor->dim()) {
        const IntVector target = k.factor->coordinates(ChowClass(GradedPoly(emb)), dd);
        std::vector<IntVector> cols;
        std::vector<const GradedPoly*> used;
        for (const auto& [g, img] : k.generators) {
          auto gd = g.homogeneous_degree(fg);
          if (gd && *gd == dd) {
            cols.push_back(k.factor->coordinates(ChowClass(g), dd));
            used.push_back(&img);
          }
        }
        const IntMatrix G = IntMatrix::from_columns(cols, target.size());
        auto sol = solve_integer(G, target);
        if (!sol)
          throw MapError(name_ + ": " + emb.to_string() + " is not expressible over the declared module generators");
        for (std::size_t i = 0; i < used.size(); ++i)
          if (sol->x[i] != 0) image += sol->x[i] * *used[i];
      }
      it = images.emplace(emb, std::move(image)).first;
    }
    if (!it->second.is_zero()) out += c * (GradedPoly(kept) * it->second);
  }
  return ChowClass(std::move(out));
}

IntMatrix InclusionMap::pullback_matrix(int d) const {
  auto tp = target_->graded_piece(d);
  auto sp = source_->graded_piece(d);
  IntMatrix out(sp->rank, tp->rank);
  for (std::size_t i = 0; i < tp->rank; ++i) out.set_column(i, source_->coordinates(pull(tp->representatives[i]), d));
  return out;
}

IntMatrix InclusionMap::pushforward_matrix(int d) const {
  auto sp = source_->graded_piece(d);
  auto tp = target_->graded_piece(d + codim());
  IntMatrix out(tp->rank, sp->rank);
  for (std::size_t i = 0; i < sp->rank; ++i)
    out.set_column(i, target_->coordinates(push(sp->representatives[i]), d + codim()));
  return out;
}

void InclusionMap::validate() const {
  const auto src_names = names_of(source_->vars());
  const auto tgt_names = names_of(target_->vars());
  std::visit(
      overloaded{
          [&](const KunnethEmbedding& k) {
            if (source_->is_blowup() || target_->is_blowup())
              throw MapError(name_ + ": Kunneth embeddings need socle-presented rings");
            if (!k.factor) throw MapError(name_ + ": missing factor ring");
            const auto factor_names = names_of(k.factor->vars());
            for (const auto& n : factor_names)
              if (!contains(src_names, n)) throw MapError(name_ + ": factor variable '" + n + "' not in source");
            for (const auto& n : src_names) {
              if (contains(factor_names, n)) continue;
              if (!contains(tgt_names, n))
                throw MapError(name_ + ": source variable '" + n + "' is neither a factor nor a target variable");
              auto it = k.pull.find(n);
              if (it != k.pull.end() && it->second != GradedPoly::variable(n))
                throw MapError(name_ + ": shared variable '" + n + "' must pull back to itself");
            }
            for (const auto& v : target_->vars()) {
              auto it = k.pull.find(v.name);
              if (it == k.pull.end()) {
                if (!contains(src_names, v.name))
                  throw MapError(name_ + ": no pullback given for '" + v.name + "'");
                continue;
              }
              for (const auto& n : it->second.variables())
                if (!contains(src_names, n))
                  throw MapError(name_ + ": pullback of '" + v.name + "' uses unknown variable '" + n + "'");
              auto d = it->second.homogeneous_degree(source_->grading());
              if (!it->second.is_zero() && (!d || *d != v.degree))
                throw MapError(name_ + ": pullback of '" + v.name + "' has the wrong degree");
            }
            for (const auto& [g, img] : k.generators) {
              auto gd = g.homogeneous_degree(k.factor->grading());
              auto id = img.homogeneous_degree(target_->grading());
              if (!gd) throw MapError(name_ + ": generator " + g.to_string() + " is not homogeneous");
              if (!img.is_zero() && (!id || *id != *gd + codim()))
                throw MapError(name_ + ": image of generator " + g.to_string() + " has the wrong degree");
            }
          },
          [&](const ExceptionalEmbedding&) {
            if (!target_->is_blowup() || target_->blowup().exceptional != source_)
              throw MapError(name_ + ": source is not the exceptional divisor of the target");
          },
          [&](const SectionEmbedding& s) {
            const auto& bundle = bundle_of(name_, target_);
            if (bundle.base != source_) throw MapError(name_ + ": source is not the base of the bundle");
            check_section_class(name_, bundle, s.sigma);
          },
          [&](const StrictTransformEmbedding& s) {
            if (!target_->is_blowup()) throw MapError(name_ + ": target is not a blow-up");
            if (!s.ambient || !s.center) throw MapError(name_ + ": missing ambient or center map");
            const auto& bl = target_->blowup();
            if (s.ambient->source() != source_ || s.ambient->target() != bl.ambient)
              throw MapError(name_ + ": ambient map must go from the source to the blown-up variety");
            const auto& bundle = bundle_of(name_, bl.exceptional);
            if (s.center->source() != bundle.base || s.center->target() != source_)
              throw MapError(name_ + ": center map must go from the blow-up center to the source");
            check_section_class(name_, bundle, s.sigma);
          },
      },
      data_);
}

// ---------------------------------------------------------------- checks

ProjectionFormulaReport check_adjointness(const InclusionMap& map) {
  const auto& src = *map.source();
  const auto& tgt = *map.target();
  ProjectionFormulaReport rep;
  for (int d = 0; d <= src.dim(); ++d) {
    const auto xs = tgt.spanning(src.dim() - d);
    std::vector<ChowClass> pulled;
    pulled.reserve(xs.size());
    for (const auto& x : xs) pulled.push_back(map.pull(x));
    for (const auto& y : src.spanning(d)) {
      const ChowClass py = map.push(y);
      for (std::size_t i = 0; i < xs.size(); ++i) {
        ++rep.checked;
        Integer lhs = tgt.degree(tgt.multiply(py, xs[i]));
        Integer rhs = src.degree(src.multiply(y, pulled[i]));
        if (lhs != rhs && rep.failures++ == 0)
          rep.first_failure = map.name() + ": deg(push(" + y.to_string() + ") * " + xs[i].to_string() +
                              ") = " + lhs.get_str() + " but deg(" + y.to_string() + " * pull) = " + rhs.get_str();
      }
    }
  }
  return rep;
}

namespace {

std::vector<std::pair<ChowClass, int>> target_generators(const VarietyRing& ring) {
  std::vector<std::pair<ChowClass, int>> gens;
  for (const auto& v : ring.vars()) gens.emplace_back(ChowClass(GradedPoly::variable(v.name)), v.degree);
  if (ring.is_blowup()) {
    gens.emplace_back(ChowClass::j(GradedPoly(1)), 1);
    for (const auto& v : ring.blowup().exceptional->vars())
      gens.emplace_back(ChowClass::j(GradedPoly::variable(v.name)), v.degree + 1);
  }
  return gens;
}

}  // namespace

ProjectionFormulaReport check_projection_formula(const InclusionMap& map) {
  // Checked for x running over ring generators; together with
  // multiplicativity of pull this covers every monomial x by induction.
  const auto& src = *map.source();
  const auto& tgt = *map.target();
  ProjectionFormulaReport rep;
  for (const auto& [x, a] : target_generators(tgt)) {
    const ChowClass px = map.pull(x);
    for (int b = 0; a + b <= src.dim(); ++b) {
      const int deg = a + b + map.codim();
      for (const auto& y : src.spanning(b)) {
        ++rep.checked;
        auto lhs = tgt.pairing_vector(map.push(src.multiply(px, y)), deg);
        auto rhs = tgt.pairing_vector(tgt.multiply(x, map.push(y)), deg);
        if (lhs != rhs && rep.failures++ == 0)
          rep.first_failure = map.name() + ": push(pull(" + x.to_string() + ") * " + y.to_string() + ") differs from " +
                              x.to_string() + " * push(" + y.to_string() + ")";
      }
    }
  }
  return rep;
}

ProjectionFormulaReport check_pullback_multiplicative(const InclusionMap& map) {
  const auto& src = *map.source();
  const auto& tgt = *map.target();
  ProjectionFormulaReport rep;
  const auto gens = target_generators(tgt);
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i; j < gens.size(); ++j) {
      const int deg = gens[i].second + gens[j].second;
      if (deg > src.dim()) continue;
      ++rep.checked;
      auto lhs = src.pairing_vector(map.pull(tgt.multiply(gens[i].first, gens[j].first)), deg);
      auto rhs = src.pairing_vector(src.multiply(map.pull(gens[i].first), map.pull(gens[j].first)), deg);
      if (lhs != rhs && rep.failures++ == 0)
        rep.first_failure = map.name() + ": pull is not multiplicative on " + gens[i].first.to_string() + ", " +
                            gens[j].first.to_string();
    }
  return rep;
}

}  // namespace prelog
