#include "prelog/prelog_complex.hpp"

#include <algorithm>
#include <sstream>

#include "prelog/errors.hpp"

namespace prelog {

namespace {

std::string pair_label(int i, int j) { return "Y" + std::to_string(i) + std::to_string(j); }

std::string triple_label(const SncTriple& t) {
  return "Y" + std::to_string(t.i) + std::to_string(t.j) + std::to_string(t.k);
}

void check_map(const MapPtr& m, const RingPtr& source, const RingPtr& target, const std::string& what) {
  if (!m) throw ConfigError(what + ": missing map");
  if (m->source() != source || m->target() != target)
    throw ConfigError(what + ": map '" + m->name() + "' goes " + m->source()->name() + " -> " + m->target()->name() +
                      ", expected " + source->name() + " -> " + target->name());
}

}  // namespace

std::size_t SncConfig::component_position(int index) const {
  for (std::size_t a = 0; a < components.size(); ++a)
    if (components[a].index == index) return a;
  throw ConfigError("no component with index " + std::to_string(index));
}

std::size_t SncConfig::pair_position(int i, int j) const {
  for (std::size_t a = 0; a < pairs.size(); ++a)
    if (pairs[a].i == i && pairs[a].j == j) return a;
  throw ConfigError("no double intersection " + pair_label(i, j));
}

void SncConfig::validate() const {
  if (components.empty()) throw ConfigError("configuration has no components");
  const int n = components.front().ring->dim();
  for (std::size_t a = 0; a < components.size(); ++a) {
    if (!components[a].ring) throw ConfigError("component without ring");
    if (a > 0 && components[a].index <= components[a - 1].index)
      throw ConfigError("component indices must be strictly increasing");
    if (components[a].ring->dim() != n) throw ConfigError("components have different dimensions");
  }
  for (const auto& p : pairs) {
    if (p.i >= p.j) throw ConfigError("pair " + pair_label(p.i, p.j) + ": indices must increase");
    if (!p.ring || p.ring->dim() != n - 1) throw ConfigError(pair_label(p.i, p.j) + " must have dimension n-1");
    check_map(p.to_i, p.ring, components[component_position(p.i)].ring, pair_label(p.i, p.j));
    check_map(p.to_j, p.ring, components[component_position(p.j)].ring, pair_label(p.i, p.j));
  }
  for (const auto& t : triples) {
    if (!(t.i < t.j && t.j < t.k)) throw ConfigError(triple_label(t) + ": indices must increase");
    if (!t.ring || t.ring->dim() != n - 2) throw ConfigError(triple_label(t) + " must have dimension n-2");
    check_map(t.to_ij, t.ring, pairs[pair_position(t.i, t.j)].ring, triple_label(t));
    check_map(t.to_ik, t.ring, pairs[pair_position(t.i, t.k)].ring, triple_label(t));
    check_map(t.to_jk, t.ring, pairs[pair_position(t.j, t.k)].ring, triple_label(t));
  }
}

namespace {

template <class Items>
BlockLayout layout_of(const Items& items, int d) {
  BlockLayout l;
  for (const auto& it : items) {
    l.offsets.push_back(l.total);
    const std::size_t r = (d < 0 || d > it.ring->dim()) ? 0 : it.ring->rank(d);
    l.sizes.push_back(r);
    l.total += r;
  }
  return l;
}

void add_block(IntMatrix& M, std::size_t r0, std::size_t c0, const IntMatrix& B, int sign) {
  for (std::size_t r = 0; r < B.rows(); ++r)
    for (std::size_t c = 0; c < B.cols(); ++c) M(r0 + r, c0 + c) += sign * B(r, c);
}

}  // namespace

BlockLayout component_layout(const SncConfig& cfg, int d) { return layout_of(cfg.components, d); }
BlockLayout pair_layout(const SncConfig& cfg, int d) { return layout_of(cfg.pairs, d); }
BlockLayout triple_layout(const SncConfig& cfg, int d) { return layout_of(cfg.triples, d); }

IntMatrix build_delta(const SncConfig& cfg, int k) {
  const auto rows = component_layout(cfg, k);
  const auto cols = pair_layout(cfg, k - 1);
  IntMatrix D(rows.total, cols.total);
  for (std::size_t p = 0; p < cfg.pairs.size(); ++p) {
    const auto& pr = cfg.pairs[p];
    if (cols.sizes[p] == 0) continue;
    add_block(D, rows.offsets[cfg.component_position(pr.i)], cols.offsets[p], pr.to_i->pushforward_matrix(k - 1), +1);
    add_block(D, rows.offsets[cfg.component_position(pr.j)], cols.offsets[p], pr.to_j->pushforward_matrix(k - 1), -1);
  }
  return D;
}

IntMatrix build_rho(const SncConfig& cfg, int k) {
  const auto rows = pair_layout(cfg, k);
  const auto cols = component_layout(cfg, k);
  IntMatrix R(rows.total, cols.total);
  for (std::size_t p = 0; p < cfg.pairs.size(); ++p) {
    const auto& pr = cfg.pairs[p];
    if (rows.sizes[p] == 0) continue;
    add_block(R, rows.offsets[p], cols.offsets[cfg.component_position(pr.i)], pr.to_i->pullback_matrix(k), +1);
    add_block(R, rows.offsets[p], cols.offsets[cfg.component_position(pr.j)], pr.to_j->pullback_matrix(k), -1);
  }
  return R;
}

IntMatrix build_rho_prime(const SncConfig& cfg, int k) {
  const auto rows = triple_layout(cfg, k - 1);
  const auto cols = pair_layout(cfg, k - 1);
  IntMatrix R(rows.total, cols.total);
  for (std::size_t t = 0; t < cfg.triples.size(); ++t) {
    const auto& tr = cfg.triples[t];
    if (rows.sizes[t] == 0) continue;
    add_block(R, rows.offsets[t], cols.offsets[cfg.pair_position(tr.i, tr.j)], tr.to_ij->pullback_matrix(k - 1), +1);
    add_block(R, rows.offsets[t], cols.offsets[cfg.pair_position(tr.i, tr.k)], tr.to_ik->pullback_matrix(k - 1), -1);
    add_block(R, rows.offsets[t], cols.offsets[cfg.pair_position(tr.j, tr.k)], tr.to_jk->pullback_matrix(k - 1), +1);
  }
  return R;
}

IntMatrix build_delta_prime(const SncConfig& cfg, int k) {
  const auto rows = pair_layout(cfg, k);
  const auto cols = triple_layout(cfg, k - 1);
  IntMatrix D(rows.total, cols.total);
  for (std::size_t t = 0; t < cfg.triples.size(); ++t) {
    const auto& tr = cfg.triples[t];
    if (cols.sizes[t] == 0) continue;
    add_block(D, rows.offsets[cfg.pair_position(tr.i, tr.j)], cols.offsets[t], tr.to_ij->pushforward_matrix(k - 1), -1);
    add_block(D, rows.offsets[cfg.pair_position(tr.i, tr.k)], cols.offsets[t], tr.to_ik->pushforward_matrix(k - 1), +1);
    add_block(D, rows.offsets[cfg.pair_position(tr.j, tr.k)], cols.offsets[t], tr.to_jk->pushforward_matrix(k - 1), -1);
  }
  return D;
}

namespace {

CommutativityReport compare_products(const SncConfig& cfg, int k, const IntMatrix& lhs, const IntMatrix& rhs) {
  CommutativityReport rep;
  const auto rows = pair_layout(cfg, k);
  const auto cols = pair_layout(cfg, k - 1);
  for (std::size_t a = 0; a < cfg.pairs.size(); ++a)
    for (std::size_t b = 0; b < cfg.pairs.size(); ++b) {
      std::size_t bad = 0;
      std::string first;
      for (std::size_t r = 0; r < rows.sizes[a]; ++r)
        for (std::size_t c = 0; c < cols.sizes[b]; ++c) {
          const auto& x = lhs(rows.offsets[a] + r, cols.offsets[b] + c);
          const auto& y = rhs(rows.offsets[a] + r, cols.offsets[b] + c);
          if (x == y) continue;
          if (bad++ == 0) {
            const auto& pb = cfg.pairs[b];
            std::ostringstream os;
            os << "entry (" << r << ", " << c << ") on the class "
               << pb.ring->graded_piece(k - 1)->representatives[c].to_string() << ": rho*delta = " << x
               << ", delta'*rho' = " << y;
            first = os.str();
          }
        }
      if (bad) {
        const auto& pa = cfg.pairs[a];
        const auto& pb = cfg.pairs[b];
        rep.commutes = false;
        rep.mismatches += bad;
        rep.diagnostics.push_back("block " + pair_label(pb.i, pb.j) + " -> " + pair_label(pa.i, pa.j) + ": " +
                                  std::to_string(bad) + " mismatches; first " + first);
      }
    }
  return rep;
}

}  // namespace

CommutativityReport check_commutativity(const SncConfig& cfg, int k) {
  const IntMatrix lhs = build_rho(cfg, k) * build_delta(cfg, k);
  const IntMatrix rhs = build_delta_prime(cfg, k) * build_rho_prime(cfg, k);
  return compare_products(cfg, k, lhs, rhs);
}

PrelogResult compute_prelog(const SncConfig& cfg, int k) {
  cfg.validate();
  PrelogResult r;
  r.degree = k;
  r.delta = build_delta(cfg, k);
  r.rho = build_rho(cfg, k);
  r.rho_prime = build_rho_prime(cfg, k);
  r.delta_prime = build_delta_prime(cfg, k);
  r.commutativity = compare_products(cfg, k, r.rho * r.delta, r.delta_prime * r.rho_prime);
  if (!r.commutativity.commutes) {
    std::string msg = "prelog diagram does not commute:";
    for (const auto& d : r.commutativity.diagnostics) msg += "\n  " + d;
    throw ConfigError(msg);
  }
  r.rank_components = component_layout(cfg, k).total;
  r.rank_pairs_km1 = pair_layout(cfg, k - 1).total;
  r.rank_pairs_k = pair_layout(cfg, k).total;
  r.rank_triples_km1 = triple_layout(cfg, k - 1).total;

  r.delta_invariant_factors = snf(r.delta).invariant_factors();
  r.rho_invariant_factors = snf(r.rho).invariant_factors();
  r.rank_delta = r.delta_invariant_factors.size();
  r.rank_rho = r.rho_invariant_factors.size();
  r.coker = cokernel(r.delta);
  r.kernel = kernel_saturated(r.rho);
  r.M = r.coker.projection * r.kernel;
  r.prelog_rank = rank(r.M);
  return r;
}

CycleReport verify_prelog_cycles(const SncConfig& cfg, const PrelogResult& result,
                                 const std::vector<PrelogCycle>& cycles) {
  const int k = result.degree;
  const auto layout = component_layout(cfg, k);
  CycleReport rep;
  rep.all_prelog = true;
  std::vector<IntVector> images;
  for (const auto& cyc : cycles) {
    CycleCheck cc;
    cc.name = cyc.name;
    cc.coordinates.assign(layout.total, Integer(0));
    for (const auto& [idx, cls] : cyc.classes) {
      const std::size_t a = cfg.component_position(idx);
      const auto x = cfg.components[a].ring->coordinates(cls, k);
      for (std::size_t r = 0; r < x.size(); ++r) cc.coordinates[layout.offsets[a] + r] = x[r];
    }
    const auto rv = result.rho.apply(cc.coordinates);
    cc.prelog = std::all_of(rv.begin(), rv.end(), [](const Integer& v) { return v == 0; });
    rep.all_prelog = rep.all_prelog && cc.prelog;
    cc.image = result.coker.projection.apply(cc.coordinates);
    images.push_back(cc.image);
    rep.cycles.push_back(std::move(cc));
  }
  rep.N = IntMatrix::from_columns(images, result.coker.free_rank);
  rep.independent = rank(rep.N) == cycles.size();
  rep.basis_of_prelog_image = rep.all_prelog && rep.independent && same_column_lattice(rep.N, result.M);
  return rep;
}

SaturationResult saturate_prelog(const IntMatrix& N, const std::vector<unsigned long>& primes) {
  if (rank(N) != N.cols()) throw Error("saturate_prelog: generator matrix does not have full column rank");
  SaturationResult s;
  s.N = N;
  s.gcd_minors = gcd_maximal_minors(N);
  for (unsigned long p : primes) {
    s.rank_mod_p[p] = rank_mod_p(N, p);
    if (s.rank_mod_p[p] < N.cols()) {
      IntMatrix K = kernel_mod_p(N, p);
      for (std::size_t c = 0; c < K.cols(); ++c) {
        IntVector w = N.apply(K.column(c));
        for (auto& x : w) {
          if (x % p != 0) throw Error("saturate_prelog: char-p kernel vector does not lift");
          x /= p;
        }
        s.extra_generators.push_back(std::move(w));
      }
      s.kernel_mod_p.emplace(p, std::move(K));
    }
  }
  s.saturated = saturate(N);
  s.index = 1;
  for (const auto& f : snf(N).invariant_factors()) s.index *= f;
  IntMatrix extended = N;
  if (!s.extra_generators.empty())
    extended = N.hstack(IntMatrix::from_columns(s.extra_generators, N.rows()));
  s.extra_generators_saturate = same_column_lattice(extended, s.saturated);
  return s;
}

}  // namespace prelog
