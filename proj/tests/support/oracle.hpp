#pragma once

// Independent reference computations for the tests. Nothing here calls the
// normal-form code of the library: ranks come from rational elimination,
// determinants from cofactor expansion, degrees straight from socle terms.

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "prelog/int_matrix.hpp"
#include "prelog/polynomial.hpp"

namespace oracle {

using prelog::GradedPoly;
using prelog::IntMatrix;
using prelog::Integer;
using prelog::Monomial;

/// Rank over Q by fraction Gaussian elimination.
inline std::size_t rational_rank(const IntMatrix& A) {
  std::vector<std::vector<mpq_class>> m(A.rows(), std::vector<mpq_class>(A.cols()));
  for (std::size_t r = 0; r < A.rows(); ++r)
    for (std::size_t c = 0; c < A.cols(); ++c) m[r][c] = A(r, c);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < A.cols() && rank < A.rows(); ++c) {
    std::size_t p = rank;
    while (p < A.rows() && m[p][c] == 0) ++p;
    if (p == A.rows()) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = 0; r < A.rows(); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const mpq_class f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < A.cols(); ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

/// Rank over F_p by plain modular elimination.
inline std::size_t modular_rank(const IntMatrix& A, long p) {
  std::vector<std::vector<long>> m(A.rows(), std::vector<long>(A.cols()));
  for (std::size_t r = 0; r < A.rows(); ++r)
    for (std::size_t c = 0; c < A.cols(); ++c) {
      mpz_class x = A(r, c) % p;
      if (x < 0) x += p;
      m[r][c] = x.get_si();
    }
  auto inv = [p](long a) {
    long r = 1, b = a, e = p - 2;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };
  std::size_t rank = 0;
  for (std::size_t c = 0; c < A.cols() && rank < A.rows(); ++c) {
    std::size_t q = rank;
    while (q < A.rows() && m[q][c] == 0) ++q;
    if (q == A.rows()) continue;
    std::swap(m[q], m[rank]);
    const long iv = inv(m[rank][c]);
    for (std::size_t r = 0; r < A.rows(); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const long f = m[r][c] * iv % p;
      for (std::size_t k = c; k < A.cols(); ++k) m[r][k] = ((m[r][k] - f * m[rank][k]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

/// Laplace expansion; only for small matrices.
inline Integer cofactor_det(const IntMatrix& A) {
  const std::size_t n = A.rows();
  if (n == 0) return 1;
  if (n == 1) return A(0, 0);
  Integer det = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (A(0, c) == 0) continue;
    std::vector<std::size_t> rows, cols;
    for (std::size_t r = 1; r < n; ++r) rows.push_back(r);
    for (std::size_t k = 0; k < n; ++k)
      if (k != c) cols.push_back(k);
    const Integer minor = cofactor_det(A.select_rows(rows).select_columns(cols));
    det += (c % 2 ? -1 : 1) * A(0, c) * minor;
  }
  return det;
}

/// gcd of all k x k minors with k = min(rows, cols), by enumeration.
inline Integer enumerated_minor_gcd(const IntMatrix& A) {
  const bool tall = A.rows() >= A.cols();
  const IntMatrix B = tall ? A : A.transpose();
  const std::size_t k = B.cols(), n = B.rows();
  Integer g = 0;
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    g = gcd(g, cofactor_det(B.select_rows(pick)));
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return g;
}

inline bool is_unimodular(const IntMatrix& U) {
  const Integer d = cofactor_det(U);
  return d == 1 || d == -1;
}

/// Degree of a top-degree polynomial read directly off socle coefficients.
inline Integer socle_degree(const GradedPoly& socle_terms, const GradedPoly& p) {
  Integer s = 0;
  for (const auto& [m, c] : p.terms()) s += c * socle_terms.coefficient(m);
  return s;
}

/// All monomials in `vars` (name, weight) of weighted degree d, by recursion.
inline std::vector<Monomial> monomials(const std::vector<std::pair<std::string, int>>& vars, int d) {
  std::vector<Monomial> out;
  std::map<std::string, int> cur;
  auto rec = [&](auto&& self, std::size_t i, int rem) -> void {
    if (i == vars.size()) {
      if (rem == 0) {
        std::map<std::string, int> e;
        for (const auto& [k, v] : cur)
          if (v) e[k] = v;
        out.emplace_back(e);
      }
      return;
    }
    for (int a = 0; a * vars[i].second <= rem; ++a) {
      cur[vars[i].first] = a;
      self(self, i + 1, rem - a * vars[i].second);
    }
  };
  rec(rec, 0, d);
  return out;
}

/// Segre-class pushforward for P(V) -> B with xi^2 + c1 xi + c2 = 0:
/// pi_*(xi^(1+i)) = s_i where sum s_i = 1/(1 + c1 + c2).
inline GradedPoly segre(const GradedPoly& c1, const GradedPoly& c2, int i) {
  std::vector<GradedPoly> s{GradedPoly(1)};
  for (int k = 1; k <= i; ++k) {
    GradedPoly next = -(c1 * s[k - 1]);
    if (k >= 2) next -= c2 * s[k - 2];
    s.push_back(next);
  }
  return s[i];
}

/// Numerical rank of the pairing between two lists of classes, given a
/// product-and-degree function.
template <class Class, class Pair>
std::size_t gram_rank(const std::vector<Class>& rows, const std::vector<Class>& cols, Pair&& pairing) {
  IntMatrix G(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) G(r, c) = pairing(rows[r], cols[c]);
  return rational_rank(G);
}

}  // namespace oracle
