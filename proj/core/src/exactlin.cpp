#include "prelog/exactlin.hpp"

#include <algorithm>
#include <stdexcept>

namespace prelog {

namespace {

struct Bezout {
  Integer g, s, t;  // s*a + t*b = g >= 0
};

Bezout bezout(const Integer& a, const Integer& b) {
  Bezout r;
  mpz_gcdext(r.g.get_mpz_t(), r.s.get_mpz_t(), r.t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Replace rows (p, q) of M by (s*p + t*q, u*p + v*q); the 2x2 block has det 1.
void combine_rows(IntMatrix& M, std::size_t p, std::size_t q, const Integer& s, const Integer& t,
                  const Integer& u, const Integer& v) {
  for (std::size_t c = 0; c < M.cols(); ++c) {
    Integer a = M(p, c);
    Integer b = M(q, c);
    M(p, c) = s * a + t * b;
    M(q, c) = u * a + v * b;
  }
}

void combine_columns(IntMatrix& M, std::size_t p, std::size_t q, const Integer& s, const Integer& t,
                     const Integer& u, const Integer& v) {
  for (std::size_t r = 0; r < M.rows(); ++r) {
    Integer a = M(r, p);
    Integer b = M(r, q);
    M(r, p) = s * a + t * b;
    M(r, q) = u * a + v * b;
  }
}

// Zero out A(i, c) against pivot row r using a unimodular row combination,
// mirrored on the companion matrix U.
void eliminate_row_entry(IntMatrix& A, IntMatrix& U, std::size_t r, std::size_t i, std::size_t c) {
  const Integer a = A(r, c);
  const Integer b = A(i, c);
  if (b == 0) return;
  if (a != 0 && b % a == 0) {
    Integer q = b / a;
    A.add_row_multiple(i, r, -q);
    U.add_row_multiple(i, r, -q);
    return;
  }
  Bezout z = bezout(a, b);
  Integer u = -b / z.g;
  Integer v = a / z.g;
  combine_rows(A, r, i, z.s, z.t, u, v);
  combine_rows(U, r, i, z.s, z.t, u, v);
}

void eliminate_column_entry(IntMatrix& A, IntMatrix& V, std::size_t c, std::size_t j, std::size_t r) {
  const Integer a = A(r, c);
  const Integer b = A(r, j);
  if (b == 0) return;
  if (a != 0 && b % a == 0) {
    Integer q = b / a;
    A.add_column_multiple(j, c, -q);
    V.add_column_multiple(j, c, -q);
    return;
  }
  Bezout z = bezout(a, b);
  Integer u = -b / z.g;
  Integer v = a / z.g;
  combine_columns(A, c, j, z.s, z.t, u, v);
  combine_columns(V, c, j, z.s, z.t, u, v);
}

unsigned long mod_p(const Integer& x, unsigned long p) {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), p);
  return r.get_ui();
}

unsigned long inverse_mod_p(unsigned long a, unsigned long p) {
  Integer inv;
  Integer aa(a);
  Integer pp(p);
  mpz_invert(inv.get_mpz_t(), aa.get_mpz_t(), pp.get_mpz_t());
  return inv.get_ui();
}

// Row reduced echelon form over F_p, in place; returns pivot columns.
std::vector<std::size_t> rref_mod_p(std::vector<std::vector<unsigned long>>& M, std::size_t cols,
                                    unsigned long p) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < M.size(); ++c) {
    std::size_t piv = r;
    while (piv < M.size() && M[piv][c] == 0) ++piv;
    if (piv == M.size()) continue;
    std::swap(M[r], M[piv]);
    unsigned long inv = inverse_mod_p(M[r][c], p);
    for (auto& x : M[r]) x = static_cast<unsigned long>((static_cast<unsigned __int128>(x) * inv) % p);
    for (std::size_t i = 0; i < M.size(); ++i) {
      if (i == r || M[i][c] == 0) continue;
      unsigned long f = M[i][c];
      for (std::size_t k = 0; k < cols; ++k) {
        unsigned __int128 sub = static_cast<unsigned __int128>(f) * M[r][k] % p;
        M[i][k] = static_cast<unsigned long>((M[i][k] + p - static_cast<unsigned long>(sub)) % p);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<std::vector<unsigned long>> reduce_mod_p(const IntMatrix& A, unsigned long p) {
  std::vector<std::vector<unsigned long>> M(A.rows(), std::vector<unsigned long>(A.cols()));
  for (std::size_t r = 0; r < A.rows(); ++r)
    for (std::size_t c = 0; c < A.cols(); ++c) M[r][c] = mod_p(A(r, c), p);
  return M;
}

}  // namespace

HermiteForm hnf(const IntMatrix& A) {
  HermiteForm out;
  out.H = A;
  out.U = IntMatrix::identity(A.rows());
  IntMatrix& H = out.H;
  IntMatrix& U = out.U;
  const std::size_t m = A.rows();
  std::size_t r = 0;
  for (std::size_t c = 0; c < A.cols() && r < m; ++c) {
    for (std::size_t i = r + 1; i < m; ++i) {
      if (H(i, c) == 0) continue;
      if (H(r, c) == 0) {
        H.swap_rows(r, i);
        U.swap_rows(r, i);
        continue;
      }
      eliminate_row_entry(H, U, r, i, c);
    }
    if (H(r, c) == 0) continue;
    if (H(r, c) < 0) {
      H.negate_row(r);
      U.negate_row(r);
    }
    for (std::size_t k = 0; k < r; ++k) {
      Integer q = floor_div(H(k, c), H(r, c));
      if (q != 0) {
        H.add_row_multiple(k, r, -q);
        U.add_row_multiple(k, r, -q);
      }
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  return out;
}

IntVector SmithForm::invariant_factors() const {
  IntVector d;
  for (std::size_t i = 0; i < std::min(S.rows(), S.cols()); ++i)
    if (S(i, i) != 0) d.push_back(S(i, i));
  return d;
}

std::size_t SmithForm::rank() const { return invariant_factors().size(); }

SmithForm snf(const IntMatrix& A) {
  SmithForm out;
  out.S = A;
  out.U = IntMatrix::identity(A.rows());
  out.V = IntMatrix::identity(A.cols());
  IntMatrix& S = out.S;
  const std::size_t m = A.rows();
  const std::size_t n = A.cols();
  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    std::size_t pr = m, pc = n;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (S(i, j) != 0 && (pr == m || abs(S(i, j)) < abs(S(pr, pc)))) {
          pr = i;
          pc = j;
        }
    if (pr == m) break;
    S.swap_rows(t, pr);
    out.U.swap_rows(t, pr);
    S.swap_columns(t, pc);
    out.V.swap_columns(t, pc);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) eliminate_row_entry(S, out.U, t, i, t);
      for (std::size_t j = t + 1; j < n; ++j) eliminate_column_entry(S, out.V, t, j, t);
      for (std::size_t i = t + 1; i < m; ++i)
        if (S(i, t) != 0) clean = false;
      if (!clean) continue;
      // Divisibility: pull an offending row into the pivot row and repeat.
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (S(i, j) % S(t, t) != 0) {
            S.add_row_multiple(t, i, Integer(1));
            out.U.add_row_multiple(t, i, Integer(1));
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (S(t, t) < 0) {
      S.negate_row(t);
      out.U.negate_row(t);
    }
  }
  return out;
}

std::size_t rank(const IntMatrix& A) {
  // Bareiss elimination; exact and fraction-free.
  IntMatrix M = A;
  const std::size_t m = M.rows();
  const std::size_t n = M.cols();
  std::size_t r = 0;
  Integer prev(1);
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t piv = r;
    while (piv < m && M(piv, c) == 0) ++piv;
    if (piv == m) continue;
    M.swap_rows(r, piv);
    for (std::size_t i = r + 1; i < m; ++i) {
      for (std::size_t k = c + 1; k < n; ++k) {
        M(i, k) = (M(r, c) * M(i, k) - M(i, c) * M(r, k));
        mpz_divexact(M(i, k).get_mpz_t(), M(i, k).get_mpz_t(), prev.get_mpz_t());
      }
      M(i, c) = 0;
    }
    prev = M(r, c);
    ++r;
  }
  return r;
}

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::size_t rank_mod_p(const IntMatrix& A, unsigned long p) {
  if (!is_prime(p)) throw std::invalid_argument("rank_mod_p: " + std::to_string(p) + " is not prime");
  auto M = reduce_mod_p(A, p);
  return rref_mod_p(M, A.cols(), p).size();
}

IntMatrix left_kernel_saturated(const IntMatrix& A) {
  HermiteForm h = hnf(A);
  std::vector<std::size_t> zero_rows;
  for (std::size_t r = h.rank; r < A.rows(); ++r) zero_rows.push_back(r);
  IntMatrix K = h.U.select_rows(zero_rows);
  HermiteForm canon = hnf(K);
  return canon.H.block(0, 0, canon.rank, A.rows());
}

IntMatrix kernel_saturated(const IntMatrix& A) {
  return left_kernel_saturated(A.transpose()).transpose();
}

IntMatrix kernel_mod_p(const IntMatrix& A, unsigned long p) {
  if (!is_prime(p)) throw std::invalid_argument("kernel_mod_p: " + std::to_string(p) + " is not prime");
  auto M = reduce_mod_p(A, p);
  auto pivots = rref_mod_p(M, A.cols(), p);
  std::vector<bool> is_pivot(A.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<IntVector> basis;
  for (std::size_t f = 0; f < A.cols(); ++f) {
    if (is_pivot[f]) continue;
    IntVector v(A.cols(), Integer(0));
    v[f] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = (p - M[k][f]) % p;
    basis.push_back(std::move(v));
  }
  return IntMatrix::from_columns(basis, A.cols());
}

CokernelStructure cokernel(const IntMatrix& A) {
  CokernelStructure out;
  SmithForm s = snf(A);
  for (const auto& d : s.invariant_factors())
    if (d > 1) out.invariant_factors.push_back(d);
  out.projection = left_kernel_saturated(A);
  out.free_rank = out.projection.rows();
  return out;
}

IntMatrix column_lattice_basis(const IntMatrix& L) {
  HermiteForm h = hnf(L.transpose());
  return h.H.block(0, 0, h.rank, L.rows()).transpose();
}

bool same_column_lattice(const IntMatrix& A, const IntMatrix& B) {
  if (A.rows() != B.rows()) return false;
  return column_lattice_basis(A) == column_lattice_basis(B);
}

IntMatrix saturate(const IntMatrix& L) {
  IntMatrix W = left_kernel_saturated(L);  // rows w with w L = 0
  if (W.rows() == 0) return IntMatrix::identity(L.rows());
  return kernel_saturated(W);
}

Integer gcd_maximal_minors(const IntMatrix& A) {
  if (A.rows() == 0 || A.cols() == 0) return Integer(1);
  SmithForm s = snf(A);
  auto d = s.invariant_factors();
  if (d.size() < std::min(A.rows(), A.cols())) return Integer(0);
  Integer prod(1);
  for (const auto& x : d) prod *= x;
  return prod;
}

Integer determinant(const IntMatrix& A) {
  if (A.rows() != A.cols()) throw std::invalid_argument("determinant: matrix not square");
  const std::size_t n = A.rows();
  if (n == 0) return Integer(1);
  IntMatrix M = A;
  Integer prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (M(k, k) == 0) {
      std::size_t piv = k + 1;
      while (piv < n && M(piv, k) == 0) ++piv;
      if (piv == n) return Integer(0);
      M.swap_rows(k, piv);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        M(i, j) = M(k, k) * M(i, j) - M(i, k) * M(k, j);
        mpz_divexact(M(i, j).get_mpz_t(), M(i, j).get_mpz_t(), prev.get_mpz_t());
      }
    prev = M(k, k);
  }
  return sign * M(n - 1, n - 1);
}

std::optional<IntegerSolution> solve_integer(const IntMatrix& A, const IntVector& b) {
  if (b.size() != A.rows())
    throw std::invalid_argument("solve_integer: right-hand side has length " + std::to_string(b.size()) +
                                ", expected " + std::to_string(A.rows()));
  SmithForm s = snf(A);
  const std::size_t r = s.rank();
  IntVector c = s.U.apply(b);
  IntVector y(A.cols(), Integer(0));
  for (std::size_t i = 0; i < A.rows(); ++i) {
    if (i < r) {
      if (c[i] % s.S(i, i) != 0) return std::nullopt;
      y[i] = c[i] / s.S(i, i);
    } else if (c[i] != 0) {
      return std::nullopt;
    }
  }
  IntegerSolution sol;
  sol.x = s.V.apply(y);
  sol.unique = (r == A.cols());
  return sol;
}

std::optional<IntVector> echelon_coordinates(const IntMatrix& basis, const std::vector<std::size_t>& pivots,
                                             const IntVector& v) {
  if (v.size() != basis.cols()) throw std::invalid_argument("echelon_coordinates: length mismatch");
  IntVector rest = v;
  IntVector x(basis.rows(), Integer(0));
  for (std::size_t k = 0; k < basis.rows(); ++k) {
    const Integer& p = basis(k, pivots[k]);
    const Integer& e = rest[pivots[k]];
    if (e == 0) continue;
    if (e % p != 0) return std::nullopt;
    x[k] = e / p;
    for (std::size_t c = 0; c < rest.size(); ++c) rest[c] -= x[k] * basis(k, c);
  }
  for (const auto& e : rest)
    if (e != 0) return std::nullopt;
  return x;
}

}  // namespace prelog
