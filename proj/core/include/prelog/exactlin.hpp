#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "prelog/int_matrix.hpp"

namespace prelog {

/// Row-style Hermite normal form: U * A = H with U unimodular. The first
/// `rank` rows of H are nonzero, in echelon form with positive pivots at
/// `pivots[k]`, and entries above each pivot reduced into [0, pivot).
struct HermiteForm {
  IntMatrix H;
  IntMatrix U;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

HermiteForm hnf(const IntMatrix& A);

/// U * A * V = S with S diagonal, nonnegative, d_i | d_{i+1}.
struct SmithForm {
  IntMatrix S;
  IntMatrix U;
  IntMatrix V;

  /// The nonzero diagonal entries, in order.
  IntVector invariant_factors() const;
  std::size_t rank() const;
};

SmithForm snf(const IntMatrix& A);

std::size_t rank(const IntMatrix& A);

bool is_prime(unsigned long n);

/// Rank of the reduction of A modulo the prime p. Throws std::invalid_argument
/// when p is not prime.
std::size_t rank_mod_p(const IntMatrix& A, unsigned long p);

/// Columns form a basis (in canonical Hermite form) of {x in Z^n : A x = 0}.
IntMatrix kernel_saturated(const IntMatrix& A);

/// Rows form a basis of {y : y A = 0}, canonical Hermite form.
IntMatrix left_kernel_saturated(const IntMatrix& A);

/// Columns form a basis of the kernel of A over F_p, entries in [0, p).
IntMatrix kernel_mod_p(const IntMatrix& A, unsigned long p);

struct CokernelStructure {
  std::size_t free_rank = 0;
  IntVector invariant_factors;  // torsion part, every entry > 1
  IntMatrix projection;         // free_rank x rows(A), kills im(A), surjective
};

/// Cokernel of A : Z^cols -> Z^rows.
CokernelStructure cokernel(const IntMatrix& A);

/// Basis (columns, canonical Hermite form) of (Q * colspan L) intersected with Z^n.
IntMatrix saturate(const IntMatrix& L);

/// Canonical basis (columns) of the lattice spanned by the columns of L.
IntMatrix column_lattice_basis(const IntMatrix& L);

bool same_column_lattice(const IntMatrix& A, const IntMatrix& B);

/// gcd of the maximal minors; 0 when A is not of full rank.
Integer gcd_maximal_minors(const IntMatrix& A);

/// Fraction-free (Bareiss) determinant of a square matrix.
Integer determinant(const IntMatrix& A);

struct IntegerSolution {
  IntVector x;
  bool unique = false;  // true when ker A = 0
};

/// Some integer x with A x = b, or nullopt when none exists over Z.
/// Throws std::invalid_argument when b has the wrong length.
std::optional<IntegerSolution> solve_integer(const IntMatrix& A, const IntVector& b);

/// Coordinates of v in the row lattice spanned by an echelon basis (rows of
/// `basis` with positive pivots at `pivots`); nullopt if v is outside it.
std::optional<IntVector> echelon_coordinates(const IntMatrix& basis,
                                             const std::vector<std::size_t>& pivots,
                                             const IntVector& v);

}  // namespace prelog
