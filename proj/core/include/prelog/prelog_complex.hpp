#pragma once

#include <map>
#include <string>
#include <vector>

#include "prelog/exactlin.hpp"
#include "prelog/inclusion.hpp"

namespace prelog {

struct SncComponent {
  int index = 0;
  RingPtr ring;
};

struct SncPair {
  int i = 0, j = 0;
  RingPtr ring;
  MapPtr to_i, to_j;
};

struct SncTriple {
  int i = 0, j = 0, k = 0;
  RingPtr ring;
  MapPtr to_ij, to_ik, to_jk;
};

/// Components, double and triple intersections with their inclusions. Block
/// order in every matrix follows the order of these lists.
struct SncConfig {
  std::vector<SncComponent> components;
  std::vector<SncPair> pairs;
  std::vector<SncTriple> triples;

  /// Throws ConfigError on unsorted indices, unknown components, missing
  /// pairs of a triple, maps with the wrong endpoints or dimension jumps != 1.
  void validate() const;

  std::size_t component_position(int index) const;
  std::size_t pair_position(int i, int j) const;
};

/// Offsets of the blocks in a direct sum, plus its total rank.
struct BlockLayout {
  std::vector<std::size_t> offsets;
  std::vector<std::size_t> sizes;
  std::size_t total = 0;
};

BlockLayout component_layout(const SncConfig& cfg, int d);
BlockLayout pair_layout(const SncConfig& cfg, int d);
BlockLayout triple_layout(const SncConfig& cfg, int d);

/// (+) into Y_i, (-) into Y_j:  sum Num^{k-1}(Y_ij) -> sum Num^k(Y_i).
IntMatrix build_delta(const SncConfig& cfg, int k);
/// (+) from Y_a, (-) from Y_b:  sum Num^k(Y_a) -> sum Num^k(Y_ab).
IntMatrix build_rho(const SncConfig& cfg, int k);
/// Signs +, -, + for (a,b), (a,c), (b,c):  sum Num^{k-1}(Y_ij) -> sum Num^{k-1}(Y_abc).
IntMatrix build_rho_prime(const SncConfig& cfg, int k);
/// Signs -, +, - for (a,b), (a,c), (b,c):  sum Num^{k-1}(Y_abc) -> sum Num^k(Y_ij).
IntMatrix build_delta_prime(const SncConfig& cfg, int k);

struct CommutativityReport {
  bool commutes = true;
  std::size_t mismatches = 0;
  std::vector<std::string> diagnostics;  // one line per offending block
};

/// rho * delta == delta' * rho', block by block.
CommutativityReport check_commutativity(const SncConfig& cfg, int k);

struct PrelogResult {
  int degree = 0;
  IntMatrix delta, rho, rho_prime, delta_prime;
  std::size_t rank_components = 0;   // sum rank Num^k(Y_i)
  std::size_t rank_pairs_km1 = 0;    // sum rank Num^{k-1}(Y_ij)
  std::size_t rank_pairs_k = 0;      // sum rank Num^k(Y_ij)
  std::size_t rank_triples_km1 = 0;  // sum rank Num^{k-1}(Y_ijk)
  std::size_t rank_delta = 0, rank_rho = 0;
  IntVector delta_invariant_factors, rho_invariant_factors;
  CokernelStructure coker;
  IntMatrix kernel;  // columns: basis of ker rho
  IntMatrix M;       // coker.projection * kernel
  std::size_t prelog_rank = 0;
  CommutativityReport commutativity;
};

/// Throws ConfigError when the diagram does not commute.
PrelogResult compute_prelog(const SncConfig& cfg, int k);

/// A tuple of classes, one per component index (absent means zero).
struct PrelogCycle {
  std::string name;
  std::map<int, ChowClass> classes;
};

struct CycleCheck {
  std::string name;
  IntVector coordinates;  // in sum Num^k(Y_i)
  bool prelog = false;    // rho(coordinates) == 0
  IntVector image;        // in coker(delta) modulo torsion
};

struct CycleReport {
  std::vector<CycleCheck> cycles;
  bool all_prelog = false;
  IntMatrix N;  // columns: images of the cycles
  /// The images span exactly the same lattice as the columns of M.
  bool basis_of_prelog_image = false;
  bool independent = false;
};

CycleReport verify_prelog_cycles(const SncConfig& cfg, const PrelogResult& result,
                                 const std::vector<PrelogCycle>& cycles);

struct SaturationResult {
  IntMatrix N;
  Integer gcd_minors;
  std::map<unsigned long, std::size_t> rank_mod_p;
  std::map<unsigned long, IntMatrix> kernel_mod_p;  // only primes where N drops rank
  IntMatrix saturated;                              // basis (columns) of the saturation
  Integer index;                                    // [saturation : span N]
  /// (N v)/p for each char-p kernel vector v; adjoining these to N gives the saturation.
  std::vector<IntVector> extra_generators;
  bool extra_generators_saturate = false;
};

inline const std::vector<unsigned long> kProbePrimes{2, 3, 5, 7, 11, 13};

/// Throws Error when N does not have full column rank.
SaturationResult saturate_prelog(const IntMatrix& N, const std::vector<unsigned long>& primes = kProbePrimes);

}  // namespace prelog
