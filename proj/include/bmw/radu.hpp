#pragma once

#include "bmw/perm.hpp"
#include "bmw/permgroup.hpp"
#include "bmw/structure.hpp"

#include <string>
#include <vector>

namespace bmw {

/// Radu's (4,5)-structure set with 11 squares.
StructureSet delta();

/// alpha'_i on [[6,n]] (i in 1..3, n >= 14), returned with full degree n and
/// fixing 1..5. The transposition tails run to the top of the interval; a
/// leftover point is fixed. Throws RangeError on bad arguments.
Permutation alpha_prime(std::size_t i, std::size_t n);

/// beta'_i on [[5,m]] (i in 1..3, m >= 13), full degree m, fixing 1..4.
Permutation beta_prime(std::size_t i, std::size_t m);

/// Restriction to [[lo,hi]] (1-based, inclusive), re-indexed to 1..hi-lo+1.
/// Throws RangeError if the interval is not invariant.
Permutation restrict_to_interval(const Permutation& p, std::size_t lo, std::size_t hi);

struct TaggedSquare {
  std::string family;
  Square square;
};

inline constexpr std::size_t kS0MinM = 13;
inline constexpr std::size_t kS0MinN = 14;

/// Every square of the eleven families making up S_0, tagged, in generation
/// order with exact duplicates removed. Throws RangeError below (13,14).
std::vector<TaggedSquare> s0_blueprint(std::size_t m, std::size_t n);

/// Families allowed to cover (a_i, b_k) (1-based) by the region table.
std::vector<std::string> table_families(std::size_t m, std::size_t n, std::size_t i, std::size_t k);

/// Descriptions of blueprint squares touching a pair outside their family's
/// region; empty when the audit passes.
std::vector<std::string> region_audit(std::size_t m, std::size_t n, const std::vector<TaggedSquare>& blueprint);

/// S_0 as a partial structure set. A pair covered twice raises
/// ConflictingPair naming both families.
PartialStructureSet s0(std::size_t m, std::size_t n);

/// Block left free by S_0: rows [[11, m-3]], columns [[12, n-3]] (1-based).
struct FreeBlock {
  std::size_t row_lo, row_hi, col_lo, col_hi;
  std::size_t rows() const { return row_hi >= row_lo ? row_hi - row_lo + 1 : 0; }
  std::size_t cols() const { return col_hi >= col_lo ? col_hi - col_lo + 1 : 0; }
};

FreeBlock free_block(std::size_t m, std::size_t n);

/// One involution of degree n per free row (or none), each moving only
/// points of the free columns. Row a_i receives {a_i,b_k,a_i,b_sigma(k)}.
/// The result is completed with diagonal squares. Throws RangeError when a
/// filler is not an involution or leaves the block.
StructureSet radu_extension(std::size_t m, std::size_t n, const std::vector<Permutation>& filler = {});

/// Uniform random involutions on the free block, one per free row.
std::vector<Permutation> random_filler(std::size_t m, std::size_t n, Rng& rng);

struct SchreierClaim {
  bool connected = false;
  bool not_bipartite = false;  // graph with loops at fixed points kept
  bool loop_free_bipartite = false;
  std::vector<Point> odd_cycle;  // 1-based
};

/// Schreier graph of alpha'_1..3 on [[6,n]].
SchreierClaim schreier_claim_check(std::size_t n);
/// Schreier graph of beta'_1..3 on [[5,m]].
SchreierClaim schreier_claim_check_beta(std::size_t m);

struct RaduVerification {
  bool valid = false;
  bool region_audit = false;
  GroupClassification a_local;
  GroupClassification b_local;
  bool a_local_symmetric = false;
  bool b_local_symmetric = false;
  bool alpha_m_minus_1_transposition = false;
  bool alpha_5_matches_alpha_prime = false;
  bool alpha_prime_generate = false;
  bool beta_prime_generate = false;
  SchreierClaim schreier;
  bool all_passed = false;
};

RaduVerification verify_radu(const StructureSet& s);

}  // namespace bmw
