#pragma once

#include "bmw/perm.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace bmw {

/// A pair (a_i, b_k); 0-based.
struct Cell {
  std::uint32_t a = 0;
  std::uint32_t b = 0;

  auto operator<=>(const Cell&) const = default;
};

/// The (possibly degenerate) square {a_i, b_k, a_j, b_l}, 0-based, always
/// stored with i <= j and k <= l. Its opposite-corner pairing is
/// (i,k) <-> (j,l) and (i,l) <-> (j,k).
struct Square {
  std::uint32_t i = 0, k = 0, j = 0, l = 0;

  static Square make(std::uint32_t i, std::uint32_t k, std::uint32_t j, std::uint32_t l);

  bool degenerate() const { return i == j || k == l; }

  /// Number of distinct pairs (a, b) the square contains: 1, 2 or 4.
  std::size_t pair_cover() const { return (i == j ? 1 : 2) * (k == l ? 1 : 2); }

  std::vector<Cell> cells() const;

  auto operator<=>(const Square&) const = default;
};

/// Pretty form "{a1,b3,a2,b3}" with 1-based labels.
std::string to_string(const Square& s);

enum class Side { A, B };

/// An (m,n)-structure set, held as its grid involution f on A_m x B_n.
class StructureSet {
 public:
  /// f is given as codes a*n + b. Throws RangeError unless f is an
  /// involution obeying f(i,k) = (j,l) => f(i,l) = (j,k).
  StructureSet(std::size_t m, std::size_t n, std::vector<std::uint32_t> f);

  std::size_t m() const { return m_; }
  std::size_t n() const { return n_; }

  Cell f(Cell c) const {
    const auto v = f_[c.a * n_ + c.b];
    return {static_cast<std::uint32_t>(v / n_), static_cast<std::uint32_t>(v % n_)};
  }

  const std::vector<std::uint32_t>& codes() const { return f_; }

  /// Distinct squares, canonical and sorted.
  std::vector<Square> squares() const;

  bool operator==(const StructureSet&) const = default;
  auto operator<=>(const StructureSet&) const = default;

 private:
  std::size_t m_;
  std::size_t n_;
  std::vector<std::uint32_t> f_;
};

/// Builds f from an exact cover. Throws IndexOutOfRange, DoublyCoveredPair,
/// or UncoveredPair (first uncovered pair in row-major order).
StructureSet validate(std::size_t m, std::size_t n, const std::vector<Square>& squares);

/// Side::B gives alpha_1..alpha_m on n points, alpha_i(k) = second coordinate
/// of f(i,k). Side::A gives beta_1..beta_n on m points, beta_k(i) = first
/// coordinate of f(i,k).
std::vector<Permutation> local_involutions(const StructureSet& s, Side side);

struct Relabeling {
  Permutation mu;  // on A_m
  Permutation nu;  // on B_n
};

/// f'(mu(i), nu(k)) = (mu(j), nu(l)) where f(i,k) = (j,l).
/// Throws DegreeError when the degrees do not match.
StructureSet relabel(const StructureSet& s, const Relabeling& r);

inline constexpr std::size_t kDefaultCanonicalGuard = 20;

/// Lexicographically least row-major code sequence over all relabelings.
/// Throws ResourceError when m*n exceeds the guard.
std::vector<std::uint32_t> canonical_encoding(const StructureSet& s, std::size_t guard = kDefaultCanonicalGuard);
StructureSet canonical_form(const StructureSet& s, std::size_t guard = kDefaultCanonicalGuard);

struct Presentation {
  std::vector<std::string> generators;
  std::vector<std::string> relators;

  /// "generators: a1 ... bn", a "relators:" line, then one relator per line.
  std::string text() const;
};

Presentation presentation(const StructureSet& s);
std::string presentation_text(const StructureSet& s);

class PartialStructureSet {
 public:
  static constexpr std::uint32_t kUndefined = 0xFFFFFFFFu;

  PartialStructureSet(std::size_t m, std::size_t n);

  /// Throws DoublyCoveredPair if two squares share a pair, IndexOutOfRange on bad indices.
  static PartialStructureSet from_squares(std::size_t m, std::size_t n, const std::vector<Square>& squares);

  std::size_t m() const { return m_; }
  std::size_t n() const { return n_; }

  bool defined(Cell c) const { return f_[c.a * n_ + c.b] != kUndefined; }
  Cell f(Cell c) const {
    const auto v = f_[c.a * n_ + c.b];
    return {static_cast<std::uint32_t>(v / n_), static_cast<std::uint32_t>(v % n_)};
  }
  const std::vector<std::uint32_t>& codes() const { return f_; }

  /// Adds a square. Re-adding an identical square is a no-op; any other
  /// overlap throws ConflictingPair at the first shared pair.
  void add(const Square& s);

  std::vector<Square> squares() const;
  std::size_t defined_count() const;

  bool operator==(const PartialStructureSet&) const = default;

 private:
  std::size_t m_;
  std::size_t n_;
  std::vector<std::uint32_t> f_;
};

/// Union of two partial structure sets on the same (m,n). Throws
/// DegreeError on a size mismatch and ConflictingPair if a pair is covered
/// by both.
PartialStructureSet merge(const PartialStructureSet& p, const PartialStructureSet& q);

/// Adds {a_i,b_k,a_i,b_k} for every uncovered pair.
StructureSet complete_with_diagonal(const PartialStructureSet& p);

inline constexpr std::size_t kDefaultCensusGuard = 16;

/// Counts all (m,n)-structure sets by backtracking; calls `visit` on each if given.
/// Throws ResourceError when m*n exceeds the guard.
std::uint64_t enumerate_structure_sets(std::size_t m, std::size_t n,
                                       const std::function<void(const StructureSet&)>& visit = {},
                                       std::size_t guard = kDefaultCensusGuard);

std::uint64_t count_up_to_relabeling(std::size_t m, std::size_t n, std::size_t guard = kDefaultCensusGuard);

struct ComplexSummary {
  std::size_t vertices = 4;
  std::size_t horizontal_edges = 0;
  std::size_t vertical_edges = 0;
  std::size_t squares = 0;
  std::size_t cover_one = 0;
  std::size_t cover_two = 0;
  std::size_t cover_four = 0;
  std::size_t total_pair_cover = 0;
};

ComplexSummary complex_summary(const StructureSet& s);

}  // namespace bmw
