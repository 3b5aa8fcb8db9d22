#pragma once

#include "bmw/bigint.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace bmw {

/// Points are 0-based inside the library. Cycle notation and every
/// serialized form are 1-based, matching a_1..a_m / b_1..b_n.
using Point = std::uint32_t;

/// A bijection of {0..d-1}. Products compose left to right:
/// (p * q)(x) = q(p(x)), i.e. apply p first.
class Permutation {
 public:
  Permutation() = default;

  /// Throws RangeError unless `images` is a bijection of {0..size-1}.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);

  /// 1-based cycles, e.g. from_cycles(4, {{1, 2}, {3, 4}}) is (1 2)(3 4).
  static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles);
  static Permutation from_cycles(std::size_t degree,
                                 std::initializer_list<std::initializer_list<Point>> cycles);

  /// 1-based image list, e.g. [2,1,4,3].
  static Permutation from_one_based(std::span<const std::int64_t> images);

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  std::span<const Point> images() const { return images_; }
  std::vector<std::int64_t> one_based() const;

  Permutation inverse() const;
  Permutation operator*(const Permutation& rhs) const;

  bool is_identity() const;
  bool is_involution() const;
  bool is_even() const;
  std::size_t fixed_point_count() const;

  /// Non-trivial cycles, each starting at its smallest point, ordered by that point.
  std::vector<std::vector<Point>> cycles() const;
  std::vector<std::size_t> cycle_lengths() const;
  BigInt order() const;

  /// "(1 2)(3 4)"; "()" for the identity.
  std::string to_cycle_string() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<Point> images_;
};

/// Element of F_n: even degree, x -> p(x) -> x, no fixed points.
class FpfInvolution {
 public:
  /// Throws DegreeError for odd or zero degree and RangeError if p is not a
  /// fixed-point-free involution.
  explicit FpfInvolution(Permutation p);

  const Permutation& permutation() const { return perm_; }
  std::size_t degree() const { return perm_.degree(); }
  Point operator()(Point x) const { return perm_(x); }

  auto operator<=>(const FpfInvolution&) const = default;

 private:
  Permutation perm_;
};

/// Unordered pairs {i, j}, stored with first < second and sorted.
struct Pairing {
  std::vector<std::pair<Point, Point>> pairs;

  std::size_t size() const { return pairs.size(); }
  bool operator==(const Pairing&) const = default;
};

/// SplitMix64 stream. The state is a counter advanced by the golden gamma
/// 0x9E3779B97F4A7C15 and every output is the SplitMix64 finalizer of the new
/// state, so a seed fully determines the stream.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  /// Independent stream for task `task` of a run seeded with `seed`:
  /// Rng(mix64(seed ^ mix64(task ^ 0xD1B54A32D192ED03))).
  static Rng for_task(std::uint64_t seed, std::uint64_t task);

  static std::uint64_t mix64(std::uint64_t z);

  std::uint64_t next();

  /// Uniform on [0, bound) by rejection: draws x until x >= (2^64 - bound) mod bound,
  /// then returns x mod bound.
  std::uint64_t below(std::uint64_t bound);

  /// Uniform double in [0, 1) from the top 53 bits of next().
  double uniform01();

 private:
  std::uint64_t state_;
};

/// Uniform element of F_n: the smallest unmatched point is matched to a
/// uniformly chosen other unmatched point until none remain.
/// Throws DegreeError if n is odd or zero.
FpfInvolution random_fpf(std::size_t n, Rng& rng);

/// Uniform involution (fixed points allowed) on n points.
Permutation random_involution(std::size_t n, Rng& rng);

/// |F_n| = (n-1)!!. Throws DegreeError if n is odd or zero.
BigInt count_fpf(std::size_t n);

/// Number of self-inverse permutations of n points:
/// I(n) = I(n-1) + (n-1) I(n-2), I(0) = I(1) = 1.
BigInt count_involutions(std::size_t n);

/// All of F_n in lexicographic order of image lists.
std::vector<FpfInvolution> all_fpf(std::size_t n);

Pairing pairing(const FpfInvolution& alpha);

/// |P_a ∩ P_b|. Throws DegreeError on a degree mismatch.
std::size_t shared_orbit_count(const FpfInvolution& a, const FpfInvolution& b);

/// Throws DegreeError on a degree mismatch.
bool shares_common_orbit(const FpfInvolution& a, const FpfInvolution& b);

}  // namespace bmw
