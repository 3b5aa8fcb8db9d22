#pragma once

#include "bmw/bigint.hpp"
#include "bmw/perm.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace bmw {

enum class Tribool { False, True, Unknown };

inline Tribool to_tribool(bool b) { return b ? Tribool::True : Tribool::False; }
std::string to_string(Tribool t);

enum class AltStrategy { Exact, Jordan };

std::string to_string(AltStrategy s);
AltStrategy parse_alt_strategy(const std::string& s);

struct JordanBudget {
  std::size_t words = 200;
  std::size_t max_word_length = 100;
  std::uint64_t seed = 0x4A6F7264616E;
};

/// Evidence that a primitive group contains Alt(d): an element, given as a
/// word in the generators, some power of which is a p-cycle with p prime and
/// p <= d - 3.
struct JordanCertificate {
  std::size_t prime = 0;
  std::vector<Point> cycle;       // 0-based points of the p-cycle
  std::vector<std::size_t> word;  // generator indices, applied left to right
  std::size_t attempts = 0;       // words drawn before success
};

/// Upper bound on the degree for which base/strong generating set
/// computations are attempted.
inline constexpr std::size_t kDefaultOrderGuard = 2000;

class PermutationGroup {
 public:
  /// Throws DegreeError if a generator has the wrong degree. An empty
  /// generator list denotes the trivial group.
  PermutationGroup(std::size_t degree, std::vector<Permutation> generators);

  std::size_t degree() const { return degree_; }
  std::span<const Permutation> generators() const { return gens_; }

  /// Exact order. Throws ResourceError when degree() > guard. A transitive,
  /// primitive group with a Jordan certificate is recognized as Alt or Sym
  /// directly; all other groups go through Schreier-Sims.
  BigInt order(std::size_t guard = kDefaultOrderGuard) const;

  /// Order from the stabilizer chain alone, never using the Jordan shortcut.
  BigInt stabilizer_chain_order(std::size_t guard = kDefaultOrderGuard) const;

  /// Closure by breadth-first multiplication; for tests on tiny degrees.
  std::size_t brute_force_order(std::size_t limit = 100000) const;

  bool is_transitive() const;
  std::vector<std::vector<Point>> orbits() const;
  bool is_two_transitive() const;
  bool is_primitive() const;

  /// A block of imprimitivity with 2 <= size < d containing point 0, if any.
  std::optional<std::vector<Point>> nontrivial_block() const;

  bool has_odd_generator() const;

  std::optional<JordanCertificate> find_jordan_certificate(const JordanBudget& budget = {}) const;

  Tribool contains_alternating(AltStrategy strategy, const JordanBudget& budget = {},
                               std::size_t guard = kDefaultOrderGuard) const;

 private:
  struct Cache;

  std::size_t degree_;
  std::vector<Permutation> gens_;
  std::shared_ptr<Cache> cache_;
};

struct GroupClassification {
  std::size_t degree = 0;
  Tribool transitive = Tribool::Unknown;
  Tribool two_transitive = Tribool::Unknown;
  Tribool primitive = Tribool::Unknown;
  Tribool contains_alternating = Tribool::Unknown;
  Tribool equals_symmetric = Tribool::Unknown;
  std::optional<BigInt> order;
  AltStrategy method = AltStrategy::Exact;
  std::optional<JordanCertificate> certificate;
};

struct ClassifyOptions {
  AltStrategy strategy = AltStrategy::Exact;
  /// Exact strategy is used only up to this degree; above it, Jordan.
  std::size_t exact_degree_limit = kDefaultOrderGuard;
  /// Direct ordered-pair orbit computation up to this degree.
  std::size_t two_transitive_limit = 3000;
  /// Primitivity test up to this degree.
  std::size_t primitivity_limit = 10000;
  JordanBudget jordan;
};

GroupClassification classify(const PermutationGroup& g, const ClassifyOptions& opts = {});

struct SchreierResult {
  bool connected = false;
  bool bipartite = true;
  /// Closed walk of odd length (first vertex repeated implicitly) when not
  /// bipartite; 0-based points.
  std::vector<Point> odd_cycle;
  std::size_t edge_count = 0;
};

/// Schreier graph of `gens` on `domain` (0-based points). Loops are dropped
/// unless `keep_loops`; a kept loop is an odd cycle of length one.
/// Throws RangeError if the domain is not invariant under every generator.
SchreierResult schreier_analysis(std::span<const Permutation> gens, std::span<const Point> domain,
                                 bool keep_loops = false);

bool is_prime(std::size_t p);

}  // namespace bmw
