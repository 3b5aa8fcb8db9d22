#include "bmw/radu.hpp"

#include "bmw/errors.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace bmw {

namespace {

using Sq = Square;

// 1-based constructor helper.
Sq sq(std::size_t i, std::size_t k, std::size_t j, std::size_t l) {
  return Square::make(static_cast<std::uint32_t>(i - 1), static_cast<std::uint32_t>(k - 1),
                      static_cast<std::uint32_t>(j - 1), static_cast<std::uint32_t>(l - 1));
}

const std::vector<std::array<std::size_t, 4>>& delta_listing() {
  static const std::vector<std::array<std::size_t, 4>> listing{
      {1, 1, 1, 1}, {1, 2, 1, 2}, {2, 3, 1, 3}, {2, 1, 2, 1}, {3, 2, 2, 2}, {3, 3, 3, 1},
      {1, 4, 1, 4}, {4, 5, 1, 5}, {3, 5, 2, 4}, {4, 2, 4, 1}, {4, 4, 4, 3}};
  return listing;
}

// Involution on [[lo, top]] with the given leading transpositions and then
// consecutive transpositions (t t+1) from `tail` upwards; 1-based.
Permutation pattern(std::size_t degree, std::vector<std::pair<std::size_t, std::size_t>> head, std::size_t tail) {
  std::vector<std::vector<Point>> cycles;
  for (auto [x, y] : head) cycles.push_back({static_cast<Point>(x), static_cast<Point>(y)});
  if (tail > 0)
    for (std::size_t t = tail; t + 1 <= degree; t += 2) cycles.push_back({static_cast<Point>(t), static_cast<Point>(t + 1)});
  return Permutation::from_cycles(degree, cycles);
}

}  // namespace

StructureSet delta() {
  std::vector<Square> squares;
  for (const auto& q : delta_listing()) squares.push_back(sq(q[0], q[1], q[2], q[3]));
  return validate(4, 5, squares);
}

Permutation alpha_prime(std::size_t i, std::size_t n) {
  if (i < 1 || i > 3) throw RangeError("alpha_prime index must be 1, 2 or 3");
  if (n < kS0MinN) throw RangeError("alpha_prime needs n >= 14");
  switch (i) {
    case 1: return pattern(n, {{7, 10}, {8, 11}}, 12);
    case 2: return pattern(n, {{9, 7}, {10, 8}}, 11);
    default: return pattern(n, {{6, 9}}, 0);
  }
}

Permutation beta_prime(std::size_t i, std::size_t m) {
  if (i < 1 || i > 3) throw RangeError("beta_prime index must be 1, 2 or 3");
  if (m < kS0MinM) throw RangeError("beta_prime needs m >= 13");
  switch (i) {
    case 1: return pattern(m, {{6, 9}, {7, 10}}, 11);
    case 2: return pattern(m, {{8, 6}, {9, 7}}, 10);
    default: return pattern(m, {{5, 8}}, 0);
  }
}

Permutation restrict_to_interval(const Permutation& p, std::size_t lo, std::size_t hi) {
  if (lo < 1 || hi > p.degree() || lo > hi) throw RangeError("interval outside permutation degree");
  std::vector<Point> im;
  for (std::size_t x = lo; x <= hi; ++x) {
    const std::size_t y = p(static_cast<Point>(x - 1)) + 1;
    if (y < lo || y > hi) throw RangeError("interval not invariant");
    im.push_back(static_cast<Point>(y - lo));
  }
  return Permutation(std::move(im));
}

std::vector<TaggedSquare> s0_blueprint(std::size_t m, std::size_t n) {
  if (m < kS0MinM || n < kS0MinN) throw RangeError("S_0 needs m >= 13 and n >= 14");
  std::vector<Permutation> ap, bp;
  for (std::size_t i = 1; i <= 3; ++i) {
    ap.push_back(alpha_prime(i, n));
    bp.push_back(beta_prime(i, m));
  }
  auto a = [&](std::size_t i, std::size_t k) -> std::size_t { return ap[i - 1](static_cast<Point>(k - 1)) + 1; };
  auto b = [&](std::size_t i, std::size_t x) -> std::size_t { return bp[i - 1](static_cast<Point>(x - 1)) + 1; };

  std::vector<TaggedSquare> out;
  auto add = [&](const char* family, Square s) { out.push_back({family, s}); };

  for (const auto& q : delta_listing()) add("S_Delta", sq(q[0], q[1], q[2], q[3]));
  for (std::size_t i = 1; i <= 3; ++i)
    for (std::size_t k = 6; k <= n; ++k) add("S_AR", sq(i, k, i, a(i, k)));
  for (std::size_t i = 5; i <= m; ++i)
    for (std::size_t k = 1; k <= 3; ++k) add("S_BR", sq(i, k, b(k, i), k));
  for (std::size_t k = 6; k <= 8; ++k) add("S_AC", sq(4, k, 4, k));
  for (std::size_t i = 5; i <= 7; ++i)
    for (std::size_t k = 4; k <= 5; ++k) add("S_BC", sq(i, k, i, k));
  for (std::size_t i = 5; i <= 7; ++i)
    for (std::size_t k = 6; k <= 8; ++k) add("S_AB", sq(i, k, b(k - 5, i), a(i - 4, k)));
  for (std::size_t i = 5; i <= 7; ++i)
    for (std::size_t k = 9; k <= n; ++k)
      if (a(i - 4, k) > 8) add("S_A", sq(i, k, i, a(i - 4, k)));
  for (std::size_t i = 8; i <= m; ++i)
    for (std::size_t k = 6; k <= 8; ++k)
      if (b(k - 5, i) > 7) add("S_B", sq(i, k, b(k - 5, i), k));
  add("S_M", sq(4, n, m, n - 1));
  add("S_M", sq(m - 2, 4, m - 1, n - 2));
  for (std::size_t i = 8; i < m; ++i) {
    add("S_C1", sq(i, n, i, n));
    add("S_C1", sq(i, n - 1, i, n - 1));
  }
  for (std::size_t k = 9; k <= n - 3; ++k) {
    add("S_C2", sq(m - 1, k, m - 1, k));
    add("S_C2", sq(m - 2, k, m - 2, k));
  }

  std::vector<TaggedSquare> unique;
  std::set<std::pair<std::string, Square>> seen;
  for (auto& t : out)
    if (seen.emplace(t.family, t.square).second) unique.push_back(std::move(t));
  return unique;
}

std::vector<std::string> table_families(std::size_t m, std::size_t n, std::size_t i, std::size_t k) {
  auto in = [](std::size_t x, std::size_t lo, std::size_t hi) { return lo <= x && x <= hi; };
  int col = -1, row = -1;
  if (in(i, 1, 3)) col = 0;
  else if (i == 4) col = 1;
  else if (in(i, 5, 7)) col = 2;
  else if (in(i, 8, 10)) col = 3;
  else if (in(i, 11, m - 3)) col = 4;
  else if (in(i, m - 2, m - 1)) col = 5;
  else if (i == m) col = 6;
  if (in(k, 1, 3)) row = 0;
  else if (k == 4) row = 1;
  else if (k == 5) row = 2;
  else if (in(k, 6, 8)) row = 3;
  else if (in(k, 9, 11)) row = 4;
  else if (in(k, 12, n - 3)) row = 5;
  else if (k == n - 2) row = 6;
  else if (in(k, n - 1, n)) row = 7;
  if (col < 0 || row < 0) return {};
  using V = std::vector<std::string>;
  static const std::vector<std::vector<V>> table{
      {{"S_Delta"}, {"S_Delta"}, {"S_BR"}, {"S_BR"}, {"S_BR"}, {"S_BR"}, {"S_BR"}},
      {{"S_Delta"}, {"S_Delta"}, {"S_BC"}, {}, {}, {"S_M"}, {}},
      {{"S_Delta"}, {"S_Delta"}, {"S_BC"}, {}, {}, {}, {}},
      {{"S_AR"}, {"S_AC"}, {"S_AB"}, {"S_AB", "S_B"}, {"S_B"}, {"S_B"}, {"S_B"}},
      {{"S_AR"}, {}, {"S_AB", "S_A"}, {"S_AB"}, {}, {"S_C2"}, {}},
      {{"S_AR"}, {}, {"S_A"}, {}, {}, {"S_C2"}, {}},
      {{"S_AR"}, {}, {"S_A"}, {}, {}, {"S_M"}, {}},
      {{"S_AR"}, {"S_M"}, {"S_A"}, {"S_C1"}, {"S_C1"}, {"S_C1"}, {"S_M"}},
  };
  return table[row][col];
}

std::vector<std::string> region_audit(std::size_t m, std::size_t n, const std::vector<TaggedSquare>& blueprint) {
  std::vector<std::string> problems;
  for (const auto& t : blueprint)
    for (const Cell& c : t.square.cells()) {
      const auto allowed = table_families(m, n, c.a + 1, c.b + 1);
      if (std::find(allowed.begin(), allowed.end(), t.family) == allowed.end())
        problems.push_back(t.family + " square " + to_string(t.square) + " covers (a" + std::to_string(c.a + 1) + ",b" +
                           std::to_string(c.b + 1) + ")");
    }
  return problems;
}

PartialStructureSet s0(std::size_t m, std::size_t n) {
  const auto blueprint = s0_blueprint(m, n);
  PartialStructureSet p(m, n);
  std::vector<std::string> owner(m * n);
  for (const auto& t : blueprint) {
    try {
      p.add(t.square);
    } catch (const ConflictingPair& e) {
      throw ConflictingPair(e.a(), e.b(), t.family + " " + to_string(t.square) + " vs " + owner[e.a() * n + e.b()]);
    }
    for (const Cell& c : t.square.cells())
      if (owner[c.a * n + c.b].empty()) owner[c.a * n + c.b] = t.family + " " + to_string(t.square);
  }
  return p;
}

FreeBlock free_block(std::size_t m, std::size_t n) { return FreeBlock{11, m - 3, 12, n - 3}; }

StructureSet radu_extension(std::size_t m, std::size_t n, const std::vector<Permutation>& filler) {
  PartialStructureSet p = s0(m, n);
  const FreeBlock fb = free_block(m, n);
  if (!filler.empty() && filler.size() != fb.rows())
    throw RangeError("filler needs " + std::to_string(fb.rows()) + " involutions, got " + std::to_string(filler.size()));
  PartialStructureSet extra(m, n);
  for (std::size_t r = 0; r < filler.size(); ++r) {
    const Permutation& sigma = filler[r];
    if (sigma.degree() != n) throw RangeError("filler involution must have degree n");
    if (!sigma.is_involution()) throw RangeError("filler entry is not an involution");
    const std::size_t i = fb.row_lo + r;
    for (std::size_t k = 1; k <= n; ++k) {
      const std::size_t l = sigma(static_cast<Point>(k - 1)) + 1;
      const bool inside = k >= fb.col_lo && k <= fb.col_hi;
      if (!inside && l != k) throw RangeError("filler moves b" + std::to_string(k) + " outside the free block");
      if (inside && k <= l) extra.add(sq(i, k, i, l));
    }
  }
  return complete_with_diagonal(merge(p, extra));
}

std::vector<Permutation> random_filler(std::size_t m, std::size_t n, Rng& rng) {
  const FreeBlock fb = free_block(m, n);
  std::vector<Permutation> out;
  for (std::size_t r = 0; r < fb.rows(); ++r) {
    const Permutation local = random_involution(fb.cols(), rng);
    std::vector<Point> im(n);
    for (Point x = 0; x < n; ++x) im[x] = x;
    for (std::size_t t = 0; t < fb.cols(); ++t)
      im[fb.col_lo - 1 + t] = static_cast<Point>(fb.col_lo - 1 + local(static_cast<Point>(t)));
    out.emplace_back(std::move(im));
  }
  return out;
}

namespace {

SchreierClaim claim(const std::vector<Permutation>& gens, std::size_t lo, std::size_t hi) {
  std::vector<Point> domain;
  for (std::size_t x = lo; x <= hi; ++x) domain.push_back(static_cast<Point>(x - 1));
  const auto kept = schreier_analysis(gens, domain, true);
  const auto plain = schreier_analysis(gens, domain, false);
  SchreierClaim c;
  c.connected = kept.connected;
  c.not_bipartite = !kept.bipartite;
  c.loop_free_bipartite = plain.bipartite;
  for (Point x : kept.odd_cycle) c.odd_cycle.push_back(x + 1);
  return c;
}

}  // namespace

SchreierClaim schreier_claim_check(std::size_t n) {
  return claim({alpha_prime(1, n), alpha_prime(2, n), alpha_prime(3, n)}, 6, n);
}

SchreierClaim schreier_claim_check_beta(std::size_t m) {
  return claim({beta_prime(1, m), beta_prime(2, m), beta_prime(3, m)}, 5, m);
}

RaduVerification verify_radu(const StructureSet& s) {
  const std::size_t m = s.m(), n = s.n();
  RaduVerification v;
  v.valid = validate(m, n, s.squares()) == s;
  v.region_audit = region_audit(m, n, s0_blueprint(m, n)).empty();

  const auto alphas = local_involutions(s, Side::B);
  const auto betas = local_involutions(s, Side::A);
  v.b_local = classify(PermutationGroup(n, alphas));
  v.a_local = classify(PermutationGroup(m, betas));
  v.b_local_symmetric = v.b_local.equals_symmetric == Tribool::True && v.b_local.order == factorial(n);
  v.a_local_symmetric = v.a_local.equals_symmetric == Tribool::True && v.a_local.order == factorial(m);

  v.alpha_m_minus_1_transposition =
      alphas[m - 2] == Permutation::from_cycles(n, {{4, static_cast<Point>(n - 2)}});
  std::vector<Point> padded(n);
  const Permutation a1 = alpha_prime(1, n);
  for (Point x = 0; x < n; ++x) padded[x] = a1(x);
  v.alpha_5_matches_alpha_prime = alphas[4] == Permutation(padded);

  std::vector<Permutation> ap, bp;
  for (std::size_t i = 1; i <= 3; ++i) {
    ap.push_back(restrict_to_interval(alpha_prime(i, n), 6, n));
    bp.push_back(restrict_to_interval(beta_prime(i, m), 5, m));
  }
  v.alpha_prime_generate = PermutationGroup(n - 5, ap).order() == factorial(n - 5);
  v.beta_prime_generate = PermutationGroup(m - 4, bp).order() == factorial(m - 4);

  v.schreier = schreier_claim_check(n);
  v.all_passed = v.valid && v.region_audit && v.a_local_symmetric && v.b_local_symmetric &&
                 v.alpha_m_minus_1_transposition && v.alpha_5_matches_alpha_prime && v.alpha_prime_generate &&
                 v.beta_prime_generate && v.schreier.connected && v.schreier.not_bipartite;
  return v;
}

}  // namespace bmw
