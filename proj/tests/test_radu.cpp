#include "bmw/errors.hpp"
#include "bmw/json_io.hpp"
#include "bmw/radu.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace bmw;

namespace {

Square sq1(std::uint32_t i, std::uint32_t k, std::uint32_t j, std::uint32_t l) { return Square::make(i - 1, k - 1, j - 1, l - 1); }

bool contains(const std::vector<Square>& v, const Square& s) { return std::find(v.begin(), v.end(), s) != v.end(); }

BigInt order_on_interval(const std::vector<Permutation>& gens, std::size_t lo, std::size_t hi) {
  std::vector<Permutation> r;
  for (const auto& g : gens) r.push_back(restrict_to_interval(g, lo, hi));
  return PermutationGroup(hi - lo + 1, r).order();
}

}  // namespace

TEST_CASE("delta") {
  const auto d = delta();
  CHECK(d.m() == 4);
  CHECK(d.n() == 5);
  const auto sq = d.squares();
  CHECK(sq.size() == 11);
  CHECK(contains(sq, sq1(2, 3, 1, 3)));
  CHECK(contains(sq, sq1(3, 5, 2, 4)));
  CHECK(PermutationGroup(5, local_involutions(d, Side::B)).order() == 120);
  CHECK(PermutationGroup(4, local_involutions(d, Side::A)).order() == 24);
  CHECK(complex_summary(d).total_pair_cover == 20);
  CHECK(to_json(d).dump() == to_json(delta()).dump());
}

TEST_CASE("alpha' and beta' patterns") {
  for (std::size_t n = 14; n <= 40; ++n) CHECK(alpha_prime(3, n).to_cycle_string() == "(6 9)");
  CHECK(alpha_prime(1, 17).to_cycle_string() == "(7 10)(8 11)(12 13)(14 15)(16 17)");
  CHECK(alpha_prime(1, 18).to_cycle_string() == "(7 10)(8 11)(12 13)(14 15)(16 17)");
  CHECK(alpha_prime(2, 17).to_cycle_string() == "(7 9)(8 10)(11 12)(13 14)(15 16)");
  CHECK(beta_prime(3, 13).to_cycle_string() == "(5 8)");
  CHECK(beta_prime(1, 16).to_cycle_string() == "(6 9)(7 10)(11 12)(13 14)(15 16)");
  CHECK(beta_prime(2, 16).to_cycle_string() == "(6 8)(7 9)(10 11)(12 13)(14 15)");
  for (std::size_t n = 14; n <= 30; ++n)
    for (std::size_t i = 1; i <= 3; ++i) {
      const auto a = alpha_prime(i, n);
      CHECK(a.is_involution());
      for (Point x = 0; x < 5; ++x) CHECK(a(x) == x);
    }
  CHECK_THROWS_AS(alpha_prime(4, 20), RangeError);
  CHECK_THROWS_AS(alpha_prime(1, 13), RangeError);
  CHECK_THROWS_AS(beta_prime(1, 12), RangeError);
  CHECK_THROWS_AS(restrict_to_interval(Permutation::from_cycles(4, {{1, 3}}), 2, 4), RangeError);
}

TEST_CASE("alpha' and beta' generate the full symmetric group") {
  for (std::size_t n = 14; n <= 60; ++n) {
    CAPTURE(n);
    CHECK(order_on_interval({alpha_prime(1, n), alpha_prime(2, n), alpha_prime(3, n)}, 6, n) == factorial(n - 5));
  }
  for (std::size_t m = 13; m <= 40; ++m) {
    CAPTURE(m);
    CHECK(order_on_interval({beta_prime(1, m), beta_prime(2, m), beta_prime(3, m)}, 5, m) == factorial(m - 4));
  }
}

TEST_CASE("s0 is conflict free and leaves the free block uncovered") {
  for (std::size_t m = 13; m <= 20; ++m)
    for (std::size_t n = 14; n <= 40; ++n) {
      CAPTURE(m);
      CAPTURE(n);
      PartialStructureSet p(m, n);
      REQUIRE_NOTHROW(p = s0(m, n));
      const auto fb = free_block(m, n);
      for (std::uint32_t a = 0; a < m; ++a)
        for (std::uint32_t b = 0; b < n; ++b) {
          const bool in_block = a + 1 >= fb.row_lo && a + 1 <= fb.row_hi && b + 1 >= fb.col_lo && b + 1 <= fb.col_hi;
          if (in_block) CHECK_FALSE(p.defined({a, b}));
          // blank table cells stay uncovered
          if (table_families(m, n, a + 1, b + 1).empty()) CHECK_FALSE(p.defined({a, b}));
        }
    }
}

TEST_CASE("s0 contents and region audit") {
  const auto p = s0(13, 14);
  const auto sq = p.squares();
  CHECK(contains(sq, sq1(4, 14, 13, 13)));
  for (std::uint32_t k : {6, 7, 8}) CHECK(contains(sq, sq1(4, k, 4, k)));
  CHECK(region_audit(13, 14, s0_blueprint(13, 14)).empty());
  CHECK(region_audit(20, 40, s0_blueprint(20, 40)).empty());
  std::set<std::string> fams;
  for (const auto& t : s0_blueprint(20, 40)) fams.insert(t.family);
  CHECK(fams.size() == 11);
  // An out-of-place square is reported.
  auto bp = s0_blueprint(13, 14);
  bp.push_back({bp.front().family, sq1(12, 13, 12, 13)});
  CHECK_FALSE(region_audit(13, 14, bp).empty());
  CHECK_THROWS_AS(s0(12, 14), RangeError);
  CHECK_THROWS_AS(s0(13, 13), RangeError);
}

TEST_CASE("radu extension") {
  const auto s = radu_extension(13, 14);
  const auto v = verify_radu(s);
  CHECK(v.valid);
  CHECK(v.a_local_symmetric);
  CHECK(v.b_local_symmetric);
  CHECK(v.all_passed);
  CHECK(PermutationGroup(13, local_involutions(s, Side::A)).order() == factorial(13));
  CHECK(PermutationGroup(14, local_involutions(s, Side::B)).order() == factorial(14));

  Rng rng(4);
  for (std::size_t m : {13, 15, 18})
    for (std::size_t n : {14, 17, 22, 31}) {
      CAPTURE(m);
      CAPTURE(n);
      const auto e = radu_extension(m, n, random_filler(m, n, rng));
      const auto alphas = local_involutions(e, Side::B);
      CHECK(alphas[m - 2] == Permutation::from_cycles(n, {{4, static_cast<Point>(n - 2)}}));
      CHECK(alphas[4] == alpha_prime(1, n));
      CHECK(verify_radu(e).all_passed);
    }

  const auto f1 = random_filler(14, 20, rng);
  auto f2 = f1;
  f2[0] = Permutation::from_cycles(20, {{12, 13}});
  if (f2[0] == f1[0]) f2[0] = Permutation::identity(20);
  CHECK(radu_extension(14, 20, f1).codes() != radu_extension(14, 20, f2).codes());

  CHECK_THROWS_AS(radu_extension(14, 20, {Permutation::from_cycles(20, {{1, 12}})}), RangeError);
  CHECK_THROWS_AS(radu_extension(14, 20, {Permutation::from_cycles(20, {{12, 13, 14}})}), RangeError);
}

TEST_CASE("Schreier graph claim") {
  for (std::size_t n : {14, 15, 20}) {
    const auto c = schreier_claim_check(n);
    CHECK(c.connected);
    CHECK(c.not_bipartite);
    CHECK(c.loop_free_bipartite);
    CHECK(c.odd_cycle.size() % 2 == 1);
  }
  const auto b = schreier_claim_check_beta(13);
  CHECK(b.connected);
  CHECK(b.not_bipartite);
}
