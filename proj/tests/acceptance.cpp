// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include "bmw/errors.hpp"
#include "bmw/perm.hpp"
#include "bmw/permgroup.hpp"
#include "bmw/radu.hpp"
#include "bmw/randmodel.hpp"
#include "bmw/structure.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace bmw;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// Exhaustive scan of all n! permutations for fixed-point-free involutions.
std::size_t count_fpf_by_permutations(std::size_t n) {
  std::vector<Point> p(n);
  std::iota(p.begin(), p.end(), Point{0});
  std::size_t c = 0;
  do {
    bool ok = true;
    for (Point x = 0; x < n && ok; ++x) ok = p[x] != x && p[p[x]] == x;
    c += ok;
  } while (std::next_permutation(p.begin(), p.end()));
  return c;
}

Outcome ac1() {
  Outcome o;
  std::ostringstream d;
  for (std::size_t n : {2, 4, 6, 8, 10}) {
    const auto brute = count_fpf_by_permutations(n);
    const bool match = count_fpf(n) == BigInt(brute) && all_fpf(n).size() == brute;
    o.ok = o.ok && match;
    d << "n=" << n << ":" << brute << (match ? "" : "(mismatch)") << " ";
  }
  o.detail = d.str();
  return o;
}

Outcome ac2() {
  Outcome o;
  std::ostringstream d;
  for (std::size_t n : {2, 4, 6, 8}) {
    const auto all = all_fpf(n);
    std::size_t hits = 0;
    for (const auto& x : all)
      for (const auto& y : all) {
        bool share = false;
        for (Point k = 0; k < n && !share; ++k) share = x(k) == y(k);
        hits += share;
      }
    const Rational brute(BigInt(hits), BigInt(all.size() * all.size()));
    const bool match = exact_orbit_share_prob(n).exact == brute;
    o.ok = o.ok && match;
    d << "n=" << n << ":" << to_string(brute) << " ";
  }
  o.ok = o.ok && exact_orbit_share_prob(4).exact == Rational(1, 3);
  const double v = exact_orbit_share_prob(1000).value;
  const double limit = 1.0 - std::exp(-0.5);
  o.ok = o.ok && std::abs(v - limit) < 0.005;
  d << "n=1000:" << v << " (limit " << limit << ")";
  o.detail = d.str();
  return o;
}

Outcome ac3() {
  Outcome o;
  std::ostringstream d;
  McOptions opts;
  opts.seed = 3;
  opts.threads = 4;
  for (std::size_t n : {6, 50, 500}) {
    const auto e = monte_carlo(McKind::ExpectedM, 2, n, 100000, opts);
    const double target = double(n) / (2.0 * double(n - 1));
    const double z = std::abs(e.mean - target) / e.std_error;
    o.ok = o.ok && z < 3.0;
    d << "n=" << n << ": mean=" << e.mean << " target=" << target << " z=" << z << " ";
  }
  o.detail = d.str();
  return o;
}

Outcome ac4() {
  Outcome o;
  std::ostringstream d;
  const auto exact = monte_carlo(McKind::TripleMatchingRate, 3, 4, 0);
  o.ok = exact.exact_mean == Rational(1, 9);
  d << "(3,4) enumeration=" << (exact.exact_mean ? to_string(*exact.exact_mean) : "none") << " ";

  McOptions opts;
  opts.seed = 4;
  opts.threads = 4;
  const auto big = monte_carlo(McKind::TripleMatchingRate, 3, 100, 100000, opts);
  const double bound = 4.0 * 27 / 100;
  o.ok = o.ok && big.mean <= bound;
  d << "(3,100) rate=" << big.mean << " bound=" << bound << " ";

  const auto e6 = monte_carlo(McKind::TripleMatchingRate, 3, 6, 0);
  const auto s6 = monte_carlo(McKind::TripleMatchingRate, 3, 6, 100000, opts);
  const double p6 = e6.mean;
  const double sigma = std::sqrt(p6 * (1 - p6) / 100000.0);
  o.ok = o.ok && std::abs(s6.mean - p6) < 3 * sigma && p6 <= 4.0 * 27 / 6;
  d << "(3,6) enumeration=" << to_string(*e6.exact_mean) << " sampled=" << s6.mean;
  o.detail = d.str();
  return o;
}

Outcome ac5() {
  Outcome o;
  std::ostringstream d;
  for (auto [m, n] : std::vector<std::pair<std::size_t, std::size_t>>{{3, 10}, {5, 50}}) {
    Rng rng = Rng::for_task(5, m);
    std::size_t done = 0, rejected = 0, bad = 0;
    while (done < 10000) {
      const auto t = sample_tuple(m, n, rng);
      if (triple_matchings(t)) {
        ++rejected;
        continue;
      }
      const auto alphas = local_involutions(structure_set_from_tuple(t), Side::B);
      for (std::size_t i = 0; i < m; ++i) bad += alphas[i] != t[i].permutation();
      ++done;
    }
    o.ok = o.ok && bad == 0;
    d << "(" << m << "," << n << "): 10000 tuples, " << bad << " mismatches, " << rejected << " inadmissible skipped ";
  }
  o.detail = d.str();
  return o;
}

Outcome ac6() {
  Outcome o;
  Rng rng(6);
  std::size_t predicted = 0, counterexamples = 0;
  for (int s = 0; s < 1000; ++s) {
    const auto t = sample_tuple(5, 100, rng);
    const auto r = irr_certificate(t);
    if (!r.a_local_sym_predicted) continue;
    ++predicted;
    const auto betas = local_involutions(structure_set_from_tuple(t), Side::A);
    if (PermutationGroup(5, betas).order() != 120) ++counterexamples;
  }
  o.ok = counterexamples == 0;
  o.detail = "1000 tuples at (5,100): " + std::to_string(predicted) + " satisfy A1-A3, " +
             std::to_string(counterexamples) + " counterexamples";
  return o;
}

Outcome ac7() {
  Outcome o;
  std::ostringstream d;
  const auto dl = delta();
  const auto a_order = PermutationGroup(4, local_involutions(dl, Side::A)).order();
  const auto b_order = PermutationGroup(5, local_involutions(dl, Side::B)).order();
  o.ok = a_order == 24 && b_order == 120;
  d << "delta orders " << a_order << "/" << b_order << "; ";
  std::size_t cases = 0, failures = 0;
  Rng rng(7);
  for (std::size_t m = 13; m <= 16; ++m)
    for (std::size_t n = 14; n <= 30; ++n) {
      ++cases;
      bool good = true;
      try {
        s0(m, n);
        for (const auto& filler : {std::vector<Permutation>{}, random_filler(m, n, rng)}) {
          const auto s = radu_extension(m, n, filler);
          good = good && PermutationGroup(m, local_involutions(s, Side::A)).order() == factorial(m);
          good = good && PermutationGroup(n, local_involutions(s, Side::B)).order() == factorial(n);
        }
        const auto c = schreier_claim_check(n);
        good = good && c.connected && c.not_bipartite;
      } catch (const Error& e) {
        good = false;
        d << "(" << m << "," << n << ") " << e.what() << "; ";
      }
      if (!good) {
        ++failures;
        d << "(" << m << "," << n << ") failed; ";
      }
    }
  o.ok = o.ok && failures == 0;
  d << cases << " (m,n) cases, " << failures << " failures";
  o.detail = d.str();
  return o;
}

Outcome ac8() {
  Outcome o;
  std::ostringstream d;
  auto check = [&](std::size_t m, std::size_t n, const BigInt& expected) {
    const auto c = enumerate_structure_sets(m, n);
    BigInt bound = 1;
    for (std::size_t t = 0; t < m * n; ++t) bound *= m * n;
    const bool good = BigInt(c) == expected && BigInt(c) <= bound;
    o.ok = o.ok && good;
    d << "(" << m << "," << n << ")=" << c << (good ? " " : "(bad) ");
  };
  check(1, 1, 1);
  for (std::size_t n = 1; n <= 5; ++n) check(1, n, count_involutions(n));
  check(2, 2, 8);
  const auto classes = count_up_to_relabeling(2, 2);
  o.ok = o.ok && classes == 6;
  d << "classes(2,2)=" << classes;
  o.detail = d.str();
  return o;
}

Outcome ac9() {
  Outcome o;
  const std::size_t m = 6, n = 7778, samples = 50, needed = 45;
  std::size_t passed = 0, irr1 = 0, irr3 = 0, irr4 = 0, irr5 = 0, a_sym = 0, b_alt = 0, b_unknown = 0;
  double worst = 0.0, total = 0.0;
  CertificateOptions opts;
  opts.b_side.strategy = AltStrategy::Jordan;
  for (std::size_t s = 0; s < samples; ++s) {
    const auto t0 = Clock::now();
    Rng rng = Rng::for_task(1, s);
    const auto t = sample_tuple(m, n, rng);
    const auto r = irr_certificate(t, opts);
    const double dt = seconds_since(t0);
    worst = std::max(worst, dt);
    total += dt;
    const bool b_ok = r.b_local.contains_alternating == Tribool::True ||
                      (r.b_local.contains_alternating == Tribool::Unknown && !r.b_local.certificate);
    const bool a_ok = r.a_local && r.a_local->equals_symmetric == Tribool::True;
    irr1 += r.a1_no_triple_matchings;
    irr3 += r.irr3_connected;
    irr4 += r.irr4_black_edge;
    irr5 += r.irr5_two_transitive == Tribool::True;
    a_sym += a_ok;
    b_alt += r.b_local.contains_alternating == Tribool::True;
    b_unknown += r.b_local.contains_alternating == Tribool::Unknown;
    passed += r.a1_no_triple_matchings && r.irr3_connected && r.irr4_black_edge &&
              r.irr5_two_transitive == Tribool::True && b_ok && a_ok && dt < 60.0;
  }
  o.ok = passed >= needed && worst < 60.0;
  std::ostringstream d;
  d << "(6,7778) " << passed << "/" << samples << " pass (need " << needed << "); Irr1 " << irr1 << ", Irr3 " << irr3
    << ", Irr4 " << irr4 << ", Irr5 " << irr5 << ", a_local=Sym(6) " << a_sym << ", b_local Alt " << b_alt
    << " (unknown " << b_unknown << "); max " << worst << "s, mean " << total / samples << "s";
  o.detail = d.str();
  return o;
}

Outcome ac10() {
  auto f = [](std::initializer_list<std::initializer_list<Point>> c) { return FpfInvolution(Permutation::from_cycles(6, c)); };
  const InvolutionTuple t({f({{1, 2}, {3, 4}, {5, 6}}), f({{1, 2}, {3, 5}, {4, 6}}), f({{1, 6}, {3, 5}, {2, 4}})});
  std::set<std::pair<Point, Point>> black, white;
  for (const auto& e : match_graph(t).edges) (e.black() ? black : white).insert({e.u + 1, e.v + 1});
  Outcome o;
  o.ok = black == std::set<std::pair<Point, Point>>{{1, 2}, {3, 5}} &&
         white == std::set<std::pair<Point, Point>>{{3, 4}, {5, 6}, {4, 6}, {1, 6}, {2, 4}};
  std::ostringstream d;
  d << "black:";
  for (auto [u, v] : black) d << " {b" << u << ",b" << v << "}";
  d << " white:";
  for (auto [u, v] : white) d << " {b" << u << ",b" << v << "}";
  o.detail = d.str();
  return o;
}

struct Criterion {
  const char* name;
  const char* title;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"AC1", "fixed-point-free involution count", 1, ac1},
      {"AC2", "orbit-share probability", 5, ac2},
      {"AC3", "expected matches of two involutions", 30, ac3},
      {"AC4", "triple-matching rate", 30, ac4},
      {"AC5", "reconstruction round trip", 60, ac5},
      {"AC6", "A-side certificate soundness", 60, ac6},
      {"AC7", "Radu family", 300, ac7},
      {"AC8", "census", 60, ac8},
      {"AC9", "random (6,7778) certificate proxy", 50 * 60, ac9},
      {"AC10", "match-graph fixture", 1, ac10},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double dt = seconds_since(t0);
    const bool ok = o.ok && dt < c.limit_seconds;
    failures += !ok;
    std::printf("%s %s [%s] %.2fs (limit %.0fs): %s\n", c.name, ok ? "PASS" : "FAIL", c.title, dt, c.limit_seconds,
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
