#include "bmw/randmodel.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace bmw {

InvolutionTuple::InvolutionTuple(std::vector<FpfInvolution> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw DegreeError("involution tuple needs m >= 1");
  for (const auto& e : entries_)
    if (e.degree() != entries_.front().degree()) throw DegreeError("involution tuple entries differ in degree");
}

InvolutionTuple sample_tuple(std::size_t m, std::size_t n, Rng& rng) {
  if (m == 0) throw RangeError("sample_tuple needs m >= 1");
  std::vector<FpfInvolution> e;
  e.reserve(m);
  for (std::size_t i = 0; i < m; ++i) e.push_back(random_fpf(n, rng));
  return InvolutionTuple(std::move(e));
}

namespace {

// For point k, coordinates grouped by image, each group sorted; groups
// ordered by their smallest coordinate.
std::vector<std::vector<std::size_t>> groups_at(const InvolutionTuple& t, Point k) {
  std::vector<std::pair<Point, std::size_t>> img;
  img.reserve(t.m());
  for (std::size_t i = 0; i < t.m(); ++i) img.emplace_back(t[i](k), i);
  std::sort(img.begin(), img.end());
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t a = 0; a < img.size();) {
    std::size_t b = a;
    std::vector<std::size_t> g;
    while (b < img.size() && img[b].first == img[a].first) g.push_back(img[b++].second);
    if (g.size() >= 2) out.push_back(std::move(g));
    a = b;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::optional<TripleWitness> triple_matchings(const InvolutionTuple& t) {
  if (t.m() < 3) return std::nullopt;
  for (Point k = 0; k < t.n(); ++k)
    for (const auto& g : groups_at(t, k))
      if (g.size() >= 3) return TripleWitness{k, g[0], g[1], g[2]};
  return std::nullopt;
}

std::optional<OverlapWitness> overlapping_matches(const InvolutionTuple& t) {
  if (t.m() < 2) return std::nullopt;
  for (Point k = 0; k < t.n(); ++k) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (const auto& g : groups_at(t, k))
      for (std::size_t a = 0; a < g.size(); ++a)
        for (std::size_t b = a + 1; b < g.size(); ++b) pairs.emplace_back(g[a], g[b]);
    if (pairs.size() >= 2) {
      std::sort(pairs.begin(), pairs.end());
      return OverlapWitness{k, pairs[0], pairs[1]};
    }
  }
  return std::nullopt;
}

MidpointResult midpoint_property(const InvolutionTuple& t) {
  const std::size_t m = t.m();
  if (m < 3) throw ArityError("midpoint property needs m >= 3, got " + std::to_string(m));
  std::vector<std::vector<char>> share(m, std::vector<char>(m, 0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) share[i][j] = share[j][i] = shares_common_orbit(t[i], t[j]);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t ip = i + 1; ip < m; ++ip) {
      bool found = false;
      for (std::size_t j = 0; j < m && !found; ++j) found = j != i && j != ip && share[i][j] && share[j][ip];
      if (!found) return MidpointResult{false, std::make_pair(i, ip)};
    }
  return {};
}

StructureSet structure_set_from_tuple(const InvolutionTuple& t) {
  if (auto w = triple_matchings(t)) throw TripleMatchingError(*w);
  std::vector<Square> squares;
  for (Point k = 0; k < t.n(); ++k)
    for (const auto& g : groups_at(t, k)) {
      const Point l = t[g[0]](k);
      if (k < l) squares.push_back(Square::make(static_cast<std::uint32_t>(g[0]), k, static_cast<std::uint32_t>(g[1]), l));
    }
  for (Point k = 0; k < t.n(); ++k)
    for (std::size_t i = 0; i < t.m(); ++i) {
      const Point l = t[i](k);
      if (k >= l) continue;
      bool alone = true;
      for (std::size_t j = 0; j < t.m() && alone; ++j) alone = j == i || t[j](k) != l;
      if (alone) squares.push_back(Square::make(static_cast<std::uint32_t>(i), k, static_cast<std::uint32_t>(i), l));
    }
  return validate(t.m(), t.n(), squares);
}

std::size_t MatchGraph::black_count() const {
  return static_cast<std::size_t>(std::count_if(edges.begin(), edges.end(), [](const MatchEdge& e) { return e.black(); }));
}

bool MatchGraph::connected() const {
  if (n == 0) return true;
  std::vector<std::vector<Point>> adj(n);
  for (const auto& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<char> seen(n, 0);
  std::vector<Point> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    Point x = stack.back();
    stack.pop_back();
    for (Point y : adj[x])
      if (!seen[y]) {
        seen[y] = 1;
        ++count;
        stack.push_back(y);
      }
  }
  return count == n;
}

MatchGraph match_graph(const InvolutionTuple& t) {
  MatchGraph g;
  g.n = t.n();
  std::map<std::pair<Point, Point>, std::size_t> mult;
  for (const auto& a : t.entries())
    for (Point k = 0; k < t.n(); ++k)
      if (k < a(k)) ++mult[{k, a(k)}];
  for (auto [uv, c] : mult) g.edges.push_back(MatchEdge{uv.first, uv.second, c});
  return g;
}

std::size_t M_statistic(const InvolutionTuple& t) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < t.m(); ++i)
    for (std::size_t j = i + 1; j < t.m(); ++j) total += shared_orbit_count(t[i], t[j]);
  return total;
}

std::optional<Point> white_ball_center(const MatchGraph& g, std::size_t radius) {
  const std::size_t n = g.n;
  std::vector<std::vector<std::pair<Point, bool>>> adj(n);
  for (const auto& e : g.edges) {
    adj[e.u].emplace_back(e.v, e.black());
    adj[e.v].emplace_back(e.u, e.black());
  }
  std::vector<std::size_t> dist(n, SIZE_MAX);
  std::vector<Point> touched;
  for (Point b = 0; b < n; ++b) {
    for (Point x : touched) dist[x] = SIZE_MAX;
    touched.clear();
    dist[b] = 0;
    touched.push_back(b);
    for (std::size_t t = 0; t < touched.size(); ++t) {
      const Point x = touched[t];
      if (dist[x] == radius) continue;
      for (auto [y, black] : adj[x])
        if (dist[y] == SIZE_MAX) {
          dist[y] = dist[x] + 1;
          touched.push_back(y);
        }
    }
    bool white = true;
    for (std::size_t t = 0; t < touched.size() && white; ++t)
      for (auto [y, black] : adj[touched[t]])
        if (black && dist[y] != SIZE_MAX) {
          white = false;
          break;
        }
    if (white) return b;
  }
  return std::nullopt;
}

CertificateReport irr_certificate(const InvolutionTuple& t, const CertificateOptions& opts) {
  CertificateReport r;
  r.m = t.m();
  r.n = t.n();
  r.radius = opts.radius;

  r.a1_witness = triple_matchings(t);
  r.a1_no_triple_matchings = !r.a1_witness;
  r.a2_witness = overlapping_matches(t);
  r.a2_no_overlapping_matches = !r.a2_witness;
  if (t.m() >= 3) {
    auto mp = midpoint_property(t);
    r.a3_midpoint = mp.holds;
    r.a3_failing = mp.failing;
  }

  const MatchGraph g = match_graph(t);
  r.irr2_white_ball = white_ball_center(g, opts.radius);
  r.irr3_connected = g.connected();
  r.black_edges = g.black_count();
  r.white_edges = g.edges.size() - r.black_edges;
  r.irr4_black_edge = r.black_edges > 0;
  r.m_statistic = M_statistic(t);

  std::vector<Permutation> alphas;
  for (const auto& a : t.entries()) alphas.push_back(a.permutation());
  r.b_local = classify(PermutationGroup(t.n(), std::move(alphas)), opts.b_side);

  if (r.a1_no_triple_matchings) {
    const StructureSet s = structure_set_from_tuple(t);
    r.a_local = classify(PermutationGroup(t.m(), local_involutions(s, Side::A)), opts.a_side);
    r.irr5_two_transitive = r.a_local->two_transitive;
  }

  const std::size_t m = t.m(), n = t.n();
  auto power = [](std::size_t base, int e) {
    BigInt r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
  };
  r.n_exceeds_m5 = BigInt(n) > power(m, 5);
  r.n_exceeds_m8 = BigInt(n) > power(m, 8);
  if (m >= 2) {
    const auto ex = caprace_exceptional_set(m);
    r.n_in_caprace_exceptional_set = std::find(ex.integers.begin(), ex.integers.end(), BigInt(n)) != ex.integers.end();
  }

  r.a_local_sym_predicted = r.a1_no_triple_matchings && r.a2_no_overlapping_matches && r.a3_midpoint.value_or(false);
  r.irreducible_certified = r.a1_no_triple_matchings && r.irr2_white_ball.has_value() && r.irr3_connected &&
                            r.irr4_black_edge && r.irr5_two_transitive == Tribool::True;
  r.hji_certified = r.irreducible_certified && r.a_local && r.a_local->contains_alternating == Tribool::True &&
                    r.b_local.contains_alternating == Tribool::True && m >= 6 && n >= 6;
  return r;
}

OrbitShareProbability exact_orbit_share_prob(std::size_t n) {
  if (n == 0 || n % 2) throw DegreeError("exact_orbit_share_prob: n must be even and positive");
  const std::size_t h = n / 2;
  const BigInt denom = double_factorial(static_cast<std::int64_t>(n) - 1);
  Rational sum = 0;
  for (std::size_t k = 1; k <= h; ++k) {
    Rational term(binomial(h, k) * double_factorial(static_cast<std::int64_t>(n - 2 * k) - 1), denom);
    sum += k % 2 ? term : Rational(-term);
  }
  return {sum, to_double(sum)};
}

CapraceSet caprace_exceptional_set(std::size_t m) {
  if (m < 2) throw RangeError("caprace_exceptional_set needs m >= 2");
  const Rational f = factorial(m);
  const Rational g = factorial(m - 1);
  const std::vector<Rational> values{f / 2 - 1, f / 2, f - 1, f * g / 4 - 1, f * g / 4, f * g / 2 - 1, f * g / 2, f * g - 1};
  std::set<BigInt> ints;
  std::set<Rational> others;
  for (const auto& v : values) {
    if (boost::multiprecision::denominator(v) == 1)
      ints.insert(boost::multiprecision::numerator(v));
    else
      others.insert(v);
  }
  return {std::vector<BigInt>(ints.begin(), ints.end()), std::vector<Rational>(others.begin(), others.end())};
}

}  // namespace bmw
