#include "bmw/permgroup.hpp"

#include "bmw/errors.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

namespace bmw {

std::string to_string(Tribool t) {
  switch (t) {
    case Tribool::False: return "false";
    case Tribool::True: return "true";
    case Tribool::Unknown: return "unknown";
  }
  return "unknown";
}

std::string to_string(AltStrategy s) { return s == AltStrategy::Exact ? "exact" : "jordan"; }

AltStrategy parse_alt_strategy(const std::string& s) {
  if (s == "exact") return AltStrategy::Exact;
  if (s == "jordan") return AltStrategy::Jordan;
  throw UsageError("unknown alt strategy '" + s + "' (expected exact or jordan)");
}

bool is_prime(std::size_t p) {
  if (p < 2) return false;
  for (std::size_t q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

struct PermutationGroup::Cache {
  std::mutex mu;
  std::optional<BigInt> order;
  std::optional<BigInt> chain_order;
  std::optional<bool> transitive;
  std::optional<bool> two_transitive;
  std::optional<std::optional<std::vector<Point>>> block;
};

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) { reset(); }

  void reset() {
    std::iota(parent_.begin(), parent_.end(), Point{0});
    std::fill(size_.begin(), size_.end(), 1);
  }

  Point find(Point x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // Returns the size of the merged class, or 0 if already joined.
  std::size_t unite(Point a, Point b) {
    a = find(a);
    b = find(b);
    if (a == b) return 0;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return size_[a];
  }

  std::size_t class_size(Point x) { return size_[find(x)]; }

 private:
  std::vector<Point> parent_;
  std::vector<std::size_t> size_;
};

class SchreierSims {
 public:
  SchreierSims(std::size_t degree, const std::vector<Permutation>& gens) : d_(degree) {
    for (const auto& g : gens)
      if (!g.is_identity()) gens_.push_back(g);
  }

  BigInt run() {
    if (gens_.empty()) return 1;
    Point b0 = first_moved(gens_.front());
    levels_.push_back(make_level(b0));
    for (const auto& g : gens_) levels_[0].gens.push_back(g);
    extend_orbit(0);

    BigInt bound = factorial(d_);
    if (std::all_of(gens_.begin(), gens_.end(), [](const Permutation& g) { return g.is_even(); })) bound /= 2;

    random_phase(bound);
    if (product() != bound) deterministic_phase();
    return product();
  }

 private:
  struct Level {
    Point base;
    std::vector<Permutation> gens;
    std::vector<std::int32_t> index;  // point -> slot in reps, -1 if outside the orbit
    std::vector<Point> orbit;
    std::vector<Permutation> reps;  // reps[t](base) == orbit[t]
    std::vector<Permutation> inv_reps;
  };

  Level make_level(Point base) const {
    Level l;
    l.base = base;
    l.index.assign(d_, -1);
    l.index[base] = 0;
    l.orbit.push_back(base);
    l.reps.push_back(Permutation::identity(d_));
    l.inv_reps.push_back(Permutation::identity(d_));
    return l;
  }

  static Point first_moved(const Permutation& g) {
    for (Point x = 0; x < g.degree(); ++x)
      if (g(x) != x) return x;
    return 0;
  }

  void extend_orbit(std::size_t i) {
    Level& l = levels_[i];
    for (std::size_t t = 0; t < l.orbit.size(); ++t) {
      for (const auto& s : l.gens) {
        Point y = s(l.orbit[t]);
        if (l.index[y] >= 0) continue;
        l.index[y] = static_cast<std::int32_t>(l.orbit.size());
        l.orbit.push_back(y);
        Permutation u = l.reps[t] * s;
        l.inv_reps.push_back(u.inverse());
        l.reps.push_back(std::move(u));
      }
    }
  }

  // Sifts g starting at level `from`; returns the residue and the level where it stopped.
  std::pair<Permutation, std::size_t> sift(Permutation g, std::size_t from) const {
    for (std::size_t i = from; i < levels_.size(); ++i) {
      const Level& l = levels_[i];
      const std::int32_t t = l.index[g(l.base)];
      if (t < 0) return {std::move(g), i};
      if (t != 0) g = g * l.inv_reps[t];
    }
    return {std::move(g), levels_.size()};
  }

  void add_generator(const Permutation& h, std::size_t lo, std::size_t j) {
    if (j == levels_.size()) levels_.push_back(make_level(first_moved(h)));
    for (std::size_t i = lo; i <= j; ++i) {
      levels_[i].gens.push_back(h);
      extend_orbit(i);
    }
  }

  BigInt product() const {
    BigInt r = 1;
    for (const auto& l : levels_) r *= l.orbit.size();
    return r;
  }

  void random_phase(const BigInt& bound) {
    Rng rng(0x5EED5C4E1E5ULL ^ d_);
    std::vector<Permutation> slots;
    for (std::size_t t = 0; t < std::max<std::size_t>(10, gens_.size()); ++t) slots.push_back(gens_[t % gens_.size()]);
    Permutation acc = Permutation::identity(d_);
    auto step = [&]() {
      std::size_t a = rng.below(slots.size());
      std::size_t b = rng.below(slots.size() - 1);
      if (b >= a) ++b;
      slots[a] = rng.below(2) ? slots[a] * slots[b] : slots[b] * slots[a];
      acc = acc * slots[a];
      return acc;
    };
    for (int t = 0; t < 50; ++t) step();
    std::size_t trivial_run = 0;
    while (trivial_run < 30 && product() != bound) {
      auto [h, j] = sift(step(), 0);
      if (h.is_identity()) {
        ++trivial_run;
        continue;
      }
      trivial_run = 0;
      add_generator(h, j == 0 ? 0 : 1, j);
    }
  }

  void deterministic_phase() {
    std::size_t i = levels_.size();
    while (i-- > 0) {
      bool restarted = false;
      for (std::size_t t = 0; t < levels_[i].orbit.size() && !restarted; ++t) {
        for (std::size_t s = 0; s < levels_[i].gens.size() && !restarted; ++s) {
          const Level& l = levels_[i];
          const Point gamma = l.orbit[t];
          const Point image = l.gens[s](gamma);
          Permutation g = l.reps[t] * l.gens[s] * l.inv_reps[l.index[image]];
          if (g.is_identity()) continue;
          auto [h, j] = sift(std::move(g), i + 1);
          if (h.is_identity()) continue;
          add_generator(h, i + 1, j);
          i = j + 1;  // loop decrement resumes at level j
          restarted = true;
        }
      }
    }
  }

  std::size_t d_;
  std::vector<Permutation> gens_;
  std::vector<Level> levels_;
};

std::vector<std::size_t> prime_factors(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t q = 2; q * q <= n; ++q) {
    while (n % q == 0) {
      out.push_back(q);
      n /= q;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// lcm(lengths) mod p.
std::size_t lcm_mod(const std::vector<std::size_t>& lengths, std::size_t p) {
  std::map<std::size_t, std::size_t> exps;
  for (auto len : lengths) {
    std::map<std::size_t, std::size_t> e;
    for (auto q : prime_factors(len)) ++e[q];
    for (auto [q, k] : e) exps[q] = std::max(exps[q], k);
  }
  std::size_t r = 1 % p;
  for (auto [q, k] : exps)
    for (std::size_t t = 0; t < k; ++t) r = r * (q % p) % p;
  return r;
}

}  // namespace

PermutationGroup::PermutationGroup(std::size_t degree, std::vector<Permutation> generators)
    : degree_(degree), gens_(std::move(generators)), cache_(std::make_shared<Cache>()) {
  if (degree_ == 0) throw DegreeError("permutation group of degree 0");
  for (const auto& g : gens_)
    if (g.degree() != degree_)
      throw DegreeError("generator of degree " + std::to_string(g.degree()) + " in group of degree " +
                        std::to_string(degree_));
}

bool PermutationGroup::has_odd_generator() const {
  return std::any_of(gens_.begin(), gens_.end(), [](const Permutation& g) { return !g.is_even(); });
}

BigInt PermutationGroup::stabilizer_chain_order(std::size_t guard) const {
  if (degree_ > guard)
    throw ResourceError("degree " + std::to_string(degree_) + " exceeds order guard " + std::to_string(guard));
  {
    std::lock_guard lock(cache_->mu);
    if (cache_->chain_order) return *cache_->chain_order;
  }
  BigInt r = SchreierSims(degree_, gens_).run();
  std::lock_guard lock(cache_->mu);
  if (!cache_->chain_order) cache_->chain_order = r;
  return *cache_->chain_order;
}

BigInt PermutationGroup::order(std::size_t guard) const {
  if (degree_ > guard)
    throw ResourceError("degree " + std::to_string(degree_) + " exceeds order guard " + std::to_string(guard));
  {
    std::lock_guard lock(cache_->mu);
    if (cache_->order) return *cache_->order;
  }
  BigInt r;
  if (degree_ >= 5 && is_transitive() && is_primitive() && find_jordan_certificate()) {
    r = factorial(degree_);
    if (!has_odd_generator()) r /= 2;
  } else {
    r = stabilizer_chain_order(guard);
  }
  std::lock_guard lock(cache_->mu);
  if (!cache_->order) cache_->order = r;
  return *cache_->order;
}

std::size_t PermutationGroup::brute_force_order(std::size_t limit) const {
  std::set<Permutation> seen{Permutation::identity(degree_)};
  std::deque<Permutation> queue{Permutation::identity(degree_)};
  while (!queue.empty()) {
    Permutation x = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens_) {
      Permutation y = x * g;
      if (seen.insert(y).second) {
        if (seen.size() > limit) throw ResourceError("brute-force closure exceeded limit");
        queue.push_back(std::move(y));
      }
    }
  }
  return seen.size();
}

std::vector<std::vector<Point>> PermutationGroup::orbits() const {
  std::vector<std::vector<Point>> out;
  std::vector<char> seen(degree_, 0);
  for (Point s = 0; s < degree_; ++s) {
    if (seen[s]) continue;
    std::vector<Point> orb{s};
    seen[s] = 1;
    for (std::size_t t = 0; t < orb.size(); ++t)
      for (const auto& g : gens_) {
        Point y = g(orb[t]);
        if (!seen[y]) {
          seen[y] = 1;
          orb.push_back(y);
        }
      }
    std::sort(orb.begin(), orb.end());
    out.push_back(std::move(orb));
  }
  return out;
}

bool PermutationGroup::is_transitive() const {
  {
    std::lock_guard lock(cache_->mu);
    if (cache_->transitive) return *cache_->transitive;
  }
  bool r = orbits().size() == 1;
  std::lock_guard lock(cache_->mu);
  cache_->transitive = r;
  return r;
}

bool PermutationGroup::is_two_transitive() const {
  if (degree_ == 1) return true;
  {
    std::lock_guard lock(cache_->mu);
    if (cache_->two_transitive) return *cache_->two_transitive;
  }
  bool r = false;
  if (is_transitive()) {
    const std::size_t d = degree_;
    std::vector<bool> seen(d * d, false);
    std::vector<std::pair<Point, Point>> queue{{0, 1}};
    seen[1] = true;
    for (std::size_t t = 0; t < queue.size(); ++t) {
      auto [x, y] = queue[t];
      for (const auto& g : gens_) {
        Point gx = g(x), gy = g(y);
        if (!seen[gx * d + gy]) {
          seen[gx * d + gy] = true;
          queue.emplace_back(gx, gy);
        }
      }
    }
    r = queue.size() == d * (d - 1);
  }
  std::lock_guard lock(cache_->mu);
  cache_->two_transitive = r;
  return r;
}

std::optional<std::vector<Point>> PermutationGroup::nontrivial_block() const {
  {
    std::lock_guard lock(cache_->mu);
    if (cache_->block) return *cache_->block;
  }
  std::optional<std::vector<Point>> result;
  const std::size_t d = degree_;
  if (d > 2) {
    UnionFind uf(d);
    std::vector<std::pair<Point, Point>> queue;
    for (Point w = 1; w < d && !result; ++w) {
      uf.reset();
      queue.clear();
      uf.unite(0, w);
      queue.emplace_back(0, w);
      bool trivial = false;
      for (std::size_t t = 0; t < queue.size() && !trivial; ++t) {
        auto [x, y] = queue[t];
        for (const auto& g : gens_) {
          Point gx = g(x), gy = g(y);
          std::size_t sz = uf.unite(gx, gy);
          if (sz == 0) continue;
          if (2 * sz > d) {
            trivial = true;
            break;
          }
          queue.emplace_back(gx, gy);
        }
      }
      if (trivial) continue;
      std::vector<Point> block;
      const Point r0 = uf.find(0);
      for (Point x = 0; x < d; ++x)
        if (uf.find(x) == r0) block.push_back(x);
      if (block.size() < d) result = std::move(block);
    }
  }
  std::lock_guard lock(cache_->mu);
  if (!cache_->block) cache_->block = result;
  return *cache_->block;
}

bool PermutationGroup::is_primitive() const {
  if (!is_transitive()) return false;
  return !nontrivial_block().has_value();
}

std::optional<JordanCertificate> PermutationGroup::find_jordan_certificate(const JordanBudget& budget) const {
  const std::size_t d = degree_;
  if (d < 5 || gens_.empty()) return std::nullopt;
  Rng rng(budget.seed);
  std::vector<Point> cur(d);
  for (std::size_t attempt = 1; attempt <= budget.words; ++attempt) {
    const std::size_t len = 1 + rng.below(std::max<std::size_t>(budget.max_word_length, 1));
    std::vector<std::size_t> word(len);
    for (auto& w : word) w = rng.below(gens_.size());
    std::iota(cur.begin(), cur.end(), Point{0});
    for (auto w : word)
      for (auto& x : cur) x = gens_[w](x);
    const Permutation g(cur);
    const auto cycles = g.cycles();

    std::size_t best = cycles.size();
    for (std::size_t c = 0; c < cycles.size(); ++c) {
      const std::size_t p = cycles[c].size();
      if (p > d - 3 || !is_prime(p)) continue;
      if (best < cycles.size() && cycles[best].size() >= p) continue;
      std::size_t divisible = 0;
      for (const auto& other : cycles) divisible += other.size() % p == 0;
      if (divisible == 1) best = c;
    }
    if (best == cycles.size()) continue;

    const auto& cyc = cycles[best];
    const std::size_t p = cyc.size();
    std::vector<std::size_t> others;
    for (std::size_t c = 0; c < cycles.size(); ++c)
      if (c != best) others.push_back(cycles[c].size());
    const std::size_t e = lcm_mod(others, p);
    JordanCertificate cert;
    cert.prime = p;
    cert.word = std::move(word);
    cert.attempts = attempt;
    for (std::size_t t = 0; t < p; ++t) cert.cycle.push_back(cyc[(t * e) % p]);
    return cert;
  }
  return std::nullopt;
}

Tribool PermutationGroup::contains_alternating(AltStrategy strategy, const JordanBudget& budget,
                                               std::size_t guard) const {
  const std::size_t d = degree_;
  if (d <= 2) return Tribool::True;
  if (!is_transitive() || !is_primitive()) return Tribool::False;
  if (strategy == AltStrategy::Exact || d < 5) {
    // Alt(d) is the only subgroup of Sym(d) of index 2 (and of order 3, 12 for d = 3, 4).
    if (d < 5) return to_tribool(brute_force_order() * 2 >= factorial(d));
    return to_tribool(order(guard) * 2 >= factorial(d));
  }
  return find_jordan_certificate(budget) ? Tribool::True : Tribool::Unknown;
}

GroupClassification classify(const PermutationGroup& g, const ClassifyOptions& opts) {
  GroupClassification c;
  const std::size_t d = g.degree();
  c.degree = d;
  const bool transitive = g.is_transitive();
  c.transitive = to_tribool(transitive);
  if (!transitive) {
    c.primitive = Tribool::False;
    c.two_transitive = d == 1 ? Tribool::True : Tribool::False;
  } else if (d <= opts.primitivity_limit) {
    c.primitive = to_tribool(g.is_primitive());
  }

  const bool exact = opts.strategy == AltStrategy::Exact && d <= opts.exact_degree_limit;
  c.method = exact ? AltStrategy::Exact : AltStrategy::Jordan;
  if (d <= 2) {
    c.contains_alternating = Tribool::True;
  } else if (c.primitive == Tribool::False) {
    c.contains_alternating = Tribool::False;
  } else if (c.primitive == Tribool::Unknown) {
    c.contains_alternating = Tribool::Unknown;
  } else if (exact || d < 5) {
    c.order = g.order(opts.exact_degree_limit);
    c.contains_alternating = to_tribool(*c.order * 2 >= factorial(d));
  } else {
    c.certificate = g.find_jordan_certificate(opts.jordan);
    c.contains_alternating = c.certificate ? Tribool::True : Tribool::Unknown;
    if (c.certificate) c.order = g.has_odd_generator() ? factorial(d) : factorial(d) / 2;
  }
  if (!c.order && exact && d <= opts.exact_degree_limit) c.order = g.order(opts.exact_degree_limit);

  if (c.contains_alternating == Tribool::True)
    c.equals_symmetric = to_tribool(g.has_odd_generator() || d == 1);
  else
    c.equals_symmetric = c.contains_alternating;

  if (c.two_transitive == Tribool::Unknown) {
    if (d <= opts.two_transitive_limit)
      c.two_transitive = to_tribool(g.is_two_transitive());
    else if (c.contains_alternating == Tribool::True && d >= 4)
      c.two_transitive = Tribool::True;
    else if (c.primitive == Tribool::False)
      c.two_transitive = Tribool::False;
  }
  return c;
}

SchreierResult schreier_analysis(std::span<const Permutation> gens, std::span<const Point> domain, bool keep_loops) {
  SchreierResult r;
  if (domain.empty()) {
    r.connected = true;
    return r;
  }
  std::size_t deg = 0;
  for (const auto& g : gens) deg = std::max(deg, g.degree());
  for (Point x : domain) deg = std::max<std::size_t>(deg, x + 1);
  std::vector<std::int32_t> local(deg, -1);
  for (std::size_t t = 0; t < domain.size(); ++t) local[domain[t]] = static_cast<std::int32_t>(t);

  const std::size_t v = domain.size();
  std::vector<std::vector<std::size_t>> adj(v);
  std::set<std::pair<std::size_t, std::size_t>> edges;
  std::optional<std::size_t> loop_vertex;
  for (const auto& g : gens) {
    for (std::size_t t = 0; t < v; ++t) {
      const Point x = domain[t];
      if (x >= g.degree()) throw RangeError("domain point outside generator degree");
      const Point y = g(x);
      if (local[y] < 0) throw RangeError("domain not invariant: " + std::to_string(x + 1) + " -> " + std::to_string(y + 1));
      const std::size_t u = static_cast<std::size_t>(local[y]);
      if (u == t) {
        if (keep_loops && !loop_vertex) loop_vertex = t;
        if (keep_loops) edges.emplace(t, t);
        continue;
      }
      if (edges.emplace(std::min(t, u), std::max(t, u)).second) {
        adj[t].push_back(u);
        adj[u].push_back(t);
      }
    }
  }
  r.edge_count = edges.size();

  std::vector<int> color(v, -1);
  std::vector<std::size_t> parent(v, v), depth(v, 0);
  std::size_t components = 0;
  for (std::size_t s = 0; s < v; ++s) {
    if (color[s] >= 0) continue;
    ++components;
    color[s] = 0;
    std::deque<std::size_t> q{s};
    while (!q.empty()) {
      std::size_t x = q.front();
      q.pop_front();
      for (std::size_t y : adj[x]) {
        if (color[y] < 0) {
          color[y] = 1 - color[x];
          parent[y] = x;
          depth[y] = depth[x] + 1;
          q.push_back(y);
        } else if (color[y] == color[x] && r.bipartite) {
          r.bipartite = false;
          std::vector<std::size_t> left{x}, right{y};
          std::size_t a = x, b = y;
          while (a != b) {
            if (depth[a] >= depth[b]) {
              a = parent[a];
              left.push_back(a);
            } else {
              b = parent[b];
              right.push_back(b);
            }
          }
          right.pop_back();
          for (auto z : left) r.odd_cycle.push_back(domain[z]);
          std::reverse(r.odd_cycle.begin(), r.odd_cycle.end());
          for (auto z : right) r.odd_cycle.push_back(domain[z]);
        }
      }
    }
  }
  r.connected = components == 1;
  if (r.bipartite && loop_vertex) {
    r.bipartite = false;
    r.odd_cycle = {domain[*loop_vertex]};
  }
  return r;
}

}  // namespace bmw
