#include "bmw/structure.hpp"

#include "bmw/errors.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace bmw {

Square Square::make(std::uint32_t i, std::uint32_t k, std::uint32_t j, std::uint32_t l) {
  return Square{std::min(i, j), std::min(k, l), std::max(i, j), std::max(k, l)};
}

std::vector<Cell> Square::cells() const {
  std::vector<Cell> c{{i, k}, {i, l}, {j, k}, {j, l}};
  std::sort(c.begin(), c.end());
  c.erase(std::unique(c.begin(), c.end()), c.end());
  return c;
}

std::string to_string(const Square& s) {
  return "{a" + std::to_string(s.i + 1) + ",b" + std::to_string(s.k + 1) + ",a" + std::to_string(s.j + 1) + ",b" +
         std::to_string(s.l + 1) + "}";
}

namespace {

// Writes the opposite-corner pairing of s into f (codes a*n+b).
void write_square(std::vector<std::uint32_t>& f, std::size_t n, const Square& s) {
  auto code = [n](std::uint32_t a, std::uint32_t b) { return static_cast<std::uint32_t>(a * n + b); };
  f[code(s.i, s.k)] = code(s.j, s.l);
  f[code(s.j, s.l)] = code(s.i, s.k);
  f[code(s.i, s.l)] = code(s.j, s.k);
  f[code(s.j, s.k)] = code(s.i, s.l);
}

std::vector<Square> squares_of(std::size_t m, std::size_t n, const std::vector<std::uint32_t>& f,
                               std::uint32_t undefined) {
  std::vector<Square> out;
  for (std::uint32_t a = 0; a < m; ++a)
    for (std::uint32_t b = 0; b < n; ++b) {
      const auto v = f[a * n + b];
      if (v == undefined) continue;
      auto s = Square::make(a, b, static_cast<std::uint32_t>(v / n), static_cast<std::uint32_t>(v % n));
      if (s.i == a && s.k == b) out.push_back(s);
    }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void check_square_range(std::size_t m, std::size_t n, const Square& s) {
  if (s.j >= m || s.l >= n) throw IndexOutOfRange("square " + to_string(s) + " outside (" + std::to_string(m) + "," + std::to_string(n) + ")");
}

}  // namespace

StructureSet::StructureSet(std::size_t m, std::size_t n, std::vector<std::uint32_t> f)
    : m_(m), n_(n), f_(std::move(f)) {
  if (m_ == 0 || n_ == 0) throw RangeError("structure set needs m, n >= 1");
  if (f_.size() != m_ * n_) throw RangeError("grid map has wrong size");
  for (std::uint32_t a = 0; a < m_; ++a)
    for (std::uint32_t b = 0; b < n_; ++b) {
      const auto v = f_[a * n_ + b];
      if (v >= f_.size()) throw RangeError("grid map value out of range");
      if (f_[v] != a * n_ + b) throw RangeError("grid map is not an involution");
      const auto j = v / n_, l = v % n_;
      if (f_[a * n_ + l] != j * n_ + b) throw RangeError("grid map violates the square-swap law");
    }
}

std::vector<Square> StructureSet::squares() const { return squares_of(m_, n_, f_, 0xFFFFFFFFu); }

StructureSet validate(std::size_t m, std::size_t n, const std::vector<Square>& squares) {
  if (m == 0 || n == 0) throw IndexOutOfRange("structure set needs m, n >= 1");
  constexpr std::uint32_t undef = PartialStructureSet::kUndefined;
  std::vector<std::uint32_t> f(m * n, undef);
  for (const auto& raw : squares) {
    const Square s = Square::make(raw.i, raw.k, raw.j, raw.l);
    check_square_range(m, n, s);
    for (const Cell& c : s.cells())
      if (f[c.a * n + c.b] != undef) throw DoublyCoveredPair(c.a, c.b);
    write_square(f, n, s);
  }
  for (std::uint32_t a = 0; a < m; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      if (f[a * n + b] == undef) throw UncoveredPair(a, b);
  return StructureSet(m, n, std::move(f));
}

std::vector<Permutation> local_involutions(const StructureSet& s, Side side) {
  std::vector<Permutation> out;
  if (side == Side::B) {
    for (std::uint32_t i = 0; i < s.m(); ++i) {
      std::vector<Point> im(s.n());
      for (std::uint32_t k = 0; k < s.n(); ++k) im[k] = s.f({i, k}).b;
      out.emplace_back(std::move(im));
    }
  } else {
    for (std::uint32_t k = 0; k < s.n(); ++k) {
      std::vector<Point> im(s.m());
      for (std::uint32_t i = 0; i < s.m(); ++i) im[i] = s.f({i, k}).a;
      out.emplace_back(std::move(im));
    }
  }
  return out;
}

StructureSet relabel(const StructureSet& s, const Relabeling& r) {
  if (r.mu.degree() != s.m() || r.nu.degree() != s.n()) throw DegreeError("relabeling degrees do not match (m,n)");
  const std::size_t n = s.n();
  std::vector<std::uint32_t> f(s.m() * n);
  for (std::uint32_t i = 0; i < s.m(); ++i)
    for (std::uint32_t k = 0; k < n; ++k) {
      const Cell t = s.f({i, k});
      f[r.mu(i) * n + r.nu(k)] = static_cast<std::uint32_t>(r.mu(t.a) * n + r.nu(t.b));
    }
  return StructureSet(s.m(), n, std::move(f));
}

std::string Presentation::text() const {
  std::ostringstream os;
  os << "generators:";
  for (const auto& g : generators) os << ' ' << g;
  os << "\nrelators:\n";
  for (const auto& r : relators) os << r << '\n';
  return os.str();
}

Presentation presentation(const StructureSet& s) {
  Presentation p;
  for (std::size_t i = 1; i <= s.m(); ++i) p.generators.push_back("a" + std::to_string(i));
  for (std::size_t k = 1; k <= s.n(); ++k) p.generators.push_back("b" + std::to_string(k));
  for (const auto& g : p.generators) p.relators.push_back(g + "^2");
  for (const auto& q : s.squares())
    p.relators.push_back("a" + std::to_string(q.i + 1) + " b" + std::to_string(q.k + 1) + " a" +
                         std::to_string(q.j + 1) + " b" + std::to_string(q.l + 1));
  return p;
}

std::string presentation_text(const StructureSet& s) { return presentation(s).text(); }

PartialStructureSet::PartialStructureSet(std::size_t m, std::size_t n) : m_(m), n_(n), f_(m * n, kUndefined) {
  if (m == 0 || n == 0) throw RangeError("partial structure set needs m, n >= 1");
}

PartialStructureSet PartialStructureSet::from_squares(std::size_t m, std::size_t n,
                                                      const std::vector<Square>& squares) {
  PartialStructureSet p(m, n);
  for (const auto& raw : squares) {
    const Square s = Square::make(raw.i, raw.k, raw.j, raw.l);
    check_square_range(m, n, s);
    for (const Cell& c : s.cells())
      if (p.defined(c)) throw DoublyCoveredPair(c.a, c.b);
    write_square(p.f_, n, s);
  }
  return p;
}

void PartialStructureSet::add(const Square& raw) {
  const Square s = Square::make(raw.i, raw.k, raw.j, raw.l);
  check_square_range(m_, n_, s);
  const auto cells = s.cells();
  std::vector<std::uint32_t> probe(f_.size(), kUndefined);
  write_square(probe, n_, s);
  bool identical = true;
  for (const Cell& c : cells) identical = identical && f_[c.a * n_ + c.b] == probe[c.a * n_ + c.b];
  if (identical) return;
  for (const Cell& c : cells)
    if (defined(c)) {
      const Cell t = f(c);
      throw ConflictingPair(c.a, c.b, to_string(s) + " vs " + to_string(Square::make(c.a, c.b, t.a, t.b)));
    }
  write_square(f_, n_, s);
}

std::vector<Square> PartialStructureSet::squares() const { return squares_of(m_, n_, f_, kUndefined); }

std::size_t PartialStructureSet::defined_count() const {
  return static_cast<std::size_t>(std::count_if(f_.begin(), f_.end(), [](auto v) { return v != kUndefined; }));
}

PartialStructureSet merge(const PartialStructureSet& p, const PartialStructureSet& q) {
  if (p.m() != q.m() || p.n() != q.n()) throw DegreeError("merge of partial structure sets of different size");
  for (std::uint32_t a = 0; a < p.m(); ++a)
    for (std::uint32_t b = 0; b < p.n(); ++b)
      if (p.defined({a, b}) && q.defined({a, b})) throw ConflictingPair(a, b, "covered by both operands");
  PartialStructureSet r = p;
  for (const auto& s : q.squares()) r.add(s);
  return r;
}

StructureSet complete_with_diagonal(const PartialStructureSet& p) {
  std::vector<std::uint32_t> f = p.codes();
  for (std::size_t c = 0; c < f.size(); ++c)
    if (f[c] == PartialStructureSet::kUndefined) f[c] = static_cast<std::uint32_t>(c);
  return StructureSet(p.m(), p.n(), std::move(f));
}

namespace {

struct Enumerator {
  std::size_t m, n;
  std::vector<std::uint32_t> f;
  const std::function<void(const StructureSet&)>& visit;
  std::uint64_t count = 0;

  static constexpr std::uint32_t undef = PartialStructureSet::kUndefined;

  void run(std::size_t from) {
    std::size_t c = from;
    while (c < f.size() && f[c] != undef) ++c;
    if (c == f.size()) {
      ++count;
      if (visit) visit(StructureSet(m, n, f));
      return;
    }
    const auto i = static_cast<std::uint32_t>(c / n), k = static_cast<std::uint32_t>(c % n);
    for (std::uint32_t j = i; j < m; ++j)
      for (std::uint32_t l = 0; l < n; ++l) {
        const Square s = Square::make(i, k, j, l);
        bool free = true;
        for (const Cell& x : s.cells()) free = free && f[x.a * n + x.b] == undef;
        if (!free) continue;
        const auto saved = s.cells();
        write_square(f, n, s);
        run(c + 1);
        for (const Cell& x : saved) f[x.a * n + x.b] = undef;
      }
  }
};

}  // namespace

std::uint64_t enumerate_structure_sets(std::size_t m, std::size_t n,
                                       const std::function<void(const StructureSet&)>& visit, std::size_t guard) {
  if (m == 0 || n == 0) throw RangeError("census needs m, n >= 1");
  if (m * n > guard)
    throw ResourceError("census (" + std::to_string(m) + "," + std::to_string(n) + ") exceeds guard m*n <= " +
                        std::to_string(guard));
  Enumerator e{m, n, std::vector<std::uint32_t>(m * n, PartialStructureSet::kUndefined), visit};
  e.run(0);
  return e.count;
}

std::uint64_t count_up_to_relabeling(std::size_t m, std::size_t n, std::size_t guard) {
  std::set<std::vector<std::uint32_t>> classes;
  enumerate_structure_sets(
      m, n, [&](const StructureSet& s) { classes.insert(canonical_encoding(s, std::max(guard, m * n))); }, guard);
  return classes.size();
}

ComplexSummary complex_summary(const StructureSet& s) {
  ComplexSummary c;
  c.horizontal_edges = 2 * s.m();
  c.vertical_edges = 2 * s.n();
  for (const auto& q : s.squares()) {
    ++c.squares;
    const auto cover = q.pair_cover();
    c.total_pair_cover += cover;
    (cover == 1 ? c.cover_one : cover == 2 ? c.cover_two : c.cover_four)++;
  }
  return c;
}

}  // namespace bmw
