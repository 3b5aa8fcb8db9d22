#include "bmw/errors.hpp"
#include "bmw/structure.hpp"

#include <numeric>
#include <optional>

namespace bmw {
namespace {

// Branch and bound over relabelings. Decision 0 picks the old row placed at
// new row 0, decisions 1..n pick old columns for new columns 0..n-1, and the
// remaining decisions pick old rows for new rows 1..m-1. Leaves with equal
// encodings yield automorphisms, which prune sibling branches.
class Canonizer {
 public:
  explicit Canonizer(const StructureSet& s)
      : s_(s), m_(s.m()), n_(s.n()), total_(s.m() + s.n()), sigma_(m_, kNone), tau_(n_, kNone),
        row_label_(m_, kNone), col_label_(n_, kNone), choice_(total_, 0) {}

  std::vector<std::uint32_t> run() {
    search(0);
    return best_;
  }

 private:
  static constexpr std::uint32_t kNone = 0xFFFFFFFFu;

  struct Automorphism {
    std::vector<std::uint32_t> rows;
    std::vector<std::uint32_t> cols;
  };

  bool row_side(std::size_t d) const { return d == 0 || d > n_; }
  std::size_t slot(std::size_t d) const { return d == 0 ? 0 : d <= n_ ? d - 1 : d - n_; }

  void assign(std::size_t d, std::uint32_t old) {
    choice_[d] = old;
    if (row_side(d)) {
      sigma_[slot(d)] = old;
      row_label_[old] = static_cast<std::uint32_t>(slot(d));
      ++rows_;
    } else {
      tau_[slot(d)] = old;
      col_label_[old] = static_cast<std::uint32_t>(slot(d));
      ++cols_;
    }
  }

  void unassign(std::size_t d) {
    const std::uint32_t old = choice_[d];
    if (row_side(d)) {
      sigma_[slot(d)] = kNone;
      row_label_[old] = kNone;
      --rows_;
    } else {
      tau_[slot(d)] = kNone;
      col_label_[old] = kNone;
      --cols_;
    }
  }

  // False when the current prefix provably cannot beat best_.
  bool promising() const {
    if (best_.empty()) return true;
    for (std::size_t r = 0; r < m_; ++r) {
      if (sigma_[r] == kNone) return true;
      for (std::size_t c = 0; c < n_; ++c) {
        if (tau_[c] == kNone) return true;
        const Cell t = s_.f({sigma_[r], tau_[c]});
        const bool exact = row_label_[t.a] != kNone && col_label_[t.b] != kNone;
        const std::uint32_t mu = row_label_[t.a] != kNone ? row_label_[t.a] : static_cast<std::uint32_t>(rows_);
        const std::uint32_t nu = col_label_[t.b] != kNone ? col_label_[t.b] : static_cast<std::uint32_t>(cols_);
        const std::uint32_t v = static_cast<std::uint32_t>(mu * n_ + nu);
        const std::uint32_t b = best_[r * n_ + c];
        if (v > b) return false;
        if (v < b || !exact) return true;
      }
    }
    return true;
  }

  std::vector<std::uint32_t> encoding() const {
    std::vector<std::uint32_t> e(m_ * n_);
    for (std::size_t r = 0; r < m_; ++r)
      for (std::size_t c = 0; c < n_; ++c) {
        const Cell t = s_.f({sigma_[r], tau_[c]});
        e[r * n_ + c] = static_cast<std::uint32_t>(row_label_[t.a] * n_ + col_label_[t.b]);
      }
    return e;
  }

  // Orbit representatives of `side` points under stored automorphisms that
  // fix every decision made before depth d.
  std::vector<std::uint32_t> orbit_roots(std::size_t d) const {
    const bool rows = row_side(d);
    std::vector<std::uint32_t> parent(rows ? m_ : n_);
    std::iota(parent.begin(), parent.end(), 0u);
    auto find = [&](std::uint32_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& g : auts_) {
      bool fixes = true;
      for (std::size_t e = 0; e < d && fixes; ++e) {
        const auto& map = row_side(e) ? g.rows : g.cols;
        fixes = map[choice_[e]] == choice_[e];
      }
      if (!fixes) continue;
      const auto& map = rows ? g.rows : g.cols;
      for (std::uint32_t x = 0; x < map.size(); ++x) parent[find(x)] = find(map[x]);
    }
    for (std::uint32_t x = 0; x < parent.size(); ++x) parent[x] = find(x);
    return parent;
  }

  // Returns kNone normally, or the depth the search should resume at after
  // an automorphism made the current branch redundant.
  std::size_t search(std::size_t d) {
    if (d == total_) return leaf();
    const bool rows = row_side(d);
    const std::size_t count = rows ? m_ : n_;
    std::vector<std::uint32_t> explored_roots;
    for (std::uint32_t x = 0; x < count; ++x) {
      if ((rows ? row_label_[x] : col_label_[x]) != kNone) continue;
      if (!explored_roots.empty()) {
        const auto roots = orbit_roots(d);
        bool seen = false;
        for (auto r : explored_roots) seen = seen || roots[x] == roots[r];
        if (seen) continue;
      }
      assign(d, x);
      std::size_t back = kNone;
      if (promising()) back = search(d + 1);
      unassign(d);
      explored_roots.push_back(x);
      if (back != kNone && back < d) return back;
    }
    return kNone;
  }

  std::size_t leaf() {
    auto e = encoding();
    if (best_.empty() || e < best_) {
      best_ = std::move(e);
      best_choice_ = choice_;
      return kNone;
    }
    if (e != best_) return kNone;
    Automorphism g{std::vector<std::uint32_t>(m_), std::vector<std::uint32_t>(n_)};
    for (std::size_t d = 0; d < total_; ++d) (row_side(d) ? g.rows : g.cols)[choice_[d]] = best_choice_[d];
    auts_.push_back(std::move(g));
    std::size_t t = 0;
    while (t < total_ && choice_[t] == best_choice_[t]) ++t;
    return t;
  }

  const StructureSet& s_;
  std::size_t m_, n_, total_;
  std::vector<std::uint32_t> sigma_, tau_, row_label_, col_label_, choice_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::uint32_t> best_, best_choice_;
  std::vector<Automorphism> auts_;
};

}  // namespace

std::vector<std::uint32_t> canonical_encoding(const StructureSet& s, std::size_t guard) {
  if (s.m() * s.n() > guard)
    throw ResourceError("canonical form of (" + std::to_string(s.m()) + "," + std::to_string(s.n()) +
                        ") exceeds guard m*n <= " + std::to_string(guard));
  return Canonizer(s).run();
}

StructureSet canonical_form(const StructureSet& s, std::size_t guard) {
  return StructureSet(s.m(), s.n(), canonical_encoding(s, guard));
}

}  // namespace bmw
