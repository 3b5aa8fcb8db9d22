#include "bmw/perm.hpp"

#include "bmw/errors.hpp"

#include <algorithm>
#include <numeric>

namespace bmw {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x]) throw RangeError("images do not form a bijection");
    seen[x] = 1;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Point> im(degree);
  std::iota(im.begin(), im.end(), Point{0});
  Permutation p;
  p.images_ = std::move(im);
  return p;
}

Permutation Permutation::from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> im(degree);
  std::iota(im.begin(), im.end(), Point{0});
  std::vector<char> used(degree, 0);
  for (const auto& c : cycles) {
    for (Point x : c) {
      if (x < 1 || x > degree) throw RangeError("cycle point " + std::to_string(x) + " out of range");
      if (used[x - 1]) throw RangeError("point " + std::to_string(x) + " repeated in cycles");
      used[x - 1] = 1;
    }
    for (std::size_t t = 0; t < c.size(); ++t) im[c[t] - 1] = c[(t + 1) % c.size()] - 1;
  }
  return Permutation(std::move(im));
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     std::initializer_list<std::initializer_list<Point>> cycles) {
  std::vector<std::vector<Point>> cs;
  for (auto c : cycles) cs.emplace_back(c);
  return from_cycles(degree, cs);
}

Permutation Permutation::from_one_based(std::span<const std::int64_t> images) {
  std::vector<Point> im;
  im.reserve(images.size());
  for (auto v : images) {
    if (v < 1 || static_cast<std::size_t>(v) > images.size()) throw RangeError("image out of range");
    im.push_back(static_cast<Point>(v - 1));
  }
  return Permutation(std::move(im));
}

std::vector<std::int64_t> Permutation::one_based() const {
  std::vector<std::int64_t> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out[i] = images_[i] + 1;
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<Point>(i);
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (rhs.degree() != degree()) throw DegreeError("product of permutations of different degree");
  std::vector<Point> im(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) im[i] = rhs.images_[images_[i]];
  Permutation p;
  p.images_ = std::move(im);
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

bool Permutation::is_involution() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[images_[i]] != i) return false;
  return true;
}

bool Permutation::is_even() const {
  std::size_t transpositions = 0;
  for (auto len : cycle_lengths()) transpositions += len - 1;
  return transpositions % 2 == 0;
}

std::size_t Permutation::fixed_point_count() const {
  std::size_t c = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) c += images_[i] == i;
  return c;
}

std::vector<std::vector<Point>> Permutation::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<char> seen(images_.size(), 0);
  for (Point s = 0; s < images_.size(); ++s) {
    if (seen[s] || images_[s] == s) continue;
    std::vector<Point> c;
    for (Point x = s; !seen[x]; x = images_[x]) {
      seen[x] = 1;
      c.push_back(x);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<std::size_t> Permutation::cycle_lengths() const {
  std::vector<std::size_t> out;
  for (const auto& c : cycles()) out.push_back(c.size());
  return out;
}

BigInt Permutation::order() const {
  BigInt r = 1;
  for (auto len : cycle_lengths()) {
    BigInt l = len;
    r = r / boost::multiprecision::gcd(r, l) * l;
  }
  return r;
}

std::string Permutation::to_cycle_string() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::string s;
  for (const auto& c : cs) {
    s += '(';
    for (std::size_t t = 0; t < c.size(); ++t) {
      if (t) s += ' ';
      s += std::to_string(c[t] + 1);
    }
    s += ')';
  }
  return s;
}

FpfInvolution::FpfInvolution(Permutation p) : perm_(std::move(p)) {
  if (perm_.degree() == 0 || perm_.degree() % 2) throw DegreeError("fixed-point-free involution needs even positive degree");
  if (!perm_.is_involution()) throw RangeError("not an involution: " + perm_.to_cycle_string());
  if (perm_.fixed_point_count()) throw RangeError("involution has fixed points: " + perm_.to_cycle_string());
}

std::uint64_t Rng::mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t Rng::next() {
  state_ += 0x9E3779B97F4A7C15ULL;
  return mix64(state_);
}

Rng Rng::for_task(std::uint64_t seed, std::uint64_t task) {
  return Rng(mix64(seed ^ mix64(task ^ 0xD1B54A32D192ED03ULL)));
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw RangeError("Rng::below(0)");
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    std::uint64_t x = next();
    if (x >= threshold) return x % bound;
  }
}

double Rng::uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

FpfInvolution random_fpf(std::size_t n, Rng& rng) {
  if (n == 0 || n % 2) throw DegreeError("random_fpf: n must be even and positive, got " + std::to_string(n));
  // Unmatched points kept in a swap-remove pool; pos[x] locates x in it.
  std::vector<Point> pool(n), pos(n), im(n);
  std::iota(pool.begin(), pool.end(), Point{0});
  std::iota(pos.begin(), pos.end(), Point{0});
  std::vector<char> matched(n, 0);
  auto remove = [&](Point x) {
    Point last = pool.back();
    pool[pos[x]] = last;
    pos[last] = pos[x];
    pool.pop_back();
  };
  for (Point i = 0; i < n; ++i) {
    if (matched[i]) continue;
    remove(i);
    Point j = pool[rng.below(pool.size())];
    remove(j);
    matched[i] = matched[j] = 1;
    im[i] = j;
    im[j] = i;
  }
  return FpfInvolution(Permutation(std::move(im)));
}

Permutation random_involution(std::size_t n, Rng& rng) {
  // P(smallest remaining point fixed) = I(r-1)/I(r) where r points remain.
  std::vector<double> ratio(n + 1, 1.0);
  for (std::size_t r = 2; r <= n; ++r) ratio[r] = 1.0 / (1.0 + static_cast<double>(r - 1) * ratio[r - 1]);
  std::vector<Point> pool(n), pos(n), im(n);
  std::iota(pool.begin(), pool.end(), Point{0});
  std::iota(pos.begin(), pos.end(), Point{0});
  std::iota(im.begin(), im.end(), Point{0});
  std::vector<char> done(n, 0);
  auto remove = [&](Point x) {
    Point last = pool.back();
    pool[pos[x]] = last;
    pos[last] = pos[x];
    pool.pop_back();
  };
  for (Point i = 0; i < n; ++i) {
    if (done[i]) continue;
    const std::size_t r = pool.size();
    remove(i);
    done[i] = 1;
    if (rng.uniform01() < ratio[r]) continue;
    Point j = pool[rng.below(pool.size())];
    remove(j);
    done[j] = 1;
    im[i] = j;
    im[j] = i;
  }
  return Permutation(std::move(im));
}

BigInt count_fpf(std::size_t n) {
  if (n == 0 || n % 2) throw DegreeError("count_fpf: n must be even and positive, got " + std::to_string(n));
  return double_factorial(static_cast<std::int64_t>(n) - 1);
}

BigInt count_involutions(std::size_t n) {
  BigInt a = 1, b = 1;  // I(k-2), I(k-1)
  for (std::size_t k = 2; k <= n; ++k) {
    BigInt c = b + BigInt(k - 1) * a;
    a = b;
    b = c;
  }
  return b;
}

namespace {
void all_fpf_rec(std::vector<Point>& im, std::vector<FpfInvolution>& out) {
  const std::size_t n = im.size();
  Point i = 0;
  while (i < n && im[i] != n) ++i;
  if (i == n) {
    out.emplace_back(Permutation(im));
    return;
  }
  for (Point j = i + 1; j < n; ++j) {
    if (im[j] != n) continue;
    im[i] = j;
    im[j] = i;
    all_fpf_rec(im, out);
    im[i] = im[j] = static_cast<Point>(n);
  }
}
}  // namespace

std::vector<FpfInvolution> all_fpf(std::size_t n) {
  if (n == 0 || n % 2) throw DegreeError("all_fpf: n must be even and positive");
  std::vector<Point> im(n, static_cast<Point>(n));
  std::vector<FpfInvolution> out;
  all_fpf_rec(im, out);
  return out;
}

Pairing pairing(const FpfInvolution& alpha) {
  Pairing p;
  for (Point i = 0; i < alpha.degree(); ++i)
    if (i < alpha(i)) p.pairs.emplace_back(i, alpha(i));
  return p;
}

std::size_t shared_orbit_count(const FpfInvolution& a, const FpfInvolution& b) {
  if (a.degree() != b.degree()) throw DegreeError("shared_orbit_count: degree mismatch");
  std::size_t c = 0;
  for (Point i = 0; i < a.degree(); ++i) c += i < a(i) && a(i) == b(i);
  return c;
}

bool shares_common_orbit(const FpfInvolution& a, const FpfInvolution& b) {
  if (a.degree() != b.degree()) throw DegreeError("shares_common_orbit: degree mismatch");
  for (Point i = 0; i < a.degree(); ++i)
    if (a(i) == b(i)) return true;
  return false;
}

}  // namespace bmw
