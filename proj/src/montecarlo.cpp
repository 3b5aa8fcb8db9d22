#include "bmw/randmodel.hpp"

#include <cmath>
#include <thread>

namespace bmw {

std::string to_string(McKind k) {
  switch (k) {
    case McKind::OrbitShare: return "orbit_share";
    case McKind::ExpectedM: return "expected_M";
    case McKind::TripleMatchingRate: return "triple_matching_rate";
    case McKind::OverlapRate: return "overlap_rate";
    case McKind::CertificateRates: return "certificate_rates";
  }
  return "";
}

McKind parse_mc_kind(const std::string& s) {
  for (auto k : {McKind::OrbitShare, McKind::ExpectedM, McKind::TripleMatchingRate, McKind::OverlapRate,
                 McKind::CertificateRates})
    if (to_string(k) == s) return k;
  throw UsageError("unknown Monte Carlo kind '" + s + "'");
}

namespace {

const std::vector<std::string> kCertificateComponents{
    "a1", "a2", "a3", "irr2", "irr3", "irr4", "irr5", "a_local_sym_predicted", "irreducible_certified", "hji_certified"};

// Primary value first; certificate_rates appends one indicator per component.
std::vector<double> evaluate(McKind kind, const InvolutionTuple& t, const CertificateOptions& copts) {
  switch (kind) {
    case McKind::OrbitShare: return {shares_common_orbit(t[0], t[1]) ? 1.0 : 0.0};
    case McKind::ExpectedM: return {static_cast<double>(M_statistic(t))};
    case McKind::TripleMatchingRate: return {triple_matchings(t) ? 1.0 : 0.0};
    case McKind::OverlapRate: return {overlapping_matches(t) ? 1.0 : 0.0};
    case McKind::CertificateRates: {
      const auto r = irr_certificate(t, copts);
      const std::vector<double> parts{r.a1_no_triple_matchings ? 1.0 : 0.0,
                                      r.a2_no_overlapping_matches ? 1.0 : 0.0,
                                      r.a3_midpoint.value_or(false) ? 1.0 : 0.0,
                                      r.irr2_white_ball ? 1.0 : 0.0,
                                      r.irr3_connected ? 1.0 : 0.0,
                                      r.irr4_black_edge ? 1.0 : 0.0,
                                      r.irr5_two_transitive == Tribool::True ? 1.0 : 0.0,
                                      r.a_local_sym_predicted ? 1.0 : 0.0,
                                      r.irreducible_certified ? 1.0 : 0.0,
                                      r.hji_certified ? 1.0 : 0.0};
      std::vector<double> out{parts.back()};
      out.insert(out.end(), parts.begin(), parts.end());
      return out;
    }
  }
  return {0.0};
}

void fill_reference(McEstimate& e) {
  const double m = static_cast<double>(e.m), n = static_cast<double>(e.n);
  switch (e.kind) {
    case McKind::OrbitShare:
      e.reference = exact_orbit_share_prob(e.n).value;
      e.reference_label = "exact inclusion-exclusion probability";
      e.bound = 1.0 - std::exp(-0.5);
      e.bound_label = "limit 1 - e^(-1/2)";
      break;
    case McKind::ExpectedM:
      e.reference = m * (m - 1) / 2.0 * n / (2.0 * (n - 1.0));
      e.reference_label = "C(m,2) n / (2(n-1))";
      break;
    case McKind::TripleMatchingRate:
      e.bound = 4.0 * m * m * m / n;
      e.bound_label = "rate <= 4 m^3 / n";
      break;
    case McKind::OverlapRate:
      e.bound = 4.0 * m * m * m * m / n;
      e.bound_label = "rate <= 4 m^4 / n";
      break;
    case McKind::CertificateRates: break;
  }
}

}  // namespace

McEstimate monte_carlo(McKind kind, std::size_t m, std::size_t n, std::size_t trials, const McOptions& opts) {
  if (n == 0 || n % 2) throw DegreeError("monte_carlo: n must be even and positive");
  if (kind == McKind::OrbitShare) m = 2;
  if (m == 0) throw UsageError("monte_carlo: m must be positive");

  McEstimate e;
  e.kind = kind;
  e.m = m;
  e.n = n;
  e.seed = opts.seed;
  fill_reference(e);
  const std::size_t width = kind == McKind::CertificateRates ? 1 + kCertificateComponents.size() : 1;

  std::vector<double> sum(width, 0.0), sumsq(width, 0.0);
  std::size_t count = 0;

  if (trials == 0) {
    const BigInt size = boost::multiprecision::pow(count_fpf(n), static_cast<unsigned>(m));
    if (size > opts.enumeration_limit)
      throw ResourceError("enumeration of (F_" + std::to_string(n) + ")^" + std::to_string(m) + " has " + size.str() +
                          " tuples, above the limit " + std::to_string(opts.enumeration_limit));
    e.enumeration = true;
    const auto all = all_fpf(n);
    std::vector<std::size_t> idx(m, 0);
    Rational exact_sum = 0;
    for (;;) {
      std::vector<FpfInvolution> entries;
      for (auto x : idx) entries.push_back(all[x]);
      const auto v = evaluate(kind, InvolutionTuple(std::move(entries)), opts.certificate);
      for (std::size_t c = 0; c < width; ++c) sum[c] += v[c];
      exact_sum += Rational(static_cast<long long>(std::llround(v[0])));
      ++count;
      std::size_t p = 0;
      while (p < m && ++idx[p] == all.size()) idx[p++] = 0;
      if (p == m) break;
    }
    e.trials = count;
    e.exact_mean = exact_sum / count;
    e.mean = to_double(*e.exact_mean);
    e.std_error = 0.0;
  } else {
    std::vector<std::vector<double>> values(trials);
    auto work = [&](std::size_t begin, std::size_t end) {
      for (std::size_t t = begin; t < end; ++t) {
        Rng rng = Rng::for_task(opts.seed, t);
        values[t] = evaluate(kind, sample_tuple(m, n, rng), opts.certificate);
      }
    };
    const std::size_t threads = std::max<std::size_t>(1, std::min(opts.threads, trials));
    if (threads == 1) {
      work(0, trials);
    } else {
      std::vector<std::jthread> pool;
      for (std::size_t w = 0; w < threads; ++w) pool.emplace_back(work, trials * w / threads, trials * (w + 1) / threads);
    }
    for (const auto& v : values)
      for (std::size_t c = 0; c < width; ++c) {
        sum[c] += v[c];
        sumsq[c] += v[c] * v[c];
      }
    count = trials;
    e.trials = trials;
    e.mean = sum[0] / count;
    if (count > 1) {
      const double var = (sumsq[0] - count * e.mean * e.mean) / (count - 1);
      e.std_error = std::sqrt(std::max(var, 0.0) / count);
    }
  }
  if (kind == McKind::CertificateRates)
    for (std::size_t c = 0; c < kCertificateComponents.size(); ++c) e.components[kCertificateComponents[c]] = sum[c + 1] / count;
  return e;
}

}  // namespace bmw
