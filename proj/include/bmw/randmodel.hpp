#pragma once

#include "bmw/bigint.hpp"
#include "bmw/errors.hpp"
#include "bmw/perm.hpp"
#include "bmw/permgroup.hpp"
#include "bmw/structure.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bmw {

/// alpha = (alpha_1, ..., alpha_m), each in F_n.
class InvolutionTuple {
 public:
  /// Throws DegreeError if entries is empty or the degrees differ.
  explicit InvolutionTuple(std::vector<FpfInvolution> entries);

  std::size_t m() const { return entries_.size(); }
  std::size_t n() const { return entries_.front().degree(); }
  const FpfInvolution& operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<FpfInvolution>& entries() const { return entries_; }

  bool operator==(const InvolutionTuple&) const = default;

 private:
  std::vector<FpfInvolution> entries_;
};

/// Throws DegreeError if n is odd or zero.
InvolutionTuple sample_tuple(std::size_t m, std::size_t n, Rng& rng);

/// alpha_i(k) = alpha_j(k) = alpha_p(k) with i < j < p; 0-based.
struct TripleWitness {
  std::size_t k, i, j, p;
  bool operator==(const TripleWitness&) const = default;
};

/// Two distinct coordinate pairs agreeing at the same point k; 0-based.
struct OverlapWitness {
  std::size_t k;
  std::pair<std::size_t, std::size_t> first;
  std::pair<std::size_t, std::size_t> second;
  bool operator==(const OverlapWitness&) const = default;
};

class TripleMatchingError : public Error {
 public:
  explicit TripleMatchingError(const TripleWitness& w)
      : Error("TripleMatchingError(k=" + std::to_string(w.k + 1) + ", " + std::to_string(w.i + 1) + "," +
              std::to_string(w.j + 1) + "," + std::to_string(w.p + 1) + ")"),
        witness_(w) {}

  const TripleWitness& witness() const { return witness_; }

 private:
  TripleWitness witness_;
};

std::optional<TripleWitness> triple_matchings(const InvolutionTuple& t);
std::optional<OverlapWitness> overlapping_matches(const InvolutionTuple& t);

struct MidpointResult {
  bool holds = true;
  std::optional<std::pair<std::size_t, std::size_t>> failing;  // first (i, i') with no midpoint; 0-based
};

/// For every i != i' some j outside {i, i'} shares an orbit with both.
/// Throws ArityError when m < 3.
MidpointResult midpoint_property(const InvolutionTuple& t);

/// S_alpha: for k < l, I_{k,l} = {i : alpha_i(k) = l} gives the square
/// {a_i, b_k, a_j, b_l} (j = i when |I_{k,l}| = 1).
/// Throws TripleMatchingError.
StructureSet structure_set_from_tuple(const InvolutionTuple& t);

struct MatchEdge {
  Point u, v;  // u < v
  std::size_t multiplicity;
  bool black() const { return multiplicity >= 2; }
  bool operator==(const MatchEdge&) const = default;
};

struct MatchGraph {
  std::size_t n = 0;
  std::vector<MatchEdge> edges;  // sorted by (u, v)

  std::size_t black_count() const;
  bool connected() const;
};

MatchGraph match_graph(const InvolutionTuple& t);

/// sum over i < j of |P_{alpha_i} ∩ P_{alpha_j}|.
std::size_t M_statistic(const InvolutionTuple& t);

/// First vertex whose closed ball of the given radius spans only white edges.
std::optional<Point> white_ball_center(const MatchGraph& g, std::size_t radius);

struct CertificateOptions {
  std::size_t radius = 6;
  ClassifyOptions a_side;
  ClassifyOptions b_side;
};

struct CertificateReport {
  std::size_t m = 0, n = 0, radius = 6;

  bool a1_no_triple_matchings = false;
  std::optional<TripleWitness> a1_witness;
  bool a2_no_overlapping_matches = false;
  std::optional<OverlapWitness> a2_witness;
  std::optional<bool> a3_midpoint;  // absent when m < 3
  std::optional<std::pair<std::size_t, std::size_t>> a3_failing;

  std::optional<Point> irr2_white_ball;
  bool irr3_connected = false;
  bool irr4_black_edge = false;
  Tribool irr5_two_transitive = Tribool::Unknown;

  std::optional<GroupClassification> a_local;  // absent without a structure set
  GroupClassification b_local;

  std::size_t m_statistic = 0;
  std::size_t black_edges = 0;
  std::size_t white_edges = 0;

  bool n_exceeds_m5 = false;
  bool n_exceeds_m8 = false;
  bool n_in_caprace_exceptional_set = false;

  bool a_local_sym_predicted = false;
  bool irreducible_certified = false;
  bool hji_certified = false;
};

CertificateReport irr_certificate(const InvolutionTuple& t, const CertificateOptions& opts = {});

struct OrbitShareProbability {
  Rational exact;
  double value;
};

/// Throws DegreeError for odd or zero n.
OrbitShareProbability exact_orbit_share_prob(std::size_t n);

struct CapraceSet {
  std::vector<BigInt> integers;       // sorted, duplicates collapsed
  std::vector<Rational> non_integers; // values of the list that are not integers
};

/// Throws RangeError for m < 2.
CapraceSet caprace_exceptional_set(std::size_t m);

enum class McKind { OrbitShare, ExpectedM, TripleMatchingRate, OverlapRate, CertificateRates };

std::string to_string(McKind k);
/// Throws UsageError on an unknown name.
McKind parse_mc_kind(const std::string& s);

struct McOptions {
  std::uint64_t seed = 1;
  std::size_t threads = 1;
  /// Largest |F_n|^m accepted by enumeration mode (trials == 0).
  std::uint64_t enumeration_limit = 1000000;
  CertificateOptions certificate;
};

struct McEstimate {
  McKind kind = McKind::OrbitShare;
  std::size_t m = 0, n = 0, trials = 0;
  std::uint64_t seed = 0;
  bool enumeration = false;
  double mean = 0.0;
  double std_error = 0.0;
  std::optional<Rational> exact_mean;  // enumeration mode
  std::optional<double> reference;     // closed-form value when one exists
  std::string reference_label;
  std::optional<double> bound;         // the probability bound evaluated at (m, n)
  std::string bound_label;
  std::map<std::string, double> components;  // certificate_rates only
};

/// Per-trial streams are Rng::for_task(seed, trial), so the estimate does not
/// depend on the thread count. trials == 0 enumerates (F_n)^m exactly and
/// throws ResourceError when that exceeds the enumeration limit.
McEstimate monte_carlo(McKind kind, std::size_t m, std::size_t n, std::size_t trials, const McOptions& opts = {});

}  // namespace bmw
