#include "bmw/json_io.hpp"

#include "bmw/errors.hpp"

#include <boost/multiprecision/cpp_dec_float.hpp>

#include <array>

namespace bmw {

double to_double(const Rational& v) {
  using Dec = boost::multiprecision::cpp_dec_float_50;
  const Dec num(boost::multiprecision::numerator(v));
  const Dec den(boost::multiprecision::denominator(v));
  return static_cast<double>(num / den);
}

namespace {

Json tribool_json(Tribool t) {
  if (t == Tribool::Unknown) return "unknown";
  return t == Tribool::True;
}

std::size_t require_positive(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer() || j.at(key).get<std::int64_t>() < 1)
    throw FormatError(std::string("field '") + key + "' must be a positive integer");
  return j.at(key).get<std::size_t>();
}

void check_schema(const Json& j, const char* expected) {
  if (!j.is_object()) throw FormatError("expected a JSON object");
  if (j.contains("schema") && j.at("schema") != expected)
    throw FormatError("schema is " + j.at("schema").dump() + ", expected \"" + expected + "\"");
}

}  // namespace

Json to_json(const InvolutionTuple& t) {
  Json j;
  j["schema"] = kTupleSchema;
  j["m"] = t.m();
  j["n"] = t.n();
  Json inv = Json::array();
  for (const auto& a : t.entries()) inv.push_back(a.permutation().one_based());
  j["involutions"] = std::move(inv);
  return j;
}

InvolutionTuple tuple_from_json(const Json& j) {
  check_schema(j, kTupleSchema);
  const std::size_t m = require_positive(j, "m");
  const std::size_t n = require_positive(j, "n");
  if (!j.contains("involutions") || !j.at("involutions").is_array()) throw FormatError("missing 'involutions' array");
  const auto& inv = j.at("involutions");
  if (inv.size() != m) throw FormatError("expected " + std::to_string(m) + " involutions, got " + std::to_string(inv.size()));
  std::vector<FpfInvolution> entries;
  for (const auto& row : inv) {
    if (!row.is_array() || row.size() != n) throw FormatError("each involution must list " + std::to_string(n) + " images");
    std::vector<std::int64_t> images;
    for (const auto& v : row) {
      if (!v.is_number_integer()) throw FormatError("images must be integers");
      images.push_back(v.get<std::int64_t>());
    }
    try {
      entries.emplace_back(Permutation::from_one_based(images));
    } catch (const Error& e) {
      throw FormatError(std::string("invalid involution: ") + e.what());
    }
  }
  return InvolutionTuple(std::move(entries));
}

Json to_json(const StructureSet& s) {
  Json j;
  j["schema"] = kStructureSetSchema;
  j["m"] = s.m();
  j["n"] = s.n();
  Json sq = Json::array();
  for (const auto& q : s.squares()) sq.push_back({q.i + 1, q.k + 1, q.j + 1, q.l + 1});
  j["squares"] = std::move(sq);
  return j;
}

Json to_json(const StructureSet& s, const std::vector<TaggedSquare>& families) {
  Json j = to_json(s);
  Json fam = Json::array();
  for (const auto& t : families)
    fam.push_back({{"family", t.family}, {"square", {t.square.i + 1, t.square.k + 1, t.square.j + 1, t.square.l + 1}}});
  j["families"] = std::move(fam);
  return j;
}

StructureSet structure_set_from_json(const Json& j) {
  check_schema(j, kStructureSetSchema);
  const std::size_t m = require_positive(j, "m");
  const std::size_t n = require_positive(j, "n");
  if (!j.contains("squares") || !j.at("squares").is_array()) throw FormatError("missing 'squares' array");
  std::vector<Square> squares;
  for (const auto& q : j.at("squares")) {
    if (!q.is_array() || q.size() != 4) throw FormatError("each square must be [i,k,j,l]");
    std::array<std::uint32_t, 4> v{};
    for (std::size_t t = 0; t < 4; ++t) {
      if (!q[t].is_number_integer() || q[t].get<std::int64_t>() < 1) throw FormatError("square indices must be positive integers");
      v[t] = static_cast<std::uint32_t>(q[t].get<std::int64_t>() - 1);
    }
    squares.push_back(Square::make(v[0], v[1], v[2], v[3]));
  }
  return validate(m, n, squares);
}

Json to_json(const GroupClassification& c) {
  Json j;
  j["degree"] = c.degree;
  j["transitive"] = tribool_json(c.transitive);
  j["two_transitive"] = tribool_json(c.two_transitive);
  j["primitive"] = tribool_json(c.primitive);
  j["contains_alternating"] = tribool_json(c.contains_alternating);
  j["equals_symmetric"] = tribool_json(c.equals_symmetric);
  j["order"] = c.order ? Json(c.order->str()) : Json(nullptr);
  j["method"] = to_string(c.method);
  if (c.certificate) {
    std::vector<std::size_t> cycle;
    for (auto x : c.certificate->cycle) cycle.push_back(x + 1);
    j["jordan_certificate"] = {{"prime", c.certificate->prime},
                               {"cycle", cycle},
                               {"word", c.certificate->word},
                               {"attempts", c.certificate->attempts}};
  } else {
    j["jordan_certificate"] = nullptr;
  }
  return j;
}

Json to_json(const CertificateReport& r) {
  Json j;
  j["schema"] = kReportSchema;
  j["m"] = r.m;
  j["n"] = r.n;
  j["radius"] = r.radius;

  Json c;
  c["a1_no_triple_matchings"] = r.a1_no_triple_matchings;
  c["a1_witness"] = r.a1_witness ? Json{{"k", r.a1_witness->k + 1},
                                        {"coordinates", {r.a1_witness->i + 1, r.a1_witness->j + 1, r.a1_witness->p + 1}}}
                                 : Json(nullptr);
  c["a2_no_overlapping_matches"] = r.a2_no_overlapping_matches;
  c["a2_witness"] = r.a2_witness ? Json{{"k", r.a2_witness->k + 1},
                                        {"pairs",
                                         {{r.a2_witness->first.first + 1, r.a2_witness->first.second + 1},
                                          {r.a2_witness->second.first + 1, r.a2_witness->second.second + 1}}}}
                                 : Json(nullptr);
  c["a3_midpoint"] = r.a3_midpoint ? Json(*r.a3_midpoint) : Json(nullptr);
  c["a3_failing"] = r.a3_failing ? Json{r.a3_failing->first + 1, r.a3_failing->second + 1} : Json(nullptr);
  c["irr1_no_triple_matchings"] = r.a1_no_triple_matchings;
  c["irr2_white_ball"] = r.irr2_white_ball ? Json(*r.irr2_white_ball + 1) : Json(nullptr);
  c["irr3_connected"] = r.irr3_connected;
  c["irr4_black_edge"] = r.irr4_black_edge;
  c["irr5_two_transitive"] = tribool_json(r.irr5_two_transitive);
  j["certificates"] = std::move(c);

  j["a_local"] = r.a_local ? to_json(*r.a_local) : Json(nullptr);
  j["b_local"] = to_json(r.b_local);
  j["match_graph"] = {{"black_edges", r.black_edges}, {"white_edges", r.white_edges}, {"m_statistic", r.m_statistic}};
  j["thresholds"] = {{"n_exceeds_m5", r.n_exceeds_m5},
                     {"n_exceeds_m8", r.n_exceeds_m8},
                     {"n_in_caprace_exceptional_set", r.n_in_caprace_exceptional_set}};
  j["conclusions"] = {{"a_local_sym_predicted", r.a_local_sym_predicted},
                      {"irreducible_certified", r.irreducible_certified},
                      {"hji_certified", r.hji_certified}};
  j["conclusion_basis"] = {
      {"a_local_sym_predicted", "A1-A3 criterion for full A-side local action"},
      {"irreducible_certified", "Irr1-Irr5 criterion via Trofimov-Weiss non-discreteness"},
      {"hji_certified", "Burger-Mozes hereditary just-infiniteness, hypotheses only"}};
  return j;
}

Json to_json(const McEstimate& e) {
  Json j;
  j["schema"] = kEstimateSchema;
  j["kind"] = to_string(e.kind);
  j["m"] = e.m;
  j["n"] = e.n;
  j["trials"] = e.trials;
  j["seed"] = e.seed;
  j["mode"] = e.enumeration ? "enumeration" : "sampling";
  j["estimate"] = e.mean;
  j["std_error"] = e.std_error;
  j["exact"] = e.exact_mean ? Json(to_string(*e.exact_mean)) : Json(nullptr);
  j["reference"] = e.reference ? Json(*e.reference) : Json(nullptr);
  j["reference_label"] = e.reference_label;
  j["bound"] = e.bound ? Json(*e.bound) : Json(nullptr);
  j["bound_label"] = e.bound_label;
  Json comp = Json::object();
  for (const auto& [k, v] : e.components) comp[k] = v;
  j["components"] = std::move(comp);
  return j;
}

Json to_json(const RaduVerification& v) {
  Json j;
  j["schema"] = kRaduSchema;
  j["valid"] = v.valid;
  j["region_audit"] = v.region_audit;
  j["a_local"] = to_json(v.a_local);
  j["b_local"] = to_json(v.b_local);
  j["a_local_symmetric"] = v.a_local_symmetric;
  j["b_local_symmetric"] = v.b_local_symmetric;
  j["alpha_m_minus_1_transposition"] = v.alpha_m_minus_1_transposition;
  j["alpha_5_matches_alpha_prime"] = v.alpha_5_matches_alpha_prime;
  j["alpha_prime_generate"] = v.alpha_prime_generate;
  j["beta_prime_generate"] = v.beta_prime_generate;
  std::vector<std::size_t> cyc(v.schreier.odd_cycle.begin(), v.schreier.odd_cycle.end());
  j["schreier"] = {{"connected", v.schreier.connected},
                   {"not_bipartite", v.schreier.not_bipartite},
                   {"loop_free_bipartite", v.schreier.loop_free_bipartite},
                   {"odd_cycle", cyc}};
  j["all_passed"] = v.all_passed;
  return j;
}

}  // namespace bmw
