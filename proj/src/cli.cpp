#include "bmw/cli.hpp"

#include "bmw/errors.hpp"
#include "bmw/json_io.hpp"
#include "bmw/radu.hpp"
#include "bmw/randmodel.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace bmw::cli {

namespace {

std::size_t env_or(const char* name, std::size_t fallback) {
  if (const char* v = std::getenv(name)) {
    try {
      return static_cast<std::size_t>(std::stoull(v));
    } catch (const std::exception&) {
      throw UsageError(std::string("environment variable ") + name + " is not a number");
    }
  }
  return fallback;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(path + ": " + e.what());
  }
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw UsageError("cannot write " + path);
  f << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

struct Options {
  std::size_t m = 0, n = 0, count = 1, trials = 0, threads = 1, radius = 6;
  std::uint64_t seed = 1;
  std::optional<std::uint64_t> filler_seed;
  std::string input, output, kind, strategy = "exact", census_format = "json", present_format = "text";
  bool up_to_relabeling = false, verify = false, delta = false;
};

int cmd_sample(const Options& o, std::ostream& out, std::ostream& err) {
  err << "seed: " << o.seed << "\n";
  if (o.count == 1) {
    Rng rng = Rng::for_task(o.seed, 0);
    emit(dump(to_json(sample_tuple(o.m, o.n, rng))), o.output, out);
    return kOk;
  }
  Json arr = Json::array();
  for (std::size_t c = 0; c < o.count; ++c) {
    Rng rng = Rng::for_task(o.seed, c);
    arr.push_back(to_json(sample_tuple(o.m, o.n, rng)));
  }
  emit(dump(arr), o.output, out);
  return kOk;
}

int cmd_analyze(const Options& o, std::ostream& out) {
  const InvolutionTuple t = tuple_from_json(read_json_file(o.input));
  CertificateOptions copts;
  copts.radius = o.radius;
  copts.b_side.strategy = parse_alt_strategy(o.strategy);
  copts.b_side.exact_degree_limit = env_or("BMW_ORDER_GUARD", copts.b_side.exact_degree_limit);
  const CertificateReport r = irr_certificate(t, copts);
  emit(dump(to_json(r)), o.output, out);
  return r.hji_certified ? kOk : kNotCertified;
}

int cmd_census(const Options& o, std::ostream& out) {
  const std::size_t guard = env_or("BMW_CENSUS_GUARD", kDefaultCensusGuard);
  const std::uint64_t total = enumerate_structure_sets(o.m, o.n, {}, guard);
  std::optional<std::uint64_t> classes;
  if (o.up_to_relabeling) classes = count_up_to_relabeling(o.m, o.n, guard);
  const BigInt mn = o.m * o.n;
  const BigInt bound = boost::multiprecision::pow(mn, static_cast<unsigned>(o.m * o.n));
  if (o.census_format == "text") {
    std::ostringstream os;
    os << "structure_sets " << total << "\n";
    if (classes) os << "up_to_relabeling " << *classes << "\n";
    emit(os.str(), o.output, out);
    return kOk;
  }
  Json j;
  j["schema"] = kCensusSchema;
  j["m"] = o.m;
  j["n"] = o.n;
  j["structure_sets"] = total;
  j["up_to_relabeling"] = classes ? Json(*classes) : Json(nullptr);
  j["upper_bound"] = bound.str();
  j["within_bound"] = BigInt(total) <= bound;
  emit(dump(j), o.output, out);
  return kOk;
}

int cmd_s0(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.m < kS0MinM || o.n < kS0MinN) throw UsageError("s0 needs --m >= 13 and --n >= 14");
  std::vector<Permutation> filler;
  if (o.filler_seed) {
    err << "filler seed: " << *o.filler_seed << "\n";
    Rng rng(*o.filler_seed);
    filler = random_filler(o.m, o.n, rng);
  }
  const StructureSet s = radu_extension(o.m, o.n, filler);
  const Json doc = to_json(s, s0_blueprint(o.m, o.n));
  if (!o.verify) {
    emit(dump(doc), o.output, out);
    return kOk;
  }
  if (!o.output.empty()) emit(dump(doc), o.output, out);
  const RaduVerification v = verify_radu(s);
  Json j = to_json(v);
  j["m"] = o.m;
  j["n"] = o.n;
  j["filler_seed"] = o.filler_seed ? Json(*o.filler_seed) : Json(nullptr);
  out << dump(j);
  return v.all_passed ? kOk : kNotCertified;
}

int cmd_mc(const Options& o, std::ostream& out, std::ostream& err) {
  err << "seed: " << o.seed << "\n";
  McOptions mopts;
  mopts.seed = o.seed;
  mopts.threads = o.threads;
  mopts.enumeration_limit = env_or("BMW_ENUMERATION_LIMIT", mopts.enumeration_limit);
  mopts.certificate.radius = o.radius;
  const McEstimate e = monte_carlo(parse_mc_kind(o.kind), o.m, o.n, o.trials, mopts);
  emit(dump(to_json(e)), o.output, out);
  return kOk;
}

int cmd_present(const Options& o, std::ostream& out) {
  if (o.delta == !o.input.empty()) throw UsageError("present needs exactly one of --input or --delta");
  const StructureSet s = o.delta ? delta() : structure_set_from_json(read_json_file(o.input));
  std::string text = presentation_text(s);
  if (o.present_format == "json") {
    const auto p = presentation(s);
    const auto c = complex_summary(s);
    Json j;
    j["schema"] = "bmw.presentation.v1";
    j["generators"] = p.generators;
    j["relators"] = p.relators;
    j["complex"] = {{"vertices", c.vertices},
                    {"horizontal_edges", c.horizontal_edges},
                    {"vertical_edges", c.vertical_edges},
                    {"squares", c.squares},
                    {"total_pair_cover", c.total_pair_cover}};
    text = dump(j);
  }
  emit(text, o.output, out);
  return kOk;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Structure sets, random involutive BMW groups and their certificates"};
  app.require_subcommand(1);
  Options o;

  auto* sample = app.add_subcommand("sample", "Sample a tuple of fixed-point-free involutions");
  sample->add_option("--m", o.m, "number of involutions")->required()->check(CLI::PositiveNumber);
  sample->add_option("--n", o.n, "degree (even)")->required()->check(CLI::PositiveNumber);
  sample->add_option("--seed", o.seed, "RNG seed");
  sample->add_option("--count", o.count, "number of tuples; more than one emits a JSON array")->check(CLI::PositiveNumber);
  sample->add_option("--output,-o", o.output, "output path (default stdout)");

  auto* analyze = app.add_subcommand("analyze", "Certificate report for a tuple file");
  analyze->add_option("--input,-i", o.input, "tuple JSON")->required();
  analyze->add_option("--radius", o.radius, "ball radius for the white-ball condition");
  analyze->add_option("--strategy", o.strategy, "B-side Alt recognition: exact or jordan");
  analyze->add_option("--output,-o", o.output, "output path (default stdout)");

  auto* census = app.add_subcommand("census", "Count (m,n)-structure sets");
  census->add_option("--m", o.m)->required()->check(CLI::PositiveNumber);
  census->add_option("--n", o.n)->required()->check(CLI::PositiveNumber);
  census->add_flag("--up-to-relabeling", o.up_to_relabeling, "also count relabeling classes");
  census->add_option("--format", o.census_format, "json or text")->check(CLI::IsMember({"json", "text"}));
  census->add_option("--output,-o", o.output);

  auto* s0cmd = app.add_subcommand("s0", "Extend S_0 to a structure set");
  s0cmd->add_option("--m", o.m)->required();
  s0cmd->add_option("--n", o.n)->required();
  s0cmd->add_option("--filler-seed", o.filler_seed, "fill the free block with random involutions");
  s0cmd->add_flag("--verify", o.verify, "check validity, local actions and the Schreier-graph claim");
  s0cmd->add_option("--output,-o", o.output, "structure-set output path");

  auto* mc = app.add_subcommand("mc", "Monte Carlo or exact enumeration estimates");
  mc->add_option("--kind", o.kind, "orbit_share | expected_M | triple_matching_rate | overlap_rate | certificate_rates")
      ->required();
  mc->add_option("--m", o.m)->default_val(2);
  mc->add_option("--n", o.n)->required()->check(CLI::PositiveNumber);
  mc->add_option("--trials", o.trials, "0 selects exhaustive enumeration")->default_val(100000);
  mc->add_option("--seed", o.seed);
  mc->add_option("--threads", o.threads)->check(CLI::PositiveNumber);
  mc->add_option("--radius", o.radius);
  mc->add_option("--output,-o", o.output);

  auto* present = app.add_subcommand("present", "Group presentation of a structure set");
  present->add_option("--input,-i", o.input, "structure-set JSON");
  present->add_flag("--delta", o.delta, "use the built-in (4,5) set");
  present->add_option("--format", o.present_format, "text or json")->check(CLI::IsMember({"json", "text"}));
  present->add_option("--output,-o", o.output);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*sample) return cmd_sample(o, out, err);
    if (*analyze) return cmd_analyze(o, out);
    if (*census) return cmd_census(o, out);
    if (*s0cmd) return cmd_s0(o, out, err);
    if (*mc) return cmd_mc(o, out, err);
    if (*present) return cmd_present(o, out);
  } catch (const ResourceError& e) {
    err << "resource guard: " << e.what() << "\n";
    return kResource;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace bmw::cli
