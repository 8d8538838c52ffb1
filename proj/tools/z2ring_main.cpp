// z2ring: command-line front end.
//
// Exit codes: 0 success (or "equivalent"), 1 not equivalent / verification
// failure, 2 budget refusal, 3 parse or validation error.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "z2ring/classify.hpp"
#include "z2ring/cohomology.hpp"
#include "z2ring/equivalence.hpp"
#include "z2ring/errors.hpp"
#include "z2ring/profile_io.hpp"
#include "z2ring/result_cache.hpp"
#include "z2ring/verify.hpp"

namespace {

using nlohmann::json;
using namespace z2ring;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitBudget = 2;
constexpr int kExitInput = 3;

constexpr const char* kCacheEnv = "Z2RING_CACHE_DIR";

struct Common {
  std::string format = "json";
  std::string out;
  bool deterministic = false;
  std::string cache_dir;
  std::size_t jobs = 1;
};

void add_output_options(CLI::App* cmd, Common& c, std::vector<std::string> formats) {
  cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember(std::move(formats)));
  cmd->add_option("--out", c.out, "Write output to this file instead of stdout");
}

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    std::cout.flush();
  } else {
    write_file_atomic(c.out, text);
  }
}

// ---------------------------------------------------------------------------
// classify

struct ClassifyArgs {
  std::vector<std::size_t> r;
  std::size_t budget = 6;
  bool force = false;
};

std::string classification_text(const json& doc) {
  std::ostringstream os;
  os << "r = " << doc.at("r").get<std::size_t>() << ": " << doc.at("count").get<std::size_t>() << " classes ("
     << doc.at("double_cosets").get<std::size_t>() << " double cosets of O(r))";
  if (doc.contains("published_count")) os << ", table value " << doc.at("published_count").get<std::size_t>();
  if (doc.contains("published_lower_bound")) {
    os << ", published lower bound " << doc.at("published_lower_bound").get<std::size_t>();
  }
  os << '\n';
  std::size_t k = 0;
  for (const auto& cls : doc.at("classes")) {
    os << "  class " << k++ << ": dim X = " << cls.at("dim_X").get<std::size_t>() << ", blocks";
    for (const auto& b : cls.at("blocks")) os << ' ' << b.get<std::size_t>();
    os << (cls.at("irreducible").get<bool>() ? ", irreducible" : "") << '\n';
    for (const auto& row : cls.at("canonical")) os << "    " << row.get<std::string>() << '\n';
  }
  return os.str();
}

json classify_one(std::size_t r, const ClassifyArgs& args, const Common& common) {
  std::optional<ResultCache> cache;
  std::string dir = common.cache_dir;
  if (dir.empty()) {
    if (const char* env = std::getenv(kCacheEnv)) dir = env;
  }
  if (!dir.empty()) cache.emplace(dir);
  const std::string key = classification_cache_key(r);
  if (cache) {
    if (auto hit = cache->load(key)) {
      try {
        return json::parse(*hit);
      } catch (const json::exception&) {
        std::cerr << "warning: ignoring unreadable cache entry " << cache->entry_path(key) << '\n';
      }
    }
  }
  ClassifyOptions opt;
  opt.budget = args.budget;
  opt.force = args.force;
  opt.jobs = common.deterministic ? 1 : common.jobs;
  const json doc = classification_to_json(classify_M(r, opt));
  if (cache) cache->store(key, doc.dump(2) + "\n");
  return doc;
}

int run_classify(const ClassifyArgs& args, const Common& common) {
  if (args.budget == 0) throw InvalidArgument("--budget must be positive");
  if (common.jobs == 0) throw InvalidArgument("--jobs must be positive");
  // Refuse before doing any work if any requested r is over budget.
  for (auto r : args.r) {
    if (r == 0) throw InvalidArgument("--r must be positive");
    if (r > kOrthogonalHardLimit) {
      throw BudgetExceeded("r = " + std::to_string(r) + " is past the hard limit of " +
                           std::to_string(kOrthogonalHardLimit));
    }
    if (r > args.budget && !args.force) {
      throw BudgetExceeded("r = " + std::to_string(r) + " exceeds the budget of " + std::to_string(args.budget) +
                           " (raise --budget or pass --force)");
    }
  }
  std::vector<json> docs;
  for (auto r : args.r) docs.push_back(classify_one(r, args, common));

  std::string text;
  if (common.format == "json") {
    const json out = docs.size() == 1 ? docs.front() : json(docs);
    text = out.dump(2) + "\n";
  } else if (common.format == "csv") {
    std::ostringstream os;
    os << "r,count,double_cosets,published_count,published_lower_bound\n";
    for (const auto& d : docs) {
      os << d.at("r").get<std::size_t>() << ',' << d.at("count").get<std::size_t>() << ','
         << d.at("double_cosets").get<std::size_t>() << ','
         << (d.contains("published_count") ? std::to_string(d.at("published_count").get<std::size_t>()) : "")
         << ','
         << (d.contains("published_lower_bound") ? std::to_string(d.at("published_lower_bound").get<std::size_t>())
                                                 : "")
         << '\n';
    }
    text = os.str();
  } else {
    for (const auto& d : docs) text += classification_text(d);
  }
  emit(common, text);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// isomorphic

CohomProfile load_valid_profile(const std::string& path) {
  CohomProfile p = load_profile(path);
  const auto violations = validate_profile(p);
  if (!violations.empty()) {
    std::ostringstream os;
    os << path << ": invalid profile";
    for (const auto& v : violations) os << "\n  " << clause_name(v.clause) << ": " << v.detail;
    throw InvalidArgument(os.str());
  }
  return p;
}

int run_isomorphic(const std::string& path_a, const std::string& path_b, const Common& common) {
  const CohomProfile p = load_valid_profile(path_a);
  const CohomProfile q = load_valid_profile(path_b);
  const FlagResult result = flag_equivalent(p, q);
  if (common.format == "json") {
    emit(common, witness_to_json(result).dump(2) + "\n");
  } else {
    std::string text = result.equivalent ? "equivalent, witness " + result.witness->to_string() + "\n"
                                         : "not equivalent: " + result.invariant_mismatch.value_or("") + "\n";
    emit(common, text);
  }
  return result.equivalent ? kExitOk : kExitNegative;
}

// ---------------------------------------------------------------------------
// generate

struct GenerateArgs {
  std::string family;
  std::optional<std::size_t> l;
  std::optional<std::size_t> s;
  std::optional<std::size_t> t;
  std::optional<std::size_t> r;
};

std::size_t need(const std::optional<std::size_t>& v, const char* flag, const std::string& family) {
  if (!v) throw InvalidArgument(std::string("family ") + family + " needs " + flag);
  return *v;
}

int run_generate(const GenerateArgs& args, const Common& common) {
  Gf2Matrix m;
  bool member_checked = false;
  if (args.family == "A") {
    m = gen_A(need(args.l, "--l", args.family));
  } else if (args.family == "B") {
    m = gen_B(need(args.l, "--l", args.family)).matrix();
    member_checked = true;
  } else if (args.family == "C") {
    m = gen_C(need(args.s, "--s", args.family), need(args.t, "--t", args.family)).matrix();
    member_checked = true;
  } else {
    m = stacked_identity(need(args.r, "--r", args.family)).matrix();
    member_checked = true;
  }
  // The family constructors already refuse non-members; this is the final gate.
  if (member_checked && !is_isotropic_matrix(m)) throw Error("generated matrix is not a member of M_r");

  if (common.format == "json") {
    json doc = {{"family", args.family}, {"rows", m.to_strings()}, {"shape", {m.rows(), m.cols()}}};
    if (member_checked) doc["member_of_M_r"] = true;
    emit(common, doc.dump(2) + "\n");
  } else {
    std::ostringstream os;
    write_matrix(os, m);
    emit(common, os.str());
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// verify

int run_verify(const std::string& suite, const VerifyOptions& opt, const Common& common) {
  const VerifyReport report = run_suite(suite, opt);
  emit(common, common.format == "json" ? report_to_json(report).dump(2) + "\n" : report_to_text(report));
  return report.all_passed() ? kExitOk : kExitNegative;
}

// ---------------------------------------------------------------------------
// profile

int run_profile(std::optional<std::size_t> r, const std::string& check, const Common& common) {
  if (!check.empty()) {
    const CohomProfile p = load_profile(check);
    const auto violations = validate_profile(p);
    json doc = {{"valid", violations.empty()}, {"violations", json::array()}};
    for (const auto& v : violations) doc["violations"].push_back({{"clause", clause_name(v.clause)}, {"detail", v.detail}});
    if (violations.empty()) {
      const auto closed = largest_closed_index(p);
      doc["ring_dimensions"] = ring_dimensions(p, 2 * p.n);
      doc["largest_closed_index"] = {{"index", closed.index}, {"dim", closed.dim}};
    }
    emit(common, doc.dump(2) + "\n");
    return violations.empty() ? kExitOk : kExitInput;
  }
  if (!r || *r == 0) throw InvalidArgument("profile needs --r (positive) or --check FILE");
  emit(common, profile_to_json(standard_profile_n2(*r)).dump(2) + "\n");
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hadamard-product ring models: isomorphism tests and orbit classification"};
  app.require_subcommand(1);
  Common common;

  auto* classify = app.add_subcommand("classify", "Classify S_2r\\M_r/GL(r,2) orbits");
  ClassifyArgs cargs;
  classify->add_option("--r", cargs.r, "Value(s) of r, comma separated")->required()->delimiter(',');
  classify->add_option("--budget", cargs.budget, "Largest r computed without --force")->capture_default_str();
  classify->add_flag("--force", cargs.force, "Ignore the budget (the hard limit still applies)");
  classify->add_option("--jobs", common.jobs, "Worker threads for canonicalization")->capture_default_str();
  classify->add_flag("--deterministic", common.deterministic, "Single-threaded run");
  classify->add_option("--cache-dir", common.cache_dir, std::string("Result cache directory (env ") + kCacheEnv + ")");
  add_output_options(classify, common, {"json", "csv", "text"});

  auto* iso = app.add_subcommand("isomorphic", "Decide whether two profiles give isomorphic rings");
  std::string path_a;
  std::string path_b;
  iso->add_option("profile_a", path_a, "First profile (JSON)")->required();
  iso->add_option("profile_b", path_b, "Second profile (JSON)")->required();
  iso->add_flag("--deterministic", common.deterministic, "Accepted for uniformity; the search is sequential");
  add_output_options(iso, common, {"json", "text"});

  auto* gen = app.add_subcommand("generate", "Write a matrix from one of the A, B, C families or (I;I)");
  GenerateArgs gargs;
  gen->add_option("--family", gargs.family, "Matrix family")
      ->required()
      ->check(CLI::IsMember({"A", "B", "C", "stacked-identity"}));
  gen->add_option("--l", gargs.l, "Parameter l for A(l), B(l)");
  gen->add_option("--s", gargs.s, "Parameter s for C(s,t)");
  gen->add_option("--t", gargs.t, "Parameter t for C(s,t)");
  gen->add_option("--r", gargs.r, "Parameter r for (I_r;I_r)");
  add_output_options(gen, common, {"text", "json"});
  common.format = "json";

  auto* ver = app.add_subcommand("verify", "Run a self-check suite");
  std::string suite = "all";
  VerifyOptions vopt;
  ver->add_option("--suite", suite, "Suite to run")->check(CLI::IsMember(suite_names()))->capture_default_str();
  ver->add_option("--seed", vopt.seed, "Seed for randomized checks")->capture_default_str();
  ver->add_option("--samples", vopt.samples, "Random instances per randomized check")->capture_default_str();
  ver->add_flag("--deterministic", common.deterministic, "Accepted for uniformity; suites are sequential");
  add_output_options(ver, common, {"text", "json"});

  auto* prof = app.add_subcommand("profile", "Emit the n = 2 profile for r, or validate a profile file");
  std::optional<std::size_t> prof_r;
  std::string check;
  prof->add_option("--r", prof_r, "r for the standard n = 2 profile");
  prof->add_option("--check", check, "Profile file to validate");
  add_output_options(prof, common, {"json"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  // Per-subcommand format defaults when --format was not given.
  if (gen->parsed() && gen->count("--format") == 0) common.format = "text";
  if (ver->parsed() && ver->count("--format") == 0) common.format = "text";

  try {
    if (classify->parsed()) return run_classify(cargs, common);
    if (iso->parsed()) return run_isomorphic(path_a, path_b, common);
    if (gen->parsed()) return run_generate(gargs, common);
    if (ver->parsed()) return run_verify(suite, vopt, common);
    if (prof->parsed()) return run_profile(prof_r, check, common);
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kExitBudget;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitInput;
  } catch (const InvalidArgument& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kExitInput;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
