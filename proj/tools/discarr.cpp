// discarr: enumerate r-sets, construct and verify non-very generic
// arrangements, emit example fixtures and plots.
//
// Exit codes: 0 success, 1 verify found no certificate (or certification of a
// construction failed), 2 input error, 3 retry budget exhausted.

#include "discarr/discarr.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using namespace discarr;

namespace {

constexpr int kExitNegative = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

std::size_t default_budget() {
  if (const char* env = std::getenv("DISCARR_RETRY_BUDGET")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end == env || *end != '\0' || v == 0)
      throw InputError(std::string("DISCARR_RETRY_BUDGET must be a positive integer, got '") + env + "'");
    return v;
  }
  return 64;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-")
    std::cout << text;
  else
    write_file(path, text);
}

// Accepts either a bare object or a report/bundle that embeds it.
Json load_part(const std::string& path, const char* key) {
  Json j = parse_json(read_file(path));
  if (j.is_object() && j.contains(key)) return j.at(key);
  return j;
}

std::vector<int> parse_dims(const std::string& text) {
  std::vector<int> dims;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      dims.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InputError("--dims expects comma-separated integers, got '" + text + "'");
    }
  }
  return dims;
}

std::string tuple_string(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

struct EnumerateArgs {
  int r = 0, k = 0;
  bool no_dedupe = false;
};

int cmd_enumerate(const EnumerateArgs& a) {
  const auto profiles = enumerate_nonintersecting(a.r, a.k, !a.no_dedupe);
  std::cout << "profiles: " << profiles.size() << "\n";
  for (const auto& p : profiles) std::cout << tuple_string(p.tuple()) << "\n";
  return 0;
}

struct ConstructArgs {
  std::string type;
  int r = 0;
  std::optional<int> k, s, d;
  std::uint64_t seed = 1;
  std::int64_t box = 100;
  std::optional<std::size_t> budget;
  std::string dims;
  std::string reading = "all";
  std::size_t profile = 0;
  std::string out;
};

int cmd_construct(const ConstructArgs& a) {
  SamplingOptions opt;
  opt.box = a.box;
  opt.budget = a.budget.value_or(default_budget());
  if (opt.box < 1) throw InputError("--box must be positive");
  if (a.reading == "all")
    opt.reading = PairReading::all_pair_subsets;
  else if (a.reading == "pairs2")
    opt.reading = PairReading::at_most_two_pairs;
  else
    throw InputError("--reading must be 'all' or 'pairs2'");

  RSet t;
  FamilyMode mode;
  if (a.type == "nonint") {
    if (!a.k) throw InputError("construct --type nonint needs --k");
    if (a.s) throw InputError("--s applies only to --type goodrs");
    mode = FamilyMode::nonint;
    const auto profiles = enumerate_nonintersecting(a.r, *a.k, true);
    if (profiles.empty())
      throw InputError("no non-intersecting r-set exists for r=" + std::to_string(a.r) + ", k=" + std::to_string(*a.k));
    if (a.profile >= profiles.size())
      throw InputError("--profile out of range (" + std::to_string(profiles.size()) + " profiles)");
    t = materialize(profiles[a.profile]);
  } else if (a.type == "goodrs") {
    if (!a.s) throw InputError("construct --type goodrs needs --s");
    if (a.r < 3) throw InputError("good rs-partitions need r >= 3");
    if (*a.s < a.r - 1) throw InputError("good rs-partitions need s >= r-1");
    mode = FamilyMode::goodrs;
    t = good_rs_partition(a.r, *a.s);
    if (a.k && *a.k != t.k) throw InputError("--k must equal (r-1)s-1 = " + std::to_string(t.k) + " for goodrs");
  } else {
    throw InputError("--type must be 'nonint' or 'goodrs'");
  }

  const int d = a.d.value_or(required_family_count(mode, t));
  std::optional<std::vector<int>> dims;
  if (!a.dims.empty()) dims = parse_dims(a.dims);
  Sampler seeds(a.seed);
  const std::uint64_t family_seed = seeds.fork(), alpha_seed = seeds.fork();
  const FamilySample fs = sample_family(mode, t, d, dims, family_seed, opt);
  SynthesisReport rep = synthesize_arrangement(fs.family, t, alpha_seed, opt);
  Json j = to_json(rep);
  j["seed"] = a.seed;
  j["family_sampling"] = {{"seed", family_seed}, {"strategy", fs.strategy}, {"attempts", fs.attempts}};
  j["alpha_sampling"] = {{"seed", alpha_seed}, {"attempts", rep.attempts}};
  j["options"] = {{"box", opt.box}, {"budget", opt.budget}, {"reading", a.reading}};
  emit(a.out, dump(j));
  std::cerr << "rank=" << rep.verdict.stratum_rank << " multiplicity=" << rep.verdict.multiplicity
            << " NON-VERY-GENERIC\n";
  return 0;
}

struct VerifyArgs {
  std::string arrangement, rset;
  bool transcript = false;
};

int cmd_verify(const VerifyArgs& a) {
  const Arrangement arr = arrangement_from_json(load_part(a.arrangement, "arrangement"));
  const RSet t = rset_from_json(load_part(a.rset, "rset"));
  if (!is_generic(arr)) throw NonGenericError("arrangement is not generic");
  const Verdict v = verdict(arr, t);
  if (a.transcript)
    for (const auto& line : v.transcript) std::cout << line << "\n";
  std::cout << "rank=" << v.stratum_rank << " multiplicity=" << v.multiplicity
            << " r_simple=" << (v.r_simple ? "yes" : "no") << " "
            << (v.non_very_generic ? "NON-VERY-GENERIC" : "very generic w.r.t. this r-set") << "\n";
  return v.non_very_generic ? 0 : kExitNegative;
}

struct ExampleArgs {
  std::string name, out_dir;
};

int cmd_example(const ExampleArgs& a) {
  const Fixture f = fixture(a.name);
  Json bundle = {{"name", f.name},
                 {"arrangement", to_json(f.arrangement)},
                 {"rset", to_json(f.rset)},
                 {"expected", to_json(f.expected)}};
  if (f.translation) bundle["translation"] = to_json(*f.translation);
  if (a.out_dir.empty()) {
    std::cout << dump(bundle);
    return 0;
  }
  fs::create_directories(a.out_dir);
  const fs::path dir(a.out_dir);
  write_file((dir / (f.name + ".arrangement.json")).string(), dump(bundle["arrangement"]));
  write_file((dir / (f.name + ".rset.json")).string(), dump(bundle["rset"]));
  write_file((dir / (f.name + ".expected.json")).string(), dump(bundle["expected"]));
  if (f.translation) write_file((dir / (f.name + ".translation.json")).string(), dump(bundle["translation"]));
  return 0;
}

struct PlotArgs {
  std::string arrangement, translation, out;
};

int cmd_plot(const PlotArgs& a) {
  Arrangement arr = arrangement_from_json(load_part(a.arrangement, "arrangement"));
  if (arr.k() != 2) throw InputError("plot: only k = 2 arrangements can be drawn");
  if (!a.translation.empty()) arr = translate(arr, translation_from_json(load_part(a.translation, "translation")));
  emit(a.out, render_svg(arr));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Non-very generic hyperplane arrangements via discriminantal strata"};
  app.require_subcommand(1);

  EnumerateArgs ea;
  auto* enumerate = app.add_subcommand("enumerate", "List pair-intersection profiles of non-intersecting r-sets");
  enumerate->add_option("--r", ea.r, "number of members")->required();
  enumerate->add_option("--k", ea.k, "dimension")->required();
  enumerate->add_flag("--no-dedupe", ea.no_dedupe, "keep profiles that differ only by relabeling");

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "Build and certify a non-very generic arrangement");
  construct->add_option("--type", ca.type, "nonint or goodrs")->required();
  construct->add_option("--r", ca.r, "number of members")->required();
  construct->add_option("--k", ca.k, "dimension (nonint)");
  construct->add_option("--s", ca.s, "block size (goodrs)");
  construct->add_option("--d", ca.d, "number of vector sets (default: the lower bound)");
  construct->add_option("--seed", ca.seed, "random seed");
  construct->add_option("--box", ca.box, "integer sampling box");
  construct->add_option("--budget", ca.budget, "retries per stage (default: DISCARR_RETRY_BUDGET or 64)");
  construct->add_option("--dims", ca.dims, "target d_{1,i}, i=2..r, comma separated");
  construct->add_option("--reading", ca.reading, "pair-collection reading for nonint: all or pairs2");
  construct->add_option("--profile", ca.profile, "index into the enumerated profiles (nonint)");
  construct->add_option("--out", ca.out, "report path (default: stdout)");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run the discriminantal verdict on an arrangement and r-set");
  verify->add_option("--arrangement", va.arrangement, "arrangement JSON")->required();
  verify->add_option("--rset", va.rset, "r-set JSON")->required();
  verify->add_flag("--transcript", va.transcript, "print the full verdict transcript");

  ExampleArgs xa;
  auto* example = app.add_subcommand("example", "Emit a bundled fixture");
  example->add_option("name", xa.name, "crapo, b10_3, b12_8 or falk_3s2")->required();
  example->add_option("--out-dir", xa.out_dir, "write separate JSON files here instead of stdout");

  PlotArgs pa;
  auto* plot = app.add_subcommand("plot", "Draw a line arrangement (k = 2) as SVG");
  plot->add_option("--arrangement", pa.arrangement, "arrangement JSON")->required();
  plot->add_option("--translation", pa.translation, "translation JSON applied before drawing");
  plot->add_option("--out", pa.out, "SVG path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*enumerate) return cmd_enumerate(ea);
    if (*construct) return cmd_construct(ca);
    if (*verify) return cmd_verify(va);
    if (*example) return cmd_example(xa);
    if (*plot) return cmd_plot(pa);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const NonGenericError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const BudgetExhausted& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const VerdictFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNegative;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
