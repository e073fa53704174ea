// fembed: command-line front end. JSON goes to stdout, summaries to stderr.
// Exit codes: 0 answered, 1 violation found, 2 usage or input error.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <sstream>

#include "finembed/density.hpp"
#include "finembed/embed.hpp"
#include "finembed/error.hpp"
#include "finembed/io.hpp"
#include "finembed/prsearch.hpp"
#include "finembed/rich.hpp"
#include "finembed/verify.hpp"

using namespace finembed;
using io::json;

namespace {

constexpr int kAnswered = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

template <typename T>
std::vector<T> split_list(const std::string& text, const std::string& flag) {
  std::vector<T> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(item, &used);
      if (used != item.size() || v < 0) throw std::invalid_argument(item);
      out.push_back(static_cast<T>(v));
    } catch (const std::exception&) {
      throw Error(ErrorCode::kMalformedInput, flag + ": '" + item + "' is not a non-negative integer");
    }
  }
  if (out.empty()) throw Error(ErrorCode::kMalformedInput, flag + ": empty list");
  return out;
}

void emit(const json& payload) { std::cout << payload.dump(2) << "\n"; }

struct EmbedArgs {
  std::string set_a, set_b, family;
  std::string probes;
  std::int64_t bound = -1;
  std::size_t random_subsets = 0;
  std::uint64_t seed = 0;
};

int run_embed(const EmbedArgs& args) {
  const auto A = io::parse_set(io::read_json_file(args.set_a), args.set_a);
  const auto B = io::parse_set(io::read_json_file(args.set_b), args.set_b, A.window_ptr());
  auto family = io::parse_family(io::read_json_file(args.family), A.window_ptr(), args.family);
  if (args.bound >= 0) {
    auto e = family.enumeration();
    e.bound = args.bound;
    family = family.with_enumeration(e);
  }
  if (!args.probes.empty()) {
    const auto sizes = split_list<std::size_t>(args.probes, "--probes");
    ProbeOptions options;
    options.random_subsets = args.random_subsets;
    options.seed = args.seed;
    const auto results = fe_probe(A, B, family, sizes, options);
    const auto payload = io::to_json(results, family);
    std::cerr << "embed: " << payload["relation"].get<std::string>() << " over " << results.size() << " probes\n";
    emit(payload);
    return kAnswered;
  }
  if (!A.is_explicit()) {
    throw Error(ErrorCode::kANotExplicit, "--set-a is a predicate set; pass --probes to test finite prefixes");
  }
  const auto verdict = fe_decide(A, B, family);
  std::cerr << "embed: " << outcome_name(verdict.outcome) << " (" << family.name() << ")\n";
  emit(io::to_json(verdict, family));
  return kAnswered;
}

struct RichArgs {
  std::string set, detect, family, probes = "2,4,8", lengths = "1,2,4,8", exponents = "1", coefficients = "all";
  int degree = -1;
  std::int64_t gap = 2;
};

int run_rich(const RichArgs& args) {
  const auto A = io::parse_set(io::read_json_file(args.set), args.set);
  json payload;
  if (args.detect == "ap") {
    payload = io::to_json(longest_ap(A));
  } else if (args.detect == "gap") {
    payload = io::to_json(longest_gap_grid(A));
  } else if (args.detect == "gap0") {
    payload = io::to_json(longest_gap_grid(A, GridIndexing::kZeroBased));
  } else if (args.detect == "poly") {
    auto exponents = split_list<int>(args.exponents, "--D");
    int degree = args.degree;
    if (degree < 0) degree = *std::max_element(exponents.begin(), exponents.end());
    const auto coeff_window = additive_window(static_cast<std::uint64_t>(std::max<std::int64_t>(A.window().max_value(), 1)));
    const auto S = GroundSet::from_predicate(coeff_window, Predicate::parse(args.coefficients));
    payload = io::to_json(longest_poly_progression(A, degree, S, exponents));
  } else if (args.detect == "thick") {
    const auto lengths = split_list<std::size_t>(args.lengths, "--lengths");
    payload = io::to_json(is_thick_window(A, lengths), A.window());
  } else if (args.detect == "ps") {
    const auto spans = split_list<std::size_t>(args.lengths, "--lengths");
    payload = io::to_json(is_piecewise_syndetic_window(A, args.gap, spans));
  } else if (args.detect == "maxset") {
    if (args.family.empty()) throw Error(ErrorCode::kMalformedInput, "--family is required for --detect maxset");
    const auto family = io::parse_family(io::read_json_file(args.family), A.window_ptr(), args.family);
    const auto sizes = split_list<std::size_t>(args.probes, "--probes");
    payload = io::to_json(maximality_probe(A, family, sizes), family);
  } else {
    throw Error(ErrorCode::kMalformedInput, "--detect: unknown detector '" + args.detect + "'");
  }
  std::cerr << "rich: " << args.detect << " done\n";
  emit(payload);
  return kAnswered;
}

struct DensityArgs {
  std::string set, net = "interval:100";
  std::optional<std::size_t> tail;
  std::string pairs, family, tol = "0.02";
};

int run_density(const DensityArgs& args) {
  if (args.set.empty()) throw Error(ErrorCode::kMalformedInput, "--set is required");
  const auto A = io::parse_set(io::read_json_file(args.set), args.set);
  const auto net = parse_net(args.net);
  const auto report = upper_density(A, net, args.tail);
  std::cerr << "density: " << report.value.to_string() << " at tail " << report.tail_start << "\n";
  auto payload = io::to_json(report, A.window());
  payload["net"] = net.label();
  emit(payload);
  return kAnswered;
}

int run_density_monotone(const DensityArgs& args) {
  const auto doc = io::read_json_file(args.pairs);
  WindowPtr shared;
  if (doc.contains("window")) shared = io::parse_window(doc["window"], args.pairs + ".window");
  if (!doc.contains("pairs") || !doc["pairs"].is_array()) {
    throw Error(ErrorCode::kMalformedInput, args.pairs + ".pairs: expected an array");
  }
  std::vector<DensityPair> pairs;
  for (std::size_t i = 0; i < doc["pairs"].size(); ++i) {
    const auto& p = doc["pairs"][i];
    const std::string where = args.pairs + ".pairs[" + std::to_string(i) + "]";
    if (!p.is_object() || !p.contains("a") || !p.contains("b")) {
      throw Error(ErrorCode::kMalformedInput, where + ": expected {\"a\", \"b\"}");
    }
    auto a = io::parse_set(p["a"], where + ".a", shared);
    auto b = io::parse_set(p["b"], where + ".b", a.window_ptr());
    std::vector<std::size_t> probes;
    if (p.contains("probes")) {
      if (!p["probes"].is_array()) throw Error(ErrorCode::kMalformedInput, where + ".probes: expected an array");
      for (const auto& x : p["probes"]) {
        if (!x.is_number_unsigned()) throw Error(ErrorCode::kMalformedInput, where + ".probes: expected sizes");
        probes.push_back(x.get<std::size_t>());
      }
    }
    pairs.push_back({std::move(a), std::move(b), std::move(probes)});
  }
  if (pairs.empty()) throw Error(ErrorCode::kMalformedInput, args.pairs + ".pairs: empty");
  const auto family = io::parse_family(io::read_json_file(args.family), pairs.front().a.window_ptr(), args.family);
  const std::string net_text = doc.contains("net") && doc["net"].is_string() ? doc["net"].get<std::string>() : args.net;
  const auto net = parse_net(net_text);
  const auto report = check_density_monotonicity(pairs, family, net, Rational::parse(args.tol));
  std::cerr << "density verify-monotone: " << report.pairs.size() - report.violations << "/" << report.pairs.size()
            << " pairs hold (b = " << report.b << ")\n";
  auto payload = io::to_json(report);
  payload["net"] = net.label();
  emit(payload);
  return report.violations == 0 ? kAnswered : kViolation;
}

struct PrArgs {
  std::string pattern, poly, set, values, order = "asc", mode = "exhaustive";
  std::size_t colors = 2;
  std::int64_t n = 0, nmax = 0;
  std::uint64_t node_limit = 0;
  bool distinct = false, strict = false;
};

SearchOptions search_options(const PrArgs& args) {
  SearchOptions options;
  if (args.order == "desc") {
    options.order = VariableOrder::kDescending;
  } else if (args.order != "asc") {
    throw Error(ErrorCode::kMalformedInput, "--order: expected asc or desc");
  }
  options.node_limit = args.node_limit;
  return options;
}

int run_pr_search(const PrArgs& args) {
  const auto cert = find_avoiding_coloring(args.n, args.colors, Pattern::parse(args.pattern), search_options(args));
  std::cerr << "pr search: " << coloring_outcome_name(cert.outcome) << " after " << cert.nodes << " nodes\n";
  emit(io::to_json(cert));
  return kAnswered;
}

int run_pr_threshold(const PrArgs& args) {
  const auto result = ramsey_threshold(Pattern::parse(args.pattern), args.colors, args.nmax, search_options(args));
  if (result.threshold) {
    std::cerr << "pr threshold: " << *result.threshold << "\n";
  } else {
    std::cerr << "pr threshold: unknown up to " << args.nmax << "\n";
  }
  emit(io::to_json(result));
  return kAnswered;
}

int run_pr_equation(const PrArgs& args) {
  const auto report = homogeneous_pr_check(Polynomial::parse(args.poly), args.colors, args.n, args.distinct,
                                           args.strict, search_options(args));
  std::cerr << "pr equation: " << (report.homogeneous ? "homogeneous" : "not homogeneous") << ", "
            << coloring_outcome_name(report.certificate.outcome) << "\n";
  emit(io::to_json(report));
  return kAnswered;
}

GroundSet explicit_input(const PrArgs& args) {
  if (!args.set.empty()) return io::parse_set(io::read_json_file(args.set), args.set);
  if (args.values.empty()) throw Error(ErrorCode::kMalformedInput, "pass --set or --values");
  const auto values = split_list<std::int64_t>(args.values, "--values");
  const auto top = *std::max_element(values.begin(), values.end());
  return GroundSet::from_values(additive_window(static_cast<std::uint64_t>(std::max<std::int64_t>(top, 1))), values);
}

int run_pr_strong(const PrArgs& args) {
  StrongMode mode = StrongMode::kExhaustive;
  if (args.mode == "backtracking") {
    mode = StrongMode::kBacktracking;
  } else if (args.mode != "exhaustive") {
    throw Error(ErrorCode::kMalformedInput, "--mode: expected exhaustive or backtracking");
  }
  const auto cert = strong_pr_probe(explicit_input(args), Pattern::parse(args.pattern), args.colors, mode);
  std::cerr << "pr strong: " << coloring_outcome_name(cert.outcome) << "\n";
  emit(io::to_json(cert));
  return kAnswered;
}

int run_pr_solutions(const PrArgs& args) {
  const auto p = Polynomial::parse(args.poly);
  const auto solutions = ps_solutions_experiment(p, explicit_input(args), args.n, args.distinct);
  std::cerr << "pr solutions: " << solutions.size() << "\n";
  emit(json{{"polynomial", p.to_string()}, {"N", args.n}, {"count", solutions.size()}, {"solutions", solutions}});
  return kAnswered;
}

struct VerifyArgs {
  std::string suite = "all";
  std::uint64_t seed = 0;
  std::string budget;
  bool timing = false;
};

int run_verify_command(const VerifyArgs& args) {
  std::string budget_text = args.budget;
  if (budget_text.empty()) {
    const char* env = std::getenv("FE_BUDGET");
    budget_text = env && *env ? env : "small";
  }
  const auto budget = parse_budget(budget_text);
  const std::string command =
      "verify --suite " + args.suite + " --seed " + std::to_string(args.seed) + " --budget " + budget_text;
  json results = json::array();
  bool passed = true;
  const auto names = args.suite == "all" ? suite_names() : std::vector<std::string>{args.suite};
  for (const auto& name : names) {
    const auto start = std::chrono::steady_clock::now();
    const auto outcome = run_suite(name, args.seed, budget);
    const auto seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cerr << "verify " << name << ": " << (outcome.passed() ? "pass" : "FAIL") << " (" << outcome.checks
              << " checks)";
    if (args.timing) std::cerr << " " << seconds << " s";
    std::cerr << "\n";
    passed = passed && outcome.passed();
    results.push_back(to_json(outcome));
  }
  emit(json{{"command", command},
            {"suite", args.suite},
            {"seed", args.seed},
            {"budget", budget_text},
            {"inputs_digest", io::fnv1a_hex(command)},
            {"results", results},
            {"status", passed ? "pass" : "fail"}});
  return passed ? kAnswered : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite embeddability, richness, density and partition-regularity tools.\n"
               "A <=_F B means: every finite F ⊆ A has some f in the family with f(F^n) ⊆ B."};
  app.require_subcommand(1);
  std::function<int()> action;

  EmbedArgs embed;
  auto* embed_cmd = app.add_subcommand("embed", "Decide or probe A <=_F B");
  embed_cmd->add_option("--set-a", embed.set_a, "JSON set A")->required();
  embed_cmd->add_option("--set-b", embed.set_b, "JSON set B")->required();
  embed_cmd->add_option("--family", embed.family, "JSON family")->required();
  embed_cmd->add_option("--probes", embed.probes, "Prefix sizes of A to test, e.g. 3,5,8");
  embed_cmd->add_option("--bound", embed.bound, "Bounded-scan parameter cap");
  embed_cmd->add_option("--random-subsets", embed.random_subsets, "Extra seeded random subsets per probe");
  embed_cmd->add_option("--seed", embed.seed, "Seed for random subsets");
  embed_cmd->callback([&] { action = [&] { return run_embed(embed); }; });

  RichArgs rich;
  auto* rich_cmd = app.add_subcommand("rich", "Detect progressions and richness in a set");
  rich_cmd->add_option("--set", rich.set, "JSON set")->required();
  rich_cmd->add_option("--detect", rich.detect, "ap|gap|gap0|poly|thick|ps|maxset")->required();
  rich_cmd->add_option("--d", rich.degree, "Polynomial degree");
  rich_cmd->add_option("--D", rich.exponents, "Exponent set, e.g. 0,2");
  rich_cmd->add_option("--S", rich.coefficients, "Coefficient predicate");
  rich_cmd->add_option("--g", rich.gap, "Gap bound for ps");
  rich_cmd->add_option("--lengths", rich.lengths, "Probe lengths for thick and ps");
  rich_cmd->add_option("--family", rich.family, "JSON family for maxset");
  rich_cmd->add_option("--probes", rich.probes, "Probe sizes for maxset");
  rich_cmd->callback([&] { action = [&] { return run_rich(rich); }; });

  DensityArgs density;
  auto* density_cmd = app.add_subcommand("density", "Upper density over a net");
  density_cmd->add_option("--set", density.set, "JSON set");
  density_cmd->add_option("--net", density.net, "Net, interval:N");
  density_cmd->add_option("--tail", density.tail, "Tail start m");
  density_cmd->require_subcommand(0, 1);
  auto* mono_cmd = density_cmd->add_subcommand("verify-monotone", "Check (1/b) d*(A) <= d*(B) + tol");
  mono_cmd->add_option("--pairs", density.pairs, "JSON pairs file")->required();
  mono_cmd->add_option("--family", density.family, "JSON family")->required();
  mono_cmd->add_option("--tol", density.tol, "Tolerance, e.g. 0.02");
  mono_cmd->add_option("--net", density.net, "Net, interval:N");
  density_cmd->callback([&] {
    if (mono_cmd->parsed()) {
      action = [&] { return run_density_monotone(density); };
    } else {
      action = [&] { return run_density(density); };
    }
  });

  PrArgs pr;
  auto* pr_cmd = app.add_subcommand("pr", "Partition-regularity searches");
  pr_cmd->require_subcommand(1);
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--colors", pr.colors, "Number of colours");
    cmd->add_option("--order", pr.order, "Variable order: asc or desc");
    cmd->add_option("--node-limit", pr.node_limit, "Search node budget (0 = none)");
  };
  auto* search_cmd = pr_cmd->add_subcommand("search", "Find a pattern-avoiding colouring of [1..N]");
  search_cmd->add_option("--pattern", pr.pattern, "ap:L, schur, gap-grid:n[:strict], poly:L:D[:S], eq:P")->required();
  search_cmd->add_option("--n", pr.n, "N")->required();
  add_common(search_cmd);
  search_cmd->callback([&] { action = [&] { return run_pr_search(pr); }; });
  auto* threshold_cmd = pr_cmd->add_subcommand("threshold", "Least N whose colourings are all forced");
  threshold_cmd->add_option("--pattern", pr.pattern, "Pattern")->required();
  threshold_cmd->add_option("--nmax", pr.nmax, "Largest N to try")->required();
  add_common(threshold_cmd);
  threshold_cmd->callback([&] { action = [&] { return run_pr_threshold(pr); }; });
  auto* equation_cmd = pr_cmd->add_subcommand("equation", "Homogeneity check and colouring search for P = 0");
  equation_cmd->add_option("--poly", pr.poly, "Polynomial in x, y, z, w")->required();
  equation_cmd->add_option("--n", pr.n, "N")->required();
  equation_cmd->add_flag("--distinct", pr.distinct, "Require pairwise distinct entries");
  equation_cmd->add_flag("--strict-homogeneous", pr.strict, "Reject non-homogeneous P");
  add_common(equation_cmd);
  equation_cmd->callback([&] { action = [&] { return run_pr_equation(pr); }; });
  auto* strong_cmd = pr_cmd->add_subcommand("strong", "Strong PR probe on an explicit set");
  strong_cmd->add_option("--pattern", pr.pattern, "Pattern")->required();
  strong_cmd->add_option("--set", pr.set, "JSON explicit set");
  strong_cmd->add_option("--values", pr.values, "Comma-separated members");
  strong_cmd->add_option("--mode", pr.mode, "exhaustive or backtracking");
  add_common(strong_cmd);
  strong_cmd->callback([&] { action = [&] { return run_pr_strong(pr); }; });
  auto* solutions_cmd = pr_cmd->add_subcommand("solutions", "Solutions of P = 0 inside a set");
  solutions_cmd->add_option("--poly", pr.poly, "Polynomial")->required();
  solutions_cmd->add_option("--n", pr.n, "N")->required();
  solutions_cmd->add_option("--set", pr.set, "JSON set");
  solutions_cmd->add_option("--values", pr.values, "Comma-separated members");
  solutions_cmd->add_flag("--distinct", pr.distinct, "Require pairwise distinct entries");
  solutions_cmd->callback([&] { action = [&] { return run_pr_solutions(pr); }; });

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run property suites");
  verify_cmd->add_option("--suite", verify.suite,
                         "listona|preorder|maxset|density-mono|strong-pr|upward-closed|all");
  verify_cmd->add_option("--seed", verify.seed, "Seed");
  verify_cmd->add_option("--budget", verify.budget, "tiny|small|medium|large (default: $FE_BUDGET or small)");
  verify_cmd->add_flag("--timing", verify.timing, "Print per-suite timing to stderr");
  verify_cmd->callback([&] { action = [&] { return run_verify_command(verify); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  try {
    return action();
  } catch (const Error& e) {
    std::cerr << "fembed: " << e.what() << "\n";
    return kUsage;
  } catch (const json::exception& e) {
    std::cerr << "fembed: malformed-input: " << e.what() << "\n";
    return kUsage;
  }
}
