#include "detcap/cli.hpp"

#include <chrono>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "detcap/errors.hpp"
#include "detcap/mdfs.hpp"
#include "detcap/network_io.hpp"
#include "detcap/oracle.hpp"
#include "detcap/report.hpp"
#include "detcap/scheme.hpp"

namespace detcap {

namespace {

// Thrown for anything that should end in exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw UsageError("cannot write " + path);
}

LayeredNetwork load_network(const std::string& path) {
  LayeredNetwork net;
  try {
    net = parse_network(read_file(path));
  } catch (const ParseError& e) {
    throw UsageError(path + ": " + e.what());
  }
  const auto problems = validate(net);
  if (!problems.empty()) {
    std::string msg = path + ": invalid network";
    for (const auto& p : problems) msg += "\n  " + p;
    throw UsageError(msg);
  }
  return net;
}

double elapsed_ms(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - since)
      .count();
}

std::string paths_text(const PathSet& paths) {
  std::string s;
  for (const auto& p : paths.paths) s += "  " + to_string(p) + "\n";
  return s;
}

struct Context {
  std::ostream& out;
  std::ostream& err;
};

int cmd_capacity(Context& ctx, const std::string& file,
                 const std::string& paths_out, const std::string& report_json,
                 bool debug) {
  const LayeredNetwork net = load_network(file);
  const auto start = std::chrono::steady_clock::now();
  const CapacityResult result = unicast_capacity(net, {debug});
  const double ms = elapsed_ms(start);
  ctx.out << result.capacity << "\n";

  if (!paths_out.empty()) {
    write_file(paths_out,
               serialize_scheme(net, extract_scheme(net, result.paths)));
  }
  const RunReport report = make_report(file, result, ms);
  if (!report_json.empty()) write_file(report_json, report_to_json(report));
  if (bound_violation_count(report) > 0) {
    ctx.err << "bug: exploration counters exceed their bounds\n"
            << report_to_json(report);
    return kExitFailure;
  }
  if (debug && result.debug.failures() > 0) {
    ctx.err << "bug: debug checks failed\n";
    for (const auto& m : result.debug.messages) ctx.err << "  " << m << "\n";
    return kExitFailure;
  }
  return kExitOk;
}

int cmd_check(Context& ctx, const std::string& file, int oracle_bound,
              int path_bound, const std::string& report_json) {
  const LayeredNetwork net = load_network(file);
  MinCut cut;
  try {
    cut = min_cut_capacity(net, oracle_bound);
  } catch (const SizeError& e) {
    throw UsageError(std::string(e.what()) +
                     " (raise --oracle-bound to force it)");
  }
  const auto start = std::chrono::steady_clock::now();
  const CapacityResult result = unicast_capacity(net, {true});
  const double ms = elapsed_ms(start);

  OracleVerdict verdict;
  verdict.min_cut = cut.capacity;
  try {
    verdict.bruteforce = max_independent_paths_bruteforce(
        net, static_cast<std::size_t>(path_bound));
  } catch (const SizeError&) {
    // Too many S-D paths to enumerate; the min-cut oracle still applies.
  }
  verdict.paths_independent =
      verify_paths_independent(net, result.paths) &&
      static_cast<int>(result.paths.size()) == result.capacity;
  verdict.agree = verdict.paths_independent &&
                  result.capacity == verdict.min_cut &&
                  (!verdict.bruteforce || *verdict.bruteforce == cut.capacity);

  RunReport report = make_report(file, result, ms);
  report.oracle = verdict;
  if (!report_json.empty()) write_file(report_json, report_to_json(report));

  ctx.out << "capacity " << result.capacity << "\n"
          << "min-cut  " << verdict.min_cut << "\n"
          << "paths    "
          << (verdict.bruteforce ? std::to_string(*verdict.bruteforce)
                                 : std::string("skipped"))
          << "\n";
  const bool clean = verdict.agree && bound_violation_count(report) == 0 &&
                     result.debug.failures() == 0;
  if (clean) {
    ctx.out << "ok\n";
    return kExitOk;
  }
  ctx.err << "MISMATCH on " << file << "\n"
          << "capacity=" << result.capacity << " min_cut=" << cut.capacity
          << " bruteforce="
          << (verdict.bruteforce ? std::to_string(*verdict.bruteforce)
                                 : std::string("n/a"))
          << " paths_independent=" << verdict.paths_independent
          << " bound_violations=" << bound_violation_count(report)
          << " debug_failures=" << result.debug.failures() << "\n";
  for (const auto& m : result.debug.messages) ctx.err << "  " << m << "\n";
  ctx.err << "paths:\n" << paths_text(result.paths) << "min cut side: {";
  bool first = true;
  for (const auto& id : cut.argmin.omega) {
    ctx.err << (first ? "" : ", ") << id;
    first = false;
  }
  ctx.err << "}\ninstance:\n" << serialize_network(net);
  return kExitFailure;
}

int cmd_gen(Context& ctx, const RandomNetworkParams& params,
            const std::string& output) {
  const std::string text = serialize_network(gen_random(params));
  if (output.empty() || output == "-") {
    ctx.out << text;
  } else {
    write_file(output, text);
  }
  return kExitOk;
}

int cmd_scheme(Context& ctx, const std::string& file,
               const std::string& output) {
  const LayeredNetwork net = load_network(file);
  const CapacityResult result = unicast_capacity(net);
  const TransmissionScheme s = extract_scheme(net, result.paths);
  const Gf2Matrix tm = transfer_matrix(net, s);
  if (rank(tm) != static_cast<std::size_t>(s.k)) {
    ctx.err << "bug: transfer matrix has rank " << rank(tm) << " < " << s.k
            << "\n"
            << tm.to_string() << serialize_scheme(net, s);
    return kExitFailure;
  }
  write_file(output, serialize_scheme(net, s));
  ctx.out << "rate " << s.k << " scheme written to " << output << "\n";
  return kExitOk;
}

BitVector parse_message(const std::string& bits, int k) {
  if (bits.find_first_not_of("01") != std::string::npos) {
    throw UsageError("--message must be a string of 0 and 1");
  }
  if (bits.size() != static_cast<std::size_t>(k)) {
    throw UsageError("--message has " + std::to_string(bits.size()) +
                     " bits but the scheme carries " + std::to_string(k));
  }
  return BitVector::from_string(bits);
}

int cmd_simulate(Context& ctx, const std::string& file,
                 const std::optional<std::string>& message,
                 std::optional<int> random_count, std::uint64_t seed) {
  SchemeDocument doc;
  try {
    doc = parse_scheme(read_file(file));
  } catch (const ParseError& e) {
    throw UsageError(file + ": " + e.what());
  }
  const auto problems = validate_scheme(doc.network, doc.scheme);
  if (!problems.empty()) {
    std::string msg = file + ": invalid scheme";
    for (const auto& p : problems) msg += "\n  " + p;
    throw UsageError(msg);
  }
  const int k = doc.scheme.k;
  const Gf2Matrix tm = transfer_matrix(doc.network, doc.scheme);
  if (rank(tm) != static_cast<std::size_t>(k)) {
    ctx.err << "bug: transfer matrix has rank " << rank(tm) << " < " << k
            << "\n"
            << tm.to_string();
    return kExitFailure;
  }

  auto round_trip = [&](const BitVector& sent) {
    const BitVector received = simulate(doc.network, doc.scheme, sent);
    return std::pair{received, decode(doc.scheme, received, tm)};
  };

  if (message) {
    const BitVector sent = parse_message(*message, k);
    const auto [received, decoded] = round_trip(sent);
    const bool ok = decoded == sent;
    ctx.out << "sent     " << sent.to_string() << "\n"
            << "received " << received.to_string() << "\n"
            << "decoded  " << decoded.to_string() << "\n"
            << (ok ? "decode ok" : "decode FAILED") << "\n";
    return ok ? kExitOk : kExitFailure;
  }

  std::mt19937_64 rng(seed);
  int good = 0;
  for (int i = 0; i < *random_count; ++i) {
    BitVector sent(static_cast<std::size_t>(k));
    for (int b = 0; b < k; ++b) sent.set(b, rng() & 1u);
    const auto [received, decoded] = round_trip(sent);
    if (decoded == sent) {
      ++good;
    } else {
      ctx.err << "round-trip failed: sent " << sent.to_string()
              << " received " << received.to_string() << " decoded "
              << decoded.to_string() << "\n";
    }
  }
  ctx.out << good << "/" << *random_count << " round-trips ok\n";
  return good == *random_count ? kExitOk : kExitFailure;
}

int cmd_bench(Context& ctx, RandomNetworkParams params, int count) {
  double total_ms = 0.0, worst_ms = 0.0;
  long long capacity_sum = 0;
  std::uint64_t explorations = 0, rank_checks = 0;
  std::size_t violations = 0;
  const std::uint64_t first_seed = params.seed;
  for (int i = 0; i < count; ++i) {
    params.seed = first_seed + static_cast<std::uint64_t>(i);
    const LayeredNetwork net = gen_random(params);
    const auto start = std::chrono::steady_clock::now();
    const CapacityResult result = unicast_capacity(net);
    const double ms = elapsed_ms(start);
    total_ms += ms;
    worst_ms = std::max(worst_ms, ms);
    capacity_sum += result.capacity;
    for (const auto& c : result.iterations) {
      explorations += c.explorations;
      rank_checks += c.rank_checks;
      violations += exploration_bound_violations(c).size();
    }
  }
  ctx.out << "instances        " << count << "\n"
          << "total ms         " << total_ms << "\n"
          << "mean ms          " << (count ? total_ms / count : 0.0) << "\n"
          << "worst ms         " << worst_ms << "\n"
          << "mean capacity    "
          << (count ? static_cast<double>(capacity_sum) / count : 0.0) << "\n"
          << "explorations     " << explorations << "\n"
          << "rank checks      " << rank_checks << "\n"
          << "bound violations " << violations << "\n";
  return violations == 0 ? kExitOk : kExitFailure;
}

void add_gen_flags(CLI::App* cmd, RandomNetworkParams& p) {
  cmd->add_option("--layers", p.layers, "number of layers")
      ->check(CLI::Range(2, 64));
  cmd->add_option("--max-supernodes", p.max_supernodes_per_layer,
                  "super nodes per intermediate layer, at most")
      ->check(CLI::Range(1, 64));
  cmd->add_option("--max-levels", p.max_levels, "levels per side, at most")
      ->check(CLI::Range(1, 64));
  cmd->add_option("--density", p.edge_density, "edge probability")
      ->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--seed", p.seed, "generator seed");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Unicast capacity of layered linear deterministic networks"};
  app.require_subcommand(1);

  std::string file, output, paths_out, report_json;
  bool debug = false;
  int oracle_bound = kDefaultOracleBound;
  int path_bound = static_cast<int>(kDefaultPathBound);
  RandomNetworkParams gen_params;
  std::optional<std::string> message;
  std::optional<int> random_count;
  std::uint64_t seed = 1;
  int count = 100;

  auto* capacity = app.add_subcommand("capacity", "print the unicast capacity");
  capacity->add_option("file", file, "network JSON")->required();
  capacity->add_option("--paths-out", paths_out,
                       "write the paths and relay maps as a scheme file");
  capacity->add_option("--report-json", report_json, "write a run report");
  capacity->add_flag("--debug", debug, "run with shadow consistency checks");

  auto* check = app.add_subcommand(
      "check", "compare the solver against the exhaustive oracles");
  check->add_option("file", file, "network JSON")->required();
  check->add_option("--oracle-bound", oracle_bound,
                    "largest number of relays for min-cut enumeration")
      ->check(CLI::Range(0, 40));
  check->add_option("--path-bound", path_bound,
                    "largest S-D path count for the path oracle")
      ->check(CLI::Range(0, 64));
  check->add_option("--report-json", report_json, "write a run report");

  auto* gen = app.add_subcommand("gen", "generate a random network");
  add_gen_flags(gen, gen_params);
  gen->add_option("-o,--output", output, "output file (default stdout)");

  auto* scheme = app.add_subcommand("scheme", "export a rate-K scheme");
  scheme->add_option("file", file, "network JSON")->required();
  scheme->add_option("-o,--output", output, "scheme file")->required();

  auto* sim = app.add_subcommand("simulate", "send bits through a scheme");
  sim->add_option("scheme", file, "scheme JSON")->required();
  auto* msg_opt = sim->add_option("--message", message, "bits, e.g. 101");
  auto* rnd_opt = sim->add_option("--random", random_count,
                                  "number of random messages")
                      ->check(CLI::NonNegativeNumber);
  msg_opt->excludes(rnd_opt);
  sim->add_option("--seed", seed, "seed for --random");

  auto* bench = app.add_subcommand("bench", "time the solver on random networks");
  RandomNetworkParams bench_params;
  add_gen_flags(bench, bench_params);
  bench->add_option("--count", count, "number of instances")
      ->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  Context ctx{out, err};
  try {
    if (*capacity) return cmd_capacity(ctx, file, paths_out, report_json, debug);
    if (*check) return cmd_check(ctx, file, oracle_bound, path_bound, report_json);
    if (*gen) return cmd_gen(ctx, gen_params, output);
    if (*scheme) return cmd_scheme(ctx, file, output);
    if (*sim) {
      if (!message && !random_count) {
        throw UsageError("simulate needs --message or --random");
      }
      return cmd_simulate(ctx, file, message, random_count, seed);
    }
    if (*bench) return cmd_bench(ctx, bench_params, count);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ContractViolation& e) {
    err << "bug: " << e.what() << "\n";
    return kExitFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace detcap
