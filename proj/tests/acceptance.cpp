// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Instance n of the random batch uses layers 2 + n % 4,
// density {0.2, 0.5, 0.8}[(n / 4) % 3] and seed n, with at most three super
// nodes per intermediate layer and three levels per side.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "detcap/errors.hpp"
#include "detcap/mdfs.hpp"
#include "detcap/network_io.hpp"
#include "detcap/oracle.hpp"
#include "detcap/scheme.hpp"

namespace {

using namespace detcap;
using Clock = std::chrono::steady_clock;

constexpr int kInstances = 5040;
constexpr double kDensities[] = {0.2, 0.5, 0.8};
constexpr double kLinkLimitMs = 1000.0;
constexpr double kBatchLimitMs = 5 * 60 * 1000.0;
constexpr int kBruteforceNeeded = 500;
constexpr int kInvariantSubset = 200;
constexpr int kRoundTrips = 100;
constexpr int kExhaustiveK = 8;
constexpr int kFormatNetworks = 1000;
constexpr std::size_t kMaxListed = 10;

double ms_since(Clock::time_point t) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t).count();
}

RandomNetworkParams batch_params(int n) {
  return {2 + n % 4, 3, 3, kDensities[(n / 4) % 3], static_cast<std::uint64_t>(n)};
}

std::string describe(const RandomNetworkParams& p) {
  std::ostringstream os;
  os << "layers=" << p.layers << " density=" << p.edge_density
     << " seed=" << p.seed;
  return os.str();
}

int failures = 0;

void verdict(int id, bool ok, const std::string& detail,
             const std::vector<std::string>& listed = {}) {
  if (!ok) ++failures;
  std::cout << "criterion " << id << ": " << (ok ? "PASS" : "FAIL") << "  "
            << detail << "\n";
  for (std::size_t i = 0; i < listed.size() && i < kMaxListed; ++i) {
    std::cout << "    " << listed[i] << "\n";
  }
  if (listed.size() > kMaxListed) {
    std::cout << "    ... " << listed.size() - kMaxListed << " more\n";
  }
  std::cout.flush();
}

void criterion1() {
  const LayeredNetwork net = point_to_point(5, 4);
  const auto start = Clock::now();
  const CapacityResult r = unicast_capacity(net);
  const int cut = min_cut_capacity(net).capacity;
  const double ms = ms_since(start);
  const bool ok = r.capacity == 4 && cut == 4 && r.paths.size() == 4 &&
                  verify_paths_independent(net, r.paths) && ms < kLinkLimitMs;
  std::ostringstream os;
  os << "capacity=" << r.capacity << " min_cut=" << cut
     << " paths=" << r.paths.size() << " time_ms=" << ms;
  verdict(1, ok, os.str());
}

// Message round-trips through the extracted scheme; empty string when fine.
std::string scheme_problem(const LayeredNetwork& net, const PathSet& paths,
                           std::uint64_t seed) {
  const TransmissionScheme s = extract_scheme(net, paths);
  const Gf2Matrix tm = transfer_matrix(net, s);
  if (rank(tm) != static_cast<std::size_t>(s.k)) return "transfer matrix rank";
  if (s.k == 0) return {};
  auto trip = [&](const BitVector& m) {
    return decode(s, simulate(net, s, m), tm) == m;
  };
  if (s.k <= kExhaustiveK) {
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << s.k); ++v) {
      BitVector m(static_cast<std::size_t>(s.k));
      for (int i = 0; i < s.k; ++i) m.set(i, (v >> i) & 1u);
      if (!trip(m)) return "round-trip of " + m.to_string();
    }
    return {};
  }
  std::mt19937_64 rng(seed);
  for (int t = 0; t < kRoundTrips; ++t) {
    BitVector m(static_cast<std::size_t>(s.k));
    for (int i = 0; i < s.k; ++i) m.set(i, rng() & 1u);
    if (!trip(m)) return "round-trip of " + m.to_string();
  }
  return {};
}

void batch() {
  std::vector<std::string> mismatches, brute_mismatches, bound_hits,
      scheme_failures, invariant_failures;
  int brute_compared = 0, invariant_instances = 0;
  DebugStats all, subset;
  double solve_ms = 0.0;

  for (int n = 0; n < kInstances; ++n) {
    const RandomNetworkParams p = batch_params(n);
    const LayeredNetwork net = gen_random(p);

    const auto start = Clock::now();
    const CapacityResult r = unicast_capacity(net, {true});
    const int cut = min_cut_capacity(net).capacity;
    const bool independent = verify_paths_independent(net, r.paths) &&
                             static_cast<int>(r.paths.size()) == r.capacity;
    solve_ms += ms_since(start);

    if (r.capacity != cut || !independent) {
      mismatches.push_back(describe(p) + " capacity=" +
                           std::to_string(r.capacity) +
                           " min_cut=" + std::to_string(cut) +
                           (independent ? "" : " paths not independent"));
    }

    try {
      const int brute = max_independent_paths_bruteforce(net);
      ++brute_compared;
      if (brute != cut || brute != r.capacity) {
        brute_mismatches.push_back(describe(p) + " bruteforce=" +
                                   std::to_string(brute) + " min_cut=" +
                                   std::to_string(cut) + " capacity=" +
                                   std::to_string(r.capacity));
      }
    } catch (const SizeError&) {
    }

    all.merge(r.debug);
    for (const auto& c : r.iterations) {
      for (const auto& v : exploration_bound_violations(c)) {
        bound_hits.push_back(describe(p) + " k=" + std::to_string(c.iteration) +
                             ": " + v);
      }
    }

    if (independent) {
      const std::string problem = scheme_problem(net, r.paths, p.seed);
      if (!problem.empty()) {
        scheme_failures.push_back(describe(p) + ": " + problem);
      }
    } else {
      scheme_failures.push_back(describe(p) + ": no independent path set");
    }

    if (p.layers >= 3 && invariant_instances < kInvariantSubset) {
      ++invariant_instances;
      subset.merge(r.debug);
      if (r.debug.independence_violations + r.debug.restore_mismatches > 0) {
        invariant_failures.push_back(describe(p));
      }
    }
  }

  std::ostringstream c2;
  c2 << "instances=" << kInstances << " mismatches=" << mismatches.size()
     << " solve_time_ms=" << static_cast<long long>(solve_ms);
  verdict(2, mismatches.empty() && solve_ms < kBatchLimitMs, c2.str(),
          mismatches);

  std::ostringstream c3;
  c3 << "compared=" << brute_compared << " disagreements="
     << brute_mismatches.size();
  verdict(3, brute_compared >= kBruteforceNeeded && brute_mismatches.empty(),
          c3.str(), brute_mismatches);

  std::ostringstream c4;
  c4 << "rank_checks=" << all.rank_checks
     << " mismatches=" << all.rank_check_mismatches;
  verdict(4, all.rank_checks > 0 && all.rank_check_mismatches == 0, c4.str());

  std::ostringstream c5;
  c5 << "violations=" << bound_hits.size();
  verdict(5, bound_hits.empty(), c5.str(), bound_hits);

  std::ostringstream c6;
  c6 << "instances=" << kInstances << " failures=" << scheme_failures.size();
  verdict(6, scheme_failures.empty(), c6.str(), scheme_failures);

  std::ostringstream c7;
  c7 << "instances=" << invariant_instances
     << " independence_checks=" << subset.independence_checks
     << " violations=" << subset.independence_violations
     << " restore_checks=" << subset.restore_checks
     << " restore_mismatches=" << subset.restore_mismatches;
  verdict(7,
          invariant_instances >= kInvariantSubset &&
              subset.independence_checks > 0 && subset.restore_checks > 0 &&
              invariant_failures.empty(),
          c7.str(), invariant_failures);
}

void criterion8() {
  std::vector<std::string> bad;
  for (int n = 0; n < kFormatNetworks; ++n) {
    const RandomNetworkParams p = batch_params(n);
    const LayeredNetwork net = gen_random(p);
    const std::string text = serialize_network(net);
    const LayeredNetwork back = parse_network(text);
    if (!structurally_equal(back, net) || serialize_network(back) != text ||
        serialize_network(gen_random(p)) != text) {
      bad.push_back(describe(p));
    }
  }
  verdict(8, bad.empty(),
          "networks=" + std::to_string(kFormatNetworks) +
              " failures=" + std::to_string(bad.size()),
          bad);
}

}  // namespace

int main() {
  criterion1();
  batch();
  criterion8();
  return failures == 0 ? 0 : 1;
}
