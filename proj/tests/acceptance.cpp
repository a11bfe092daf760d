// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.
// Usage: acceptance [path-to-fdrctl-binary]

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fdrctl/cli.hpp"
#include "fdrctl/procedures.hpp"
#include "fdrctl/simulation.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace fdrctl;

namespace {

constexpr double kSigmas = 3.0;
constexpr std::uint64_t kReplicates = 20000;
constexpr std::uint64_t kSeed = 20240611;

struct Outcome {
  bool pass;
  std::string detail;
};

struct FuzzCase {
  std::vector<double> raw;
  double level;
};

std::vector<FuzzCase> fuzz_cases(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> level(1e-4, 0.999);
  std::vector<FuzzCase> out;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t m = 1 + rng() % 64;
    auto raw = oracle::random_pvalues(rng, m);
    out.push_back({std::move(raw), level(rng)});
  }
  return out;
}

std::string fmt(double x, int precision = 5) {
  std::ostringstream s;
  s.precision(precision);
  s << x;
  return s.str();
}

Outcome family_error() {
  const double v = uncorrected_family_error(0.05, 20);
  const bool pass = std::fabs(std::round(v * 100.0) / 100.0 - 0.64) < 1e-12 &&
                    std::fabs(v - 0.6415) < 5e-5;
  return {pass, "1-(1-0.05)^20 = " + fmt(v, 6)};
}

Outcome complete_null_identity() {
  SimConfig c;
  c.m = 16;
  c.m0 = 16;
  c.level = 0.05;
  c.n_replicates = kReplicates;
  c.seed = kSeed;
  c.procedures = {Procedure::BenjaminiHochberg};
  const auto r = run_study(c).at(Procedure::BenjaminiHochberg);
  const bool pass = r.fdr == r.fwer && r.se_fdr == r.se_fwer && r.fdr <= 0.05 + kSigmas * r.se_fdr;
  return {pass, "FDR=" + fmt(r.fdr) + " FWER=" + fmt(r.fwer) + " SE=" + fmt(r.se_fdr)};
}

Outcome fdr_control_grid() {
  int points = 0, failures = 0;
  double worst_margin = -1.0;
  std::string worst;
  for (std::size_t m : {8, 16, 64}) {
    for (double fraction : {0.25, 0.5, 0.75, 1.0}) {
      for (double q : {0.01, 0.05, 0.1}) {
        SimConfig c;
        c.m = m;
        c.m0 = static_cast<std::size_t>(std::llround(fraction * static_cast<double>(m)));
        c.effect = 3.0;
        c.level = q;
        c.n_replicates = kReplicates;
        c.seed = kSeed + static_cast<std::uint64_t>(points);
        c.procedures = {Procedure::BenjaminiHochberg};
        const auto r = run_study(c).at(Procedure::BenjaminiHochberg);
        ++points;
        // (FDR - q) / SE; must not exceed 3
        const double margin = r.se_fdr > 0 ? (r.fdr - q) / r.se_fdr : (r.fdr > q ? 1e9 : -1e9);
        if (r.fdr > q + kSigmas * r.se_fdr) ++failures;
        if (margin > worst_margin || worst.empty()) {
          worst_margin = margin;
          worst = "m=" + std::to_string(m) + " m0=" + std::to_string(c.m0) + " q=" + fmt(q) +
                  " FDR=" + fmt(r.fdr) + " SE=" + fmt(r.se_fdr);
        }
      }
    }
  }
  return {failures == 0, std::to_string(points) + " points, " + std::to_string(failures) +
                             " over q+3SE; closest: " + worst + " (" + fmt(worst_margin, 3) +
                             " SE)"};
}

Outcome dominance_chain(const std::vector<FuzzCase>& cases) {
  std::size_t violations = 0;
  for (const auto& fc : cases) {
    const auto p = make_pvalues(fc.raw);
    const SignificanceLevel a(fc.level);
    const auto unadj = rejected_indices(reject_unadjusted(p, a));
    const auto bonf = rejected_indices(reject_bonferroni(p, a));
    const auto sidak = rejected_indices(reject_sidak(p, a));
    const auto holm = rejected_indices(reject_holm(p, a));
    const auto hoch = rejected_indices(reject_hochberg(p, a));
    const auto bh = rejected_indices(reject_bh(p, a));
    const bool ok = is_subset(bonf, sidak) && is_subset(bonf, holm) && is_subset(holm, hoch) &&
                    is_subset(hoch, bh) && is_subset(sidak, unadj) && is_subset(bh, unadj) &&
                    bh.size() >= hoch.size() && hoch.size() >= holm.size() &&
                    holm.size() >= bonf.size();
    violations += ok ? 0 : 1;
  }
  return {violations == 0,
          std::to_string(cases.size()) + " vectors, " + std::to_string(violations) + " violations"};
}

Outcome optimization_equivalence(const std::vector<FuzzCase>& cases) {
  std::size_t mismatches = 0;
  for (const auto& fc : cases) {
    const auto p = make_pvalues(fc.raw);
    const SignificanceLevel q(fc.level);
    const auto choice = bh_theta(p, q);
    const auto induced =
        choice.rejections == 0 ? oracle::IndexSet{} : oracle::single_level(fc.raw, choice.theta);
    if (induced != rejected_indices(reject_bh(p, q)) || induced.size() != choice.rejections) {
      ++mismatches;
    }
  }
  return {mismatches == 0,
          std::to_string(cases.size()) + " vectors, " + std::to_string(mismatches) + " mismatches"};
}

Outcome adjust_reject_oracle(const std::vector<FuzzCase>& cases) {
  std::size_t mismatches = 0, checks = 0;
  for (const auto& fc : cases) {
    const auto p = make_pvalues(fc.raw);
    for (Procedure proc : kAllProcedures) {
      const auto adj = adjust(p, proc);
      for (int g = 1; g <= 99; ++g) {
        const double gamma = g / 100.0;
        const auto direct = reject(p, proc, SignificanceLevel(gamma));
        for (std::size_t i = 0; i < p.size(); ++i) {
          ++checks;
          if ((adj.values[i] <= gamma) != static_cast<bool>(direct.rejected[i])) ++mismatches;
        }
      }
    }
  }
  return {mismatches == 0, std::to_string(cases.size()) + " vectors, " + std::to_string(checks) +
                               " comparisons, " + std::to_string(mismatches) + " mismatches"};
}

Outcome growing_advantage() {
  SimConfig base;
  base.m = 16;
  base.m0 = 8;
  base.effect = 3.0;
  base.level = 0.05;
  base.n_replicates = kReplicates;
  base.seed = kSeed;
  base.procedures = {Procedure::BenjaminiHochberg, Procedure::Bonferroni};
  const std::vector<double> ms{4, 16, 64, 256, 1000};
  const auto result = sweep(base, SweepAxis::M, ms);

  bool pass = true;
  std::string detail = "gap(se):";
  double prev_gap = 0.0, prev_se = 0.0;
  for (std::size_t k = 0; k < result.points.size(); ++k) {
    const auto& study = result.points[k].result;
    const auto& bh = study.at(Procedure::BenjaminiHochberg);
    const auto& bonf = study.at(Procedure::Bonferroni);
    const double gap = *bh.power - *bonf.power;
    const double se = std::hypot(*bh.se_power, *bonf.se_power);
    pass = pass && study.config.m0 * 2 == study.config.m && gap > 0.0;
    if (k > 0 && gap < prev_gap - kSigmas * std::hypot(se, prev_se)) pass = false;
    detail += " m=" + fmt(result.points[k].value) + ":" + fmt(gap, 4) + "(" + fmt(se, 2) + ")";
    prev_gap = gap;
    prev_se = se;
  }
  return {pass, detail};
}

Outcome null_model() {
  SimConfig c;
  c.m = 100;
  c.m0 = 100;
  c.effect = 0.0;
  c.level = 0.05;
  c.n_replicates = 1000;
  c.seed = kSeed;
  std::vector<double> pooled;
  for (std::uint64_t r = 0; r < c.n_replicates; ++r) {
    const auto rep = generate_replicate(c, r);
    pooled.insert(pooled.end(), rep.pvalues.values().begin(), rep.pvalues.values().end());
  }
  const double ks = oracle::ks_uniform_statistic(pooled);

  c.m = 20;
  c.m0 = 20;
  c.n_replicates = kReplicates;
  c.procedures = {Procedure::Unadjusted, Procedure::Bonferroni};
  const auto study = run_study(c);
  const auto& unadj = study.at(Procedure::Unadjusted);
  const auto& bonf = study.at(Procedure::Bonferroni);
  const bool pcer_ok = std::fabs(unadj.pcer - c.level) <= kSigmas * unadj.se_pcer;
  const bool fwer_ok = bonf.fwer <= c.level + kSigmas * bonf.se_fwer;
  return {ks < 0.01 && pooled.size() == 100000 && pcer_ok && fwer_ok,
          "KS=" + fmt(ks) + " over " + std::to_string(pooled.size()) + " draws; unadjusted PCER=" +
              fmt(unadj.pcer) + " SE=" + fmt(unadj.se_pcer) + "; Bonferroni FWER=" +
              fmt(bonf.fwer)};
}

std::string capture_process(const std::string& command) {
  std::array<char, 4096> buf{};
  std::string out;
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(command.c_str(), "r"), pclose);
  if (!pipe) return {};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe.get())) > 0) out.append(buf.data(), n);
  return out;
}

Outcome determinism(const std::string& binary) {
  const std::vector<std::string> args{"simulate", "--m", "16", "--m0", "16", "--level", "0.05",
                                      "--seed", "7", "--replicates", "20000"};
  std::ostringstream a, b, err;
  const int ca = run_cli(args, a, err);
  const int cb = run_cli(args, b, err);
  bool pass = ca == 0 && cb == 0 && a.str() == b.str() && !a.str().empty();
  std::string detail = "in-process runs identical (" + std::to_string(a.str().size()) + " bytes)";

  if (!binary.empty()) {
    std::string cmd = binary;
    for (const auto& arg : args) cmd += " " + arg;
    const std::string p1 = capture_process(cmd);
    const std::string p2 = capture_process("FDRCTL_THREADS=3 " + cmd);
    pass = pass && !p1.empty() && p1 == p2 && p1 == a.str();
    detail += "; binary runs (default threads, 3 threads) identical";
  }

  SimConfig c;
  c.m = 32;
  c.m0 = 16;
  c.n_replicates = 3000;
  c.seed = 7;
  const auto serial = accumulate_replicates(c, 0, c.n_replicates);
  StudyAccumulator batched(c.procedures.size());
  batched.merge(accumulate_replicates(c, 2500, 3000));
  batched.merge(accumulate_replicates(c, 0, 1));
  batched.merge(accumulate_replicates(c, 1, 2500));
  pass = pass && batched == serial;
  const auto reference = finalize(c, serial);
  for (int threads : {1, 2, 4, 7}) {
    const auto parallel = run_study(c, threads);
    for (std::size_t k = 0; k < reference.rates.size(); ++k) {
      const auto& x = parallel.rates[k].rates;
      const auto& y = reference.rates[k].rates;
      pass = pass && x.fdr == y.fdr && x.se_fdr == y.se_fdr && x.fwer == y.fwer &&
             x.pcer == y.pcer && x.se_pcer == y.se_pcer && x.power == y.power &&
             x.se_power == y.se_power;
    }
  }
  detail += "; batched and 1/2/4/7-thread aggregates match serial bit for bit";
  return {pass, detail};
}

}  // namespace

int main(int argc, char** argv) {
  const std::string binary = argc > 1 ? argv[1] : "";
  const auto fuzz = fuzz_cases(1000, 4242);
  const std::vector<FuzzCase> fuzz200(fuzz.begin(), fuzz.begin() + 200);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 uncorrected family error 0.64", family_error},
      {"2 complete-null FDR == FWER", complete_null_identity},
      {"3 BH FDR control grid", fdr_control_grid},
      {"4 dominance chain", [&] { return dominance_chain(fuzz); }},
      {"5 optimization equivalence", [&] { return optimization_equivalence(fuzz); }},
      {"6 adjust/reject oracle", [&] { return adjust_reject_oracle(fuzz200); }},
      {"7 growing BH advantage over m", growing_advantage},
      {"8 null-model sanity", null_model},
      {"9 determinism", [&] { return determinism(binary); }},
  };

  int failed = 0;
  for (const auto& [name, check] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome{false, ""};
    try {
      outcome = check();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (outcome.pass ? "[PASS] " : "[FAIL] ") << name << " -- " << outcome.detail
              << " [" << fmt(secs, 3) << "s]" << std::endl;
    failed += outcome.pass ? 0 : 1;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed")
            << std::endl;
  return failed == 0 ? 0 : 1;
}
