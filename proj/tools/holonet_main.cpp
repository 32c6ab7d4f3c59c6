#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <functional>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "holonet/flat_sets.hpp"
#include "holonet/io.hpp"
#include "holonet/nearest_point.hpp"
#include "holonet/nets.hpp"
#include "holonet/retraction.hpp"
#include "holonet/verify.hpp"
#include "holonet/whitney.hpp"

namespace {

using namespace holonet;

constexpr int kExitPass = 0;
constexpr int kExitPropertyFailure = 1;
constexpr int kExitConfigError = 2;

std::vector<double> parse_doubles(const std::string& csv) {
  std::vector<double> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    std::size_t used = 0;
    out.push_back(std::stod(tok, &used));
    if (used != tok.size())
      throw std::invalid_argument("bad numeric token '" + tok + "'");
  }
  if (out.empty()) throw std::invalid_argument("empty numeric list '" + csv + "'");
  return out;
}

// Shared flat-set options: shape plus exactly one of --alpha / --r-values.
struct SetOpts {
  std::string shape = "box";
  double alpha = 0.0;
  std::string r_values;
  int dim = 6;

  void attach(CLI::App* cmd) {
    cmd->add_option("--shape", shape, "set shape")
        ->check(CLI::IsMember({"box", "cross"}));
    cmd->add_option("--alpha", alpha, "Holder flatness exponent in (0,1)");
    cmd->add_option("--r-values", r_values,
                    "explicit flatness values, comma separated, non-increasing");
    cmd->add_option("--dim", dim, "ambient dimension")->check(CLI::PositiveNumber);
  }

  FlatSetDescriptor build() const {
    if ((alpha != 0.0) && !r_values.empty())
      throw std::invalid_argument("give either --alpha or --r-values, not both");
    if (alpha == 0.0 && r_values.empty())
      throw std::invalid_argument("one of --alpha or --r-values is required");
    FlatnessProfile profile =
        alpha != 0.0 ? FlatnessProfile::holder(alpha)
                     : FlatnessProfile::explicit_values(parse_doubles(r_values));
    return FlatSetDescriptor(shape == "box" ? SetShape::Box : SetShape::CrossPolytope,
                             std::move(profile), dim);
  }
};

void emit(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  write_text_file(path, text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"flat-set retractions, dyadic partitions and renorming experiments"};
  app.set_config("--config", "", "read options from a config file (flags win)");
  app.require_subcommand(1);

  std::function<int()> runner;

  // ---- flat heights -------------------------------------------------------
  auto* flat = app.add_subcommand("flat", "flat-set diagnostics");
  flat->require_subcommand(1);
  auto* heights = flat->add_subcommand("heights", "estimate section heights");
  SetOpts heights_set;
  heights_set.attach(heights);
  int heights_budget = 4000;
  std::uint64_t heights_seed = 0;
  std::string heights_out = "-";
  heights->add_option("--budget", heights_budget)->check(CLI::NonNegativeNumber);
  heights->add_option("--seed", heights_seed)->required();
  heights->add_option("--out", heights_out, "CSV path, - for stdout");
  heights->callback([&] {
    runner = [&]() -> int {
      const FlatSetDescriptor K = heights_set.build();
      const auto rows = estimate_heights(K, heights_budget, heights_seed);
      std::ostringstream os;
      write_heights_csv(os, rows, K.profile());
      emit(heights_out, os.str());
      return kExitPass;
    };
  });

  // ---- net dump -----------------------------------------------------------
  auto* net = app.add_subcommand("net", "dyadic net levels");
  net->require_subcommand(1);
  auto* dump = net->add_subcommand("dump", "emit one net level as CSV");
  SetOpts dump_set;
  dump_set.attach(dump);
  int dump_level = 0;
  std::string dump_out = "-";
  dump->add_option("--level", dump_level, "dyadic level k (eps = 2^-k)");
  dump->add_option("--out", dump_out, "CSV path, - for stdout");
  dump->callback([&] {
    runner = [&]() -> int {
      const FlatSetDescriptor K = dump_set.build();
      const NetLevel level = build_net(K, dump_level);
      std::ostringstream os;
      write_net_csv(os, level, K.ambient_dim());
      emit(dump_out, os.str());
      return kExitPass;
    };
  });

  // ---- partition trace ----------------------------------------------------
  auto* partition = app.add_subcommand("partition", "partition-of-unity queries");
  partition->require_subcommand(1);
  auto* trace = partition->add_subcommand("trace", "evaluate the partition at queries");
  SetOpts trace_set;
  trace_set.attach(trace);
  std::vector<std::string> trace_queries;
  std::string trace_out = "-";
  trace->add_option("--query", trace_queries, "query point, comma-separated coordinates")
      ->required();
  trace->add_option("--out", trace_out, "CSV path, - for stdout");
  trace->callback([&] {
    runner = [&]() -> int {
      const FlatSetDescriptor K = trace_set.build();
      const WhitneyPartition part(K);
      std::vector<PartitionEval> evals;
      for (const std::string& q : trace_queries) {
        const std::vector<double> coords = parse_doubles(q);
        if (static_cast<int>(coords.size()) != K.ambient_dim())
          throw std::invalid_argument("query '" + q + "' has wrong dimension");
        Vector x(K.ambient_dim());
        for (std::size_t i = 0; i < coords.size(); ++i)
          x[static_cast<Index>(i)] = coords[i];
        evals.push_back(part.partition_at(x));
      }
      std::ostringstream os;
      write_partition_trace_csv(os, evals);
      emit(trace_out, os.str());
      return kExitPass;
    };
  });

  // ---- retract modulus ----------------------------------------------------
  auto* retract_cmd = app.add_subcommand("retract", "retraction experiments");
  retract_cmd->require_subcommand(1);
  auto* modulus = retract_cmd->add_subcommand(
      "modulus", "empirical modulus of continuity and power-law fit");
  SetOpts modulus_set;
  modulus_set.attach(modulus);
  double mod_t_lo = 1e-4, mod_t_hi = 1e-1;
  int mod_t_count = 8, mod_pairs = 2000;
  double mod_floor = 1e-4, mod_ceiling = 1.0;
  std::uint64_t mod_seed = 0;
  std::string mod_out = "modulus.csv";
  std::string mod_json = "modulus_fit.json";
  modulus->add_option("--t-lo", mod_t_lo)->check(CLI::PositiveNumber);
  modulus->add_option("--t-hi", mod_t_hi)->check(CLI::PositiveNumber);
  modulus->add_option("--t-count", mod_t_count)->check(CLI::Range(5, 1000));
  modulus->add_option("--pairs", mod_pairs, "sampled pairs per t value")
      ->check(CLI::PositiveNumber);
  modulus->add_option("--dist-floor", mod_floor)->check(CLI::PositiveNumber);
  modulus->add_option("--dist-ceiling", mod_ceiling)->check(CLI::PositiveNumber);
  modulus->add_option("--seed", mod_seed)->required();
  modulus->add_option("--out", mod_out, "CSV path, - for stdout");
  modulus->add_option("--json-out", mod_json, "fit/report JSON path, - for stdout");
  modulus->callback([&] {
    runner = [&]() -> int {
      const FlatSetDescriptor K = modulus_set.build();
      if (!K.profile().is_holder())
        throw std::invalid_argument("retract modulus needs --alpha (power-law fit target)");
      const WhitneyPartition part(K);

      ModulusOptions opt;
      opt.t_grid = log_spaced(mod_t_lo, mod_t_hi, mod_t_count);
      opt.pair_budget = mod_pairs;
      opt.seed = mod_seed;
      opt.dist_floor = mod_floor;
      opt.dist_ceiling = mod_ceiling;
      const ModulusTable table = empirical_modulus(part, opt);
      std::ostringstream os;
      write_modulus_csv(os, table);
      emit(mod_out, os.str());

      const HolderFit fit = holder_fit(table, mod_t_lo, mod_t_hi);
      const double alpha = K.profile().alpha();
      const double c_impl = implementation_constant(table, K.profile());
      const bool exponent_ok = fit.exponent >= alpha - 0.05;

      // Partition/retraction invariants on the configured set, over the same
      // distance strata the modulus sampler used.
      Rng rng(mod_seed, 0xfeed);
      double sum_err = 0.0, psi_ratio = std::numeric_limits<double>::infinity();
      double support_ratio = 0.0, displacement_ratio = 0.0;
      for (int i = 0; i < 200; ++i) {
        const double target =
            std::exp(rng.uniform(std::log(mod_floor), std::log(mod_ceiling)));
        const Vector x = sample_at_distance(K, target, 2.0, rng);
        const PartitionEval eval = part.partition_at(x);
        double sum = 0.0, psi = 0.0;
        for (const PartitionEntry& e : eval.entries) {
          sum += e.phi;
          psi += e.psi;
          support_ratio =
              std::max(support_ratio, (x - e.cell.center).norm() / eval.dist_to_K);
        }
        sum_err = std::max(sum_err, std::abs(sum - 1.0));
        psi_ratio = std::min(psi_ratio, psi / (eval.dist_to_K / 4.0));
        displacement_ratio = std::max(
            displacement_ratio, (retract(part, x) - x).norm() / eval.dist_to_K);
      }
      const bool invariants_ok = sum_err <= 1e-12 && psi_ratio >= 1.0 - 1e-9 &&
                                 support_ratio <= 9.0 && displacement_ratio <= 9.0;

      nlohmann::json report = fit_to_json(fit, alpha, c_impl, mod_seed);
      report["exponent_ok"] = exponent_ok;
      report["invariants"] = {{"partition_sum_error", sum_err},
                              {"psi_floor_ratio", psi_ratio},
                              {"support_ratio", support_ratio},
                              {"displacement_ratio", displacement_ratio},
                              {"pass", invariants_ok}};
      report["pass"] = exponent_ok && invariants_ok;
      emit(mod_json, report.dump(2) + "\n");
      return exponent_ok && invariants_ok ? kExitPass : kExitPropertyFailure;
    };
  });

  // ---- npm demo -----------------------------------------------------------
  auto* npm_cmd = app.add_subcommand("npm", "nearest-point experiments");
  npm_cmd->require_subcommand(1);
  auto* demo = npm_cmd->add_subcommand(
      "demo", "divergence of the nearest-point map under the union norm");
  double npm_delta = 1.0 / 48.0, npm_mu = 0.0, npm_eps = 1.0, npm_half = 1.0;
  int npm_n_max = 12, npm_n_lo = 2, npm_dim = 0;
  bool npm_euclid = false;
  std::uint64_t npm_seed = 0;
  std::string npm_out = "divergence.csv";
  demo->add_option("--delta", npm_delta, "renorming delta in (0, 1/48]")->required();
  demo->add_option("--mu", npm_mu, "rotundity weight; defaults to its upper bound");
  demo->add_option("--n-max", npm_n_max, "largest gauge index");
  demo->add_option("--n-lo", npm_n_lo, "first row index");
  demo->add_option("--dim", npm_dim, "ambient dimension; defaults to 2 n-max + 2");
  demo->add_option("--eps", npm_eps, "input scale")->check(CLI::PositiveNumber);
  demo->add_option("--half-width", npm_half, "segment half width")
      ->check(CLI::PositiveNumber);
  demo->add_flag("--euclidean", npm_euclid, "use the Hilbert nearest point instead");
  demo->add_option("--seed", npm_seed)->required();
  demo->add_option("--out", npm_out, "CSV path, - for stdout");
  demo->callback([&] {
    runner = [&]() -> int {
      const double mu = npm_mu != 0.0 ? npm_mu : NormFamilyParams::mu_bound(npm_delta);
      const int dim = npm_dim != 0 ? npm_dim : 2 * npm_n_max + 2;
      const NormFamilyParams params(npm_delta, mu, npm_n_max, dim);
      SegmentK K;
      K.half_width = npm_half;
      const auto rows =
          divergence_experiment(params, K, npm_eps, npm_n_lo, npm_n_max, npm_euclid);
      std::ostringstream os;
      write_divergence_csv(os, rows);
      emit(npm_out, os.str());

      if (npm_euclid) {
        for (const DivergenceRow& r : rows)
          if (r.output_gap > 1e-12) return kExitPropertyFailure;
        return kExitPass;
      }
      bool ok = true;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        ok = ok && rows[i].output_gap >= rows[i].lower_bound - 1e-6;
        ok = ok && rows[i].input_gap <= rows[i].upper_bound_input + 1e-12;
        if (i > 0) ok = ok && rows[i].input_gap <= rows[i - 1].input_gap + 1e-12;
      }
      return ok ? kExitPass : kExitPropertyFailure;
    };
  });

  // ---- verify -------------------------------------------------------------
  auto* verify_cmd = app.add_subcommand("verify", "run the registered invariant checks");
  std::uint64_t verify_seed = 0;
  double verify_scale = 1.0;
  std::vector<std::string> verify_only;
  std::string verify_out = "-";
  verify_cmd->add_option("--seed", verify_seed)->required();
  verify_cmd->add_option("--budget-scale", verify_scale)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--only", verify_only, "run only the named checks");
  verify_cmd->add_option("--out", verify_out, "JSON path, - for stdout");
  verify_cmd->callback([&] {
    runner = [&]() -> int {
      VerifyOptions opt;
      opt.seed = verify_seed;
      opt.budget_scale = verify_scale;
      opt.only = verify_only;
      const auto results = run_verify(opt);
      emit(verify_out, checks_to_json(results).dump(2) + "\n");
      for (const CheckResult& r : results)
        if (!r.pass) return kExitPropertyFailure;
      return kExitPass;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitConfigError;
  }

  try {
    return runner ? runner() : kExitConfigError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const std::domain_error& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const std::length_error& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const std::out_of_range& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const OnSetError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << '\n';
    return kExitPropertyFailure;
  }
}
