#include "egf/cli/commands.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "egf/cli/csv.hpp"
#include "egf/cluster.hpp"
#include "egf/graph.hpp"
#include "egf/pathint.hpp"
#include "egf/rng.hpp"
#include "egf/sdp.hpp"
#include "egf/stats.hpp"

namespace egf::cli {

namespace {

constexpr const char* kSeedEnv = "EGF_SEED";

struct RunCorrelations {
  double baseline = 0.0;
  double proposed = 0.0;
};

RunCorrelations correlate(const ExperimentSeries& s) {
  const auto gt = s.gt();
  return {pearson(gt, s.baseline()), pearson(gt, s.proposed())};
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << content;
  if (!out.flush()) throw std::runtime_error("failed writing '" + path + "'");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

std::string simulate_csv(const RunConfig& cfg) {
  const ExperimentSeries series = run_experiment(cfg.sdp_params());
  std::string out = "frame,gt,proposed,baseline\n";
  for (const FrameRecord& f : series.frames) {
    out += std::to_string(f.frame) + ',' + format_fixed(f.gt_order) + ',' +
           format_fixed(f.phi_proposed) + ',' + format_fixed(f.phi_baseline) + '\n';
  }
  return out;
}

std::string table1_csv(const RunConfig& cfg, std::size_t threads) {
  struct Job {
    std::size_t n;
    std::size_t run;
  };
  std::vector<Job> jobs;
  for (std::size_t n : cfg.n_list) {
    for (std::size_t r = 0; r < cfg.runs; ++r) jobs.push_back({n, r});
  }
  std::vector<RunCorrelations> results(jobs.size());
  std::vector<std::exception_ptr> errors(jobs.size());
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      try {
        SdpParams p = cfg.sdp_params();
        p.n = jobs[i].n;
        p.seed = cfg.seed + jobs[i].run;
        results[i] = correlate(run_experiment(p));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  threads = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(jobs.size(), 1));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  std::string out = "N,gt_vs_baseline,gt_vs_proposed\n";
  std::size_t i = 0;
  for (std::size_t n : cfg.n_list) {
    double baseline = 0.0;
    double proposed = 0.0;
    for (std::size_t r = 0; r < cfg.runs; ++r, ++i) {
      baseline += results[i].baseline;
      proposed += results[i].proposed;
    }
    const double runs = static_cast<double>(cfg.runs);
    out += std::to_string(n) + ',' + format_fixed(baseline / runs) + ',' +
           format_fixed(proposed / runs) + '\n';
  }
  return out;
}

ClusterCsv cluster_csv(const PointSet& points, const RunConfig& cfg) {
  PointClusteringParams params;
  params.k = cfg.K;
  params.k0 = cfg.k0;
  params.target_k = cfg.target_k;
  params.bandwidth_scale = cfg.bandwidth_scale;
  ClusterOptions opts;
  opts.series.tol = cfg.tol;
  const Partition p = cluster_points(points, params, opts);

  ClusterCsv out;
  out.labels = "point_index,cluster_id\n";
  const auto labels = p.labels(points.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    out.labels += std::to_string(i) + ',' + std::to_string(labels[i]) + '\n';
  }
  out.exemplars = "cluster_id,exemplar_index\n";
  for (std::size_t c = 0; c < p.exemplars.size(); ++c) {
    out.exemplars += std::to_string(c) + ',' + std::to_string(p.exemplars[c]) + '\n';
  }
  return out;
}

std::string profile_csv(const RunConfig& cfg) {
  const SdpParams params = cfg.sdp_params();
  params.validate();
  Rng rng(params.seed);
  ParticleState state = init_state(params.n, params.box_size, params.speed, params.radius,
                                   params.eta, rng);
  for (std::size_t f = 1; f < params.frames; ++f) state = step(state, rng);
  const CoefficientProfile prof = coefficient_profile(velocity_knn_graph(state, params.k), cfg.l_max);

  std::string out = "l,component_norm,alpha_tilde\n";
  for (std::size_t i = 0; i < prof.component_norms.size(); ++i) {
    out += std::to_string(i + 1) + ',' + format_fixed(prof.component_norms[i]) + ',' +
           format_fixed(prof.alpha_tilde[i]) + '\n';
  }
  return out;
}

int run(int argc, const char* const* argv) {
  CLI::App app{"Path-integral descriptors: collectiveness and agglomerative clustering"};
  app.require_subcommand(1);

  struct Common {
    std::string config_path;
    std::string out;
    std::map<std::string, std::string> overrides;
  };
  std::map<std::string, Common> common;

  auto add_common = [&](CLI::App* sub) {
    Common& c = common[sub->get_name()];
    sub->add_option("--config", c.config_path, "flat key = value config file");
    sub->add_option("--out", c.out, "output path (default: stdout)");
    for (std::string_view key : config_keys()) {
      const std::string name(key);
      sub->add_option_function<std::string>(
          "--" + name, [&c, name](const std::string& v) { c.overrides[name] = v; },
          "override config key " + name);
    }
    return sub;
  };

  auto* simulate = add_common(app.add_subcommand("simulate", "one seeded SDP run as CSV"));
  auto* table1 = add_common(app.add_subcommand("table1", "mean correlations over many runs"));
  auto* cluster = add_common(app.add_subcommand("cluster", "agglomerative clustering of points"));
  auto* profile = add_common(app.add_subcommand("profile", "series component profile"));

  std::size_t threads = std::max(1u, std::thread::hardware_concurrency());
  table1->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
  std::string points_path;
  std::string exemplars_path;
  cluster->add_option("--points", points_path, "points CSV")->required();
  cluster->add_option("--exemplars", exemplars_path, "exemplars CSV output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  CLI::App* active = app.get_subcommands().front();
  const Common& c = common[active->get_name()];

  RunConfig cfg;
  try {
    if (!c.config_path.empty()) cfg = parse_config(read_file(c.config_path));
    for (const auto& [key, value] : c.overrides) apply_setting(cfg, key, value);
    if (!cfg.seed_given) {
      if (const char* env = std::getenv(kSeedEnv); env && *env) apply_setting(cfg, "seed", env);
    }
    cfg.validate();
  } catch (const std::exception& e) {
    std::cerr << "egf: config error: " << e.what() << '\n';
    return 1;
  }

  try {
    if (active == simulate) {
      write_output(c.out, simulate_csv(cfg));
    } else if (active == table1) {
      write_output(c.out, table1_csv(cfg, threads));
    } else if (active == profile) {
      write_output(c.out, profile_csv(cfg));
    } else if (active == cluster) {
      std::ifstream in(points_path);
      if (!in) throw std::runtime_error("cannot read '" + points_path + "'");
      const ClusterCsv result = cluster_csv(read_points_csv(in), cfg);
      write_output(c.out, result.labels);
      if (!exemplars_path.empty()) write_output(exemplars_path, result.exemplars);
    }
  } catch (const std::exception& e) {
    std::cerr << "egf: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace egf::cli
