#pragma once

#include <cstddef>
#include <string>

#include "egf/cli/config.hpp"
#include "egf/graph.hpp"

namespace egf::cli {

/// `frame,gt,proposed,baseline` for one seeded run.
std::string simulate_csv(const RunConfig& cfg);

/// `N,gt_vs_baseline,gt_vs_proposed`: mean Pearson correlation over
/// cfg.runs runs for every N in cfg.n_list. Run r uses seed cfg.seed + r.
/// Runs are spread across `threads` workers; output does not depend on it.
std::string table1_csv(const RunConfig& cfg, std::size_t threads = 1);

struct ClusterCsv {
  std::string labels;     // point_index,cluster_id
  std::string exemplars;  // cluster_id,exemplar_index
};

ClusterCsv cluster_csv(const PointSet& points, const RunConfig& cfg);

/// `l,component_norm,alpha_tilde` of the velocity K-NN graph after
/// cfg.frames - 1 simulation steps.
std::string profile_csv(const RunConfig& cfg);

/// Entry point of the `egf` executable. Exit codes: 0 success, 1 usage or
/// configuration error, 2 runtime failure.
int run(int argc, const char* const* argv);

}  // namespace egf::cli
