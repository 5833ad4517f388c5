#pragma once

// JSON reports shared by the command-line tool and the Python module.

#include "exnet/json_io.hpp"

namespace exnet {

Json stats_report(const LabeledNetwork& g);
Json mle_report(const LabeledNetwork& g, bool use_float);
Json eval_report(ErgmFamily family, const Json& nu, const LabeledNetwork& g);

/// Exact arithmetic unless `use_float` is set or the joint holds JSON floats.
Json markov_report(const Json& joint, const Json& dependence, bool use_float, double tol);
Json skeleton_report(const Json& joint, bool use_float, double tol);

struct ExtendRequest {
  int m = 0;
  bool dissociated = false;
  bool use_float = false;
  double tolerance = 1e-9;
  int restarts = 8;
  std::optional<std::uint64_t> seed;
};
Json extend_report(const Json& z, const ExtendRequest& request);

Json graphon_z_report(const std::string& graphon, const std::string& class_key, const GraphonZOptions& options);

/// [{"n": N, "edges": [[i, j], ...]}, ...] with 1-based nodes.
Json networks_json(const std::vector<LabeledNetwork>& networks);

}  // namespace exnet
