#pragma once

#include <json.hpp>

#include "pcolor/diagnostics.hpp"
#include "pcolor/exact_pc.hpp"
#include "pcolor/experiment.hpp"
#include "pcolor/proper_path.hpp"
#include "pcolor/subgraph_coloring.hpp"
#include "pcolor/two_coloring.hpp"

namespace pcolor::report {

using nlohmann::json;

json edge_json(Edge e);
json connectivity_json(const ConnectivityReport& r, Color palette);
json pc_json(const PcResult& r);
json trace_json(const ConstructionTrace& t);
json diagnostics_json(const DiagnosticReport& r, const VertexClassification& cls,
                      std::size_t n, double p);
json census_json(const CensusResult& r);
json experiment_json(const TrialReport& r);

}  // namespace pcolor::report
