#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "cvnet/optimize.hpp"

namespace cvnet {

// JSON / CSV adapters shared by the CLI and its tests. Parse errors raise
// StructuralError; file errors raise ResourceError.

/// {"kind":"epr","r":...} | {"kind":"sts","v1":...,"v2":...,"r":...}
/// | {"kind":"custom","cov":[[...]]}
GaussianState parse_state_json(const nlohmann::json& j);

/// {"family":"chain|star|tree|cycle|custom","parties":y,"sources":[[p,q],...]}
/// Family constructors may be requested with just the size fields
/// ("parties", or "m"/"f" for tree); an explicit source list wins.
NetworkTopology parse_topology_json(const nlohmann::json& j);

/// {"sources":[{"a0":[re,im],"a1":[re,im],"b0":[re,im],"b1":[re,im]},...]}
BellAssignment parse_assignment_json(const nlohmann::json& j);

nlohmann::json evaluation_json(const BellEvaluation& e);
nlohmann::json assignment_json(const BellAssignment& a);

/// Compact CLI source syntax: "epr:r=0.75", "sts:v=1.2,r=1",
/// "sts:v1=1.2,v2=1.4,r=0.5". The r field may be omitted when a sweep grid
/// supplies it.
struct SourceDescriptor {
    SourceKind kind = SourceKind::Epr;
    double v1 = 1.0;
    double v2 = 1.0;
    bool has_r = false;
    double r = 0.0;
};

SourceDescriptor parse_source_descriptor(const std::string& text);
GaussianState make_state(const SourceDescriptor& d, double r);

/// "start:end:step" (inclusive end, within half a step), "a,b,c", or a single
/// number.
std::vector<double> parse_grid(const std::string& text);

/// Renders rows under the fixed header
/// family,params,s,r1,r2,B,I,J,k,restarts,evals,boundary_hit,seed
std::string render_csv(const std::vector<SweepRow>& rows);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

} // namespace cvnet
