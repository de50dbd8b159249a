#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cvnet/bell.hpp"

namespace cvnet {

/// Search-space shape for the displacement optimization.
///   Full              8 reals per source (Re/Im of all four displacements)
///   SymmetricSources  one shared set of 8 reals for every source
///   RealOnly          4 reals per source, displacements on the real axis
///   Auto              SymmetricSources when all source states are identical,
///                     Full otherwise
enum class Ansatz { Full, SymmetricSources, RealOnly, Auto };

struct OptimizerConfig {
    int restarts = 64;
    int eval_budget = 20000;  // objective evaluations per restart
    double tolerance = 1e-10;
    double box_radius = 3.0;  // bound on |Re|, |Im| of every displacement
    std::uint64_t seed = 0;
    Ansatz ansatz = Ansatz::Auto;
    int threads = 0;  // 0 = hardware concurrency
};

struct SupremumResult {
    BellEvaluation best;
    BellAssignment argmax;
    int restarts_run = 0;
    long evals_used = 0;
    std::vector<double> per_restart_best;
    // True when the reported argmax sits on the search box boundary; the
    // supremum may then live outside the box.
    bool boundary_hit = false;
};

/// Multistart Nelder-Mead maximization of B over the displacement box.
/// Deterministic for a fixed seed, independent of thread count.
SupremumResult supremum_b(const NetworkTopology& topo, const IndependentSet& K,
                          const std::vector<GaussianState>& states, Smoothing s,
                          const OptimizerConfig& config);

enum class SourceKind { Epr, Sts };

/// Grid specification for sweep runs. When r2_grid is empty every source gets
/// the state built from r1 and the row repeats r1 in the r2 column; when it is
/// non-empty the topology must have exactly two sources, built from (r1, r2).
struct SweepSpec {
    NetworkTopology topo;
    IndependentSet K;
    std::string family_label;
    std::string params_label;  // e.g. "y=6" or "m=3;f=2"
    SourceKind kind = SourceKind::Epr;
    double v1 = 1.0;  // STS thermal variances, ignored for EPR
    double v2 = 1.0;
    std::vector<double> s_values;
    std::vector<double> r1_grid;
    std::vector<double> r2_grid;
    OptimizerConfig config;
};

/// One CSV row per grid cell; the layout matches the CLI's fixed header.
struct SweepRow {
    std::string family;
    std::string params;
    double s = 0.0;
    double r1 = 0.0;
    double r2 = 0.0;
    double b = 0.0;
    double i_value = 0.0;
    double j_value = 0.0;
    int k = 1;
    int restarts = 0;
    long evals = 0;
    bool boundary_hit = false;
    std::uint64_t seed = 0;
    BellAssignment argmax;
};

/// Runs supremum_b over the (s, r1[, r2]) grid in lexicographic order.
/// Each cell gets a seed derived from config.seed and the cell index, so the
/// table is reproducible cell by cell.
std::vector<SweepRow> sweep(const SweepSpec& spec);

/// Splitmix64 step; used everywhere a derived deterministic seed is needed.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);

} // namespace cvnet
