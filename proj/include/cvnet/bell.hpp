#pragma once

#include <vector>

#include "cvnet/network.hpp"
#include "cvnet/quasiprob.hpp"

namespace cvnet {

/// The four phase-space displacements attached to one source: a0/a1 for the
/// first arm under party input x=0/x=1, b0/b1 likewise for the second arm.
struct SourceDisplacements {
    Complex a0{0.0, 0.0};
    Complex a1{0.0, 0.0};
    Complex b0{0.0, 0.0};
    Complex b1{0.0, 0.0};
};

using BellAssignment = std::vector<SourceDisplacements>;

struct BellEvaluation {
    double i_value = 0.0;
    double j_value = 0.0;
    int k = 1;
    double b_value = 0.0;  // |I|^{1/k} + |J|^{1/k}
};

/// Tr[O(alpha) (x) O(beta) rho] for one (1+1)-mode source, where O is the
/// bounded measurement observable of order s. Two branches:
///   -1 < s <= 0:  pi^2 (1-s)^4/4 Q(a,b) + pi s (1-s)^2/2 [Q(a)+Q(b)] + s^2
///   s <= -1:      pi^2 (1-s)^2   Q(a,b) - pi (1-s)      [Q(a)+Q(b)] + 1
/// They coincide at s = -1. Always in [-1, 1] up to roundoff.
double two_point(const SourceQ& q, Complex alpha, Complex beta);

/// Convenience overload building the cached evaluator on the fly.
double two_point(const GaussianState& state, Complex alpha, Complex beta,
                 Smoothing s);

enum class Which { I, J };

/// Per-source factor of the factorized I/J products. The InK endpoint sums
/// (I) or differences (J) over its two inputs; the NotInK endpoint is pinned
/// to input 0 for I and input 1 for J. When neither endpoint is in K (the odd
/// cycle's closing source) the factor collapses to a single correlator.
/// Both endpoints InK is a contract violation.
double source_factor(const SourceQ& q, const SourceDisplacements& d,
                     PartyClass class_p, PartyClass class_q, Which which);

/// Bound evaluator for one (topology, K, source states, s) configuration.
/// Construction does all validation and covariance preprocessing; evaluate()
/// is cheap and called millions of times by the optimizer.
class BellEngine {
public:
    BellEngine(NetworkTopology topo, IndependentSet K,
               std::vector<GaussianState> states, Smoothing s);

    BellEvaluation evaluate(const BellAssignment& assignment) const;

    int k() const { return K_.k; }
    int source_count() const { return static_cast<int>(topo_.sources.size()); }
    const NetworkTopology& topology() const { return topo_; }
    const IndependentSet& independent_set() const { return K_; }

private:
    NetworkTopology topo_;
    IndependentSet K_;
    std::vector<PartyClass> classes_;
    std::vector<SourceQ> sources_;
};

/// One-shot evaluation: I = 2^{-k} prod(I-factors), J likewise,
/// B = |I|^{1/k} + |J|^{1/k}.
BellEvaluation bell_value(const NetworkTopology& topo, const IndependentSet& K,
                          const std::vector<GaussianState>& states,
                          const BellAssignment& assignment, Smoothing s);

enum class TheoremFamily { Chain, Star, Tree, CycleOdd, CycleEven };

/// Independent transcription of the published closed-form Bell expressions
/// for the four network families, written with the C±/D± combinators and
/// plain products. Exists solely to regression-test bell_value; do not use
/// it as the engine.
BellEvaluation theorem_expression(TheoremFamily family,
                                  const NetworkTopology& topo,
                                  const IndependentSet& K,
                                  const std::vector<GaussianState>& states,
                                  const BellAssignment& assignment, Smoothing s);

} // namespace cvnet
