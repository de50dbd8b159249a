#include "cvnet/bell.hpp"

#include <cmath>

namespace cvnet {

namespace {

// Affine coefficients of Tr[O x O rho] = cj * Q(joint) + cm * (marginals) + c0.
struct BranchCoeffs {
    double cj;
    double cm;
    double c0;
};

BranchCoeffs branch_coeffs(double s) {
    const double one_minus = 1.0 - s;
    if (s > -1.0) {
        return {M_PI * M_PI * std::pow(one_minus, 4) / 4.0,
                M_PI * s * one_minus * one_minus / 2.0,
                s * s};
    }
    return {M_PI * M_PI * one_minus * one_minus, -M_PI * one_minus, 1.0};
}

} // namespace

double two_point(const SourceQ& q, Complex alpha, Complex beta) {
    const BranchCoeffs c = branch_coeffs(q.smoothing());
    return c.cj * q.joint(alpha, beta)
           + c.cm * (q.marginal_first(alpha) + q.marginal_second(beta))
           + c.c0;
}

double two_point(const GaussianState& state, Complex alpha, Complex beta,
                 Smoothing s) {
    return two_point(SourceQ(state, s), alpha, beta);
}

double source_factor(const SourceQ& q, const SourceDisplacements& d,
                     PartyClass class_p, PartyClass class_q, Which which) {
    const bool p_in = class_p == PartyClass::InK;
    const bool q_in = class_q == PartyClass::InK;
    if (p_in && q_in)
        throw StructuralError("source_factor: both endpoints in the independent set");

    if (which == Which::I) {
        if (p_in) return two_point(q, d.a0, d.b0) + two_point(q, d.a1, d.b0);
        if (q_in) return two_point(q, d.a0, d.b0) + two_point(q, d.a0, d.b1);
        return two_point(q, d.a0, d.b0);
    }
    if (p_in) return two_point(q, d.a0, d.b1) - two_point(q, d.a1, d.b1);
    if (q_in) return two_point(q, d.a1, d.b0) - two_point(q, d.a1, d.b1);
    return two_point(q, d.a1, d.b1);
}

BellEngine::BellEngine(NetworkTopology topo, IndependentSet K,
                       std::vector<GaussianState> states, Smoothing s)
    : topo_(std::move(topo)), K_(std::move(K)) {
    if (states.size() != topo_.sources.size())
        throw StructuralError("BellEngine: one state per source required");
    classes_ = classify_parties(topo_, K_);
    sources_.reserve(states.size());
    for (const auto& st : states) sources_.emplace_back(st, s);
}

BellEvaluation BellEngine::evaluate(const BellAssignment& assignment) const {
    if (assignment.size() != sources_.size())
        throw StructuralError("BellEngine: assignment length must equal source count");

    // Log-magnitude plus sign accumulation; a large network multiplies many
    // factors below 1 and a plain product would underflow first.
    double log_i = 0.0, log_j = 0.0;
    int sign_i = 1, sign_j = 1;
    bool zero_i = false, zero_j = false;
    for (size_t si = 0; si < sources_.size(); ++si) {
        const auto [p, q] = topo_.sources[si];
        const double fi = source_factor(sources_[si], assignment[si],
                                        classes_[p], classes_[q], Which::I);
        const double fj = source_factor(sources_[si], assignment[si],
                                        classes_[p], classes_[q], Which::J);
        if (fi == 0.0) zero_i = true; else { log_i += std::log(std::abs(fi)); if (fi < 0.0) sign_i = -sign_i; }
        if (fj == 0.0) zero_j = true; else { log_j += std::log(std::abs(fj)); if (fj < 0.0) sign_j = -sign_j; }
    }

    BellEvaluation ev;
    ev.k = K_.k;
    const double log2k = K_.k * std::log(2.0);
    ev.i_value = zero_i ? 0.0 : sign_i * std::exp(log_i - log2k);
    ev.j_value = zero_j ? 0.0 : sign_j * std::exp(log_j - log2k);
    const double bi = zero_i ? 0.0 : std::exp((log_i - log2k) / K_.k);
    const double bj = zero_j ? 0.0 : std::exp((log_j - log2k) / K_.k);
    ev.b_value = bi + bj;
    return ev;
}

BellEvaluation bell_value(const NetworkTopology& topo, const IndependentSet& K,
                          const std::vector<GaussianState>& states,
                          const BellAssignment& assignment, Smoothing s) {
    return BellEngine(topo, K, states, s).evaluate(assignment);
}

namespace {

// The published family expressions, re-derived from the C±/D± combinators and
// plain products. Quasiprobabilities are evaluated through the generic
// covariance route, so this path shares no code with SourceQ beyond the state
// itself.
struct CombinatorSource {
    const GaussianState* state;
    SourceDisplacements d;

    double qj(Complex a, Complex b, Smoothing s) const {
        return q_generic(*state, {a, b}, s);
    }
    double m1(Complex a, Smoothing s) const {
        return q_generic_marginal(*state, {0}, {a}, s);
    }
    double m2(Complex b, Smoothing s) const {
        return q_generic_marginal(*state, {1}, {b}, s);
    }
};

double assemble(double s, double c_term, double d_term, double constant) {
    const double one_minus = 1.0 - s;
    if (s > -1.0)
        return M_PI * M_PI * std::pow(one_minus, 4) / 4.0 * c_term
               + M_PI * s * one_minus * one_minus / 2.0 * d_term
               + s * s * constant;
    return M_PI * M_PI * one_minus * one_minus * c_term
           - M_PI * one_minus * d_term + constant;
}

// Factor with the first endpoint in K: C/D combinators over the two inputs of
// that endpoint at the fixed input of the other.
double factor_first_in(const CombinatorSource& src, Smoothing s, Which which) {
    const auto& d = src.d;
    if (which == Which::I) {
        const double c = c_combinator(Sign::Plus, src.qj(d.a0, d.b0, s), src.qj(d.a1, d.b0, s));
        const double dd = d_combinator(Sign::Plus, src.m1(d.a0, s), src.m2(d.b0, s),
                                       src.m1(d.a1, s), src.m2(d.b0, s));
        return assemble(s.value(), c, dd, 2.0);
    }
    const double c = c_combinator(Sign::Minus, src.qj(d.a0, d.b1, s), src.qj(d.a1, d.b1, s));
    const double dd = d_combinator(Sign::Minus, src.m1(d.a0, s), src.m2(d.b1, s),
                                   src.m1(d.a1, s), src.m2(d.b1, s));
    return assemble(s.value(), c, dd, 0.0);
}

double factor_second_in(const CombinatorSource& src, Smoothing s, Which which) {
    const auto& d = src.d;
    if (which == Which::I) {
        const double c = c_combinator(Sign::Plus, src.qj(d.a0, d.b0, s), src.qj(d.a0, d.b1, s));
        const double dd = d_combinator(Sign::Plus, src.m1(d.a0, s), src.m2(d.b0, s),
                                       src.m1(d.a0, s), src.m2(d.b1, s));
        return assemble(s.value(), c, dd, 2.0);
    }
    const double c = c_combinator(Sign::Minus, src.qj(d.a1, d.b0, s), src.qj(d.a1, d.b1, s));
    const double dd = d_combinator(Sign::Minus, src.m1(d.a1, s), src.m2(d.b0, s),
                                   src.m1(d.a1, s), src.m2(d.b1, s));
    return assemble(s.value(), c, dd, 0.0);
}

// Closing source of the odd cycle (neither endpoint independent): half of the
// repeated-argument C+/D+ combination at input 0 (for I) or input 1 (for J).
double factor_neither_in(const CombinatorSource& src, Smoothing s, Which which) {
    const auto& d = src.d;
    const Complex a = which == Which::I ? d.a0 : d.a1;
    const Complex b = which == Which::I ? d.b0 : d.b1;
    const double c = c_combinator(Sign::Plus, src.qj(a, b, s), src.qj(a, b, s));
    const double dd = d_combinator(Sign::Plus, src.m1(a, s), src.m2(b, s),
                                   src.m1(a, s), src.m2(b, s));
    return 0.5 * assemble(s.value(), c, dd, 2.0);
}

} // namespace

BellEvaluation theorem_expression(TheoremFamily family,
                                  const NetworkTopology& topo,
                                  const IndependentSet& K,
                                  const std::vector<GaussianState>& states,
                                  const BellAssignment& assignment, Smoothing s) {
    const bool cycle = family == TheoremFamily::CycleOdd || family == TheoremFamily::CycleEven;
    if ((family == TheoremFamily::Chain && topo.family != Family::Chain)
        || (family == TheoremFamily::Star && topo.family != Family::Star)
        || (family == TheoremFamily::Tree && topo.family != Family::Tree)
        || (cycle && topo.family != Family::Cycle))
        throw StructuralError("theorem_expression: family does not match the topology");
    if (family == TheoremFamily::CycleOdd && topo.party_count % 2 == 0)
        throw StructuralError("theorem_expression: odd-cycle form on an even cycle");
    if (family == TheoremFamily::CycleEven && topo.party_count % 2 == 1)
        throw StructuralError("theorem_expression: even-cycle form on an odd cycle");
    if (states.size() != topo.sources.size() || assignment.size() != states.size())
        throw StructuralError("theorem_expression: states/assignment length mismatch");

    std::vector<char> in_k(topo.party_count + 1, 0);
    for (int j : K.members) in_k[j] = 1;

    double prod_i = 1.0, prod_j = 1.0;
    for (size_t si = 0; si < topo.sources.size(); ++si) {
        const auto [p, q] = topo.sources[si];
        const CombinatorSource src{&states[si], assignment[si]};
        double fi, fj;
        if (in_k[p] && !in_k[q]) {
            fi = factor_first_in(src, s, Which::I);
            fj = factor_first_in(src, s, Which::J);
        } else if (!in_k[p] && in_k[q]) {
            fi = factor_second_in(src, s, Which::I);
            fj = factor_second_in(src, s, Which::J);
        } else if (!in_k[p] && !in_k[q]) {
            fi = factor_neither_in(src, s, Which::I);
            fj = factor_neither_in(src, s, Which::J);
        } else {
            throw StructuralError("theorem_expression: K is not independent");
        }
        prod_i *= fi;
        prod_j *= fj;
    }

    BellEvaluation ev;
    ev.k = K.k;
    const double norm = std::pow(2.0, -K.k);
    ev.i_value = norm * prod_i;
    ev.j_value = norm * prod_j;
    ev.b_value = std::pow(std::abs(ev.i_value), 1.0 / K.k)
                 + std::pow(std::abs(ev.j_value), 1.0 / K.k);
    return ev;
}

} // namespace cvnet
