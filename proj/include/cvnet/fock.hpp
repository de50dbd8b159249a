#pragma once

#include "cvnet/quasiprob.hpp"

namespace cvnet {

// Brute-force truncated-Fock-space reference implementation. Everything here
// is deliberately independent of the closed forms it validates: densities are
// built from number-state expansions and matrix exponentials, expectation
// values from explicit index contractions.

struct TruncatedOperator {
    int cutoff = 0;             // Fock levels 0..cutoff
    Eigen::MatrixXcd matrix;    // (cutoff+1) x (cutoff+1)
};

struct TruncatedDensity {
    int cutoff = 0;             // per mode
    Eigen::MatrixXcd matrix;    // (cutoff+1)^2 square, index m*(cutoff+1)+n
};

/// <m|D(alpha)|n> for D(alpha) = exp(alpha a^dag - alpha^* a), closed
/// associated-Laguerre form.
TruncatedOperator displacement_matrix(Complex alpha, int cutoff);

/// Pi(alpha; s) = sum_n ((s+1)/(s-1))^n |alpha,n><alpha,n| up to the cutoff.
TruncatedOperator pi_operator(Complex alpha, Smoothing s, int cutoff);

/// The bounded observable: (1-s) Pi + s I for -1 < s <= 0, 2 Pi - I for
/// s <= -1. Spectrum in [-1, 1].
TruncatedOperator o_operator(Complex alpha, Smoothing s, int cutoff);

/// Two-mode squeezed vacuum, sech(r) sum tanh^n(r) |n,n>.
TruncatedDensity epr_density(double r, int cutoff);

/// Squeezed thermal state: thermal(v1) x thermal(v2) conjugated by the
/// two-mode squeeze exp[r(a1^dag a2^dag - a1 a2)]. The squeeze preserves the
/// photon-number difference, so it is exponentiated block by block on the
/// difference subspaces (built with 10 extra levels, then truncated).
TruncatedDensity sts_density(double v1, double v2, double r, int cutoff);

/// Tr[(O(alpha) x O(beta)) rho], contracted blockwise without ever forming
/// the tensor product.
double two_point_trace(const TruncatedDensity& rho, Complex alpha, Complex beta,
                       Smoothing s);

/// Q(alpha, beta; s) = (2/(pi(1-s)))^2 Tr[(Pi(alpha) x Pi(beta)) rho].
double q_oracle(const TruncatedDensity& rho, Complex alpha, Complex beta,
                Smoothing s);

/// Reduced one-mode density matrix; keep = 0 retains the first mode.
Eigen::MatrixXcd partial_trace(const TruncatedDensity& rho, int keep);

/// Cutoff for which the squeezed-vacuum amplitude tail drops below 1e-12 and
/// displaced states up to |alpha| = max_abs_alpha are well represented.
int suggested_cutoff(double r, double max_abs_alpha);

} // namespace cvnet
