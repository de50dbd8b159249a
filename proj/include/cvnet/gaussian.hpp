#pragma once

#include <Eigen/Dense>
#include <complex>

#include "cvnet/errors.hpp"

namespace cvnet {

using Complex = std::complex<double>;

// Quadrature convention: dimensionless quadratures with vacuum covariance
// equal to the identity, so the two-mode squeezed vacuum has diagonal
// entries cosh(2r). All closed forms in this library assume this scaling.

/// Zero-mean n-mode Gaussian state: 2n x 2n covariance matrix plus a mean
/// vector (carried for completeness; every constructor here emits mean 0).
struct GaussianState {
    int modes = 0;
    Eigen::MatrixXd cov;
    Eigen::VectorXd mean;
};

/// Squeezed-thermal-state parameters: thermal variances v_j = 2*nbar_j + 1
/// and the two-mode squeeze factor r. Throws DomainError on v < 1 or r < 0.
struct StsParams {
    double v1 = 1.0;
    double v2 = 1.0;
    double r = 0.0;

    StsParams(double v1_, double v2_, double r_);
};

/// Block-diagonal symplectic form: n copies of [[0,1],[-1,0]].
Eigen::MatrixXd symplectic_form(int n);

struct ValidityReport {
    double symmetry_defect = 0.0;   // relative, ||G - G^T|| / max(1, ||G||)
    double min_eigenvalue = 0.0;    // of the Hermitian matrix G + i*Omega
    bool symmetric_ok = false;
    bool psd_ok = false;
    bool valid = false;
};

constexpr double kSymmetryTol = 1e-12;
constexpr double kPsdTol = -1e-10;

/// Checks the bona-fide covariance conditions: symmetry and G + i*Omega >= 0.
ValidityReport validate(const GaussianState& state);

/// Two-mode squeezed vacuum with squeezing parameter r >= 0.
GaussianState epr_state(double r);

/// (1+1)-mode squeezed thermal state.
GaussianState sts_state(const StsParams& p);

/// PPT separability condition for the (1+1)-mode STS.
bool sts_is_separable(const StsParams& p);

/// Wigner function of a zero-mean 2-mode state at phase-space point (a, b).
double wigner(const GaussianState& state, Complex a, Complex b);

/// Gaussian characteristic function exp(-u^T G u / 4 + i d^T u).
Complex characteristic_fn(const GaussianState& state, const Eigen::VectorXd& u);

} // namespace cvnet
