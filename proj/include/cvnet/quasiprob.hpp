#pragma once

#include <vector>

#include "cvnet/gaussian.hpp"

namespace cvnet {

/// Order parameter of the generalized quasiprobability family. Restricted to
/// s <= 0 at construction; for s > 0 the underlying measurement operators
/// have unbounded spectrum and nothing downstream is meaningful.
class Smoothing {
public:
    explicit Smoothing(double s);
    double value() const { return s_; }

private:
    double s_;
};

/// Q(alpha, beta; s) of the two-mode squeezed vacuum with squeezing r.
double q_epr(double r, Complex alpha, Complex beta, Smoothing s);

/// Single-arm marginal of the EPR quasiprobability.
double q_epr_marginal(double r, Complex alpha, Smoothing s);

/// Q(alpha, beta; s) of the (1+1)-mode squeezed thermal state.
double q_sts(const StsParams& p, Complex alpha, Complex beta, Smoothing s);

enum class Arm { First, Second };

/// Marginal of the STS quasiprobability on one arm. The two arms differ when
/// v1 != v2.
double q_sts_marginal(const StsParams& p, Complex alpha, Smoothing s, Arm arm);

/// Smoothed Wigner function of an arbitrary zero-mean Gaussian state:
/// Gaussian density with covariance cov + |s| I, prefactor 2^n / (pi^n sqrt(det)).
double q_generic(const GaussianState& state, const std::vector<Complex>& point,
                 Smoothing s);

/// Same, after marginalizing down to the listed modes (0-based, strictly
/// increasing). Marginalization keeps the principal submatrix of the smoothed
/// covariance.
double q_generic_marginal(const GaussianState& state, const std::vector<int>& kept,
                          const std::vector<Complex>& point, Smoothing s);

enum class Sign { Plus, Minus };

/// C± = Q(a1,a2) ± Q(a1',a2') over joint evaluations of one source state.
double c_combinator(Sign sign, double q_joint, double q_joint_prime);

/// D± = [Q(a1)+Q(a2)] ± [Q(a1')+Q(a2')] over marginal evaluations.
double d_combinator(Sign sign, double q1, double q2, double q1p, double q2p);

/// Cached quasiprobability evaluator for one (1+1)-mode source. Precomputes
/// the inverse smoothed covariance and the log prefactors for the joint and
/// both marginals, so each evaluation is a handful of flops. This is the hot
/// path of the Bell engine and the optimizer.
class SourceQ {
public:
    SourceQ(const GaussianState& state, Smoothing s);

    double joint(Complex alpha, Complex beta) const;
    double marginal_first(Complex alpha) const;
    double marginal_second(Complex beta) const;
    double smoothing() const { return s_; }

private:
    double s_;
    Eigen::Matrix4d inv_joint_;
    Eigen::Matrix2d inv_first_;
    Eigen::Matrix2d inv_second_;
    double log_pref_joint_;
    double log_pref_first_;
    double log_pref_second_;
};

} // namespace cvnet
