#include "cvnet/fock.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <unsupported/Eigen/MatrixFunctions>

namespace cvnet {

namespace {

using CMat = Eigen::MatrixXcd;

double log_factorial(int n) { return std::lgamma(n + 1.0); }

// Associated Laguerre L_k^{(a)}(x) by the three-term recurrence.
double laguerre(int k, int a, double x) {
    if (k == 0) return 1.0;
    double lm1 = 1.0;
    double l = 1.0 + a - x;
    for (int j = 1; j < k; ++j) {
        const double lp1 = ((2.0 * j + 1.0 + a - x) * l - (j + a) * lm1) / (j + 1.0);
        lm1 = l;
        l = lp1;
    }
    return l;
}

} // namespace

TruncatedOperator displacement_matrix(Complex alpha, int cutoff) {
    if (cutoff < 8) throw DomainError("displacement_matrix: cutoff must be >= 8");
    const int d = cutoff + 1;
    const double x = std::norm(alpha);
    TruncatedOperator op{cutoff, CMat(d, d)};
    for (int m = 0; m < d; ++m) {
        for (int n = 0; n < d; ++n) {
            const int lo = std::min(m, n), hi = std::max(m, n);
            const double mag = std::exp(0.5 * (log_factorial(lo) - log_factorial(hi)) - 0.5 * x)
                               * laguerre(lo, hi - lo, x);
            Complex pref = m >= n ? std::pow(alpha, m - n)
                                  : std::pow(-std::conj(alpha), n - m);
            op.matrix(m, n) = pref * mag;
        }
    }
    return op;
}

TruncatedOperator pi_operator(Complex alpha, Smoothing s, int cutoff) {
    const int d = cutoff + 1;
    const double ratio = (s.value() + 1.0) / (s.value() - 1.0);
    const TruncatedOperator disp = displacement_matrix(alpha, cutoff);
    Eigen::VectorXd weights(d);
    double w = 1.0;
    for (int n = 0; n < d; ++n) {
        weights(n) = w;
        w *= ratio;
    }
    TruncatedOperator op{cutoff,
                         disp.matrix * weights.asDiagonal() * disp.matrix.adjoint()};
    return op;
}

TruncatedOperator o_operator(Complex alpha, Smoothing s, int cutoff) {
    TruncatedOperator pi = pi_operator(alpha, s, cutoff);
    const double sv = s.value();
    if (sv > -1.0) {
        pi.matrix *= (1.0 - sv);
        pi.matrix.diagonal().array() += sv;
    } else {
        pi.matrix *= 2.0;
        pi.matrix.diagonal().array() -= 1.0;
    }
    return pi;
}

TruncatedDensity epr_density(double r, int cutoff) {
    if (r < 0.0) throw DomainError("epr_density: r must be >= 0");
    if (cutoff < 8) throw DomainError("epr_density: cutoff must be >= 8");
    const double t = std::tanh(r);
    if (r > 0.0 && std::pow(t, 2.0 * (cutoff + 1)) > 1e-4)
        throw ResourceError("epr_density: cutoff too small for r="
                            + std::to_string(r) + "; suggest N >= "
                            + std::to_string(suggested_cutoff(r, 0.0)));
    const int d = cutoff + 1;
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(d * d);
    const double sech = 1.0 / std::cosh(r);
    double amp = sech;
    for (int n = 0; n < d; ++n) {
        psi(n * d + n) = amp;
        amp *= t;
    }
    return {cutoff, psi * psi.adjoint()};
}

TruncatedDensity sts_density(double v1, double v2, double r, int cutoff) {
    const StsParams p(v1, v2, r);  // validates the parameter domain
    if (cutoff < 8) throw DomainError("sts_density: cutoff must be >= 8");
    const double decay = std::max({std::tanh(r), (v1 - 1.0) / (v1 + 1.0),
                                   (v2 - 1.0) / (v2 + 1.0)});
    if (decay > 0.0 && std::pow(decay, 2.0 * (cutoff + 1)) > 1e-4) {
        const int n = static_cast<int>(
            std::ceil(12.0 * std::log(10.0) / (-2.0 * std::log(decay))));
        throw ResourceError("sts_density: cutoff too small; suggest N >= "
                            + std::to_string(n));
    }

    const int d = cutoff + 1;
    const int db = cutoff + 11;  // build margin, truncated away below
    auto thermal = [&](double v, int n) {
        return 2.0 / (v + 1.0) * std::pow((v - 1.0) / (v + 1.0), n);
    };

    CMat rho = CMat::Zero(d * d, d * d);
    // The squeeze generator r(a1^dag a2^dag - a1 a2) only couples |m,n> to
    // |m±1,n±1>, so each photon-number-difference subspace evolves under a
    // small tridiagonal skew-symmetric block; exponentiate those instead of
    // the full two-mode generator.
    for (int diff = -db; diff <= db; ++diff) {
        const int n0 = std::max(0, -diff);
        const int n1 = db - std::max(0, diff);
        const int len = n1 - n0 + 1;
        if (len <= 0) continue;

        Eigen::MatrixXd gen = Eigen::MatrixXd::Zero(len, len);
        for (int j = 0; j + 1 < len; ++j) {
            const int n = n0 + j;
            const int m = n + diff;
            const double g = r * std::sqrt((m + 1.0) * (n + 1.0));
            gen(j + 1, j) = g;
            gen(j, j + 1) = -g;
        }
        const Eigen::MatrixXd u = gen.exp();

        Eigen::VectorXd w(len);
        for (int j = 0; j < len; ++j)
            w(j) = thermal(v1, n0 + j + diff) * thermal(v2, n0 + j);
        const Eigen::MatrixXd block = u * w.asDiagonal() * u.transpose();

        for (int j = 0; j < len; ++j) {
            const int m = n0 + j + diff, n = n0 + j;
            if (m > cutoff || n > cutoff) continue;
            for (int jp = 0; jp < len; ++jp) {
                const int mp = n0 + jp + diff, np = n0 + jp;
                if (mp > cutoff || np > cutoff) continue;
                rho(m * d + n, mp * d + np) = block(j, jp);
            }
        }
    }
    return {cutoff, std::move(rho)};
}

namespace {

// Tr[(A x B) rho] without forming the tensor product: one d x d pass of
// blockwise traces against B, then a trace against A.
Complex contract_pair(const TruncatedDensity& rho, const CMat& a, const CMat& b) {
    const int d = rho.cutoff + 1;
    const CMat bt = b.transpose();
    CMat s(d, d);
    for (int p = 0; p < d; ++p)
        for (int m = 0; m < d; ++m)
            s(p, m) = (rho.matrix.block(p * d, m * d, d, d).array() * bt.array()).sum();
    return (s * a).trace();
}

void check_cutoff(const TruncatedDensity& rho, const TruncatedOperator& op,
                  const char* who) {
    if (rho.cutoff != op.cutoff)
        throw StructuralError(std::string(who) + ": operator/density cutoff mismatch");
}

} // namespace

double two_point_trace(const TruncatedDensity& rho, Complex alpha, Complex beta,
                       Smoothing s) {
    const TruncatedOperator oa = o_operator(alpha, s, rho.cutoff);
    const TruncatedOperator ob = o_operator(beta, s, rho.cutoff);
    check_cutoff(rho, oa, "two_point_trace");
    return contract_pair(rho, oa.matrix, ob.matrix).real();
}

double q_oracle(const TruncatedDensity& rho, Complex alpha, Complex beta,
                Smoothing s) {
    const TruncatedOperator pa = pi_operator(alpha, s, rho.cutoff);
    const TruncatedOperator pb = pi_operator(beta, s, rho.cutoff);
    check_cutoff(rho, pa, "q_oracle");
    const double pref = 2.0 / (M_PI * (1.0 - s.value()));
    return pref * pref * contract_pair(rho, pa.matrix, pb.matrix).real();
}

Eigen::MatrixXcd partial_trace(const TruncatedDensity& rho, int keep) {
    if (keep != 0 && keep != 1)
        throw StructuralError("partial_trace: keep must be 0 or 1");
    const int d = rho.cutoff + 1;
    CMat out = CMat::Zero(d, d);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            for (int t = 0; t < d; ++t)
                out(a, b) += keep == 0 ? rho.matrix(a * d + t, b * d + t)
                                       : rho.matrix(t * d + a, t * d + b);
    return out;
}

int suggested_cutoff(double r, double max_abs_alpha) {
    int from_squeeze = 8;
    const double t = std::tanh(r);
    if (t > 0.0)
        from_squeeze = static_cast<int>(std::ceil(12.0 * std::log(10.0)
                                                  / (-2.0 * std::log(t))));
    const int from_disp = static_cast<int>(
        std::ceil(max_abs_alpha * max_abs_alpha + 6.0 * max_abs_alpha + 10.0));
    return std::clamp(std::max(from_squeeze, from_disp), 8, 250);
}

} // namespace cvnet
