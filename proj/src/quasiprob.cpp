#include "cvnet/quasiprob.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

namespace cvnet {

Smoothing::Smoothing(double s) : s_(s) {
    if (!(s <= 0.0)) throw DomainError("smoothing order must satisfy s <= 0");
}

double q_epr(double r, Complex alpha, Complex beta, Smoothing s) {
    if (r < 0.0) throw DomainError("q_epr: r must be >= 0");
    const double sv = s.value();
    const double c2r = std::cosh(2.0 * r);
    const double s2r = std::sinh(2.0 * r);
    const double R = sv * sv - 2.0 * sv * c2r + 1.0;
    const double S = c2r - sv;
    const double cross = 2.0 * (alpha * beta).real();  // alpha beta + c.c.
    const double expo = -(2.0 / R)
        * (S * (std::norm(alpha) + std::norm(beta)) - s2r * cross);
    return 4.0 / (M_PI * M_PI * R) * std::exp(expo);
}

double q_epr_marginal(double r, Complex alpha, Smoothing s) {
    if (r < 0.0) throw DomainError("q_epr_marginal: r must be >= 0");
    const double S = std::cosh(2.0 * r) - s.value();
    return 2.0 / (M_PI * S) * std::exp(-2.0 * std::norm(alpha) / S);
}

namespace {

struct StsScalars {
    double a;   // determinant-like denominator
    double a1;
    double a2;
    double s2r; // sinh 2r
    double vsum;
};

StsScalars sts_scalars(const StsParams& p, double sv) {
    const double ch2 = std::cosh(p.r) * std::cosh(p.r);
    StsScalars sc;
    sc.vsum = p.v1 + p.v2;
    sc.a = -2.0 * ch2 * sv * sc.vsum + (p.v1 + sv) * (p.v2 + sv);
    sc.a1 = sc.vsum * ch2 - p.v1 - sv;
    sc.a2 = sc.vsum * ch2 - p.v2 - sv;
    sc.s2r = std::sinh(2.0 * p.r);
    return sc;
}

} // namespace

double q_sts(const StsParams& p, Complex alpha, Complex beta, Smoothing s) {
    const StsScalars sc = sts_scalars(p, s.value());
    const double cross = 2.0 * (alpha * beta).real();
    const double expo = -(2.0 / sc.a)
        * (sc.a1 * std::norm(alpha) + sc.a2 * std::norm(beta)
           - 0.5 * sc.vsum * sc.s2r * cross);
    return 4.0 / (M_PI * M_PI * sc.a) * std::exp(expo);
}

double q_sts_marginal(const StsParams& p, Complex alpha, Smoothing s, Arm arm) {
    const StsScalars sc = sts_scalars(p, s.value());
    const double denom = arm == Arm::First ? sc.a2 : sc.a1;
    return 2.0 / (M_PI * denom) * std::exp(-2.0 * std::norm(alpha) / denom);
}

namespace {

// log prefactor + inverse of a smoothed covariance block; shared by the
// generic evaluators and SourceQ.
struct GaussKernel {
    Eigen::MatrixXd inv;
    double log_pref;
};

GaussKernel kernel_for(const Eigen::MatrixXd& cov_s, const char* who) {
    const int n = static_cast<int>(cov_s.rows()) / 2;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(cov_s);
    const double lo = es.eigenvalues().minCoeff();
    const double hi = es.eigenvalues().maxCoeff();
    if (!(lo > 0.0) || hi / lo > 1e12)
        throw NumericError(std::string(who) + ": smoothed covariance singular or ill-conditioned");
    GaussKernel k;
    k.inv = es.eigenvectors()
            * es.eigenvalues().cwiseInverse().asDiagonal()
            * es.eigenvectors().transpose();
    k.log_pref = n * std::log(2.0 / M_PI)
                 - 0.5 * es.eigenvalues().array().log().sum();
    return k;
}

double eval_kernel(const GaussKernel& k, const std::vector<Complex>& point) {
    Eigen::VectorXd x(2 * point.size());
    for (size_t j = 0; j < point.size(); ++j) {
        x(2 * j) = 2.0 * point[j].real();
        x(2 * j + 1) = 2.0 * point[j].imag();
    }
    return std::exp(k.log_pref - 0.5 * x.dot(k.inv * x));
}

void require_zero_mean(const GaussianState& state, const char* who) {
    if (state.mean.size() > 0 && state.mean.norm() > 0.0)
        throw UnsupportedError(std::string(who) + ": nonzero-mean states not supported");
}

} // namespace

double q_generic(const GaussianState& state, const std::vector<Complex>& point,
                 Smoothing s) {
    if (static_cast<int>(point.size()) != state.modes)
        throw StructuralError("q_generic: point length must equal mode count");
    require_zero_mean(state, "q_generic");
    Eigen::MatrixXd cov_s = state.cov;
    cov_s.diagonal().array() += std::abs(s.value());
    return eval_kernel(kernel_for(cov_s, "q_generic"), point);
}

double q_generic_marginal(const GaussianState& state, const std::vector<int>& kept,
                          const std::vector<Complex>& point, Smoothing s) {
    if (kept.empty() || kept.size() != point.size())
        throw StructuralError("q_generic_marginal: kept set empty or mismatched with point");
    for (size_t j = 0; j < kept.size(); ++j) {
        if (kept[j] < 0 || kept[j] >= state.modes)
            throw StructuralError("q_generic_marginal: mode index out of range");
        if (j > 0 && kept[j] <= kept[j - 1])
            throw StructuralError("q_generic_marginal: kept modes must be strictly increasing");
    }
    require_zero_mean(state, "q_generic_marginal");

    const int m = static_cast<int>(kept.size());
    Eigen::MatrixXd sub(2 * m, 2 * m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            sub.block<2, 2>(2 * a, 2 * b) =
                state.cov.block<2, 2>(2 * kept[a], 2 * kept[b]);
    sub.diagonal().array() += std::abs(s.value());
    return eval_kernel(kernel_for(sub, "q_generic_marginal"), point);
}

double c_combinator(Sign sign, double q_joint, double q_joint_prime) {
    return sign == Sign::Plus ? q_joint + q_joint_prime : q_joint - q_joint_prime;
}

double d_combinator(Sign sign, double q1, double q2, double q1p, double q2p) {
    return sign == Sign::Plus ? (q1 + q2) + (q1p + q2p) : (q1 + q2) - (q1p + q2p);
}

SourceQ::SourceQ(const GaussianState& state, Smoothing s) : s_(s.value()) {
    if (state.modes != 2 || state.cov.rows() != 4)
        throw StructuralError("SourceQ: expects a (1+1)-mode state");
    require_zero_mean(state, "SourceQ");
    const ValidityReport rep = validate(state);
    if (!rep.valid) throw DomainError("SourceQ: covariance fails the validity check");

    Eigen::MatrixXd cov_s = state.cov;
    cov_s.diagonal().array() += std::abs(s_);

    const GaussKernel joint = kernel_for(cov_s, "SourceQ");
    inv_joint_ = joint.inv;
    log_pref_joint_ = joint.log_pref;

    const GaussKernel first = kernel_for(cov_s.topLeftCorner<2, 2>(), "SourceQ");
    inv_first_ = first.inv;
    log_pref_first_ = first.log_pref;

    const GaussKernel second = kernel_for(cov_s.bottomRightCorner<2, 2>(), "SourceQ");
    inv_second_ = second.inv;
    log_pref_second_ = second.log_pref;
}

double SourceQ::joint(Complex alpha, Complex beta) const {
    Eigen::Vector4d x(2.0 * alpha.real(), 2.0 * alpha.imag(),
                      2.0 * beta.real(), 2.0 * beta.imag());
    return std::exp(log_pref_joint_ - 0.5 * x.dot(inv_joint_ * x));
}

double SourceQ::marginal_first(Complex alpha) const {
    Eigen::Vector2d x(2.0 * alpha.real(), 2.0 * alpha.imag());
    return std::exp(log_pref_first_ - 0.5 * x.dot(inv_first_ * x));
}

double SourceQ::marginal_second(Complex beta) const {
    Eigen::Vector2d x(2.0 * beta.real(), 2.0 * beta.imag());
    return std::exp(log_pref_second_ - 0.5 * x.dot(inv_second_ * x));
}

} // namespace cvnet
