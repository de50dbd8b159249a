#include "cvnet/gaussian.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

namespace cvnet {

StsParams::StsParams(double v1_, double v2_, double r_) : v1(v1_), v2(v2_), r(r_) {
    if (!(v1 >= 1.0) || !(v2 >= 1.0))
        throw DomainError("thermal variances must satisfy v >= 1");
    if (!(r >= 0.0)) throw DomainError("squeeze factor must satisfy r >= 0");
}

Eigen::MatrixXd symplectic_form(int n) {
    if (n < 1) throw DomainError("symplectic_form: n must be >= 1");
    Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(2 * n, 2 * n);
    for (int j = 0; j < n; ++j) {
        omega(2 * j, 2 * j + 1) = 1.0;
        omega(2 * j + 1, 2 * j) = -1.0;
    }
    return omega;
}

ValidityReport validate(const GaussianState& state) {
    const int dim = 2 * state.modes;
    if (state.modes < 1 || state.cov.rows() != dim || state.cov.cols() != dim)
        throw StructuralError("validate: covariance must be 2n x 2n");

    ValidityReport rep;
    const double scale = std::max(1.0, state.cov.norm());
    rep.symmetry_defect = (state.cov - state.cov.transpose()).norm() / scale;
    rep.symmetric_ok = rep.symmetry_defect <= kSymmetryTol;

    Eigen::MatrixXcd h = state.cov.cast<Complex>()
                         + Complex(0.0, 1.0) * symplectic_form(state.modes).cast<Complex>();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h, Eigen::EigenvaluesOnly);
    rep.min_eigenvalue = es.eigenvalues().minCoeff();
    rep.psd_ok = rep.min_eigenvalue >= kPsdTol;

    rep.valid = rep.symmetric_ok && rep.psd_ok;
    return rep;
}

GaussianState epr_state(double r) {
    if (!(r >= 0.0)) throw DomainError("epr_state: r must be >= 0");
    const double c = std::cosh(2.0 * r);
    const double s2 = std::sinh(2.0 * r);
    GaussianState st;
    st.modes = 2;
    st.cov = Eigen::MatrixXd::Zero(4, 4);
    st.cov.diagonal().setConstant(c);
    st.cov(0, 2) = st.cov(2, 0) = s2;
    st.cov(1, 3) = st.cov(3, 1) = -s2;
    st.mean = Eigen::VectorXd::Zero(4);
    return st;
}

GaussianState sts_state(const StsParams& p) {
    const double ch2 = std::cosh(p.r) * std::cosh(p.r);
    const double sh2 = std::sinh(p.r) * std::sinh(p.r);
    const double a = p.v1 * ch2 + p.v2 * sh2;
    const double b = p.v1 * sh2 + p.v2 * ch2;
    const double c = 0.5 * (p.v1 + p.v2) * std::sinh(2.0 * p.r);
    GaussianState st;
    st.modes = 2;
    st.cov = Eigen::MatrixXd::Zero(4, 4);
    st.cov(0, 0) = st.cov(1, 1) = a;
    st.cov(2, 2) = st.cov(3, 3) = b;
    st.cov(0, 2) = st.cov(2, 0) = c;
    st.cov(1, 3) = st.cov(3, 1) = -c;
    st.mean = Eigen::VectorXd::Zero(4);
    return st;
}

bool sts_is_separable(const StsParams& p) {
    const double ch = std::cosh(p.r);
    return ch * ch <= (p.v1 + 1.0) * (p.v2 + 1.0) / (2.0 * (p.v1 + p.v2));
}

namespace {

// Dense solve with a condition guard; wigner and the quasiprob evaluators
// share the failure mode of a (near-)singular covariance.
Eigen::MatrixXd guarded_inverse(const Eigen::MatrixXd& m, const char* who) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
    const double lo = es.eigenvalues().minCoeff();
    const double hi = es.eigenvalues().maxCoeff();
    if (!(lo > 0.0) || hi / lo > 1e12)
        throw NumericError(std::string(who) + ": covariance singular or ill-conditioned");
    return es.eigenvectors()
           * es.eigenvalues().cwiseInverse().asDiagonal()
           * es.eigenvectors().transpose();
}

} // namespace

double wigner(const GaussianState& state, Complex a, Complex b) {
    if (state.modes != 2 || state.cov.rows() != 4)
        throw StructuralError("wigner: expects a 2-mode state");
    if (state.mean.size() == 4 && state.mean.norm() > 0.0)
        throw UnsupportedError("wigner: nonzero-mean states not supported");
    Eigen::Vector4d x(2.0 * a.real(), 2.0 * a.imag(), 2.0 * b.real(), 2.0 * b.imag());
    const Eigen::MatrixXd inv = guarded_inverse(state.cov, "wigner");
    const double det = state.cov.determinant();
    const double pref = 4.0 / (M_PI * M_PI * std::sqrt(det));
    return pref * std::exp(-0.5 * x.dot(inv * x));
}

Complex characteristic_fn(const GaussianState& state, const Eigen::VectorXd& u) {
    if (u.size() != 2 * state.modes)
        throw StructuralError("characteristic_fn: vector length must be 2n");
    const double quad = -0.25 * u.dot(state.cov * u);
    const double phase = state.mean.size() == u.size() ? state.mean.dot(u) : 0.0;
    return std::exp(quad) * Complex(std::cos(phase), std::sin(phase));
}

} // namespace cvnet
