#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace cvnet {

// Gauss-Legendre rule on [-1, 1], nodes by Newton iteration on P_n. Used by
// the verification suites to integrate smooth Gaussian integrands over a
// finite box; 96 points per axis is far more than 1e-6 accuracy needs.
struct GaussLegendre {
    std::vector<double> nodes;
    std::vector<double> weights;

    explicit GaussLegendre(int n) : nodes(n), weights(n) {
        for (int i = 0; i < (n + 1) / 2; ++i) {
            double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
            double pp = 0.0;
            for (int iter = 0; iter < 100; ++iter) {
                double p0 = 1.0, p1 = 0.0;
                for (int j = 0; j < n; ++j) {
                    const double p2 = p1;
                    p1 = p0;
                    p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
                }
                pp = n * (x * p0 - p1) / (x * x - 1.0);
                const double dx = p0 / pp;
                x -= dx;
                if (std::abs(dx) < 1e-15) break;
            }
            nodes[i] = -x;
            nodes[n - 1 - i] = x;
            weights[i] = weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * pp * pp);
        }
    }
};

/// Integrates f(x, y) over the square [-half, half]^2 identified with the
/// complex plane (x = Re, y = Im).
template <typename F>
double integrate_plane(const F& f, double half, int n = 96) {
    const GaussLegendre gl(n);
    double total = 0.0;
    for (size_t a = 0; a < gl.nodes.size(); ++a)
        for (size_t b = 0; b < gl.nodes.size(); ++b)
            total += gl.weights[a] * gl.weights[b]
                     * f(half * gl.nodes[a], half * gl.nodes[b]);
    return total * half * half;
}

} // namespace cvnet
