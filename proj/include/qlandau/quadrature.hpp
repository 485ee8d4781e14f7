#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "qlandau/constants.hpp"

namespace qlandau {

struct QuadRule {
    std::vector<double> nodes;   // on [-1, 1]
    std::vector<double> weights;
};

// 16-point Gauss-Legendre rule; nodes by Newton iteration on P_16.
inline const QuadRule& gauss_legendre_16() {
    static const QuadRule rule = [] {
        constexpr int n = 16;
        QuadRule r;
        r.nodes.resize(n);
        r.weights.resize(n);
        for (int i = 1; i <= n / 2; ++i) {
            double x = std::cos(PI * (i - 0.25) / (n + 0.5));
            double dp = 0.0;
            for (int it = 0; it < 100; ++it) {
                double p0 = 1.0, p1 = x;
                for (int k = 2; k <= n; ++k) {
                    const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n * (x * p1 - p0) / (x * x - 1.0);
                const double dx = p1 / dp;
                x -= dx;
                if (std::abs(dx) < 1e-15) break;
            }
            const double w = 2.0 / ((1.0 - x * x) * dp * dp);
            r.nodes[2 * (i - 1)] = x;
            r.nodes[2 * (i - 1) + 1] = -x;
            r.weights[2 * (i - 1)] = w;
            r.weights[2 * (i - 1) + 1] = w;
        }
        return r;
    }();
    return rule;
}

// Nodes/weights of the composite 16-point rule over [a, b] with `panels`
// equal panels, in fixed (deterministic) order.
inline void composite_gl16(double a, double b, int panels,
                           std::vector<double>& nodes, std::vector<double>& weights) {
    if (!(b > a)) throw std::invalid_argument("composite_gl16: need b > a");
    if (panels < 1) throw std::invalid_argument("composite_gl16: panels must be >= 1");
    const QuadRule& r = gauss_legendre_16();
    nodes.clear();
    weights.clear();
    nodes.reserve(16 * panels);
    weights.reserve(16 * panels);
    const double w = (b - a) / panels;
    for (int p = 0; p < panels; ++p) {
        const double lo = a + p * w;
        const double mid = lo + 0.5 * w;
        for (int i = 0; i < 16; ++i) {
            nodes.push_back(mid + 0.5 * w * r.nodes[i]);
            weights.push_back(0.5 * w * r.weights[i]);
        }
    }
}

template <typename F>
double integrate_gl16(F&& f, double a, double b, int panels) {
    std::vector<double> x, w;
    composite_gl16(a, b, panels, x, w);
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += w[i] * f(x[i]);
    return s;
}

} // namespace qlandau
