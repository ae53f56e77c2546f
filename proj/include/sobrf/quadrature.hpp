#pragma once

#include <vector>

namespace sobrf {

/// Nodes and weights of a one-dimensional quadrature rule.
struct QuadRule {
    std::vector<double> nodes;
    std::vector<double> weights;

    template <class F>
    double integrate(F&& f) const {
        double s = 0.0;
        for (std::size_t i = 0; i < nodes.size(); ++i) s += weights[i] * f(nodes[i]);
        return s;
    }
};

/// Gauss-Hermite rule for the standard normal weight exp(-x^2/2)/sqrt(2*pi).
/// Weights sum to 1, so integrate(f) approximates E[f(X)], X ~ N(0,1).
QuadRule gauss_hermite_prob(int degree);

/// Gauss-Legendre rule on [a, b].
QuadRule gauss_legendre(int n, double a, double b);

}  // namespace sobrf
