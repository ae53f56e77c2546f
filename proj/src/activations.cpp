#include "sobrf/activations.hpp"

#include <cmath>
#include <stdexcept>

#include "sobrf/quadrature.hpp"

namespace sobrf {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

double hermite_he(int k, double z) {
    switch (k) {
        case 0: return 1.0;
        case 1: return z;
        case 2: return z * z - 1.0;
        case 3: return z * (z * z - 3.0);
        case 4: return (z * z) * (z * z) - 6.0 * z * z + 3.0;
        default: throw std::invalid_argument("hermite_he: order > 4");
    }
}

double sigmoid(double z) { return 1.0 / (1.0 + std::exp(-z)); }

}  // namespace

double ActivationSpec::value(double z) const {
    switch (kind) {
        case Kind::ReLU: return z > 0.0 ? z : 0.0;
        case Kind::Erf: return std::erf(z);
        case Kind::SiLU: return z * sigmoid(z);
        case Kind::Identity: return z;
        case Kind::HermitePoly: {
            double s = 0.0, fact = 1.0;
            for (int k = 0; k <= 4; ++k) {
                if (k > 0) fact *= k;
                s += hermite[k] / std::sqrt(fact) * hermite_he(k, z);
            }
            return s;
        }
        case Kind::Custom: return f(z);
    }
    return 0.0;
}

double ActivationSpec::deriv(double z) const {
    switch (kind) {
        case Kind::ReLU: return z > 0.0 ? 1.0 : 0.0;  // weak derivative, 0 at the kink
        case Kind::Erf: return 2.0 / std::sqrt(kPi) * std::exp(-z * z);
        case Kind::SiLU: {
            double s = sigmoid(z);
            return s * (1.0 + z * (1.0 - s));
        }
        case Kind::Identity: return 1.0;
        case Kind::HermitePoly: {
            double s = 0.0, fact = 1.0;
            for (int k = 1; k <= 4; ++k) {
                fact *= k;
                s += hermite[k] / std::sqrt(fact) * k * hermite_he(k - 1, z);
            }
            return s;
        }
        case Kind::Custom: return df(z);
    }
    return 0.0;
}

ActivationSpec ActivationSpec::relu() { return {Kind::ReLU, {}, {}, {}, "relu"}; }
ActivationSpec ActivationSpec::erf() { return {Kind::Erf, {}, {}, {}, "erf"}; }
ActivationSpec ActivationSpec::silu() { return {Kind::SiLU, {}, {}, {}, "silu"}; }
ActivationSpec ActivationSpec::identity() { return {Kind::Identity, {}, {}, {}, "identity"}; }

ActivationSpec ActivationSpec::hermite_poly(const std::array<double, 5>& s) {
    for (double c : s)
        if (!std::isfinite(c)) throw std::invalid_argument("hermite_poly: non-finite coefficient");
    ActivationSpec a;
    a.kind = Kind::HermitePoly;
    a.hermite = s;
    a.name = "hermite";
    return a;
}

ActivationSpec ActivationSpec::custom(std::function<double(double)> f,
                                      std::function<double(double)> df, std::string name) {
    ActivationSpec a;
    a.kind = Kind::Custom;
    a.f = std::move(f);
    a.df = std::move(df);
    a.name = std::move(name);
    return a;
}

ActivationSpec ActivationSpec::arctan() {
    return custom([](double z) { return std::atan(z); },
                  [](double z) { return 1.0 / (1.0 + z * z); }, "arctan");
}

ActivationSpec ActivationSpec::reci_cosh() {
    return custom([](double z) { return 1.0 / std::cosh(z); },
                  [](double z) { return -std::tanh(z) / std::cosh(z); }, "reci_cosh");
}

ActivationSpec ActivationSpec::arctan_plus_reci_cosh() {
    return custom([](double z) { return std::atan(z) + 1.0 / std::cosh(z); },
                  [](double z) { return 1.0 / (1.0 + z * z) - std::tanh(z) / std::cosh(z); },
                  "arctan_plus_reci_cosh");
}

ActivationSpec ActivationSpec::halfx_minus_gauss() {
    return custom([](double z) { return 0.5 * z - std::exp(-0.5 * z * z); },
                  [](double z) { return 0.5 + z * std::exp(-0.5 * z * z); }, "halfx_minus_gauss");
}

ActivationSpec ActivationSpec::by_name(const std::string& name) {
    if (name == "relu") return relu();
    if (name == "erf") return erf();
    if (name == "silu") return silu();
    if (name == "identity") return identity();
    if (name == "arctan") return arctan();
    if (name == "reci_cosh") return reci_cosh();
    if (name == "arctan_plus_reci_cosh") return arctan_plus_reci_cosh();
    if (name == "halfx_minus_gauss") return halfx_minus_gauss();
    throw std::invalid_argument("unknown activation/ridge name: " + name);
}

HermiteCoeffs hermite_coeffs(const ActivationSpec& spec, int quad_degree) {
    using Kind = ActivationSpec::Kind;
    HermiteCoeffs c;
    switch (spec.kind) {
        case Kind::ReLU: {
            c.kappa0 = 1.0 / std::sqrt(2.0 * kPi);
            c.kappa1 = 0.5;
            c.kappa1p = 1.0 / std::sqrt(2.0 * kPi);
            c.kappa_star = std::sqrt(0.25 - 1.0 / (2.0 * kPi));
            c.kappa_star_p = c.kappa_star;
            return c;
        }
        case Kind::Erf: {
            c.kappa0 = 0.0;
            c.kappa1 = 2.0 / std::sqrt(3.0 * kPi);
            c.kappa1p = 0.0;
            c.kappa_star = std::sqrt(2.0 / kPi * std::asin(2.0 / 3.0) - 4.0 / (3.0 * kPi));
            c.kappa_star_p =
                2.0 / std::sqrt(kPi) * std::sqrt((3.0 * std::sqrt(5.0) - 5.0) / 15.0);
            return c;
        }
        case Kind::Identity: {
            c.kappa1 = 1.0;
            return c;
        }
        case Kind::HermitePoly: {
            const auto& s = spec.hermite;
            c.kappa0 = s[0];
            c.kappa1 = s[1];
            c.kappa1p = std::sqrt(2.0) * s[2];
            c.kappa_star = std::sqrt(s[2] * s[2] + s[3] * s[3] + s[4] * s[4]);
            c.kappa_star_p = std::sqrt(3.0 * s[3] * s[3] + 4.0 * s[4] * s[4]);
            return c;
        }
        default: break;
    }

    if (spec.kind == Kind::Custom && quad_degree < 40)
        throw std::invalid_argument("hermite_coeffs: custom specs need quad_degree >= 40");
    QuadRule q = gauss_hermite_prob(quad_degree);
    double m0 = q.integrate([&](double z) { return spec.value(z); });
    double m1 = q.integrate([&](double z) { return z * spec.value(z); });
    double m2 = q.integrate([&](double z) { return spec.value(z) * spec.value(z); });
    double d0 = q.integrate([&](double z) { return spec.deriv(z); });
    double d1 = q.integrate([&](double z) { return z * spec.deriv(z); });
    double d2 = q.integrate([&](double z) { return spec.deriv(z) * spec.deriv(z); });
    for (double v : {m0, m1, m2, d0, d1, d2})
        if (!std::isfinite(v))
            throw std::runtime_error("hermite_coeffs: non-finite quadrature result");
    if (std::fabs(d0 - m1) > 1e-6)
        throw std::runtime_error("hermite_coeffs: E[s'] != E[xi s], inconsistent f/f' pair");
    double vs = m2 - m0 * m0 - m1 * m1;
    double vp = d2 - d0 * d0 - d1 * d1;
    if (vs < -1e-9 || vp < -1e-9)
        throw std::runtime_error("hermite_coeffs: negative remainder variance");
    c.kappa0 = m0;
    c.kappa1 = m1;
    c.kappa1p = d1;
    c.kappa_star = std::sqrt(std::max(0.0, vs));
    c.kappa_star_p = std::sqrt(std::max(0.0, vp));
    return c;
}

RidgeMoments ridge_moments(const ActivationSpec& spec, int quad_degree) {
    QuadRule q = gauss_hermite_prob(quad_degree);
    RidgeMoments r;
    r.mean_phi = q.integrate([&](double z) { return spec.value(z); });
    r.mean_dphi = q.integrate([&](double z) { return spec.deriv(z); });
    r.mean_ddphi = q.integrate([&](double z) { return z * spec.deriv(z); });  // Stein
    r.second_moment_phi = q.integrate([&](double z) { return spec.value(z) * spec.value(z); });
    r.second_moment_dphi = q.integrate([&](double z) { return spec.deriv(z) * spec.deriv(z); });
    for (double v : {r.mean_phi, r.mean_dphi, r.mean_ddphi, r.second_moment_phi,
                     r.second_moment_dphi})
        if (!std::isfinite(v))
            throw std::runtime_error("ridge_moments: non-finite quadrature result");
    return r;
}

}  // namespace sobrf
