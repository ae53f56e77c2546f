#pragma once

#include <array>
#include <functional>
#include <string>

namespace sobrf {

/// Scalar nonlinearity with a pointwise-evaluable weak derivative. Used both
/// for network activations sigma and teacher ridge functions phi.
struct ActivationSpec {
    enum class Kind { ReLU, Erf, SiLU, Identity, HermitePoly, Custom };

    Kind kind = Kind::ReLU;
    std::array<double, 5> hermite{};  // HermitePoly coefficients sigma_0..sigma_4
    std::function<double(double)> f, df;
    std::string name = "relu";

    double value(double z) const;
    double deriv(double z) const;

    static ActivationSpec relu();
    static ActivationSpec erf();
    static ActivationSpec silu();
    static ActivationSpec identity();
    static ActivationSpec hermite_poly(const std::array<double, 5>& s);
    static ActivationSpec custom(std::function<double(double)> f,
                                 std::function<double(double)> df,
                                 std::string name = "custom");

    // Teacher ridge functions used throughout.
    static ActivationSpec arctan();
    static ActivationSpec reci_cosh();
    static ActivationSpec arctan_plus_reci_cosh();
    static ActivationSpec halfx_minus_gauss();  // z/2 - exp(-z^2/2)

    /// Lookup by name (the CLI surface); throws on unknown names.
    static ActivationSpec by_name(const std::string& name);
};

/// Low-order Hermite data of an activation and its derivative:
/// kappa0 = E[s(xi)], kappa1 = E[xi s(xi)] = E[s'(xi)], kappa1p = E[xi s'(xi)],
/// kappa_star^2 = E[s^2] - kappa0^2 - kappa1^2 (and primed analogue), xi ~ N(0,1).
struct HermiteCoeffs {
    double kappa0 = 0.0;
    double kappa1 = 0.0;
    double kappa1p = 0.0;
    double kappa_star = 0.0;
    double kappa_star_p = 0.0;
};

HermiteCoeffs hermite_coeffs(const ActivationSpec& spec, int quad_degree = 150);

/// Gaussian moments of a ridge function phi needed by the fixed-point system.
/// mean_ddphi is always obtained through the Stein identity E[w phi'(w)].
struct RidgeMoments {
    double mean_phi = 0.0;
    double mean_dphi = 0.0;
    double mean_ddphi = 0.0;
    double second_moment_phi = 0.0;
    double second_moment_dphi = 0.0;

    double var_phi_about(double s) const {
        return second_moment_phi - 2.0 * s * mean_phi + s * s;
    }
    double var_dphi_about(double s) const {
        return second_moment_dphi - 2.0 * s * mean_dphi + s * s;
    }
};

RidgeMoments ridge_moments(const ActivationSpec& spec, int quad_degree = 150);

}  // namespace sobrf
