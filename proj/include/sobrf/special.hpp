#pragma once

namespace sobrf {

/// Regularized lower incomplete gamma P(a, x).
double gamma_p(double a, double x);

/// Chi-square CDF with k degrees of freedom.
double chi2_cdf(double x, int k);

/// Chi-square quantile function (inverse CDF), q in (0,1).
double chi2_quantile(double q, int k);

}  // namespace sobrf
