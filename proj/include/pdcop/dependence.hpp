#pragma once

#include "pdcop/lambda.hpp"

namespace pdcop {

struct TailCoefficients {
    double lower;
    double upper;
};

/// Kendall's tau of the bivariate copula; closed forms at l = 0 and l = -1.
double kendall_tau(const Lambda& lambda);

/// tau = 1 + 4 int_0^1 phi(s) / phi'(s) ds by adaptive quadrature, for every l.
double kendall_tau_quadrature(const Lambda& lambda);

/// The l with kendall_tau(l) = tau, |tau| < 1. Ill-conditioned for |tau| > 0.999.
Lambda tau_inverse(double tau);

TailCoefficients tail_dependence(const Lambda& lambda);

}  // namespace pdcop
