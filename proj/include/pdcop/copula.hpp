#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "pdcop/generator.hpp"
#include "pdcop/lambda.hpp"

namespace pdcop {

/// A point of [0,1]^d.
class UnitVector {
  public:
    explicit UnitVector(std::vector<double> coords);
    UnitVector(double u1, double u2) : UnitVector(std::vector<double>{u1, u2}) {}

    const std::vector<double>& coords() const noexcept { return coords_; }
    std::size_t size() const noexcept { return coords_.size(); }
    double operator[](std::size_t i) const { return coords_[i]; }

  private:
    std::vector<double> coords_;
};

/// How a (lambda, dim) pair outside the proven validity sets is treated.
enum class GatePolicy {
    ProvenOnly,       ///< reject with ValidityError
    ForceAfterCheck,  ///< accept if check_d_monotone passes on its default grid
};

class PdCopula {
  public:
    explicit PdCopula(Lambda lambda, int dim = 2, GatePolicy policy = GatePolicy::ProvenOnly);
    explicit PdCopula(double lambda, int dim = 2, GatePolicy policy = GatePolicy::ProvenOnly)
        : PdCopula(Lambda(lambda), dim, policy) {}

    const Lambda& lambda() const noexcept { return lambda_; }
    int dim() const noexcept { return dim_; }
    double phi0() const noexcept { return phi0_; }

    /// Mass on the zero curve, max(l, 0) / (l + 1); also K(0+).
    double singular_mass() const noexcept { return singular_mass_; }

  private:
    Lambda lambda_;
    int dim_;
    double phi0_;
    double singular_mass_;
};

/// True when (lambda, dim) lies in the sets where the family is known to be a copula.
bool proven_valid(const Lambda& lambda, int dim);

double cdf(const PdCopula& c, const UnitVector& u);
double cdf(const PdCopula& c, double u1, double u2);

/// Bivariate density on the open unit square.
/// Throws UndefinedDensityError on or beyond the zero curve (within kInverseTol in t for l > 0).
double density(const PdCopula& c, const UnitVector& u);
double density(const PdCopula& c, double u1, double u2);

/// K(s) = P(C(U1, U2) <= s) for s in (0, 1).
double kendall_function(const PdCopula& c, double s);
inline double kendall_function_at_zero(const PdCopula& c) { return c.singular_mass(); }
inline double kendall_function_at_one(const PdCopula&) { return 1.0; }

/// phi(u1) + phi(u2) >= phi(0); always true on the axes.
bool in_zero_set(const PdCopula& c, const UnitVector& u);
bool in_zero_set(const PdCopula& c, double u1, double u2);

/// |phi(u1) + phi(u2) - phi(0)| <= tol; never true for strict generators.
bool on_zero_curve(const PdCopula& c, double u1, double u2, double tol = kInverseTol);

struct ZeroCurve {
    bool degenerate = false;  ///< l <= -1: the zero set is just the axes, no points returned
    std::vector<std::pair<double, std::optional<double>>> points;
};

/// u2 on the curve phi(u1) + phi(u2) = phi(0) for each u1; absent for u1 outside [0, 1].
ZeroCurve zero_curve(const PdCopula& c, const std::vector<double>& u1_grid);

}  // namespace pdcop
