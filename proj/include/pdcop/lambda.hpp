#pragma once

#include <cmath>

#include "pdcop/errors.hpp"

namespace pdcop {

/// Regime of the power parameter; selects the generator formula.
enum class Branch { BelowNegOne, NegOne, BetweenNegOneAndZero, Zero, Positive };

/// Values within this distance of -1 or 0 use the limiting-case formulas.
inline constexpr double kBranchWindow = 1e-8;

/// The power parameter of the family, classified into its regime.
class Lambda {
  public:
    explicit Lambda(double value) : value_(value) {
        if (!std::isfinite(value)) throw DomainError("lambda must be finite");
        if (std::abs(value + 1.0) < kBranchWindow) {
            branch_ = Branch::NegOne;
        } else if (std::abs(value) < kBranchWindow) {
            branch_ = Branch::Zero;
        } else if (value < -1.0) {
            branch_ = Branch::BelowNegOne;
        } else if (value < 0.0) {
            branch_ = Branch::BetweenNegOneAndZero;
        } else {
            branch_ = Branch::Positive;
        }
    }

    double value() const noexcept { return value_; }
    Branch branch() const noexcept { return branch_; }

    /// phi(0) is infinite, so the pseudo-inverse is a true inverse.
    bool is_strict() const noexcept {
        return branch_ == Branch::BelowNegOne || branch_ == Branch::NegOne;
    }

    /// True when lambda lies within the branch window of `target`.
    bool near(double target) const noexcept { return std::abs(value_ - target) < kBranchWindow; }

  private:
    double value_;
    Branch branch_;
};

}  // namespace pdcop
