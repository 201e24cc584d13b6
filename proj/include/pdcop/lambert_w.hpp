#pragma once

namespace pdcop {

/// Principal branch W0 of the Lambert W function, y >= -1/e, result >= -1.
double lambert_w0(double y);

/// Lower branch W-1 of the Lambert W function, -1/e <= y < 0, result <= -1.
double lambert_wm1(double y);

namespace detail {

enum class LambertBranch { Principal, Lower };

/// W evaluated at y = (offset - 1) / e, where offset = 1 + e*y is passed directly.
///
/// Near the branch point the offset carries all the information about y; taking
/// it as the argument avoids the cancellation in 1 + e*y and keeps W accurate to
/// full precision there.
double lambert_w_from_offset(double offset, LambertBranch branch);

}  // namespace detail
}  // namespace pdcop
