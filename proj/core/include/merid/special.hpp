#pragma once

namespace merid {

/// Error function, Cody's rational approximations (Math. Comp. 23, 1969).
/// Accurate to better than 1e-14 relative over the real line.
double erf(double x);
double erfc(double x);

}  // namespace merid
