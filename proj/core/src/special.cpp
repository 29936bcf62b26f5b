#include "merid/special.hpp"

#include <cmath>

namespace merid {
namespace {

// Rational Chebyshev coefficients from W. J. Cody, "Rational Chebyshev
// approximations for the error function", Math. Comp. 23 (1969) 631-638.
constexpr double kA[5] = {3.1611237438705656, 113.864154151050156, 377.485237685302021,
                          3209.37758913846947, 0.185777706184603153};
constexpr double kB[4] = {23.6012909523441209, 244.024637934444173, 1282.61652607737228,
                          2844.23683343917062};
constexpr double kC[9] = {0.564188496988670089, 8.88314979438837594, 66.1191906371416295,
                          298.635138197400131,  881.95222124176909,  1712.04761263407058,
                          2051.07837782607147,  1230.33935479799725, 2.15311535474403846e-8};
constexpr double kD[8] = {15.7449261107098347, 117.693950891312499, 537.181101862009858,
                          1621.38957456669019, 3290.79923573345963, 4362.61909014324716,
                          3439.36767414372164, 1230.33935480374942};
constexpr double kP[6] = {0.305326634961232344, 0.360344899949804439, 0.125781726111229246,
                          0.0160837851487422766, 6.58749161529837803e-4, 0.0163153871373020978};
constexpr double kQ[5] = {2.56852019228982242, 1.87295284992346047, 0.527905102951428412,
                          0.0605183413124413191, 0.00233520497626869185};

constexpr double kInvSqrtPi = 0.56418958354775628695;
constexpr double kThresh = 0.46875;
constexpr double kXSmall = 1.11e-16;
constexpr double kXBig = 26.543;

// erfc(y)*exp(y*y) for 0.46875 <= y, split at y = 4 as in CALERF.
double erfcx_scaled(double y) {
    double num, den;
    if (y <= 4.0) {
        num = kC[8] * y;
        den = y;
        for (int i = 0; i < 7; ++i) {
            num = (num + kC[i]) * y;
            den = (den + kD[i]) * y;
        }
        return (num + kC[7]) / (den + kD[7]);
    }
    const double ysq = 1.0 / (y * y);
    num = kP[5] * ysq;
    den = ysq;
    for (int i = 0; i < 4; ++i) {
        num = (num + kP[i]) * ysq;
        den = (den + kQ[i]) * ysq;
    }
    const double r = ysq * (num + kP[4]) / (den + kQ[4]);
    return (kInvSqrtPi - r) / y;
}

// exp(-y*y) with the argument split into high and low parts so that the
// rounding of y*y does not dominate the tail.
double exp_minus_ysq(double y) {
    const double ysq_trunc = std::trunc(y * 16.0) / 16.0;
    const double del = (y - ysq_trunc) * (y + ysq_trunc);
    return std::exp(-ysq_trunc * ysq_trunc) * std::exp(-del);
}

}  // namespace

double erf(double x) {
    const double y = std::fabs(x);
    if (y <= kThresh) {
        double ysq = 0.0;
        if (y > kXSmall) ysq = y * y;
        double num = kA[4] * ysq;
        double den = ysq;
        for (int i = 0; i < 3; ++i) {
            num = (num + kA[i]) * ysq;
            den = (den + kB[i]) * ysq;
        }
        return x * (num + kA[3]) / (den + kB[3]);
    }
    double result = 1.0;
    if (y < kXBig) result = 1.0 - exp_minus_ysq(y) * erfcx_scaled(y);
    return x < 0.0 ? -result : result;
}

double erfc(double x) {
    const double y = std::fabs(x);
    if (y <= kThresh) return 1.0 - merid::erf(x);
    double result = 0.0;
    if (y < kXBig) result = exp_minus_ysq(y) * erfcx_scaled(y);
    return x < 0.0 ? 2.0 - result : result;
}

}  // namespace merid
