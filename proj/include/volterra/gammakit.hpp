#pragma once

// Real-argument Gamma-family primitives: log Gamma, 1/Gamma, digamma,
// trigamma. Lanczos approximation (g = 6.0247, 13-term rational form) for
// log Gamma; argument-shift recurrence plus Bernoulli asymptotic series for
// psi and psi'. All functions are pure and thread-safe.

#include <cmath>
#include <stdexcept>
#include <string>

namespace volterra {
namespace gammakit {

// Abscissa of the minimum of Gamma on (0,inf); psi(z) = 0 there.
inline constexpr double gamma_min_abscissa = 1.4616321449683623;

inline constexpr double euler_gamma = 0.5772156649015329;

namespace detail {

inline void require_positive(double z, const char* fn) {
    if (!(z > 0.0) || !std::isfinite(z)) {
        throw std::domain_error(std::string(fn) +
                                ": argument must be positive and finite, got " +
                                std::to_string(z));
    }
}

// 13-term Lanczos rational approximation, g = 6.024680040776729583740234375,
// scaled by exp(-g). Relative error of the sum is below 1e-16 on (0, inf).
inline double lanczos_sum_expg_scaled(double z) {
    static const double num[13] = {
        56906521.91347156388090791033559122686859,
        103794043.1163445451906271053616070238554,
        86363131.28813859145546927288977868422342,
        43338889.32467613834773723740590533316085,
        14605578.08768506808414169982791359218571,
        3481712.15498064590882071018964774556468,
        601859.6171681098786670226533699352302507,
        75999.29304014542649875303443598909137092,
        6955.999602515376140356310115515198987526,
        449.9445569063168119446858607650988409623,
        19.51992788247617482847860966235652136208,
        0.5098416655656676188125178644804694509993,
        0.006061842346248906525783753964555936883222,
    };
    static const double den[13] = {
        0.0,
        39916800.0,
        120543840.0,
        150917976.0,
        105258076.0,
        45995730.0,
        13339535.0,
        2637558.0,
        357423.0,
        32670.0,
        1925.0,
        66.0,
        1.0,
    };
    // Evaluate the rational in z or 1/z, whichever keeps intermediates tame.
    double s1, s2;
    if (z <= 1.0) {
        s1 = num[12];
        s2 = den[12];
        for (int i = 11; i >= 0; --i) {
            s1 = s1 * z + num[i];
            s2 = s2 * z + den[i];
        }
    } else {
        double w = 1.0 / z;
        s1 = num[0];
        s2 = den[0];
        for (int i = 1; i <= 12; ++i) {
            s1 = s1 * w + num[i];
            s2 = s2 * w + den[i];
        }
    }
    return s1 / s2;
}

inline constexpr double lanczos_g = 6.024680040776729583740234375;

} // namespace detail

// log Gamma(z) for z > 0.
inline double ln_gamma(double z) {
    detail::require_positive(z, "ln_gamma");
    if (z == 1.0 || z == 2.0) return 0.0;
    const double zgh = z + detail::lanczos_g - 0.5;
    return (z - 0.5) * (std::log(zgh) - 1.0) +
           std::log(detail::lanczos_sum_expg_scaled(z));
}

// 1/Gamma(z) for z > 0; strictly positive, underflows to 0 only past z ~ 170.
inline double recip_gamma(double z) {
    return std::exp(-ln_gamma(z));
}

// psi(z) for z > 0. Recurrence shift to z >= 10, then the Bernoulli series.
inline double digamma(double z) {
    detail::require_positive(z, "digamma");
    double acc = 0.0;
    while (z < 10.0) {
        acc -= 1.0 / z;
        z += 1.0;
    }
    // psi(z) ~ log z - 1/(2z) - sum B_{2k} / (2k z^{2k})
    const double w = 1.0 / (z * z);
    double series = w * (1.0 / 12.0 +
                    w * (-1.0 / 120.0 +
                    w * (1.0 / 252.0 +
                    w * (-1.0 / 240.0 +
                    w * (1.0 / 132.0 +
                    w * (-691.0 / 32760.0 +
                    w * (1.0 / 12.0)))))));
    return acc + std::log(z) - 0.5 / z - series;
}

// psi'(z) for z > 0; positive and decreasing.
inline double trigamma(double z) {
    detail::require_positive(z, "trigamma");
    double acc = 0.0;
    while (z < 10.0) {
        acc += 1.0 / (z * z);
        z += 1.0;
    }
    // psi'(z) ~ 1/z + 1/(2z^2) + sum B_{2k} / z^{2k+1}
    const double w = 1.0 / (z * z);
    double series = (1.0 / 6.0 +
                    w * (-1.0 / 30.0 +
                    w * (1.0 / 42.0 +
                    w * (-1.0 / 30.0 +
                    w * (5.0 / 66.0 +
                    w * (-691.0 / 2730.0 +
                    w * (7.0 / 6.0))))))) * w / z;
    return acc + 1.0 / z + 0.5 * w + series;
}

} // namespace gammakit
} // namespace volterra
