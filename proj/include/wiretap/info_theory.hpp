#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace wiretap {

/// A probability value, checked to lie in [0,1] on construction.
class Probability {
public:
    Probability(double v) : value_(v) {
        if (!(v >= 0.0 && v <= 1.0))
            throw std::domain_error("probability outside [0,1]: " + std::to_string(v));
    }
    operator double() const { return value_; }
    double value() const { return value_; }

private:
    double value_;
};

/// A non-negative rate in bits per channel use.
class BitRate {
public:
    BitRate(double v) : value_(v) {
        if (!(v >= 0.0))
            throw std::domain_error("bit rate must be non-negative: " + std::to_string(v));
    }
    operator double() const { return value_; }
    double value() const { return value_; }

private:
    double value_;
};

/// Binary entropy in bits, with the convention 0*log2(0) = 0.
inline BitRate binary_entropy(Probability p) {
    const double q = p.value();
    if (q == 0.0 || q == 1.0) return 0.0;
    const double h = -q * std::log2(q) - (1.0 - q) * std::log2(1.0 - q);
    // Rounding can push values like H(0.5) a hair above 1; clamp the dust.
    return h < 0.0 ? 0.0 : h;
}

/// Crossover probability of two cascaded binary symmetric channels:
/// a(1-b) + b(1-a). Commutative and associative; 0 is the identity and
/// 0.5 absorbs.
inline Probability bsc_compose(Probability a, Probability b) {
    const double x = a.value(), y = b.value();
    double r = x + y - 2.0 * x * y;
    if (r < 0.0) r = 0.0;
    if (r > 1.0) r = 1.0;
    return r;
}

/// Gaussian channel rate at the given SNR: 0.5*log2(1+snr).
inline BitRate gamma_rate(double snr) {
    if (!(snr >= 0.0))
        throw std::domain_error("snr must be non-negative: " + std::to_string(snr));
    return 0.5 * std::log2(1.0 + snr);
}

/// Standard normal CDF.
inline Probability gaussian_cdf(double x) {
    return 0.5 * std::erfc(-x / std::sqrt(2.0));
}

}  // namespace wiretap
