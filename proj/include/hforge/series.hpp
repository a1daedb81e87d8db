#pragma once

#include <map>

#include "hforge/rational.hpp"

namespace hforge {

// Even power series in t with exact rational coefficients, truncated at a
// fixed order. Only even exponents are stored; every series handled here is
// even in t.
class TruncatedSeries {
public:
    explicit TruncatedSeries(long order);

    long order() const { return order_; }

    // Coefficient of t^exp (exp must be even); zero if absent.
    Rational coeff(long exp) const;
    void set_coeff(long exp, const Rational& value);

    const std::map<long, Rational>& coeffs() const { return coeffs_; }

    TruncatedSeries operator*(const TruncatedSeries& rhs) const;
    TruncatedSeries pow(long e) const;

    // Multiplicative inverse; requires a nonzero constant term.
    TruncatedSeries reciprocal() const;

    bool operator==(const TruncatedSeries&) const = default;

private:
    long order_;
    std::map<long, Rational> coeffs_;  // even exponent -> nonzero coefficient
};

// sin(t/2)/(t/2) as an even series: sum (-1)^j t^{2j} / (4^j (2j+1)!).
TruncatedSeries sin_ratio_series(long order);

// sinh(t/2)/(t/2): the same coefficients without the alternating sign.
TruncatedSeries sinh_ratio_series(long order);

// ((t/2)/sin(t/2))^{kplus1}.
TruncatedSeries series_sin_kernel(long kplus1, long order);

// ((t/2)/sinh(t/2))^{kplus1}, the kernel as printed in the source formula.
TruncatedSeries series_sinh_kernel(long kplus1, long order);

std::string to_string(const TruncatedSeries& s);

}  // namespace hforge
