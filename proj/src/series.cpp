#include "hforge/series.hpp"

#include <stdexcept>

#include "hforge/combinatorics.hpp"

namespace hforge {

TruncatedSeries::TruncatedSeries(long order) : order_(order) {
    if (order < 0 || order % 2 != 0) throw std::invalid_argument("order must be even and >= 0");
}

Rational TruncatedSeries::coeff(long exp) const {
    auto it = coeffs_.find(exp);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

void TruncatedSeries::set_coeff(long exp, const Rational& value) {
    if (exp < 0 || exp % 2 != 0) throw std::invalid_argument("exponent must be even and >= 0");
    if (exp > order_) return;
    if (value == 0)
        coeffs_.erase(exp);
    else
        coeffs_[exp] = value;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& rhs) const {
    TruncatedSeries out(std::min(order_, rhs.order_));
    for (const auto& [ea, ca] : coeffs_)
        for (const auto& [eb, cb] : rhs.coeffs_) {
            if (ea + eb > out.order_) break;
            out.set_coeff(ea + eb, out.coeff(ea + eb) + ca * cb);
        }
    return out;
}

TruncatedSeries TruncatedSeries::pow(long e) const {
    if (e < 0) throw std::invalid_argument("negative series power");
    TruncatedSeries out(order_);
    out.set_coeff(0, 1);
    for (long i = 0; i < e; ++i) out = out * *this;
    return out;
}

TruncatedSeries TruncatedSeries::reciprocal() const {
    Rational c0 = coeff(0);
    if (c0 == 0) throw std::domain_error("reciprocal of series with zero constant term");
    TruncatedSeries out(order_);
    out.set_coeff(0, 1 / c0);
    // [t^e] (S * out) = 0 for e > 0 determines out coefficient by coefficient.
    for (long e = 2; e <= order_; e += 2) {
        Rational acc = 0;
        for (long j = 2; j <= e; j += 2) acc += coeff(j) * out.coeff(e - j);
        out.set_coeff(e, -acc / c0);
    }
    return out;
}

TruncatedSeries sin_ratio_series(long order) {
    TruncatedSeries s(order);
    for (long j = 0; 2 * j <= order; ++j) {
        Rational c = rat(Integer(j % 2 == 0 ? 1 : -1),
                         pow(Integer(4), static_cast<unsigned long>(j)) * factorial(2 * j + 1));
        s.set_coeff(2 * j, c);
    }
    return s;
}

TruncatedSeries sinh_ratio_series(long order) {
    TruncatedSeries s(order);
    for (long j = 0; 2 * j <= order; ++j)
        s.set_coeff(2 * j, rat(Integer(1), pow(Integer(4), static_cast<unsigned long>(j)) *
                                               factorial(2 * j + 1)));
    return s;
}

TruncatedSeries series_sin_kernel(long kplus1, long order) {
    if (kplus1 < 1) throw std::invalid_argument("kplus1 must be >= 1");
    return sin_ratio_series(order).reciprocal().pow(kplus1);
}

TruncatedSeries series_sinh_kernel(long kplus1, long order) {
    if (kplus1 < 1) throw std::invalid_argument("kplus1 must be >= 1");
    return sinh_ratio_series(order).reciprocal().pow(kplus1);
}

std::string to_string(const TruncatedSeries& s) {
    if (s.coeffs().empty()) return "0";
    std::string out;
    for (const auto& [e, c] : s.coeffs()) {
        if (!out.empty()) out += " + ";
        out += "(" + to_string(c) + ")";
        if (e > 0) out += "*t^" + std::to_string(e);
    }
    return out;
}

}  // namespace hforge
