#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace hforge {

using Integer = mpz_class;
using Rational = mpq_class;

// mpq_class keeps values canonical (reduced, positive denominator) as long
// as they are built through arithmetic or through this helper.
inline Rational rat(const Integer& num, const Integer& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational rat(long num, long den = 1) { return rat(Integer(num), Integer(den)); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// "p/q", or bare "p" when the denominator is 1.
inline std::string to_string(const Rational& q) {
    if (is_integer(q)) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline std::string to_string(const Integer& z) { return z.get_str(); }

inline Rational parse_rational(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    q.canonicalize();
    return q;
}

inline Integer pow(const Integer& base, unsigned long exp) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

inline Rational pow(const Rational& base, long exp) {
    if (exp >= 0)
        return rat(pow(base.get_num(), static_cast<unsigned long>(exp)),
                   pow(base.get_den(), static_cast<unsigned long>(exp)));
    if (base == 0) throw std::domain_error("0 to a negative power");
    return rat(pow(base.get_den(), static_cast<unsigned long>(-exp)),
               pow(base.get_num(), static_cast<unsigned long>(-exp)));
}

}  // namespace hforge
