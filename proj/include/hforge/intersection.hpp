#pragma once

#include <utility>
#include <vector>

#include "hforge/correlator.hpp"
#include "hforge/rational.hpp"

namespace hforge {

// <tau_{m_1}...tau_{m_n}>_0 = (n-3)!/prod m_j! when sum m = n-3, else 0.
Rational psi_genus0(const std::vector<long>& exponents);

// String equation: remove one tau_0, decrement each remaining exponent in
// turn (terms hitting exponent -1 are dropped); unit coefficients.
std::vector<std::pair<CorrelatorKey, Rational>> string_step(const CorrelatorKey& key);

// Dilaton equation: remove one tau_1, coefficient 2g - 2 + n'.
std::pair<CorrelatorKey, Rational> dilaton_step(const CorrelatorKey& key);

// <psi^m lambda_g>_{g,n} = multinomial(2g+n-3; m) * b when sum m = 2g+n-3,
// else 0 (Faber-Pandharipande structure of the lambda_g block).
Rational lambda_g_value(long genus, const std::vector<long>& exponents, const Rational& b);

// Pure psi-class intersection numbers for all genera: dimension gate,
// genus-0 closed form, string/dilaton reductions, and the Witten-Kontsevich
// recursion in double-factorial form, memoized.
class IntersectionEngine {
public:
    Rational psi_intersection(long genus, const std::vector<long>& exponents);

    // Full Hodge-integral dispatch: i = 0 pure psi, i = g via the lambda_g
    // structure (b_1 = 1/24 built in; b_g for g >= 2 from the extracted
    // table), anything else looked up in the extracted table.
    Rational hodge_integral(const CorrelatorKey& key, const CorrelatorTable& extracted);

    const CorrelatorTable& memo() const { return memo_; }

private:
    Rational psi_value(long genus, std::vector<long> exponents);
    Rational dvv_reduce(long genus, const std::vector<long>& exponents);

    CorrelatorTable memo_;
};

// b_g = <psi^{2g-2} lambda_g>_{g,1}; looked up in the extracted table
// (b_0 = 1, b_1 = 1/24 known without extraction).
Rational b_constant(long genus, const CorrelatorTable& extracted);

}  // namespace hforge
