#include "hforge/intersection.hpp"

#include <algorithm>
#include <numeric>

#include "hforge/combinatorics.hpp"
#include "hforge/errors.hpp"

namespace hforge {

Rational psi_genus0(const std::vector<long>& exponents) {
    const long n = static_cast<long>(exponents.size());
    if (n < 3) throw UnstableKeyError("genus-0 correlator needs n >= 3");
    long total = 0;
    Integer den = 1;
    for (long m : exponents) {
        if (m < 0) throw std::invalid_argument("negative exponent");
        total += m;
        den *= factorial(m);
    }
    if (total != n - 3) return 0;
    return rat(factorial(n - 3), den);
}

std::vector<std::pair<CorrelatorKey, Rational>> string_step(const CorrelatorKey& key) {
    auto it = std::find(key.exponents.begin(), key.exponents.end(), 0L);
    if (it == key.exponents.end()) throw NotApplicableError("string_step: no tau_0 present");
    std::vector<long> rest = key.exponents;
    rest.erase(rest.begin() + (it - key.exponents.begin()));
    if (!stable(key.genus, rest.size()))
        throw NotApplicableError("string_step: reduction is unstable");

    std::vector<std::pair<CorrelatorKey, Rational>> out;
    for (std::size_t j = 0; j < rest.size(); ++j) {
        if (rest[j] == 0) continue;  // exponent -1 terms are dropped
        auto reduced = rest;
        --reduced[j];
        out.emplace_back(CorrelatorKey(key.genus, std::move(reduced), key.lambda_index),
                         Rational(1));
    }
    return out;
}

std::pair<CorrelatorKey, Rational> dilaton_step(const CorrelatorKey& key) {
    auto it = std::find(key.exponents.begin(), key.exponents.end(), 1L);
    if (it == key.exponents.end()) throw NotApplicableError("dilaton_step: no tau_1 present");
    std::vector<long> rest = key.exponents;
    rest.erase(rest.begin() + (it - key.exponents.begin()));
    if (!stable(key.genus, rest.size()))
        throw NotApplicableError("dilaton_step: reduction is unstable");
    long coeff = 2 * key.genus - 2 + static_cast<long>(rest.size());
    return {CorrelatorKey(key.genus, std::move(rest), key.lambda_index), Rational(coeff)};
}

Rational lambda_g_value(long genus, const std::vector<long>& exponents, const Rational& b) {
    long total = std::accumulate(exponents.begin(), exponents.end(), 0L);
    long n = static_cast<long>(exponents.size());
    if (total != 2 * genus + n - 3) return 0;
    return rat(multinomial(exponents), 1) * b;
}

Rational IntersectionEngine::psi_intersection(long genus, const std::vector<long>& exponents) {
    for (long m : exponents)
        if (m < 0) throw std::invalid_argument("negative exponent");
    if (!stable(genus, exponents.size()))
        throw UnstableKeyError("unstable (g,n) in psi_intersection");
    return psi_value(genus, exponents);
}

// Inside recursions every malformed correlator (negative exponent, unstable
// pair, failed dimension gate) evaluates to zero.
Rational IntersectionEngine::psi_value(long genus, std::vector<long> exponents) {
    const long n = static_cast<long>(exponents.size());
    if (n == 0 || genus < 0) return 0;
    for (long m : exponents)
        if (m < 0) return 0;
    if (!stable(genus, exponents.size())) return 0;
    std::sort(exponents.begin(), exponents.end());
    long total = std::accumulate(exponents.begin(), exponents.end(), 0L);
    if (total != 3 * genus - 3 + n) return 0;

    if (genus == 0) return psi_genus0(exponents);
    if (genus == 1 && exponents == std::vector<long>{1}) return rat(1, 24);

    CorrelatorKey key(genus, exponents, 0);
    if (const TableEntry* hit = memo_.find(key)) return hit->value;

    Rational value = 0;
    if (exponents.front() == 0) {
        std::vector<long> rest(exponents.begin() + 1, exponents.end());
        for (std::size_t j = 0; j < rest.size(); ++j) {
            auto reduced = rest;
            --reduced[j];
            value += psi_value(genus, std::move(reduced));
        }
    } else if (exponents.front() == 1) {
        std::vector<long> rest(exponents.begin() + 1, exponents.end());
        value = Rational(2 * genus - 2 + n - 1) * psi_value(genus, std::move(rest));
    } else {
        value = dvv_reduce(genus, exponents);
    }
    memo_.insert(key, value, Provenance::Recursion);
    return value;
}

// Witten-Kontsevich recursion in double-factorial (DVV) form on the largest
// exponent k+1; all exponents are >= 2 once string and dilaton are spent.
Rational IntersectionEngine::dvv_reduce(long genus, const std::vector<long>& exponents) {
    const long k = exponents.back() - 1;
    std::vector<long> rest(exponents.begin(), exponents.end() - 1);
    const std::size_t nr = rest.size();

    Rational rhs = 0;
    for (std::size_t j = 0; j < nr; ++j) {
        Rational coeff =
            rat(odd_double_factorial(k + rest[j] + 1), odd_double_factorial(rest[j]));
        auto merged = rest;
        merged[j] = k + rest[j];
        rhs += coeff * psi_value(genus, std::move(merged));
    }

    for (long a = 0; a <= k - 1; ++a) {
        long b = k - 1 - a;
        Rational w = rat(odd_double_factorial(a + 1) * odd_double_factorial(b + 1), 2);

        auto nonseparating = rest;
        nonseparating.push_back(a);
        nonseparating.push_back(b);
        rhs += w * psi_value(genus - 1, std::move(nonseparating));

        for (std::size_t mask = 0; mask < (std::size_t(1) << nr); ++mask) {
            std::vector<long> left{a}, right{b};
            for (std::size_t j = 0; j < nr; ++j)
                (mask >> j & 1 ? left : right).push_back(rest[j]);
            for (long gl = 0; gl <= genus; ++gl) {
                Rational vl = psi_value(gl, left);
                if (vl == 0) continue;
                rhs += w * vl * psi_value(genus - gl, right);
            }
        }
    }
    return rhs / rat(odd_double_factorial(k + 2), 1);  // (2k+3)!!
}

Rational b_constant(long genus, const CorrelatorTable& extracted) {
    if (genus == 0) return 1;
    if (genus == 1) return rat(1, 24);
    CorrelatorKey key(genus, {2 * genus - 2}, genus);
    if (const TableEntry* hit = extracted.find(key)) return hit->value;
    throw MissingTableEntryError("b_" + std::to_string(genus) +
                                 " unknown: run extraction for (g=" + std::to_string(genus) +
                                 ", n=1) first");
}

Rational IntersectionEngine::hodge_integral(const CorrelatorKey& key,
                                            const CorrelatorTable& extracted) {
    if (!key.dimension_ok()) return 0;
    if (key.lambda_index == 0) return psi_intersection(key.genus, key.exponents);
    if (key.lambda_index == key.genus)
        return lambda_g_value(key.genus, key.exponents, b_constant(key.genus, extracted));
    if (const TableEntry* hit = extracted.find(key)) return hit->value;
    throw MissingTableEntryError("no table entry for " + to_string(key) +
                                 ": run extraction for (g=" + std::to_string(key.genus) +
                                 ", n=" + std::to_string(key.n()) + ") first");
}

}  // namespace hforge
