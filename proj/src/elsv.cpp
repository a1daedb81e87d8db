#include "hforge/elsv.hpp"

#include <algorithm>
#include <numeric>

#include "hforge/combinatorics.hpp"
#include "hforge/errors.hpp"

namespace hforge {

Rational elsv_integral_factor(long genus, const Profile& profile, IntersectionEngine& engine,
                              const CorrelatorTable& extracted) {
    const std::size_t n = profile.n();
    if (genus == 0 && n <= 2)
        return pow(rat(profile.degree(), 1), static_cast<long>(n) - 3);

    Rational total = 0;
    for (long i = 0; i <= genus; ++i) {
        long dim = 3 * genus - 3 + static_cast<long>(n) - i;
        if (dim < 0) continue;
        Rational block = 0;
        // Ordered exponent vectors match prod_j 1/(1 - k_j psi_j); the
        // correlator itself is looked up by the sorted key.
        for (const auto& m : compositions_of(dim, n)) {
            Rational monomial = 1;
            for (std::size_t j = 0; j < n; ++j)
                monomial *= pow(rat(profile.parts()[j], 1), m[j]);
            if (monomial == 0) continue;
            Rational value = engine.hodge_integral(CorrelatorKey(genus, m, i), extracted);
            block += value * monomial;
        }
        total += (i % 2 == 0) ? block : -block;
    }
    return total;
}

Rational hurwitz_elsv(long genus, const Profile& profile, IntersectionEngine& engine,
                      const CorrelatorTable& extracted) {
    long mu = branch_point_count(genus, profile);
    return rat(factorial(mu), aut_count(profile)) * elsv_prefactor(profile) *
           elsv_integral_factor(genus, profile, engine, extracted);
}

Rational hurwitz_genus0_closed(const Profile& profile) {
    long n = static_cast<long>(profile.n());
    long K = profile.degree();
    return rat(factorial(K + n - 2), aut_count(profile)) * elsv_prefactor(profile) *
           pow(rat(K, 1), n - 3);
}

Rational hurwitz_genus1_closed(const Profile& profile) {
    long n = static_cast<long>(profile.n());
    long K = profile.degree();
    Rational bracket = pow(rat(K, 1), n) - pow(rat(K, 1), n - 1);
    for (long i = 2; i <= n; ++i)
        bracket -= rat(factorial(i - 2) *
                           elementary_symmetric(static_cast<std::size_t>(i), profile.parts()),
                       1) *
                   pow(rat(K, 1), n - i);
    return rat(factorial(K + n), 24 * aut_count(profile)) * elsv_prefactor(profile) * bracket;
}

Rational genus1_alpha_coefficient(const std::vector<long>& exponents) {
    long n = static_cast<long>(exponents.size());
    Rational acc = rat(factorial(n), 1);
    for (long i = 2; i <= n; ++i)
        acc -= rat(factorial(i - 2) * factorial(n - i) *
                       elementary_symmetric(static_cast<std::size_t>(i), exponents),
                   1);
    Integer m_prod = 1;
    for (long m : exponents) m_prod *= factorial(m);
    return acc / rat(24 * m_prod, 1);
}

TruncatedSeries one_point_series_lhs(long k, long max_genus, IntersectionEngine& engine,
                                     const CorrelatorTable& extracted) {
    TruncatedSeries s(2 * max_genus);
    s.set_coeff(0, 1);
    for (long g = 1; g <= max_genus; ++g) {
        Rational c = 0;
        for (long i = 0; i <= g; ++i)
            c += pow(rat(k, 1), i) *
                 engine.hodge_integral(CorrelatorKey(g, {2 * g - 2 + i}, g - i), extracted);
        s.set_coeff(2 * g, c);
    }
    return s;
}

bool degree_window_check(long genus, std::size_t n, const CorrelatorTable& table) {
    long lo = 2 * genus + static_cast<long>(n) - 3;
    long hi = 3 * genus + static_cast<long>(n) - 3;
    bool saw_slice = false;
    for (const auto& [key, entry] : table.entries()) {
        if (key.genus != genus || key.n() != n) continue;
        saw_slice = true;
        if (entry.value == 0) continue;
        long deg = key.degree();
        if (deg < lo || deg > hi) return false;
        if (!key.dimension_ok()) return false;
    }
    return saw_slice;
}

bool lowest_degree_check(long genus, std::size_t n, const CorrelatorTable& table) {
    // All i = g entries must be a common constant times the multinomial
    // coefficient; the constant is read off the first entry.
    bool found = false;
    Rational b = 0;
    for (const auto& [key, entry] : table.entries()) {
        if (key.genus != genus || key.n() != n || key.lambda_index != genus) continue;
        Integer coeff = multinomial(key.exponents);
        if (coeff == 0) return false;
        Rational candidate = entry.value / rat(coeff, 1);
        if (!found) {
            b = candidate;
            found = true;
        } else if (candidate != b) {
            return false;
        }
    }
    return found;
}

}  // namespace hforge
