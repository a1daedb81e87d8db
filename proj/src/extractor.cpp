#include "hforge/extractor.hpp"

#include <algorithm>

#include "hforge/combinatorics.hpp"
#include "hforge/errors.hpp"

namespace hforge {

std::vector<CorrelatorKey> ExtractionPlan::unknowns() const {
    std::vector<CorrelatorKey> keys;
    for (long i = 0; i <= genus; ++i) {
        long dim = 3 * genus - 3 + static_cast<long>(n) - i;
        if (dim < 0) continue;
        for (const auto& m : multisets_of(dim, n)) keys.emplace_back(genus, m, i);
    }
    return keys;
}

std::vector<Profile> default_probes(std::size_t n, std::size_t count, std::size_t skip) {
    std::vector<Profile> probes;
    for (long total = static_cast<long>(n); probes.size() < count + skip; ++total)
        for (const auto& m : multisets_of(total - static_cast<long>(n), n)) {
            std::vector<long> parts = m;
            for (long& p : parts) ++p;
            probes.emplace_back(std::move(parts));
            if (probes.size() == count + skip) break;
        }
    probes.erase(probes.begin(), probes.begin() + static_cast<long>(skip));
    return probes;
}

namespace {

// sum over distinct ordered rearrangements of m of prod_j k_j^{m_j}.
Rational monomial_symmetric(const std::vector<long>& m_sorted, const Profile& probe) {
    std::vector<long> m = m_sorted;
    std::sort(m.begin(), m.end());
    Rational total = 0;
    do {
        Rational term = 1;
        for (std::size_t j = 0; j < m.size(); ++j)
            term *= pow(rat(probe.parts()[j], 1), m[j]);
        total += term;
    } while (std::next_permutation(m.begin(), m.end()));
    return total;
}

}  // namespace

LinearSystem build_system(const ExtractionPlan& plan, OracleMethod method,
                          const OracleOptions& options) {
    LinearSystem system;
    system.columns = plan.unknowns();
    for (const auto& probe : plan.probes) {
        if (probe.n() != plan.n) throw std::invalid_argument("probe length mismatch");
        std::vector<Rational> row;
        row.reserve(system.columns.size());
        for (const auto& key : system.columns) {
            Rational coeff = monomial_symmetric(key.exponents, probe);
            row.push_back(key.lambda_index % 2 == 0 ? coeff : -coeff);
        }
        system.rows.push_back(std::move(row));
        Rational h = hurwitz_oracle(plan.genus, probe, method, options);
        long mu = branch_point_count(plan.genus, probe);
        system.rhs.push_back(h * rat(aut_count(probe), factorial(mu)) / elsv_prefactor(probe));
    }
    return system;
}

CorrelatorTable extract(ExtractionPlan& plan, OracleMethod method, const OracleOptions& options) {
    const std::size_t n_unknowns = plan.unknowns().size();
    const std::size_t max_extra = n_unknowns + 16;
    std::size_t target = std::max(plan.probes.size(), n_unknowns);
    for (;;) {
        // Extend with the next unused default probes in graded order.
        std::size_t skip = 0;
        while (plan.probes.size() < target) {
            auto candidates = default_probes(plan.n, 1, skip++);
            if (std::find(plan.probes.begin(), plan.probes.end(), candidates[0]) ==
                plan.probes.end())
                plan.probes.push_back(candidates[0]);
        }
        try {
            auto solution = solve_exact(build_system(plan, method, options));
            CorrelatorTable table;
            for (const auto& [key, value] : solution)
                table.insert(key, value, Provenance::Extracted);
            return table;
        } catch (const RankDeficientError&) {
            if (target >= n_unknowns + max_extra)
                throw RankDeficientError("extraction plan cannot reach full rank");
            ++target;
        }
    }
}

bool HoldoutReport::all_equal() const {
    return std::all_of(results.begin(), results.end(),
                       [](const HoldoutResult& r) { return r.equal(); });
}

HoldoutReport holdout_validate(const ExtractionPlan& plan, const CorrelatorTable& table,
                               const std::vector<Profile>& extra_probes, OracleMethod method,
                               const OracleOptions& options) {
    for (const auto& probe : extra_probes)
        if (std::find(plan.probes.begin(), plan.probes.end(), probe) != plan.probes.end())
            throw std::invalid_argument("holdout probe already used by the plan");
    HoldoutReport report;
    IntersectionEngine engine;
    for (const auto& probe : extra_probes) {
        Rational oracle_value = hurwitz_oracle(plan.genus, probe, method, options);
        Rational elsv_value = hurwitz_elsv(plan.genus, probe, engine, table);
        report.results.push_back({probe, oracle_value, elsv_value});
    }
    return report;
}

}  // namespace hforge
