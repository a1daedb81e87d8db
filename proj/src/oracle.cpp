#include "hforge/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <thread>
#include <utility>

#include "hforge/characters.hpp"
#include "hforge/combinatorics.hpp"
#include "hforge/errors.hpp"

namespace hforge {

namespace {

struct Transposition {
    int a, b;
};

// Orbits of the generated subgroup are the connected components of the
// edges used; transitive iff a single component covers all points.
bool edges_connect_all(const std::vector<Transposition>& edges, int k) {
    if (k <= 1) return true;
    std::vector<int> parent(k);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    int components = k;
    for (const auto& e : edges) {
        int ra = find(e.a), rb = find(e.b);
        if (ra != rb) {
            parent[ra] = rb;
            --components;
        }
    }
    return components == 1;
}

class DfsCounter {
public:
    DfsCounter(const Permutation& sigma, long r, bool transitive_only,
               std::atomic<std::uint64_t>& nodes, std::uint64_t budget)
        : k_(sigma.size()),
          r_(r),
          transitive_only_(transitive_only),
          nodes_(nodes),
          budget_(budget) {
        for (int a = 0; a < k_; ++a)
            for (int b = a + 1; b < k_; ++b) all_taus_.push_back({a, b});
        // rho = sigma * prefix^{-1}, the permutation still to be factored.
        rho_ = sigma.images();
        rho_inv_ = sigma.inverse().images();
    }

    const std::vector<Transposition>& transpositions() const { return all_taus_; }

    // Count completions of the current prefix with `remaining` factors,
    // restricted at the first level to the transpositions in [first, last).
    Integer run(long remaining, std::size_t first, std::size_t last) {
        return dfs(remaining, first, last);
    }

    void apply(const Transposition& t) {
        // New remainder rho * tau (tau applied first among what is left).
        int pa = rho_inv_[t.a], pb = rho_inv_[t.b];
        std::swap(rho_[pa], rho_[pb]);
        std::swap(rho_inv_[t.a], rho_inv_[t.b]);
        edges_.push_back(t);
    }

    void undo(const Transposition& t) {
        edges_.pop_back();
        int pa = rho_inv_[t.a], pb = rho_inv_[t.b];
        std::swap(rho_[pa], rho_[pb]);
        std::swap(rho_inv_[t.a], rho_inv_[t.b]);
    }

    // Minimum number of transpositions needed to produce the remainder,
    // K minus its cycle count. A safe lower bound and a parity constraint.
    long min_factors_needed() const {
        std::vector<bool> seen(k_, false);
        long cycles = 0;
        for (int i = 0; i < k_; ++i) {
            if (seen[i]) continue;
            ++cycles;
            for (int j = i; !seen[j]; j = rho_[j]) seen[j] = true;
        }
        return k_ - cycles;
    }

private:
    Integer dfs(long remaining, std::size_t first, std::size_t last) {
        if (++local_nodes_ % 4096 == 0) {
            if (nodes_.fetch_add(4096, std::memory_order_relaxed) + 4096 > budget_)
                throw SearchTooLargeError("node budget exceeded");
        }
        long need = min_factors_needed();
        if (need > remaining || (remaining - need) % 2 != 0) return 0;
        if (remaining == 0) {
            // need == 0 here, so the remainder is the identity.
            if (transitive_only_ && !edges_connect_all(edges_, k_)) return 0;
            return 1;
        }
        Integer total = 0;
        for (std::size_t i = first; i < last; ++i) {
            apply(all_taus_[i]);
            total += dfs(remaining - 1, 0, all_taus_.size());
            undo(all_taus_[i]);
        }
        return total;
    }

    int k_;
    long r_;
    bool transitive_only_;
    std::atomic<std::uint64_t>& nodes_;
    std::uint64_t budget_;
    std::uint64_t local_nodes_ = 0;
    std::vector<Transposition> all_taus_;
    std::vector<int> rho_, rho_inv_;
    std::vector<Transposition> edges_;
};

}  // namespace

Integer count_factorizations(const FactorizationQuery& query, const OracleOptions& options) {
    if (query.factor_count < 0) throw std::invalid_argument("negative factor count");
    const int k = query.sigma.size();
    std::atomic<std::uint64_t> nodes{0};

    if (k == 1) return query.factor_count == 0 ? 1 : 0;

    unsigned threads = std::max(1u, options.threads);
    DfsCounter probe(query.sigma, query.factor_count, query.transitive_only, nodes,
                     options.node_budget);
    const std::size_t ntaus = probe.transpositions().size();
    if (threads == 1 || query.factor_count == 0)
        return probe.run(query.factor_count, 0, ntaus);

    // Fan out over the choice of the first factor; partial counts add up,
    // so the result does not depend on the thread count.
    std::vector<Integer> partial(ntaus, 0);
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t]() {
            try {
                DfsCounter local(query.sigma, query.factor_count, query.transitive_only,
                                 nodes, options.node_budget);
                for (std::size_t i = t; i < ntaus; i += threads) {
                    local.apply(local.transpositions()[i]);
                    partial[i] = local.run(query.factor_count - 1, 0, ntaus);
                    local.undo(local.transpositions()[i]);
                }
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    Integer total = 0;
    for (const auto& p : partial) total += p;
    return total;
}

namespace {

// All ordered tuples (no transitivity) via the Frobenius character sum:
// N = (1/s!) sum_lambda dim * chi_lambda(nu) * (|C2| chi_lambda(2,1^..)/dim)^r.
Integer all_factorizations(const std::vector<long>& nu, long r, CharacterCalculator& cc) {
    long s = 0;
    for (long p : nu) s += p;
    if (s == 1) return r == 0 ? 1 : 0;
    if (r == 0) return std::all_of(nu.begin(), nu.end(), [](long p) { return p == 1; }) ? 1 : 0;

    std::vector<long> transposition_class(static_cast<std::size_t>(s - 1), 1);
    transposition_class[0] = 2;
    const Integer c2 = conjugacy_class_size(transposition_class);

    Rational total = 0;
    for (const auto& lambda : partitions_of(s)) {
        Integer dim = cc.dimension(lambda);
        Integer on_sigma = cc.chi(lambda, nu);
        if (on_sigma == 0) continue;
        Integer on_tau = cc.chi(lambda, transposition_class);
        total += rat(dim * on_sigma, 1) * pow(rat(c2 * on_tau, dim), r);
    }
    Rational n = total / rat(factorial(s), 1);
    if (!is_integer(n)) throw std::logic_error("character sum is not an integer");
    return n.get_num();
}

using TransMemo = std::map<std::pair<std::vector<long>, long>, Integer>;

// Transitive count by inclusion-exclusion: a tuple splits into independent
// transitive factorizations on the orbits, which partition sigma's cycles,
// with the r factor positions distributed freely among the orbits.
Integer transitive_count(const std::vector<long>& nu, long r, CharacterCalculator& cc,
                         TransMemo& memo) {
    auto key = std::make_pair(nu, r);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    Integer total = all_factorizations(nu, r, cc);
    const std::size_t c = nu.size();
    for (const auto& partition : set_partitions(c)) {
        if (partition.size() < 2) continue;
        std::vector<std::vector<long>> blocks;
        for (const auto& block : partition) {
            std::vector<long> sub;
            for (std::size_t idx : block) sub.push_back(nu[idx]);
            std::sort(sub.rbegin(), sub.rend());
            blocks.push_back(std::move(sub));
        }
        for (const auto& split : compositions_of(r, blocks.size())) {
            Integer term = multinomial(split);
            for (std::size_t b = 0; b < blocks.size() && term != 0; ++b)
                term *= transitive_count(blocks[b], split[b], cc, memo);
            total -= term;
        }
    }
    memo.emplace(std::move(key), total);
    return total;
}

}  // namespace

Integer count_factorizations_frobenius(const FactorizationQuery& query) {
    if (query.factor_count < 0) throw std::invalid_argument("negative factor count");
    std::vector<long> nu = cycle_type(query.sigma).parts();
    std::sort(nu.rbegin(), nu.rend());
    CharacterCalculator cc;
    if (!query.transitive_only) return all_factorizations(nu, query.factor_count, cc);
    TransMemo memo;
    return transitive_count(nu, query.factor_count, cc, memo);
}

Rational hurwitz_oracle(long genus, const Profile& profile, OracleMethod method,
                        const OracleOptions& options) {
    long r = branch_point_count(genus, profile);
    FactorizationQuery q{Permutation::from_cycle_type(profile), r, true};
    Integer count = (method == OracleMethod::Dfs)
                        ? count_factorizations(q, options)
                        : count_factorizations_frobenius(q);
    return rat(count, centralizer_order(profile));
}

}  // namespace hforge
