#include "hforge/characters.hpp"

#include <algorithm>

#include "hforge/combinatorics.hpp"

namespace hforge {

namespace {

// First-row beta numbers: beta_i = lambda_i + (L-1-i).
std::vector<long> beta_numbers(const std::vector<long>& lambda) {
    const long L = static_cast<long>(lambda.size());
    std::vector<long> beta(lambda.size());
    for (long i = 0; i < L; ++i) beta[i] = lambda[i] + (L - 1 - i);
    return beta;
}

std::vector<long> partition_from_beta(std::vector<long> beta) {
    std::sort(beta.rbegin(), beta.rend());
    const long L = static_cast<long>(beta.size());
    std::vector<long> lambda;
    for (long i = 0; i < L; ++i) {
        long part = beta[i] - (L - 1 - i);
        if (part > 0) lambda.push_back(part);
    }
    return lambda;
}

}  // namespace

Integer CharacterCalculator::chi(const std::vector<long>& lambda, const std::vector<long>& mu) {
    if (mu.empty()) return lambda.empty() ? 1 : 0;
    auto key = std::make_pair(lambda, mu);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const long strip = mu.front();
    std::vector<long> mu_rest(mu.begin() + 1, mu.end());

    // Removing a border strip of length `strip` = subtracting `strip` from
    // one beta number, staying distinct; the sign is the parity of the
    // number of beta numbers jumped over.
    auto beta = beta_numbers(lambda);
    Integer total = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) {
        long target = beta[i] - strip;
        if (target < 0) continue;
        bool occupied = false;
        long jumped = 0;
        for (std::size_t j = 0; j < beta.size(); ++j) {
            if (j == i) continue;
            if (beta[j] == target) occupied = true;
            if (beta[j] > target && beta[j] < beta[i]) ++jumped;
        }
        if (occupied) continue;
        auto nb = beta;
        nb[i] = target;
        Integer sub = chi(partition_from_beta(std::move(nb)), mu_rest);
        total += (jumped % 2 == 0) ? sub : -sub;
    }
    memo_.emplace(std::move(key), total);
    return total;
}

Integer CharacterCalculator::dimension(const std::vector<long>& lambda) {
    long n = 0;
    for (long p : lambda) n += p;
    return chi(lambda, std::vector<long>(static_cast<std::size_t>(n), 1));
}

Integer conjugacy_class_size(const std::vector<long>& mu) {
    long n = 0;
    Integer z = 1;
    long run = 0;
    for (std::size_t i = 0; i < mu.size(); ++i) {
        n += mu[i];
        z *= mu[i];
        ++run;
        if (i + 1 == mu.size() || mu[i + 1] != mu[i]) {
            z *= factorial(run);
            run = 0;
        }
    }
    return factorial(n) / z;
}

}  // namespace hforge
