#include "hforge/combinatorics.hpp"

#include <algorithm>
#include <stdexcept>

namespace hforge {

Integer factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial of negative integer");
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Integer odd_double_factorial(long m) {
    Integer r = 1;
    for (long j = 1; 2 * j - 1 <= 2 * m - 1; ++j) r *= 2 * j - 1;
    return r;
}

Integer binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Integer multinomial(const std::vector<long>& m) {
    long total = 0;
    Integer den = 1;
    for (long v : m) {
        if (v < 0) return 0;
        total += v;
        den *= factorial(v);
    }
    return factorial(total) / den;
}

Integer elementary_symmetric(std::size_t i, const std::vector<long>& values) {
    if (i > values.size()) throw std::invalid_argument("elementary_symmetric: index out of range");
    // e[j] after processing k values = e_j(values[0..k)).
    std::vector<Integer> e(i + 1, 0);
    e[0] = 1;
    for (long x : values)
        for (std::size_t j = std::min(i, e.size() - 1); j >= 1; --j) e[j] += x * e[j - 1];
    return e[i];
}

std::vector<std::vector<long>> partitions_of(long n) {
    std::vector<std::vector<long>> out;
    std::vector<long> cur;
    auto rec = [&](auto&& self, long rest, long maxpart) -> void {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (long p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

std::vector<std::vector<long>> compositions_of(long total, std::size_t parts) {
    std::vector<std::vector<long>> out;
    std::vector<long> cur(parts, 0);
    auto rec = [&](auto&& self, std::size_t idx, long rest) -> void {
        if (idx + 1 == parts) {
            cur[idx] = rest;
            out.push_back(cur);
            return;
        }
        for (long v = 0; v <= rest; ++v) {
            cur[idx] = v;
            self(self, idx + 1, rest - v);
        }
    };
    if (parts == 0) {
        if (total == 0) out.push_back({});
        return out;
    }
    rec(rec, 0, total);
    return out;
}

std::vector<std::vector<long>> multisets_of(long total, std::size_t parts) {
    std::vector<std::vector<long>> out;
    std::vector<long> cur;
    auto rec = [&](auto&& self, std::size_t left, long rest, long minval) -> void {
        if (left == 0) {
            if (rest == 0) out.push_back(cur);
            return;
        }
        for (long v = minval; v * static_cast<long>(left) <= rest; ++v) {
            cur.push_back(v);
            self(self, left - 1, rest - v, v);
            cur.pop_back();
        }
    };
    if (parts == 0) {
        if (total == 0) out.push_back({});
        return out;
    }
    rec(rec, parts, total, 0);
    return out;
}

std::vector<std::vector<std::vector<std::size_t>>> set_partitions(std::size_t n) {
    std::vector<std::vector<std::vector<std::size_t>>> out;
    std::vector<std::vector<std::size_t>> cur;
    auto rec = [&](auto&& self, std::size_t next) -> void {
        if (next == n) {
            out.push_back(cur);
            return;
        }
        // Recursive calls may grow cur and reallocate, so index a size
        // snapshot instead of holding references into the vector.
        const std::size_t block_count = cur.size();
        for (std::size_t b = 0; b < block_count; ++b) {
            cur[b].push_back(next);
            self(self, next + 1);
            cur[b].pop_back();
        }
        cur.push_back({next});
        self(self, next + 1);
        cur.pop_back();
    };
    rec(rec, 0);
    return out;
}

}  // namespace hforge
