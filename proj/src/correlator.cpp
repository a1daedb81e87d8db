#include "hforge/correlator.hpp"

#include <algorithm>
#include <numeric>

#include "hforge/errors.hpp"

namespace hforge {

CorrelatorKey::CorrelatorKey(long g, std::vector<long> m, long i)
    : genus(g), exponents(std::move(m)), lambda_index(i) {
    if (g < 0) throw UnstableKeyError("negative genus");
    if (i < 0 || i > g) throw UnstableKeyError("lambda index out of range 0..g");
    for (long e : exponents)
        if (e < 0) throw UnstableKeyError("negative psi exponent");
    if (!stable(g, exponents.size()))
        throw UnstableKeyError("unstable (g,n) = (" + std::to_string(g) + "," +
                               std::to_string(exponents.size()) + ")");
    std::sort(exponents.begin(), exponents.end());
}

long CorrelatorKey::degree() const {
    return std::accumulate(exponents.begin(), exponents.end(), 0L);
}

bool CorrelatorKey::dimension_ok() const {
    return degree() == 3 * genus - 3 + static_cast<long>(n()) - lambda_index;
}

bool stable(long genus, std::size_t n) {
    if (n < 1) return false;
    if (genus == 0 && n < 3) return false;
    return true;
}

std::string to_string(const CorrelatorKey& key) {
    std::string s = "<";
    for (long e : key.exponents) s += "tau_" + std::to_string(e) + " ";
    if (key.lambda_index > 0) s += "lambda_" + std::to_string(key.lambda_index) + " ";
    s.back() = '>';
    return s + "_" + std::to_string(key.genus);
}

const TableEntry* CorrelatorTable::find(const CorrelatorKey& key) const {
    auto it = entries_.find(key);
    return it == entries_.end() ? nullptr : &it->second;
}

void CorrelatorTable::insert(const CorrelatorKey& key, const Rational& value, Provenance prov) {
    entries_[key] = TableEntry{value, prov};
}

void CorrelatorTable::merge(const CorrelatorTable& other) {
    for (const auto& [k, e] : other.entries_) entries_[k] = e;
}

}  // namespace hforge
