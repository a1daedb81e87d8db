#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "hforge/rational.hpp"

namespace hforge {

// Identifies the Hodge integral <tau_{m_1}...tau_{m_n} lambda_i>_g.
// lambda_index 0 means a pure psi-class correlator.
struct CorrelatorKey {
    long genus;
    std::vector<long> exponents;  // sorted ascending, nonnegative
    long lambda_index;            // 0..genus

    CorrelatorKey(long g, std::vector<long> m, long i);

    std::size_t n() const { return exponents.size(); }
    long degree() const;  // sum of exponents

    // Nonzero only when degree() == 3g - 3 + n - i.
    bool dimension_ok() const;

    auto operator<=>(const CorrelatorKey&) const = default;
};

// (g,n) outside the unstable list (0,1), (0,2), with n >= 1.
bool stable(long genus, std::size_t n);

std::string to_string(const CorrelatorKey& key);

enum class Provenance { ClosedForm, Recursion, Extracted };

struct TableEntry {
    Rational value;
    Provenance provenance;
};

// Memo / result table for correlator values.
class CorrelatorTable {
public:
    bool contains(const CorrelatorKey& key) const { return entries_.count(key) > 0; }
    const TableEntry* find(const CorrelatorKey& key) const;
    void insert(const CorrelatorKey& key, const Rational& value, Provenance prov);

    const std::map<CorrelatorKey, TableEntry>& entries() const { return entries_; }
    void merge(const CorrelatorTable& other);

private:
    std::map<CorrelatorKey, TableEntry> entries_;
};

}  // namespace hforge
