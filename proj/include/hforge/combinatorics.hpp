#pragma once

#include <vector>

#include "hforge/rational.hpp"

namespace hforge {

Integer factorial(long n);

// (2m-1)!! for m >= 0, with (-1)!! = 1.
Integer odd_double_factorial(long m);

Integer binomial(long n, long k);

// (sum m)! / prod m_i!
Integer multinomial(const std::vector<long>& m);

// e_i(values), the i-th elementary symmetric polynomial.
Integer elementary_symmetric(std::size_t i, const std::vector<long>& values);

// All partitions of n (each sorted descending), in the order produced by
// the standard descending-lexicographic generator.
std::vector<std::vector<long>> partitions_of(long n);

// All vectors of `parts` nonnegative integers summing to `total`.
std::vector<std::vector<long>> compositions_of(long total, std::size_t parts);

// All sorted-ascending multisets of `parts` nonnegative integers summing
// to `total`.
std::vector<std::vector<long>> multisets_of(long total, std::size_t parts);

// All set partitions of {0,...,n-1}, each as a list of blocks.
std::vector<std::vector<std::vector<std::size_t>>> set_partitions(std::size_t n);

}  // namespace hforge
