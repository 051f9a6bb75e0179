#ifndef SCHUBITOPE_TYPES_HPP
#define SCHUBITOPE_TYPES_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace schub {

using Int = mpz_class;
using Rat = mpq_class;

// Subsets of [n] as bitmasks: bit k-1 set  <=>  element k present.
using Subset = std::uint32_t;

constexpr int kMaxGroundSize = 20;

// Thrown on malformed user input (bad permutation string, row index out of
// range, ...). The CLI maps this to exit code 2.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Thrown when an internal exactness invariant breaks (nonzero remainder in a
// divided difference, Ehrhart validation mismatch). Never caused by user input.
struct invariant_fault : std::logic_error {
    explicit invariant_fault(const std::string& msg) : std::logic_error(msg) {}
};

inline int popcount(Subset s) { return __builtin_popcount(s); }

inline bool contains(Subset s, int element) {
    return (s >> (element - 1)) & 1u;
}

inline Subset with(Subset s, int element) { return s | (Subset{1} << (element - 1)); }

std::vector<int> subset_elements(Subset s);
Subset subset_from_elements(const std::vector<int>& elems, int n);

}  // namespace schub

#endif
