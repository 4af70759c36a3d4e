#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace shuffle {

// Subset of {1, ..., 31} packed as a bitmask: bit i-1 stands for element i.
// Used for ides sets of parking functions, descent sets of tableaux, and the
// S of a fundamental index F_{n,S}.
using SubsetMask = std::uint32_t;

// True iff s is a subset of [n-1] = {1, ..., n-1}.
inline bool subset_within(SubsetMask s, int n) {
    return n >= 1 && (s >> (n - 1)) == 0;
}

std::vector<int> subset_elements(SubsetMask s);

// Elements must be distinct and in 1..31; throws std::invalid_argument.
SubsetMask subset_from_elements(const std::vector<int>& elements);

// "{2,4,6,7}", "{}" for the empty set.
std::string subset_to_string(SubsetMask s);

}  // namespace shuffle
