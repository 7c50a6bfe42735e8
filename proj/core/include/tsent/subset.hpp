#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace tsent {

// Subsets of a variable universe are bitmasks over the declared variable
// order; entropy coordinate k corresponds to mask k+1 (masks 1..2^n-1).
using SubsetMask = std::uint32_t;

inline int subset_size(SubsetMask m) { return std::popcount(m); }

inline std::vector<std::string> subset_names(std::span<const std::string> universe,
                                             SubsetMask m) {
  std::vector<std::string> out;
  for (size_t i = 0; i < universe.size(); ++i)
    if (m & (SubsetMask{1} << i)) out.push_back(universe[i]);
  return out;
}

// Returns the mask, or 0 if some name is unknown.
inline SubsetMask mask_of(std::span<const std::string> universe,
                          std::span<const std::string> names) {
  SubsetMask m = 0;
  for (const auto& n : names) {
    bool found = false;
    for (size_t i = 0; i < universe.size(); ++i) {
      if (universe[i] == n) {
        m |= SubsetMask{1} << i;
        found = true;
        break;
      }
    }
    if (!found) return 0;
  }
  return m;
}

}  // namespace tsent
