#pragma once

#include <set>
#include <vector>

#include "fdrctl/procedures.hpp"

inline std::set<std::size_t> rejected_indices(const fdrctl::RejectionSet& r) {
  std::set<std::size_t> out;
  for (std::size_t i = 0; i < r.rejected.size(); ++i) {
    if (r.rejected[i]) out.insert(i);
  }
  return out;
}

inline bool is_subset(const std::set<std::size_t>& a, const std::set<std::size_t>& b) {
  for (auto x : a) {
    if (!b.count(x)) return false;
  }
  return true;
}
