// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TRACTS_SUBSET_HPP
#define TRACTS_SUBSET_HPP

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace tracts {

/// Subsets of the ground set {0,...,n-1} as bitmasks, n <= 16.
using Subset = std::uint32_t;

inline constexpr int kMaxGroundSet = 16;

inline int set_size(Subset s) { return std::popcount(s); }

inline bool set_contains(Subset s, int e) { return (s >> e) & 1u; }

inline bool subset_of(Subset a, Subset b) { return (a & ~b) == 0; }

inline Subset full_set(int n) { return (n >= 32) ? ~0u : ((1u << n) - 1u); }

inline std::vector<int> set_elements(Subset s) {
  std::vector<int> out;
  for (int e = 0; s != 0; ++e, s >>= 1)
    if (s & 1u) out.push_back(e);
  return out;
}

inline Subset set_of(const std::vector<int>& elems) {
  Subset s = 0;
  for (int e : elems) s |= (1u << e);
  return s;
}

/// All k-subsets of {0,...,n-1} in ascending numeric (= colex) mask order.
inline std::vector<Subset> subsets_of_size(int n, int k) {
  std::vector<Subset> out;
  if (k < 0 || k > n) return out;
  if (k == 0) {
    out.push_back(0);
    return out;
  }
  for (Subset s = 0; s <= full_set(n); ++s)
    if (set_size(s) == k) out.push_back(s);
  return out;
}

/// "0,2,3" for {0,2,3}; "" for the empty set.
inline std::string subset_to_string(Subset s) {
  std::string out;
  for (int e : set_elements(s)) {
    if (!out.empty()) out += ',';
    out += std::to_string(e);
  }
  return out;
}

/// Parity of the permutation sorting `tuple` ascending: +1 or -1.
/// The caller guarantees distinct entries.
inline int permutation_sign(const std::vector<int>& tuple) {
  int inversions = 0;
  for (size_t i = 0; i < tuple.size(); ++i)
    for (size_t j = i + 1; j < tuple.size(); ++j)
      if (tuple[i] > tuple[j]) ++inversions;
  return (inversions % 2 == 0) ? 1 : -1;
}

}  // namespace tracts

#endif  // TRACTS_SUBSET_HPP
