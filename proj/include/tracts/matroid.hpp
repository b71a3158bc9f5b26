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

#ifndef TRACTS_MATROID_HPP
#define TRACTS_MATROID_HPP

#include <algorithm>
#include <array>
#include <map>
#include <vector>

#include "tracts/errors.hpp"
#include "tracts/subset.hpp"

namespace tracts {

class FlatLattice;

/// A matroid on {0,...,n-1} given by its set of bases.  Construction
/// checks the basis exchange axiom exhaustively, so a Matroid value is
/// always valid.  Everything downstream (closure, flats, duals, minors)
/// is derived from the bases by brute force, which is the point at the
/// ground-set sizes this library targets.
class Matroid {
 public:
  static Matroid from_bases(int n, int r, std::vector<Subset> bases) {
    if (n < 0 || n > kMaxGroundSet)
      throw invalid_input("matroid: ground set size must be in [0,16]");
    if (r < 0 || r > n) throw invalid_input("matroid: rank out of range");
    std::sort(bases.begin(), bases.end());
    bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
    if (bases.empty())
      throw axiom_error("basis-nonempty", "matroid: no bases given");
    for (Subset b : bases) {
      if (!subset_of(b, full_set(n)))
        throw invalid_input("matroid: basis not inside ground set");
      if (set_size(b) != r)
        throw invalid_input("matroid: basis of wrong cardinality");
    }
    // Exchange: for B1, B2 and x in B1-B2 there is y in B2-B1 with
    // B1-x+y a basis.
    for (Subset b1 : bases)
      for (Subset b2 : bases)
        for (int x : set_elements(b1 & ~b2)) {
          bool found = false;
          for (int y : set_elements(b2 & ~b1)) {
            Subset cand = (b1 & ~(1u << x)) | (1u << y);
            if (std::binary_search(bases.begin(), bases.end(), cand)) {
              found = true;
              break;
            }
          }
          if (!found)
            throw axiom_error(
                "basis-exchange", "matroid: basis exchange fails",
                {{"B1", set_elements(b1)},
                 {"B2", set_elements(b2)},
                 {"x", x}});
        }
    return Matroid(n, r, std::move(bases));
  }

  int n() const { return n_; }
  int rank() const { return r_; }
  const std::vector<Subset>& bases() const& { return bases_; }
  std::vector<Subset> bases() const&& { return bases_; }

  bool is_basis(Subset s) const {
    return std::binary_search(bases_.begin(), bases_.end(), s);
  }

  int rank_of(Subset s) const {
    int best = 0;
    for (Subset b : bases_) best = std::max(best, set_size(b & s));
    return best;
  }

  bool is_independent(Subset s) const { return rank_of(s) == set_size(s); }

  Subset closure(Subset s) const {
    int rs = rank_of(s);
    Subset out = s;
    for (int e = 0; e < n_; ++e)
      if (!set_contains(s, e) && rank_of(s | (1u << e)) == rs)
        out |= (1u << e);
    return out;
  }

  bool is_flat(Subset s) const { return closure(s) == s; }

  /// Greedy (smallest indices first) maximal independent subset of S.
  Subset max_independent_subset(Subset s) const {
    Subset indep = 0;
    for (int e : set_elements(s))
      if (is_independent(indep | (1u << e))) indep |= (1u << e);
    return indep;
  }

  Subset loops() const { return closure(0); }

  bool simple() const {
    if (loops() != 0) return false;
    for (int e = 0; e < n_; ++e)
      if (closure(1u << e) != (1u << e)) return false;
    return true;
  }

  Matroid dual() const {
    std::vector<Subset> cobases;
    cobases.reserve(bases_.size());
    for (Subset b : bases_) cobases.push_back(full_set(n_) & ~b);
    std::sort(cobases.begin(), cobases.end());
    return Matroid(n_, n_ - r_, std::move(cobases));
  }

  /// M/F with the elements of F re-added as loops: same ground set,
  /// rank r - rank(F), bases {B in E-F : rank(B u F) = r}.  Its
  /// hyperplanes are exactly the hyperplanes of M that contain F.
  Matroid contract_with_loops(Subset f) const {
    if (!is_flat(f)) throw invalid_input("contract_with_loops: not a flat");
    int rf = rank_of(f);
    std::vector<Subset> nb;
    for (Subset b : subsets_of_size(n_, r_ - rf))
      if ((b & f) == 0 && rank_of(b | f) == r_) nb.push_back(b);
    return Matroid(n_, r_ - rf, std::move(nb));
  }

  std::vector<Subset> hyperplanes() const;

  std::vector<Subset> cocircuits() const {
    std::vector<Subset> out;
    for (Subset h : hyperplanes()) out.push_back(full_set(n_) & ~h);
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<Subset> circuits() const { return dual().cocircuits(); }

  FlatLattice flats() const;

  friend bool operator==(const Matroid& a, const Matroid& b) {
    return a.n_ == b.n_ && a.r_ == b.r_ && a.bases_ == b.bases_;
  }

 private:
  Matroid(int n, int r, std::vector<Subset> bases)
      : n_(n), r_(r), bases_(std::move(bases)) {}

  int n_;
  int r_;
  std::vector<Subset> bases_;  // sorted
};

/// The lattice of flats of a matroid, fully enumerated.  Flats are listed
/// in (rank, mask) order; the covering axiom is verified on construction.
class FlatLattice {
 public:
  explicit FlatLattice(const Matroid& m) : n_(m.n()), r_(m.rank()) {
    std::vector<Subset> seen;
    for (Subset s = 0; s <= full_set(n_); ++s) seen.push_back(m.closure(s));
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    flats_ = seen;
    std::stable_sort(flats_.begin(), flats_.end(),
                     [&m](Subset a, Subset b) {
                       int ra = m.rank_of(a), rb = m.rank_of(b);
                       return ra != rb ? ra < rb : a < b;
                     });
    for (size_t i = 0; i < flats_.size(); ++i) {
      rank_.push_back(m.rank_of(flats_[i]));
      index_[flats_[i]] = static_cast<int>(i);
    }
    verify_covering_axiom();
  }

  int n() const { return n_; }
  int rank() const { return r_; }
  const std::vector<Subset>& flats() const& { return flats_; }
  std::vector<Subset> flats() const&& { return flats_; }

  bool contains(Subset f) const { return index_.count(f) != 0; }

  int rank_of_flat(Subset f) const { return rank_.at(at(f)); }
  int corank_of_flat(Subset f) const { return r_ - rank_of_flat(f); }

  std::vector<Subset> hyperplanes() const { return flats_of_corank(1); }
  std::vector<Subset> corank2_flats() const { return flats_of_corank(2); }

  std::vector<Subset> flats_of_corank(int c) const {
    std::vector<Subset> out;
    for (size_t i = 0; i < flats_.size(); ++i)
      if (r_ - rank_[i] == c) out.push_back(flats_[i]);
    return out;
  }

  /// Lambda_F: all flats containing F.
  std::vector<Subset> flats_above(Subset f) const {
    std::vector<Subset> out;
    for (Subset g : flats_)
      if (subset_of(f, g)) out.push_back(g);
    return out;
  }

  /// H_F: all hyperplanes containing F.
  std::vector<Subset> hyperplanes_above(Subset f) const {
    std::vector<Subset> out;
    for (Subset h : hyperplanes())
      if (subset_of(f, h)) out.push_back(h);
    return out;
  }

  std::vector<Subset> covers_of(Subset f) const {
    std::vector<Subset> above;
    for (Subset g : flats_)
      if (f != g && subset_of(f, g)) above.push_back(g);
    std::vector<Subset> out;
    for (Subset g : above) {
      bool minimal = true;
      for (Subset h : above)
        if (h != g && subset_of(h, g)) {
          minimal = false;
          break;
        }
      if (minimal) out.push_back(g);
    }
    return out;
  }

 private:
  int at(Subset f) const {
    auto it = index_.find(f);
    if (it == index_.end()) throw invalid_input("not a flat of this matroid");
    return it->second;
  }

  void verify_covering_axiom() const {
    for (Subset f : flats_) {
      Subset rest = full_set(n_) & ~f;
      std::vector<Subset> covers = covers_of(f);
      if (covers.empty()) {
        if (rest != 0)
          throw axiom_error("flat-covering", "maximal flat is not the top",
                            {{"F", set_elements(f)}});
        continue;
      }
      Subset covered = 0;
      for (Subset g : covers) {
        Subset part = g & ~f;
        if ((covered & part) != 0)
          throw axiom_error("flat-covering",
                            "covers of a flat overlap outside it",
                            {{"F", set_elements(f)}});
        covered |= part;
      }
      if (covered != rest)
        throw axiom_error("flat-covering",
                          "covers of a flat do not partition its complement",
                          {{"F", set_elements(f)}});
    }
  }

  int n_;
  int r_;
  std::vector<Subset> flats_;
  std::vector<int> rank_;
  std::map<Subset, int> index_;
};

inline std::vector<Subset> Matroid::hyperplanes() const {
  return flats().hyperplanes();
}

inline FlatLattice Matroid::flats() const { return FlatLattice(*this); }

/// All triples (H1,H2,H3), H1<H2<H3, of distinct hyperplanes through the
/// corank-2 flat F whose common intersection is exactly F.
inline std::vector<std::array<Subset, 3>> modular_triples(const Matroid& m,
                                                          Subset f) {
  FlatLattice lat = m.flats();
  if (!lat.contains(f) || lat.corank_of_flat(f) != 2)
    throw invalid_input("modular_triples: not a corank-2 flat");
  std::vector<Subset> hs = lat.hyperplanes_above(f);
  std::vector<std::array<Subset, 3>> out;
  for (size_t i = 0; i < hs.size(); ++i)
    for (size_t j = i + 1; j < hs.size(); ++j)
      for (size_t k = j + 1; k < hs.size(); ++k)
        if ((hs[i] & hs[j] & hs[k]) == f) out.push_back({hs[i], hs[j], hs[k]});
  return out;
}

/// Two distinct hyperplanes form a modular pair iff they meet in corank 2.
inline bool modular_pair(const Matroid& m, Subset h1, Subset h2) {
  if (h1 == h2) return false;
  return m.rank_of(h1 & h2) == m.rank() - 2;
}

}  // namespace tracts

#endif  // TRACTS_MATROID_HPP
