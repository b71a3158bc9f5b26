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

#ifndef TRACTS_FLATS_HPP
#define TRACTS_FLATS_HPP

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <vector>

#include "tracts/errors.hpp"
#include "tracts/gp.hpp"
#include "tracts/matroid.hpp"
#include "tracts/rep.hpp"
#include "tracts/spaces.hpp"
#include "tracts/subset.hpp"
#include "tracts/tract.hpp"

namespace tracts {

/// The T-flat of a matroid flat F: the vector set of the F-quotient,
/// presented by the generators {eta_H : F <= H}.
struct TFlat {
  Subset flat;
  VectorSpacePredicate predicate;
};

/// Coordinates map: the elements whose characteristic vector belongs to
/// the set.
inline Subset coordinates(const VectorSpacePredicate& p) {
  Subset out = 0;
  for (int e = 0; e < p.n(); ++e)
    if (p.membership(delta_vec(p.tract(), p.n(), e))) out |= (1u << e);
  return out;
}

inline Subset coordinates(const Tract& t, int n,
                          const std::vector<TVec>& members) {
  Subset out = 0;
  for (int e = 0; e < n; ++e) {
    TVec d = delta_vec(t, n, e);
    if (std::find(members.begin(), members.end(), d) != members.end())
      out |= (1u << e);
  }
  return out;
}

/// The T-flat of F for [phi].  For small finite tracts the generator
/// presentation is compared against the vector set of the F-quotient,
/// which must enumerate the same members.
inline TFlat t_flat(const GPFunction& phi, Subset f) {
  Matroid m = phi.underlying_matroid();
  if (!m.is_flat(f)) throw invalid_input("t_flat: not a flat");
  Representation rep = fundamental_rep(phi);
  std::vector<TVec> gens;
  for (const auto& [h, row] : rep.eta)
    if (subset_of(f, h)) gens.push_back(row);
  VectorSpacePredicate pred(phi.tract(), phi.n(), std::move(gens),
                            SpaceRole::t_flat);
  if (phi.tract().finite()) {
    double total = 1;
    for (int i = 0; i < phi.n(); ++i)
      total *= static_cast<double>(phi.tract().size());
    if (total <= 100'000 &&
        pred.members() != vectors_of(phi.f_quotient(f)).members())
      throw std::logic_error("t_flat: hyperplane presentation disagrees "
                             "with the F-quotient vector set");
  }
  return TFlat{f, std::move(pred)};
}

/// The indexed family {V_F : F flat of M_phi}, with the order
/// isomorphism with the lattice of flats verified on construction.
class TFlatLattice {
 public:
  explicit TFlatLattice(const GPFunction& phi)
      : t_(phi.tract()), n_(phi.n()), lattice_(phi.underlying_matroid()) {
    for (Subset f : lattice_.flats()) tflats_.push_back(t_flat(phi, f));
    verify_order_isomorphism(phi);
  }

  const Tract& tract() const { return t_; }
  int n() const { return n_; }
  const FlatLattice& coordinate_lattice() const { return lattice_; }
  const std::vector<TFlat>& tflats() const& { return tflats_; }

  const TFlat& at(Subset f) const {
    for (const TFlat& tf : tflats_)
      if (tf.flat == f) return tf;
    throw invalid_input("not a flat of this lattice");
  }

  std::vector<const TFlat*> hyperplane_members() const {
    return members_of_corank(1);
  }
  std::vector<const TFlat*> corank2_members() const {
    return members_of_corank(2);
  }

  /// Explicit member lists per flat; finite tracts only.
  std::map<Subset, std::vector<TVec>> enumerate(
      long guard = kEnumerationGuard) const {
    std::map<Subset, std::vector<TVec>> out;
    for (const TFlat& tf : tflats_) out[tf.flat] = tf.predicate.members(guard);
    return out;
  }

 private:
  std::vector<const TFlat*> members_of_corank(int c) const {
    std::vector<const TFlat*> out;
    for (const TFlat& tf : tflats_)
      if (lattice_.corank_of_flat(tf.flat) == c) out.push_back(&tf);
    return out;
  }

  void verify_order_isomorphism(const GPFunction& phi) const {
    // Delta recovers the flat from its T-flat, which pins distinctness
    // and the reverse order direction; generator inclusion certifies the
    // forward direction for every tract.
    for (const TFlat& tf : tflats_)
      if (coordinates(tf.predicate) != tf.flat)
        throw std::logic_error("T-flat coordinates differ from its flat");
    for (const TFlat& a : tflats_)
      for (const TFlat& b : tflats_) {
        if (!subset_of(a.flat, b.flat)) continue;
        for (const TVec& g : b.predicate.generators())
          if (std::find(a.predicate.generators().begin(),
                        a.predicate.generators().end(),
                        g) == a.predicate.generators().end())
            throw std::logic_error("generator sets are not nested along "
                                   "the lattice order");
      }
    if (t_.finite()) {
      double total = 1;
      for (int i = 0; i < n_; ++i) total *= static_cast<double>(t_.size());
      if (total > 100'000) return;
      std::map<Subset, std::vector<TVec>> mem = enumerate();
      for (const TFlat& a : tflats_)
        for (const TFlat& b : tflats_) {
          bool inc = std::includes(mem[b.flat].begin(), mem[b.flat].end(),
                                   mem[a.flat].begin(), mem[a.flat].end());
          if (inc != subset_of(a.flat, b.flat))
            throw std::logic_error("T-flat inclusion disagrees with the "
                                   "lattice order");
        }
    }
  }

  Tract t_;
  int n_;
  FlatLattice lattice_;
  std::vector<TFlat> tflats_;
};

inline TFlatLattice lattice_of_t_flats(const GPFunction& phi) {
  return TFlatLattice(phi);
}

namespace detail {

/// Canonicalized explicit collection with poset structure: coranks by
/// shortest saturated chain, the coordinate lattice, and (after the LF4
/// scan) one generator per hyperplane member.
struct LfAnalysis {
  Tract t;
  int n = 0;
  std::vector<std::vector<TVec>> members;  // sorted vector per set
  std::vector<TVec> ambient;               // all of T^n
  std::vector<int> corank;
  std::vector<Subset> delta;
  std::vector<Subset> lambda;              // coordinate lattice, sorted
  std::map<Subset, int> lambda_corank;
  std::map<Subset, TVec> eta;              // hyperplane flat -> eta_H
};

inline bool set_le(const std::vector<TVec>& a, const std::vector<TVec>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

/// Shortest saturated chains to the top of a finite poset given by its
/// `leq` relation; index `top` must be the maximum.
template <typename Leq>
std::vector<int> corank_by_chains(int count, int top, Leq leq) {
  std::vector<std::vector<int>> covers(count);  // covers[i]: j covering i
  for (int i = 0; i < count; ++i)
    for (int j = 0; j < count; ++j) {
      if (i == j || !leq(i, j)) continue;
      bool covered = true;
      for (int k = 0; k < count && covered; ++k)
        if (k != i && k != j && leq(i, k) && leq(k, j)) covered = false;
      if (covered) covers[i].push_back(j);
    }
  std::vector<int> dist(count, -1);
  dist[top] = 0;
  std::deque<int> queue = {top};
  while (!queue.empty()) {
    int j = queue.front();
    queue.pop_front();
    for (int i = 0; i < count; ++i)
      if (dist[i] < 0)
        for (int jj : covers[i])
          if (jj == j) {
            dist[i] = dist[j] + 1;
            queue.push_back(i);
            break;
          }
  }
  return dist;
}

inline LfAnalysis analyze_collection(const Tract& t, int n,
                                     std::vector<std::vector<TVec>> collection,
                                     long guard) {
  if (!t.finite())
    throw invalid_input("explicit lattice checks require a finite tract");
  LfAnalysis a{t, n};
  for (auto& mem : collection) {
    for (const TVec& x : mem) {
      if (static_cast<int>(x.size()) != n)
        throw invalid_input("lattice member vector has wrong length");
      for (const TractElement& v : x) t.require(v);
    }
    std::sort(mem.begin(), mem.end());
    mem.erase(std::unique(mem.begin(), mem.end()), mem.end());
  }
  std::sort(collection.begin(), collection.end());
  collection.erase(std::unique(collection.begin(), collection.end()),
                   collection.end());
  a.members = std::move(collection);
  a.ambient = enumerate_t_vectors(t, n, guard);
  std::sort(a.ambient.begin(), a.ambient.end());
  return a;
}

}  // namespace detail

/// LF1-LF5 on an explicit collection of subsets of T^E over a finite
/// tract.  Reports the first failing axiom with a witness.
inline CheckReport check_lf_axioms(const Tract& t, int n,
                                   const std::vector<std::vector<TVec>>& v,
                                   long guard = 1'000'000,
                                   detail::LfAnalysis* out = nullptr) {
  detail::LfAnalysis a = detail::analyze_collection(t, n, v, guard);
  const int count = static_cast<int>(a.members.size());

  // LF1: contains T^E and is closed under intersection.
  int top = -1;
  for (int i = 0; i < count; ++i)
    if (a.members[i] == a.ambient) top = i;
  if (top < 0)
    return CheckReport::fail("LF1", "collection does not contain T^E");
  for (int i = 0; i < count; ++i)
    for (int j = i + 1; j < count; ++j) {
      std::vector<TVec> inter;
      std::set_intersection(a.members[i].begin(), a.members[i].end(),
                            a.members[j].begin(), a.members[j].end(),
                            std::back_inserter(inter));
      if (std::find(a.members.begin(), a.members.end(), inter) ==
          a.members.end())
        return CheckReport::fail(
            "LF1", "collection is not closed under intersection",
            {{"i", i}, {"j", j}});
    }

  auto leq = [&a](int i, int j) {
    return detail::set_le(a.members[i], a.members[j]);
  };
  a.corank = detail::corank_by_chains(count, top, leq);

  // LF2: every member is an intersection of hyperplanes.
  std::vector<int> hyperplanes;
  for (int i = 0; i < count; ++i)
    if (a.corank[i] == 1) hyperplanes.push_back(i);
  for (int i = 0; i < count; ++i) {
    if (i == top) continue;
    std::vector<TVec> inter = a.ambient;
    for (int h : hyperplanes) {
      if (!leq(i, h)) continue;
      std::vector<TVec> next;
      std::set_intersection(inter.begin(), inter.end(), a.members[h].begin(),
                            a.members[h].end(), std::back_inserter(next));
      inter = std::move(next);
    }
    if (inter != a.members[i])
      return CheckReport::fail(
          "LF2", "member is not an intersection of hyperplane members",
          {{"member", i}});
  }

  // LF3: Delta preserves coranks <= 2 (in both directions, which also
  // forces unique preimages at those coranks).
  for (int i = 0; i < count; ++i)
    a.delta.push_back(coordinates(t, n, a.members[i]));
  a.lambda = a.delta;
  std::sort(a.lambda.begin(), a.lambda.end());
  a.lambda.erase(std::unique(a.lambda.begin(), a.lambda.end()),
                 a.lambda.end());
  {
    int ltop = -1;
    for (size_t i = 0; i < a.lambda.size(); ++i)
      if (a.lambda[i] == full_set(n)) ltop = static_cast<int>(i);
    if (ltop < 0)
      return CheckReport::fail("LF3", "coordinate lattice has no top");
    std::vector<int> lcork = detail::corank_by_chains(
        static_cast<int>(a.lambda.size()), ltop, [&a](int i, int j) {
          return subset_of(a.lambda[i], a.lambda[j]);
        });
    for (size_t i = 0; i < a.lambda.size(); ++i)
      a.lambda_corank[a.lambda[i]] = lcork[i];
  }
  for (int i = 0; i < count; ++i) {
    int cv = a.corank[i];
    int cf = a.lambda_corank.at(a.delta[i]);
    if ((cv <= 2 || cf <= 2) && cv != cf)
      return CheckReport::fail("LF3",
                               "coordinates map does not preserve coranks "
                               "below 3",
                               {{"member", i},
                                {"member_corank", cv},
                                {"flat_corank", cf}});
  }

  // LF4: each hyperplane member is the orthogonal complement of a single
  // vector, searched among the orthogonal complement with the forced
  // support, smallest candidate first.
  for (int h : hyperplanes) {
    Subset want_support = full_set(n) & ~a.delta[h];
    std::optional<TVec> found;
    for (const TVec& cand : a.ambient) {
      if (support_of(cand) != want_support) continue;
      bool orth = true;
      for (const TVec& x : a.members[h])
        if (!t.dot_is_null(cand, x)) {
          orth = false;
          break;
        }
      if (!orth) continue;
      std::vector<TVec> comp;
      for (const TVec& x : a.ambient)
        if (t.dot_is_null(cand, x)) comp.push_back(x);
      if (comp == a.members[h]) {
        found = cand;
        break;
      }
    }
    if (!found)
      return CheckReport::fail(
          "LF4", "hyperplane member is not a single orthogonal complement",
          {{"member", h}});
    a.eta[a.delta[h]] = *found;
  }

  // LF5: above every corank-2 flat, the coordinate lattice is the flat
  // lattice of a matroid whose cobases are the support bases.
  for (int i = 0; i < count; ++i) {
    if (a.corank[i] != 2) continue;
    Subset f = a.delta[i];
    std::vector<Subset> sb = support_bases_definitional(n, a.members[i]);
    std::vector<Subset> bases;
    for (Subset b : sb) bases.push_back(full_set(n) & ~b);
    std::optional<Matroid> mf;
    try {
      mf = Matroid::from_bases(
          n, bases.empty() ? 0 : set_size(bases.front()), bases);
    } catch (const axiom_error&) {
    } catch (const invalid_input&) {
    }
    std::vector<Subset> lambda_f;
    for (Subset g : a.lambda)
      if (subset_of(f, g)) lambda_f.push_back(g);
    std::sort(lambda_f.begin(), lambda_f.end());
    if (!mf) return CheckReport::fail("LF5", "support bases are not the "
                                             "cobases of a matroid",
                                      {{"F", set_elements(f)}});
    std::vector<Subset> mf_flats = mf->flats().flats();
    std::sort(mf_flats.begin(), mf_flats.end());
    if (mf_flats != lambda_f)
      return CheckReport::fail(
          "LF5", "lattice above a corank-2 flat is not the flat lattice "
                 "of its support-basis matroid",
          {{"F", set_elements(f)}});
  }

  if (out) *out = std::move(a);
  return CheckReport::pass();
}

/// The remark variant: hyperplane members must be vector sets of rank-1
/// GP functions and corank-2 members vector sets of rank-2 GP functions
/// (decided through the linear-subspace criterion plus the support-basis
/// cardinality).
inline CheckReport check_lf_axioms_variant(
    const Tract& t, int n, const std::vector<std::vector<TVec>>& v,
    long guard = 1'000'000) {
  detail::LfAnalysis a = detail::analyze_collection(t, n, v, guard);
  const int count = static_cast<int>(a.members.size());
  int top = -1;
  for (int i = 0; i < count; ++i)
    if (a.members[i] == a.ambient) top = i;
  if (top < 0)
    return CheckReport::fail("LF1*", "collection does not contain T^E");
  for (int i = 0; i < count; ++i)
    for (int j = i + 1; j < count; ++j) {
      std::vector<TVec> inter;
      std::set_intersection(a.members[i].begin(), a.members[i].end(),
                            a.members[j].begin(), a.members[j].end(),
                            std::back_inserter(inter));
      if (std::find(a.members.begin(), a.members.end(), inter) ==
          a.members.end())
        return CheckReport::fail("LF1*",
                                 "collection is not closed under intersection",
                                 {{"i", i}, {"j", j}});
    }
  auto leq = [&a](int i, int j) {
    return detail::set_le(a.members[i], a.members[j]);
  };
  a.corank = detail::corank_by_chains(count, top, leq);
  std::vector<int> hyperplanes;
  for (int i = 0; i < count; ++i)
    if (a.corank[i] == 1) hyperplanes.push_back(i);
  for (int i = 0; i < count; ++i) {
    if (i == top) continue;
    std::vector<TVec> inter = a.ambient;
    for (int h : hyperplanes) {
      if (!leq(i, h)) continue;
      std::vector<TVec> next;
      std::set_intersection(inter.begin(), inter.end(), a.members[h].begin(),
                            a.members[h].end(), std::back_inserter(next));
      inter = std::move(next);
    }
    if (inter != a.members[i])
      return CheckReport::fail(
          "LF2*", "member is not an intersection of hyperplane members",
          {{"member", i}});
  }
  auto is_rank_k_vector_set = [&](const std::vector<TVec>& mem, int k) {
    if (!is_linear_subspace(t, mem, guard)) return false;
    std::vector<Subset> sb = support_bases_definitional(n, mem);
    return std::all_of(sb.begin(), sb.end(),
                       [n, k](Subset b) { return set_size(b) == n - k; });
  };
  for (int h : hyperplanes)
    if (!is_rank_k_vector_set(a.members[h], 1))
      return CheckReport::fail(
          "LF3*", "hyperplane member is not a rank-1 vector set",
          {{"member", h}});
  for (int i = 0; i < count; ++i)
    if (a.corank[i] == 2 && !is_rank_k_vector_set(a.members[i], 2))
      return CheckReport::fail(
          "LF4*", "corank-2 member is not a rank-2 vector set",
          {{"member", i}});
  return CheckReport::pass();
}

/// Inverts the lattice-of-T-flats map on a collection passing LF1-LF5:
/// recovers the matroid from the coordinate lattice, the hyperplane
/// functions from the LF4 scan, the rank-2 members through the small-rank
/// reconstruction, and finally the GP function; the round trip back to
/// the input collection is verified.
inline GPFunction gp_from_lattice(const Tract& t, int n,
                                  const std::vector<std::vector<TVec>>& v,
                                  long guard = 1'000'000) {
  detail::LfAnalysis a{t, n};
  CheckReport r = check_lf_axioms(t, n, v, guard, &a);
  if (!r.ok)
    throw axiom_error(r.axiom, "gp_from_lattice: " + r.message, r.detail);

  // The coordinate lattice is the lattice of flats of a matroid:
  // closure by intersection of flats, independence by the closure test.
  auto close = [&a, n](Subset s) {
    Subset out = full_set(n);
    for (Subset g : a.lambda)
      if (subset_of(s, g)) out &= g;
    return out;
  };
  auto independent = [&close](Subset s) {
    for (int e : set_elements(s))
      if (set_contains(close(s & ~(1u << e)), e)) return false;
    return true;
  };
  int rank = 0;
  Subset greedy = 0;
  for (int e = 0; e < n; ++e)
    if (independent(greedy | (1u << e))) greedy |= (1u << e);
  rank = set_size(greedy);
  std::vector<Subset> bases;
  for (Subset b : subsets_of_size(n, rank))
    if (independent(b)) bases.push_back(b);
  Matroid m = Matroid::from_bases(n, rank, bases);
  {
    std::vector<Subset> mflats = m.flats().flats();
    std::sort(mflats.begin(), mflats.end());
    if (mflats != a.lambda)
      throw axiom_error("LF5",
                        "gp_from_lattice: coordinate lattice is not the "
                        "lattice of flats of its derived matroid");
  }

  FlatLattice lat = m.flats();
  std::map<Subset, GPFunction> psi;
  for (Subset h : lat.hyperplanes()) {
    const TVec& eta = a.eta.at(h);
    std::map<Subset, TractElement> vals;
    for (int e = 0; e < n; ++e)
      if (!eta[e].is_zero()) vals[1u << e] = eta[e];
    psi.emplace(h, GPFunction::new_checked(t, n, 1, std::move(vals)));
  }
  for (Subset f : lat.corank2_flats()) {
    Matroid mf = m.contract_with_loops(f);
    std::map<Subset, TVec> eta_f;
    for (Subset h : lat.hyperplanes_above(f)) eta_f[h] = a.eta.at(h);
    psi.emplace(f, gp_from_rep(Representation{t, mf, std::move(eta_f)}));
  }
  GPFunction phi =
      reconstruct_from_lambda2(Lambda2Representation{t, m, std::move(psi)});

  // Round trip: the T-flats of the result enumerate the input collection.
  std::vector<std::vector<TVec>> back;
  for (auto& [f, mem] : TFlatLattice(phi).enumerate(guard)) {
    std::sort(mem.begin(), mem.end());
    back.push_back(std::move(mem));
  }
  std::sort(back.begin(), back.end());
  back.erase(std::unique(back.begin(), back.end()), back.end());
  if (back != a.members)
    throw std::logic_error("gp_from_lattice: round trip does not reproduce "
                           "the input lattice");
  return phi;
}

}  // namespace tracts

#endif  // TRACTS_FLATS_HPP
