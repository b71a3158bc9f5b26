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

#ifndef TRACTS_SPACES_HPP
#define TRACTS_SPACES_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "tracts/errors.hpp"
#include "tracts/gp.hpp"
#include "tracts/matroid.hpp"
#include "tracts/rep.hpp"
#include "tracts/subset.hpp"
#include "tracts/tract.hpp"

namespace tracts {

inline constexpr long kEnumerationGuard = 10'000'000;

/// All of T^n in lexicographic order (first coordinate slowest).
/// Finite tracts only; |T|^n is bounded by `guard`.
inline std::vector<TVec> enumerate_t_vectors(const Tract& t, int n,
                                             long guard = kEnumerationGuard) {
  if (!t.finite()) throw invalid_input("enumeration requires a finite tract");
  double total = 1;
  for (int i = 0; i < n; ++i) total *= static_cast<double>(t.size());
  if (total > static_cast<double>(guard))
    throw invalid_input("enumeration guard exceeded: |T|^n too large");
  std::vector<TractElement> uni = t.universe();
  std::vector<TVec> out;
  std::vector<size_t> odo(n, 0);
  while (true) {
    TVec v;
    v.reserve(n);
    for (int i = 0; i < n; ++i) v.push_back(uni[odo[i]]);
    out.push_back(std::move(v));
    int i = n - 1;
    for (; i >= 0; --i) {
      if (++odo[i] < uni.size()) break;
      odo[i] = 0;
    }
    if (i < 0) break;
  }
  return out;
}

enum class SpaceRole { vectors, covectors, t_flat };

/// A subset of T^E presented as the orthogonal complement of finitely
/// many generators (cocircuit functions).  Membership is decidable for
/// every tract; explicit enumeration is available when T is finite.
class VectorSpacePredicate {
 public:
  VectorSpacePredicate(Tract t, int n, std::vector<TVec> generators,
                       SpaceRole role)
      : t_(std::move(t)), n_(n), generators_(std::move(generators)),
        role_(role) {
    for (const TVec& g : generators_)
      if (static_cast<int>(g.size()) != n_)
        throw invalid_input("generator has wrong ground-set size");
  }

  const Tract& tract() const { return t_; }
  int n() const { return n_; }
  SpaceRole role() const { return role_; }
  const std::vector<TVec>& generators() const& { return generators_; }
  std::vector<TVec> generators() const&& { return generators_; }

  bool membership(const TVec& x) const {
    if (static_cast<int>(x.size()) != n_)
      throw invalid_input("membership: wrong ground-set size");
    for (const TVec& g : generators_)
      if (!t_.dot_is_null(x, g)) return false;
    return true;
  }

  /// Every member, in lexicographic order.  Finite tracts only.
  std::vector<TVec> members(long guard = kEnumerationGuard) const {
    std::vector<TVec> out;
    for (TVec& v : enumerate_t_vectors(t_, n_, guard))
      if (membership(v)) out.push_back(std::move(v));
    return out;
  }

 private:
  Tract t_;
  int n_;
  std::vector<TVec> generators_;
  SpaceRole role_;
};

/// The vector set of [phi]: the orthogonal complement of its fundamental
/// hyperplane functions.
inline VectorSpacePredicate vectors_of(const GPFunction& phi) {
  Representation rep = fundamental_rep(phi);
  std::vector<TVec> gens;
  for (const auto& [h, row] : rep.eta) gens.push_back(row);
  return VectorSpacePredicate(phi.tract(), phi.n(), std::move(gens),
                              SpaceRole::vectors);
}

/// The covector set of [phi]: the vector set of the dual.
inline VectorSpacePredicate covectors_of(const GPFunction& phi) {
  Representation rep = fundamental_rep(phi.dual());
  std::vector<TVec> gens;
  for (const auto& [h, row] : rep.eta) gens.push_back(row);
  return VectorSpacePredicate(phi.tract(), phi.n(), std::move(gens),
                              SpaceRole::covectors);
}

/// Inclusion-minimal subsets of E meeting the support of every nonzero
/// member.  The definitional computation, used as the oracle side of
/// support_bases.
inline std::vector<Subset> support_bases_definitional(
    int n, const std::vector<TVec>& members) {
  std::vector<Subset> supports;
  for (const TVec& x : members)
    if (!is_zero_vec(x)) supports.push_back(support_of(x));
  std::sort(supports.begin(), supports.end());
  supports.erase(std::unique(supports.begin(), supports.end()),
                 supports.end());
  std::vector<Subset> hitting;
  for (Subset b = 0; b <= full_set(n); ++b) {
    bool hits = true;
    for (Subset s : supports)
      if ((b & s) == 0) {
        hits = false;
        break;
      }
    if (hits) hitting.push_back(b);
  }
  std::vector<Subset> minimal;
  for (Subset b : hitting) {
    bool is_min = true;
    for (Subset c : hitting)
      if (c != b && subset_of(c, b)) {
        is_min = false;
        break;
      }
    if (is_min) minimal.push_back(b);
  }
  return minimal;
}

/// The support bases of the vector set of [phi]; equal to the cobases of
/// the underlying matroid.  For small finite tracts the definitional
/// minimal-transversal computation is run as well and compared.
inline std::vector<Subset> support_bases(const GPFunction& phi) {
  Matroid m = phi.underlying_matroid();
  std::vector<Subset> cobases = m.dual().bases();
  const Tract& t = phi.tract();
  if (t.finite()) {
    double total = 1;
    for (int i = 0; i < phi.n(); ++i) total *= static_cast<double>(t.size());
    if (total <= 100'000) {
      std::vector<Subset> defn = support_bases_definitional(
          phi.n(), vectors_of(phi).members());
      if (defn != cobases)
        throw std::logic_error("support bases differ from cobases; this "
                               "contradicts the theory");
    }
  }
  return cobases;
}

/// A family {S_i : i in J} with the Kronecker property S_i(j) = d_{ij}.
struct NormalForm {
  Subset index_set = 0;           // J
  std::map<int, TVec> rows;       // i -> S_i
};

/// The normal basis of the vector set of [phi] for a cobasis B: each row
/// is the circuit supported in (E-B) u {i}, scaled so S_i(i) = 1.
inline NormalForm normal_basis(const GPFunction& phi, Subset b) {
  Matroid m = phi.underlying_matroid();
  Matroid md = m.dual();
  if (!md.is_basis(b)) throw invalid_input("normal_basis: not a cobasis");
  Representation circuits = fundamental_rep(phi.dual());
  const Tract& t = phi.tract();
  NormalForm nf;
  nf.index_set = b;
  for (int i : set_elements(b)) {
    Subset hdual = md.closure(b & ~(1u << i));
    TVec row = circuits.eta.at(hdual);
    row = scale_vec(t, t.mul_inv(row[i]), row);
    for (int j : set_elements(b)) {
      bool ok = (j == i) ? row[j] == t.one() : row[j].is_zero();
      if (!ok)
        throw std::logic_error("normal basis row violates the Kronecker "
                               "property");
    }
    nf.rows[i] = std::move(row);
  }
  return nf;
}

/// X(e) - sum_a X(a) S_a(e) in N_T for all e outside the index set.
inline bool in_span(const Tract& t, const TVec& x, const NormalForm& nf) {
  int n = static_cast<int>(x.size());
  for (int e = 0; e < n; ++e) {
    if (set_contains(nf.index_set, e)) continue;
    std::vector<TractElement> terms = {x[e]};
    for (const auto& [a, row] : nf.rows)
      terms.push_back(t.negate(t.product(x[a], row[e])));
    if (!t.is_null(terms)) return false;
  }
  return true;
}

/// Anderson's criterion, by full enumeration over a finite tract:
/// V is T-invariant and equals the intersection of the spans of all its
/// normal bases over all support bases.
inline bool is_linear_subspace(const Tract& t, const std::vector<TVec>& v,
                               long guard = kEnumerationGuard) {
  if (!t.finite())
    throw invalid_input("is_linear_subspace requires a finite tract");
  if (v.empty()) return false;
  int n = static_cast<int>(v[0].size());
  std::vector<TVec> sorted = v;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  auto member = [&](const TVec& x) {
    return std::binary_search(sorted.begin(), sorted.end(), x);
  };
  for (const TVec& x : sorted) {
    if (static_cast<int>(x.size()) != n)
      throw invalid_input("is_linear_subspace: ragged input");
    for (const TractElement& c : t.universe())
      if (!member(scale_vec(t, c, x))) return false;  // not T-invariant
  }

  // All normal bases for all support bases.
  std::vector<NormalForm> forms;
  for (Subset b : support_bases_definitional(n, sorted)) {
    std::vector<std::vector<TVec>> choices;
    for (int i : set_elements(b)) {
      std::vector<TVec> ci;
      for (const TVec& x : sorted) {
        bool ok = true;
        for (int j : set_elements(b))
          if ((j == i && x[j] != t.one()) || (j != i && !x[j].is_zero())) {
            ok = false;
            break;
          }
        if (ok) ci.push_back(x);
      }
      if (ci.empty()) return false;  // no B-basis exists
      choices.push_back(std::move(ci));
    }
    std::vector<size_t> odo(choices.size(), 0);
    while (true) {
      NormalForm nf;
      nf.index_set = b;
      std::vector<int> belems = set_elements(b);
      for (size_t i = 0; i < choices.size(); ++i)
        nf.rows[belems[i]] = choices[i][odo[i]];
      forms.push_back(std::move(nf));
      int i = static_cast<int>(choices.size()) - 1;
      for (; i >= 0; --i) {
        if (++odo[i] < choices[i].size()) break;
        odo[i] = 0;
      }
      if (i < 0) break;
      if (forms.size() > 100'000)
        throw invalid_input("is_linear_subspace: too many normal bases");
    }
  }

  for (const TVec& x : enumerate_t_vectors(t, n, guard)) {
    bool in_all = true;
    for (const NormalForm& nf : forms)
      if (!in_span(t, x, nf)) {
        in_all = false;
        break;
      }
    if (in_all != member(x)) return false;
  }
  return true;
}

/// Z(X) = {e : X(e) = 0} restricted to the covectors of a Krasner GP
/// function: a bijection onto the lattice of flats.  Returns flat ->
/// covector.
inline std::map<Subset, TVec> k_flats_bijection(const GPFunction& phi) {
  if (phi.tract().kind() != TractKind::krasner)
    throw invalid_input("k_flats_bijection requires the Krasner hyperfield");
  VectorSpacePredicate cov = covectors_of(phi);
  std::map<Subset, TVec> out;
  for (const TVec& x : cov.members()) {
    Subset zero_set = full_set(phi.n()) & ~support_of(x);
    if (out.count(zero_set))
      throw std::logic_error("zero-set map is not injective on covectors");
    out[zero_set] = x;
  }
  std::vector<Subset> zsets;
  for (const auto& [f, x] : out) zsets.push_back(f);
  FlatLattice lat = phi.underlying_matroid().flats();
  std::vector<Subset> flats = lat.flats();
  std::sort(flats.begin(), flats.end());
  if (zsets != flats)
    throw std::logic_error("zero sets of covectors do not enumerate the "
                           "lattice of flats");
  return out;
}

/// Coordinatewise maximum of scaled generators: the tropical linear
/// combination max_i(c_i * g_i).  Used to sample members of tropical
/// linear spaces.
inline TVec tropical_max_combination(const Tract& t,
                                     const std::vector<TVec>& gens,
                                     const std::vector<TractElement>& coeffs) {
  if (t.kind() != TractKind::tropical)
    throw invalid_input("tropical combination requires the tropical tract");
  if (gens.empty() || gens.size() != coeffs.size())
    throw invalid_input("tropical combination: arity mismatch");
  int n = static_cast<int>(gens[0].size());
  TVec out = zero_vec(t, n);
  for (size_t i = 0; i < gens.size(); ++i)
    for (int e = 0; e < n; ++e) {
      TractElement val = t.product(coeffs[i], gens[i][e]);
      if (out[e].value() < val.value()) out[e] = val;
    }
  return out;
}

}  // namespace tracts

#endif  // TRACTS_SPACES_HPP
