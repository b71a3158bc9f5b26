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

#ifndef TRACTS_GP_HPP
#define TRACTS_GP_HPP

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "tracts/errors.hpp"
#include "tracts/matroid.hpp"
#include "tracts/subset.hpp"
#include "tracts/tract.hpp"

namespace tracts {

/// An alternating rank-r function E^r -> T with values stored on sorted
/// r-subsets (absent key = 0).  Tuple evaluation multiplies by the
/// permutation sign, with -1 realized as negate(1) in the tract, so the
/// Krasner case (-1 = 1) needs no special handling anywhere.
class GPFunction {
 public:
  /// Validates GP1 (nonempty supports with basis exchange) and GP3 (the
  /// 3-term relations).  GP2 holds by construction.  Throws axiom_error
  /// with the offending witness, or invalid_input on malformed values.
  /// The GP3 scan is exhaustive; `guard_n` bounds the ground-set size it
  /// will accept.
  static GPFunction new_checked(const Tract& t, int n, int r,
                                std::map<Subset, TractElement> values,
                                int guard_n = kDefaultGp3Guard) {
    GPFunction phi = unchecked(t, n, r, std::move(values));
    phi.check_gp1();
    phi.check_gp3(guard_n);
    return phi;
  }

  /// Skips the axiom scan.  For internal construction of results that are
  /// valid by theorem (duals, quotients, sums); tests re-check those.
  static GPFunction unchecked(const Tract& t, int n, int r,
                              std::map<Subset, TractElement> values) {
    if (n < 0 || n > kMaxGroundSet)
      throw invalid_input("gp: ground set size must be in [0,16]");
    if (r < 0 || r > n) throw invalid_input("gp: rank out of range");
    for (const auto& [key, val] : values) {
      if (!subset_of(key, full_set(n)) || set_size(key) != r)
        throw invalid_input("gp: key is not a sorted r-subset of the ground "
                            "set: {" + subset_to_string(key) + "}");
      t.require(val);
      if (val.is_zero())
        throw invalid_input("gp: explicit zero value; omit the key instead");
    }
    return GPFunction(t, n, r, std::move(values));
  }

  static constexpr int kDefaultGp3Guard = 8;

  const Tract& tract() const { return t_; }
  int n() const { return n_; }
  int rank() const { return r_; }
  const std::map<Subset, TractElement>& values() const { return values_; }

  std::vector<Subset> supports() const {
    std::vector<Subset> out;
    for (const auto& [key, val] : values_) out.push_back(key);
    return out;
  }

  TractElement value(Subset s) const {
    auto it = values_.find(s);
    return it == values_.end() ? t_.zero() : it->second;
  }

  /// Evaluation on an arbitrary r-tuple: 0 on repeats, otherwise the
  /// stored value times the sign of the sorting permutation.
  TractElement eval(const std::vector<int>& tuple) const {
    if (static_cast<int>(tuple.size()) != r_)
      throw invalid_input("gp eval: tuple arity != rank");
    Subset s = 0;
    for (int e : tuple) {
      if (e < 0 || e >= n_) throw invalid_input("gp eval: index out of range");
      s |= (1u << e);
    }
    if (set_size(s) != r_) return t_.zero();
    TractElement v = value(s);
    if (v.is_zero()) return v;
    return permutation_sign(tuple) < 0 ? t_.negate(v) : v;
  }

  TractElement eval2(const std::vector<int>& prefix, int x, int y) const {
    std::vector<int> tuple = prefix;
    tuple.push_back(x);
    tuple.push_back(y);
    return eval(tuple);
  }

  Matroid underlying_matroid() const {
    return Matroid::from_bases(n_, r_, supports());
  }

  /// phi* on (n-r)-subsets via the complementary-sign rule.
  GPFunction dual() const {
    std::map<Subset, TractElement> dv;
    for (const auto& [b, val] : values_) {
      Subset d = full_set(n_) & ~b;
      std::vector<int> concat = set_elements(d);
      for (int e : set_elements(b)) concat.push_back(e);
      dv[d] = permutation_sign(concat) < 0 ? t_.negate(val) : val;
    }
    return GPFunction(t_, n_, n_ - r_, std::move(dv));
  }

  /// phi/S on the shrunken ground set E-S.  `ground[i]` is the original
  /// index of new element i.
  struct Contraction;

  Contraction contract(Subset s,
                       std::optional<Subset> spanning = std::nullopt) const;

  /// phi_F: the contraction of the flat F with F kept in the ground set
  /// as loops.  Rank = corank(F); defined on all of E.  The spanning set
  /// of F is chosen greedily in index order, which fixes the
  /// representative; any other choice gives a projectively equal result.
  GPFunction f_quotient(Subset f,
                        std::optional<Subset> spanning = std::nullopt) const {
    Matroid m = underlying_matroid();
    if (!m.is_flat(f)) throw invalid_input("f_quotient: not a flat");
    std::vector<int> prefix = set_elements(pick_spanning(m, f, spanning));
    int s = r_ - static_cast<int>(prefix.size());
    std::map<Subset, TractElement> vals;
    for (Subset a : subsets_of_size(n_, s)) {
      std::vector<int> tuple = prefix;
      for (int e : set_elements(a)) tuple.push_back(e);
      TractElement v = eval(tuple);
      if (!v.is_zero()) vals[a] = v;
    }
    return GPFunction(t_, n_, s, std::move(vals));
  }

  GPFunction scaled(const TractElement& c) const {
    t_.require(c);
    if (c.is_zero()) throw invalid_input("scaled: unit required");
    std::map<Subset, TractElement> vals;
    for (const auto& [key, val] : values_) vals[key] = t_.product(c, val);
    return GPFunction(t_, n_, r_, std::move(vals));
  }

  friend GPFunction direct_sum(const GPFunction& a, const GPFunction& b) {
    if (a.t_ != b.t_) throw invalid_input("direct_sum: tract mismatch");
    if (a.n_ + b.n_ > kMaxGroundSet)
      throw invalid_input("direct_sum: combined ground set too large");
    std::map<Subset, TractElement> vals;
    for (const auto& [ka, va] : a.values_)
      for (const auto& [kb, vb] : b.values_)
        vals[ka | (kb << a.n_)] = a.t_.product(va, vb);
    return GPFunction(a.t_, a.n_ + b.n_, a.r_ + b.r_, std::move(vals));
  }

  /// True iff psi = c * phi for some unit c.
  friend bool projectively_equal(const GPFunction& a, const GPFunction& b) {
    if (a.t_ != b.t_ || a.n_ != b.n_ || a.r_ != b.r_) return false;
    if (a.supports() != b.supports()) return false;
    if (a.values_.empty()) return true;
    const auto& [b0, av0] = *a.values_.begin();
    TractElement c = a.t_.product(b.values_.at(b0), a.t_.mul_inv(av0));
    for (const auto& [key, av] : a.values_)
      if (b.values_.at(key) != a.t_.product(c, av)) return false;
    return true;
  }

 private:
  GPFunction(Tract t, int n, int r, std::map<Subset, TractElement> values)
      : t_(std::move(t)), n_(n), r_(r), values_(std::move(values)) {}

  static Subset pick_spanning(const Matroid& m, Subset s,
                              std::optional<Subset> spanning) {
    if (!spanning) return m.max_independent_subset(s);
    if (!subset_of(*spanning, s) || !m.is_independent(*spanning) ||
        set_size(*spanning) != m.rank_of(s))
      throw invalid_input("spanning set is not maximal independent in S");
    return *spanning;
  }

  void check_gp1() const {
    try {
      (void)underlying_matroid();
    } catch (const axiom_error& e) {
      throw axiom_error("GP1", std::string("gp: supports: ") + e.what(),
                        e.detail());
    }
  }

  // The scan runs over sorted (r-2)-subsets as prefix and disjoint
  // a<b<c<d; in an ideal tract every tuple with a repeated entry or an
  // unsorted arrangement reduces to one of these (the scaled multiset
  // stays null), so this covers all of E^(r+2).  Violations are reported
  // for the lexicographically first canonical tuple.
  void check_gp3(int guard_n) const {
    if (r_ < 2) return;
    if (n_ > guard_n)
      throw invalid_input("gp3 scan guard exceeded (n > " +
                          std::to_string(guard_n) + "); raise the guard");
    for (Subset p : subsets_of_size(n_, r_ - 2)) {
      std::vector<int> prefix = set_elements(p);
      std::vector<int> rest = set_elements(full_set(n_) & ~p);
      int k = static_cast<int>(rest.size());
      for (int ia = 0; ia < k; ++ia)
        for (int ib = ia + 1; ib < k; ++ib)
          for (int ic = ib + 1; ic < k; ++ic)
            for (int id = ic + 1; id < k; ++id) {
              int a = rest[ia], b = rest[ib], c = rest[ic], d = rest[id];
              TractElement t1 =
                  t_.product(eval2(prefix, a, b), eval2(prefix, c, d));
              TractElement t2 =
                  t_.product(eval2(prefix, a, c), eval2(prefix, b, d));
              TractElement t3 =
                  t_.product(eval2(prefix, a, d), eval2(prefix, b, c));
              if (!t_.is_null(std::vector<TractElement>{t1, t_.negate(t2),
                                                        t3}))
                throw axiom_error(
                    "GP3", "gp: 3-term relation fails",
                    {{"prefix", prefix},
                     {"abcd", {a, b, c, d}},
                     {"terms",
                      {Tract::to_string(t1), Tract::to_string(t2),
                       Tract::to_string(t3)}}});
            }
    }
  }

  Tract t_;
  int n_;
  int r_;
  std::map<Subset, TractElement> values_;
};

struct GPFunction::Contraction {
  GPFunction gp;
  std::vector<int> ground;
};

inline GPFunction::Contraction GPFunction::contract(
    Subset s, std::optional<Subset> spanning) const {
  Matroid m = underlying_matroid();
  Subset span = pick_spanning(m, s, spanning);
  std::vector<int> prefix = set_elements(span);
  int rs = static_cast<int>(prefix.size());
  std::vector<int> ground = set_elements(full_set(n_) & ~s);
  int nn = static_cast<int>(ground.size());
  std::map<Subset, TractElement> vals;
  for (Subset a : subsets_of_size(nn, r_ - rs)) {
    std::vector<int> tuple = prefix;
    for (int i : set_elements(a)) tuple.push_back(ground[i]);
    TractElement v = eval(tuple);
    if (!v.is_zero()) vals[a] = v;
  }
  return Contraction{GPFunction(t_, nn, r_ - rs, std::move(vals)), ground};
}

}  // namespace tracts

#endif  // TRACTS_GP_HPP
