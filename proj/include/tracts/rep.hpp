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

#ifndef TRACTS_REP_HPP
#define TRACTS_REP_HPP

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <optional>
#include <vector>

#include "tracts/errors.hpp"
#include "tracts/gp.hpp"
#include "tracts/matroid.hpp"
#include "tracts/subset.hpp"
#include "tracts/tract.hpp"

namespace tracts {

/// A hyperplane representation: one function eta_H : E -> T per matroid
/// hyperplane, with support exactly E-H (R1) and linearly dependent
/// values on every modular triple (R2).
struct Representation {
  Tract t;
  Matroid m;
  std::map<Subset, TVec> eta;  // keyed by hyperplane mask
};

/// The representation induced by a GP function: eta_H(e) =
/// phi(i_1,...,i_{r-1},e) for the greedy spanning set of H.
inline Representation fundamental_rep(const GPFunction& phi) {
  Matroid m = phi.underlying_matroid();
  std::map<Subset, TVec> eta;
  for (Subset h : m.hyperplanes()) {
    std::vector<int> prefix = set_elements(m.max_independent_subset(h));
    TVec row;
    row.reserve(phi.n());
    for (int e = 0; e < phi.n(); ++e) {
      std::vector<int> tuple = prefix;
      tuple.push_back(e);
      row.push_back(phi.eval(tuple));
    }
    eta[h] = std::move(row);
  }
  return Representation{phi.tract(), std::move(m), std::move(eta)};
}

struct TripleDependence {
  bool dependent = false;
  std::array<TractElement, 3> coeffs;
};

/// Decides linear dependence of three hyperplane functions over a modular
/// triple with intersection F.  The coefficients are forced: c1 = 1, and
/// the uniqueness of additive inverses pins c2 at a point of H3 outside
/// H1 u H2 and c3 at a point of H2 outside H1 u H3; dependence holds iff
/// the forced tuple verifies on every coordinate.  (A dependence with
/// some c_i = 0 would make two of the functions dependent, which their
/// distinct supports rule out.)
inline TripleDependence triple_dependent(const Tract& t, const TVec& eta1,
                                         const TVec& eta2, const TVec& eta3,
                                         const Matroid& m, Subset f) {
  const int n = m.n();
  std::array<const TVec*, 3> es = {&eta1, &eta2, &eta3};
  std::array<Subset, 3> hs;
  for (int i = 0; i < 3; ++i) {
    if (static_cast<int>(es[i]->size()) != n)
      throw invalid_input("triple_dependent: wrong ground set");
    hs[i] = full_set(n) & ~support_of(*es[i]);
  }
  FlatLattice lat = m.flats();
  if (!lat.contains(f) || lat.corank_of_flat(f) != 2)
    throw invalid_input("triple_dependent: F is not a corank-2 flat");
  for (Subset h : hs)
    if (!lat.contains(h) || lat.corank_of_flat(h) != 1)
      throw invalid_input("triple_dependent: not a hyperplane function");
  if (hs[0] == hs[1] || hs[0] == hs[2] || hs[1] == hs[2] ||
      (hs[0] & hs[1] & hs[2]) != f)
    throw invalid_input("triple_dependent: not a modular triple over F");

  auto pick = [&](Subset inside, Subset avoid1, Subset avoid2) {
    Subset s = inside & ~(avoid1 | avoid2);
    return set_elements(s).front();  // nonempty by the covering axiom
  };
  int e = pick(hs[2], hs[0], hs[1]);
  int e2 = pick(hs[1], hs[0], hs[2]);
  TractElement c1 = t.one();
  TractElement c2 = t.negate(t.product(eta1[e], t.mul_inv(eta2[e])));
  TractElement c3 = t.negate(t.product(eta1[e2], t.mul_inv(eta3[e2])));
  for (int i = 0; i < n; ++i) {
    std::vector<TractElement> terms = {t.product(c1, eta1[i]),
                                       t.product(c2, eta2[i]),
                                       t.product(c3, eta3[i])};
    if (!t.is_null(terms)) return TripleDependence{false, {c1, c2, c3}};
  }
  return TripleDependence{true, {c1, c2, c3}};
}

/// Brute-force dependence search over a finite tract: every coefficient
/// tuple with the first nonzero entry normalized to 1.  Test oracle for
/// the forced-coefficient route.
inline std::optional<std::array<TractElement, 3>> exhaustive_triple_dependence(
    const Tract& t, const TVec& eta1, const TVec& eta2, const TVec& eta3) {
  if (!t.finite())
    throw invalid_input("exhaustive search requires a finite tract");
  std::vector<TractElement> all = t.universe();
  std::vector<std::array<TractElement, 3>> candidates;
  for (const auto& c2 : all)
    for (const auto& c3 : all) candidates.push_back({t.one(), c2, c3});
  for (const auto& c3 : all) candidates.push_back({t.zero(), t.one(), c3});
  candidates.push_back({t.zero(), t.zero(), t.one()});
  for (const auto& c : candidates) {
    bool ok = true;
    for (size_t i = 0; i < eta1.size() && ok; ++i) {
      std::vector<TractElement> terms = {t.product(c[0], eta1[i]),
                                         t.product(c[1], eta2[i]),
                                         t.product(c[2], eta3[i])};
      ok = t.is_null(terms);
    }
    if (ok) return c;
  }
  return std::nullopt;
}

/// R1 + R2 validation.
inline CheckReport check_representation(const Representation& rep) {
  FlatLattice lat = rep.m.flats();
  std::vector<Subset> hs = lat.hyperplanes();
  std::vector<Subset> keys;
  for (const auto& [h, row] : rep.eta) keys.push_back(h);
  if (keys != hs)
    throw invalid_input("representation must be defined on exactly the "
                        "hyperplanes of M");
  for (const auto& [h, row] : rep.eta) {
    if (static_cast<int>(row.size()) != rep.m.n())
      throw invalid_input("representation: wrong vector length");
    for (const auto& v : row) rep.t.require(v);
    if (support_of(row) != (full_set(rep.m.n()) & ~h))
      return CheckReport::fail("R1", "support of eta_H is not E-H",
                               {{"H", set_elements(h)}});
  }
  for (Subset f : lat.corank2_flats())
    for (const auto& triple : modular_triples(rep.m, f)) {
      TripleDependence dep =
          triple_dependent(rep.t, rep.eta.at(triple[0]), rep.eta.at(triple[1]),
                           rep.eta.at(triple[2]), rep.m, f);
      if (!dep.dependent)
        return CheckReport::fail("R2", "modular triple is not dependent",
                                 {{"F", set_elements(f)},
                                  {"H1", set_elements(triple[0])},
                                  {"H2", set_elements(triple[1])},
                                  {"H3", set_elements(triple[2])}});
    }
  return CheckReport::pass();
}

/// Inverts fundamental_rep up to a global scalar: roots the value of the
/// lexicographically least basis at 1 and propagates along basis
/// exchanges with the fundamental relation.  Path independence is
/// re-verified on every exchange edge, then GP1-GP3 are checked on the
/// result, so a non-representation input cannot slip through.
inline GPFunction gp_from_rep(const Representation& rep) {
  CheckReport r = check_representation(rep);
  if (!r.ok) throw axiom_error(r.axiom, "gp_from_rep: " + r.message, r.detail);
  const Tract& t = rep.t;
  const Matroid& m = rep.m;
  const int n = m.n();

  std::vector<Subset> bases = m.bases();
  Subset root = *std::min_element(
      bases.begin(), bases.end(), [](Subset a, Subset b) {
        return set_elements(a) < set_elements(b);
      });

  // eta_H(y) / eta_H(x) with H = <B - x>, sign-adjusted to sorted-subset
  // storage order on both sides.
  auto edge_ratio = [&](Subset b, int x, int y) {
    Subset bx = b & ~(1u << x);
    Subset h = m.closure(bx);
    const TVec& eta = rep.eta.at(h);
    std::vector<int> tup_x = set_elements(bx), tup_y = set_elements(bx);
    tup_x.push_back(x);
    tup_y.push_back(y);
    int sg = permutation_sign(tup_x) * permutation_sign(tup_y);
    TractElement ratio = t.product(eta[y], t.mul_inv(eta[x]));
    return sg < 0 ? t.negate(ratio) : ratio;
  };

  std::map<Subset, TractElement> value;
  value[root] = t.one();
  std::deque<Subset> queue = {root};
  while (!queue.empty()) {
    Subset b = queue.front();
    queue.pop_front();
    for (int x : set_elements(b))
      for (int y = 0; y < n; ++y) {
        if (set_contains(b, y)) continue;
        Subset b2 = (b & ~(1u << x)) | (1u << y);
        if (!m.is_basis(b2) || value.count(b2)) continue;
        value[b2] = t.product(value[b], edge_ratio(b, x, y));
        queue.push_back(b2);
      }
  }
  // The exchange graph of a matroid is connected, so all bases have
  // values; re-check every edge for consistency.
  for (Subset b : bases)
    for (int x : set_elements(b))
      for (int y = 0; y < n; ++y) {
        if (set_contains(b, y)) continue;
        Subset b2 = (b & ~(1u << x)) | (1u << y);
        if (!m.is_basis(b2)) continue;
        if (value.at(b2) != t.product(value.at(b), edge_ratio(b, x, y)))
          throw axiom_error("fundamental-relation",
                            "gp_from_rep: inconsistent ratios along two paths",
                            {{"B", set_elements(b)}, {"x", x}, {"y", y}});
      }
  return GPFunction::new_checked(t, n, m.rank(), std::move(value));
}

/// [phi_low] is a matroid quotient of [psi_high] iff every hyperplane
/// function of phi_low is a covector of psi_high, i.e. orthogonal to all
/// circuit functions of psi_high.
inline bool is_quotient(const GPFunction& low, const GPFunction& high) {
  if (low.tract() != high.tract())
    throw invalid_input("is_quotient: tract mismatch");
  if (low.n() != high.n())
    throw invalid_input("is_quotient: ground set mismatch");
  if (low.rank() > high.rank()) return false;
  Representation circuits = fundamental_rep(high.dual());
  Representation hyps = fundamental_rep(low);
  for (const auto& [h, row] : hyps.eta)
    for (const auto& [c, circ] : circuits.eta)
      if (!low.tract().dot_is_null(row, circ)) return false;
  return true;
}

/// A family of GP functions indexed by the flats of corank 1 and 2:
/// rank-1 functions (hyperplane functions) on the hyperplanes, rank-2
/// functions on the corank-2 flats, all on the full ground set.
struct Lambda2Representation {
  Tract t;
  Matroid m;
  std::map<Subset, GPFunction> psi;  // keyed by flat mask
};

inline CheckReport check_lambda2(const Lambda2Representation& lr) {
  FlatLattice lat = lr.m.flats();
  std::vector<Subset> expected = lat.hyperplanes();
  for (Subset f : lat.corank2_flats()) expected.push_back(f);
  std::sort(expected.begin(), expected.end());
  std::vector<Subset> keys;
  for (const auto& [f, gp] : lr.psi) keys.push_back(f);
  if (keys != expected)
    throw invalid_input(
        "lambda2 representation must cover exactly the corank-1 and "
        "corank-2 flats");
  for (const auto& [f, gp] : lr.psi) {
    if (gp.tract() != lr.t || gp.n() != lr.m.n() ||
        gp.rank() != lat.corank_of_flat(f))
      throw invalid_input("lambda2: psi_F has wrong tract, ground set or "
                          "rank");
  }
  for (Subset h : lat.hyperplanes()) {
    TVec row;
    for (int e = 0; e < lr.m.n(); ++e)
      row.push_back(lr.psi.at(h).value(1u << e));
    if (support_of(row) != (full_set(lr.m.n()) & ~h))
      return CheckReport::fail("LR1", "psi_H is not a hyperplane function",
                               {{"H", set_elements(h)}});
  }
  for (Subset f : lat.corank2_flats()) {
    // psi_H is a quotient of psi_F iff the hyperplane function is
    // orthogonal to every circuit function of psi_F; the circuits are
    // computed once per F.
    Representation circuits = fundamental_rep(lr.psi.at(f).dual());
    for (Subset h : lat.hyperplanes_above(f)) {
      TVec row;
      for (int e = 0; e < lr.m.n(); ++e)
        row.push_back(lr.psi.at(h).value(1u << e));
      for (const auto& [c, circ] : circuits.eta)
        if (!lr.t.dot_is_null(row, circ))
          return CheckReport::fail(
              "LR2", "psi_H is not a quotient of psi_F",
              {{"F", set_elements(f)}, {"H", set_elements(h)}});
    }
  }
  return CheckReport::pass();
}

/// Extracts the corank-1 and corank-2 quotients of a GP function; the
/// input for the small-corank reconstruction theorem.
inline Lambda2Representation lambda2_of(const GPFunction& phi) {
  Matroid m = phi.underlying_matroid();
  FlatLattice lat = m.flats();
  std::map<Subset, GPFunction> psi;
  for (Subset h : lat.hyperplanes()) psi.emplace(h, phi.f_quotient(h));
  for (Subset f : lat.corank2_flats()) psi.emplace(f, phi.f_quotient(f));
  return Lambda2Representation{phi.tract(), std::move(m), std::move(psi)};
}

/// The unique T-matroid whose corank <= 2 quotients match the given
/// family, reconstructed through its hyperplane functions and then
/// verified against every rank-2 member.
inline GPFunction reconstruct_from_lambda2(const Lambda2Representation& lr) {
  CheckReport r = check_lambda2(lr);
  if (!r.ok)
    throw axiom_error(r.axiom, "reconstruct_from_lambda2: " + r.message,
                      r.detail);
  FlatLattice lat = lr.m.flats();
  std::map<Subset, TVec> eta;
  for (Subset h : lat.hyperplanes()) {
    TVec row;
    for (int e = 0; e < lr.m.n(); ++e)
      row.push_back(lr.psi.at(h).value(1u << e));
    eta[h] = std::move(row);
  }
  GPFunction phi = gp_from_rep(Representation{lr.t, lr.m, std::move(eta)});
  for (Subset f : lat.corank2_flats())
    if (!projectively_equal(phi.f_quotient(f), lr.psi.at(f)))
      throw std::logic_error(
          "reconstruct_from_lambda2: post-verification failed for a "
          "corank-2 flat; this cannot happen for valid input");
  return phi;
}

}  // namespace tracts

#endif  // TRACTS_REP_HPP
