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

#ifndef TRACTS_POINTLINE_HPP
#define TRACTS_POINTLINE_HPP

#include <algorithm>
#include <map>
#include <vector>

#include "tracts/errors.hpp"
#include "tracts/gp.hpp"
#include "tracts/matroid.hpp"
#include "tracts/rep.hpp"
#include "tracts/spaces.hpp"
#include "tracts/subset.hpp"
#include "tracts/tract.hpp"

namespace tracts {

/// A point of P(T^E): the canonical representative of a T*-orbit, with
/// the first nonzero coordinate normalized to 1.
struct ProjectivePoint {
  TVec rep;

  Subset support() const { return support_of(rep); }
  friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) {
    return a.rep == b.rep;
  }
  friend bool operator<(const ProjectivePoint& a, const ProjectivePoint& b) {
    return a.rep < b.rep;
  }
};

inline ProjectivePoint projectivize(const Tract& t, const TVec& x) {
  for (const TractElement& v : x) t.require(v);
  Subset supp = support_of(x);
  if (supp == 0) throw invalid_input("projectivize: zero tuple");
  TractElement inv = t.mul_inv(x[set_elements(supp).front()]);
  return ProjectivePoint{scale_vec(t, inv, x)};
}

/// A line of P(T^E), represented intensionally by a rank-2 GP function:
/// a point lies on the line iff its representative is a covector.
struct Line {
  GPFunction psi;
};

struct PointLineArrangement {
  Tract t;
  int n = 0;
  std::vector<ProjectivePoint> points;
  std::vector<Line> lines;
};

inline bool point_on_line(const ProjectivePoint& p, const Line& l) {
  return covectors_of(l.psi).membership(p.rep);
}

/// The arrangement of a T-matroid: one point per hyperplane (the
/// projectivized hyperplane function) and one line per corank-2 flat
/// (its F-quotient).  The incidence structure is cross-checked against
/// the lattice: a point lies on the line of F iff its hyperplane
/// contains F.
inline PointLineArrangement psi_arrangement(const GPFunction& phi) {
  if (phi.rank() < 2)
    throw invalid_input("psi_arrangement: rank must be at least 2");
  const Tract& t = phi.tract();
  Matroid m = phi.underlying_matroid();
  FlatLattice lat = m.flats();
  Representation rep = fundamental_rep(phi);
  PointLineArrangement a{t, phi.n(), {}, {}};
  std::map<Subset, size_t> point_of;
  for (const auto& [h, row] : rep.eta) {
    point_of[h] = a.points.size();
    a.points.push_back(projectivize(t, row));
  }
  for (Subset f : lat.corank2_flats()) {
    Line line{phi.f_quotient(f)};
    for (Subset h : lat.hyperplanes())
      if (point_on_line(a.points[point_of[h]], line) != subset_of(f, h))
        throw std::logic_error("psi_arrangement: incidence disagrees with "
                               "the lattice of flats");
    a.lines.push_back(std::move(line));
  }
  return a;
}

/// PL1-PL3.  PL2 rebuilds the matroid from the point supports through the
/// cocircuit axioms; PL3 counts the lines through every modular pair.
inline CheckReport check_pl(const PointLineArrangement& a,
                            std::optional<Matroid>* out_matroid = nullptr) {
  for (const ProjectivePoint& p : a.points) {
    if (static_cast<int>(p.rep.size()) != a.n)
      throw invalid_input("check_pl: point of wrong ground-set size");
    if (p.support() == 0 || !(projectivize(a.t, p.rep) == p))
      throw invalid_input("check_pl: point not in canonical form");
  }
  for (const Line& l : a.lines)
    if (l.psi.tract() != a.t || l.psi.n() != a.n || l.psi.rank() != 2)
      throw invalid_input("check_pl: line is not a rank-2 GP function on E");

  // PL1: at least two arrangement points on every line.
  for (size_t li = 0; li < a.lines.size(); ++li) {
    std::vector<ProjectivePoint> on;
    for (const ProjectivePoint& p : a.points)
      if (point_on_line(p, a.lines[li]) &&
          std::find(on.begin(), on.end(), p) == on.end())
        on.push_back(p);
    if (on.size() < 2)
      return CheckReport::fail("PL1", "line contains fewer than two points",
                               {{"line", li}});
  }

  // PL2: the supports form the cocircuit set of a matroid.  Check the
  // circuit axioms, build the matroid with these cocircuits, and confirm.
  std::vector<Subset> cstar;
  for (const ProjectivePoint& p : a.points) cstar.push_back(p.support());
  std::sort(cstar.begin(), cstar.end());
  cstar.erase(std::unique(cstar.begin(), cstar.end()), cstar.end());
  if (cstar.size() != a.points.size())
    return CheckReport::fail("PL2", "two distinct points share a support");
  for (Subset c1 : cstar)
    for (Subset c2 : cstar)
      if (c1 != c2 && subset_of(c1, c2))
        return CheckReport::fail("PL2", "supports are not an antichain",
                                 {{"C1", set_elements(c1)},
                                  {"C2", set_elements(c2)}});
  for (Subset c1 : cstar)
    for (Subset c2 : cstar) {
      if (c1 == c2) continue;
      for (int e : set_elements(c1 & c2)) {
        bool found = false;
        for (Subset c3 : cstar)
          if (subset_of(c3, (c1 | c2) & ~(1u << e))) {
            found = true;
            break;
          }
        if (!found)
          return CheckReport::fail("PL2", "circuit elimination fails",
                                   {{"C1", set_elements(c1)},
                                    {"C2", set_elements(c2)},
                                    {"e", e}});
      }
    }
  // Independent sets of the dual contain no member of cstar.
  auto dual_independent = [&cstar](Subset s) {
    for (Subset c : cstar)
      if (subset_of(c, s)) return false;
    return true;
  };
  int dual_rank = 0;
  Subset greedy = 0;
  for (int e = 0; e < a.n; ++e)
    if (dual_independent(greedy | (1u << e))) greedy |= (1u << e);
  dual_rank = set_size(greedy);
  std::vector<Subset> dual_bases;
  for (Subset b : subsets_of_size(a.n, dual_rank))
    if (dual_independent(b)) dual_bases.push_back(b);
  Matroid m = [&]() -> Matroid {
    try {
      return Matroid::from_bases(a.n, dual_rank, dual_bases).dual();
    } catch (const axiom_error& e) {
      throw axiom_error("PL2", std::string("supports: ") + e.what(),
                        e.detail());
    }
  }();
  if (m.cocircuits() != cstar)
    return CheckReport::fail("PL2", "supports are not the cocircuit set of "
                                    "their derived matroid");

  // PL3: every modular pair lies on exactly one listed line.
  for (size_t i = 0; i < a.points.size(); ++i)
    for (size_t j = i + 1; j < a.points.size(); ++j) {
      Subset f = full_set(a.n) &
                 ~(a.points[i].support() | a.points[j].support());
      if (!m.is_flat(f) || m.rank_of(f) != m.rank() - 2) continue;
      int through = 0;
      for (const Line& l : a.lines)
        if (point_on_line(a.points[i], l) && point_on_line(a.points[j], l))
          ++through;
      if (through != 1)
        return CheckReport::fail(
            "PL3", "modular pair lies on " + std::to_string(through) +
                       " lines instead of one",
            {{"i", i}, {"j", j}, {"F", set_elements(f)}});
    }
  if (out_matroid) out_matroid->emplace(m);
  return CheckReport::pass();
}

/// Inverts psi_arrangement: points are labeled by their support
/// complements (the hyperplanes), lines by the loop sets of their rank-2
/// matroids (the corank-2 flats), and the small-corank reconstruction
/// glues the labeled family back into a GP function.
inline GPFunction gp_from_pointline(const PointLineArrangement& a) {
  std::optional<Matroid> mopt;
  CheckReport r = check_pl(a, &mopt);
  if (!r.ok)
    throw axiom_error(r.axiom, "gp_from_pointline: " + r.message, r.detail);
  const Matroid& m = *mopt;
  FlatLattice lat = m.flats();

  std::map<Subset, GPFunction> psi;
  for (const ProjectivePoint& p : a.points) {
    Subset h = full_set(a.n) & ~p.support();
    std::map<Subset, TractElement> vals;
    for (int e = 0; e < a.n; ++e)
      if (!p.rep[e].is_zero()) vals[1u << e] = p.rep[e];
    psi.emplace(h, GPFunction::new_checked(a.t, a.n, 1, std::move(vals)));
  }

  std::vector<Subset> corank2 = lat.corank2_flats();
  for (const Line& l : a.lines) {
    Subset used = 0;
    for (Subset s : l.psi.supports()) used |= s;
    Subset label = full_set(a.n) & ~used;  // loops of the line's matroid
    if (std::find(corank2.begin(), corank2.end(), label) == corank2.end())
      throw axiom_error("PL3", "gp_from_pointline: line label is not a "
                               "corank-2 flat",
                        {{"label", set_elements(label)}});
    if (psi.count(label))
      throw axiom_error("PL3", "gp_from_pointline: two lines share a label",
                        {{"label", set_elements(label)}});
    psi.emplace(label, l.psi);
  }
  for (Subset f : corank2)
    if (!psi.count(f))
      throw axiom_error("PL3", "gp_from_pointline: no line over a corank-2 "
                               "flat",
                        {{"F", set_elements(f)}});

  return reconstruct_from_lambda2(Lambda2Representation{a.t, m, std::move(psi)});
}

/// Equality of arrangements: same point sets and the same lines up to
/// projective equality of their GP functions.
inline bool same_arrangement(const PointLineArrangement& a,
                             const PointLineArrangement& b) {
  if (a.t != b.t || a.n != b.n) return false;
  std::vector<ProjectivePoint> pa = a.points, pb = b.points;
  std::sort(pa.begin(), pa.end());
  std::sort(pb.begin(), pb.end());
  if (!(pa == pb)) return false;
  if (a.lines.size() != b.lines.size()) return false;
  std::vector<bool> used(b.lines.size(), false);
  for (const Line& la : a.lines) {
    bool matched = false;
    for (size_t j = 0; j < b.lines.size(); ++j) {
      if (used[j] || !projectively_equal(la.psi, b.lines[j].psi)) continue;
      used[j] = true;
      matched = true;
      break;
    }
    if (!matched) return false;
  }
  return true;
}

}  // namespace tracts

#endif  // TRACTS_POINTLINE_HPP
