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

#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "tracts/flats.hpp"

using namespace tracts;

namespace {

Matroid uniform(int r, int n) {
  return Matroid::from_bases(n, r, subsets_of_size(n, r));
}

GPFunction tropical_u24() {
  Tract tr = Tract::tropical();
  std::map<Subset, TractElement> vals;
  vals[set_of({0, 1})] = tr.element(2);
  vals[set_of({2, 3})] = tr.element(2);
  vals[set_of({0, 2})] = tr.element(2);
  vals[set_of({1, 3})] = tr.element(2);
  vals[set_of({0, 3})] = tr.element(1);
  vals[set_of({1, 2})] = tr.element(1);
  return GPFunction::new_checked(tr, 4, 2, vals);
}

TVec vec(const Tract& t, const std::vector<long>& v) {
  TVec out;
  for (long x : v) out.push_back(t.element(x));
  return out;
}

std::vector<std::vector<TVec>> lattice_members(const GPFunction& phi) {
  std::vector<std::vector<TVec>> out;
  for (auto& [f, mem] : TFlatLattice(phi).enumerate()) out.push_back(mem);
  return out;
}

}  // namespace

TEST_CASE("T-flats of single flats", "[flats]") {
  Tract k = Tract::krasner();
  GPFunction u23 = oracles::krasner_gp(uniform(2, 3));

  TFlat bottom = t_flat(u23, 0);
  CHECK(bottom.predicate.members() == vectors_of(u23).members());

  TFlat top = t_flat(u23, full_set(3));
  CHECK(top.predicate.members().size() == 8);  // all of K^3

  TFlat v0 = t_flat(u23, set_of({0}));
  CHECK(v0.predicate.members() ==
        std::vector<TVec>{vec(k, {0, 0, 0}), vec(k, {0, 1, 1}),
                          vec(k, {1, 0, 0}), vec(k, {1, 1, 1})});

  CHECK_THROWS_AS(t_flat(u23, set_of({0, 1})), invalid_input);
}

TEST_CASE("lattice of T-flats", "[flats]") {
  GPFunction u23 = oracles::krasner_gp(uniform(2, 3));
  TFlatLattice lat = lattice_of_t_flats(u23);
  auto mem = lat.enumerate();
  CHECK(mem.size() == 5);
  // Distinct as sets.
  std::vector<std::vector<TVec>> sets;
  for (auto& [f, ms] : mem) sets.push_back(ms);
  std::sort(sets.begin(), sets.end());
  CHECK(std::unique(sets.begin(), sets.end()) == sets.end());

  // A rank-1 function has a two-element lattice.
  Tract q = Tract::rationals();
  std::map<Subset, TractElement> vals;
  vals[set_of({0})] = q.element(2);
  vals[set_of({2})] = q.element(-1);
  GPFunction rank1 = GPFunction::new_checked(q, 3, 1, vals);
  CHECK(lattice_of_t_flats(rank1).tflats().size() == 2);

  // Tropical lattice construction verifies generator nesting and the
  // coordinates map internally.
  CHECK_NOTHROW(lattice_of_t_flats(tropical_u24()));
}

TEST_CASE("coordinates map", "[flats]") {
  GPFunction u23 = oracles::krasner_gp(uniform(2, 3));
  FlatLattice lat = u23.underlying_matroid().flats();
  for (Subset h : lat.hyperplanes())
    CHECK(coordinates(t_flat(u23, h).predicate) == h);
  CHECK(coordinates(t_flat(u23, full_set(3)).predicate) == full_set(3));
  CHECK(coordinates(t_flat(u23, 0).predicate) == 0);

  Tract k = Tract::krasner();
  CHECK(coordinates(k, 3, {vec(k, {0, 0, 0}), vec(k, {1, 1, 1})}) == 0);
}

TEST_CASE("LF axioms accept valid lattices", "[flats]") {
  Tract k = Tract::krasner();
  Tract g2 = Tract::gf(2);
  for (const Matroid& m : oracles::all_matroids(3)) {
    GPFunction kk = oracles::krasner_gp(m);
    CHECK(check_lf_axioms(k, 3, lattice_members(kk)).ok);
    CHECK(check_lf_axioms_variant(k, 3, lattice_members(kk)).ok);
    for (const GPFunction& phi : oracles::finite_gps_for(g2, m)) {
      CHECK(check_lf_axioms(g2, 3, lattice_members(phi)).ok);
      CHECK(check_lf_axioms_variant(g2, 3, lattice_members(phi)).ok);
    }
  }
}

TEST_CASE("LF axiom failures carry the right tag", "[flats]") {
  Tract k = Tract::krasner();

  // Dropping a corank-2 member of U_{2,3} breaks intersection closure.
  GPFunction u23 = oracles::krasner_gp(uniform(2, 3));
  std::vector<std::vector<TVec>> mem = lattice_members(u23);
  std::vector<TVec> bottom = t_flat(u23, 0).predicate.members();
  std::sort(bottom.begin(), bottom.end());
  std::vector<std::vector<TVec>> dropped;
  for (auto& ms : mem) {
    auto sorted = ms;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != bottom) dropped.push_back(ms);
  }
  CheckReport r1 = check_lf_axioms(k, 3, dropped);
  CHECK_FALSE(r1.ok);
  CHECK(r1.axiom == "LF1");

  // Dropping one of the three hyperplane members of U_{2,3} leaves a
  // closed family whose corank-2 flat has the wrong matroid above it.
  std::vector<TVec> v0 = t_flat(u23, set_of({0})).predicate.members();
  std::sort(v0.begin(), v0.end());
  std::vector<std::vector<TVec>> nohyp;
  for (auto& ms : mem) {
    auto sorted = ms;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != v0) nohyp.push_back(ms);
  }
  CheckReport r5 = check_lf_axioms(k, 3, nohyp);
  CHECK_FALSE(r5.ok);
  CHECK(r5.axiom == "LF5");

  // On a matroid with a corank-2 flat under exactly two hyperplanes,
  // dropping one of them starves LF2 instead.
  Matroid m2 = Matroid::from_bases(
      4, 2, {set_of({0, 1}), set_of({0, 2}), set_of({1, 2}),
             set_of({0, 3}), set_of({1, 3})});  // 2 and 3 parallel... no:
  // closure({2}) = {2}?  bases omit {2,3}, so {2,3} is dependent and
  // <2> = {2,3}.  Hyperplanes: {0}, {1}, {2,3}; the corank-2 flat {} sits
  // under three hyperplanes, so contract instead a different example:
  // U_{3,4} has singleton corank-2 flats, each under exactly three
  // 2-subset hyperplanes; a corank-2 flat under exactly two hyperplanes
  // needs a non-uniform rank 3 matroid.
  (void)m2;
  Matroid m3 = Matroid::from_bases(
      4, 3,
      {set_of({0, 1, 2}), set_of({0, 1, 3}), set_of({0, 2, 3})});
  // {1,2,3} missing: <{1,2}> = {1,2,3}, a hyperplane; the corank-2 flat
  // {1} lies under hyperplanes {0,1} and {1,2,3} only.
  GPFunction km3 = oracles::krasner_gp(m3);
  REQUIRE(check_lf_axioms(k, 4, lattice_members(km3)).ok);
  std::vector<TVec> vh = t_flat(km3, set_of({0, 1})).predicate.members();
  std::sort(vh.begin(), vh.end());
  std::vector<std::vector<TVec>> nohyp2;
  for (auto& ms : lattice_members(km3)) {
    auto sorted = ms;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != vh) nohyp2.push_back(ms);
  }
  CheckReport r2 = check_lf_axioms(k, 4, nohyp2);
  CHECK_FALSE(r2.ok);
  CHECK(r2.axiom == "LF2");

  // A hyperplane member that is not a single orthogonal complement.
  std::vector<std::vector<TVec>> crafted = {
      {vec(k, {0, 0}), vec(k, {0, 1}), vec(k, {1, 0}), vec(k, {1, 1})},
      {vec(k, {0, 0}), vec(k, {1, 1}), vec(k, {1, 0})}};
  CheckReport r4 = check_lf_axioms(k, 2, crafted);
  CHECK_FALSE(r4.ok);
  CHECK(r4.axiom == "LF4");
  CheckReport rv = check_lf_axioms_variant(k, 2, crafted);
  CHECK_FALSE(rv.ok);
  CHECK(rv.axiom == "LF3*");
}

TEST_CASE("T-flat families need not be intersection-closed", "[flats]") {
  // Two skew lines of U_{3,4}: span(eta_01, eta_23) has dimension 2 while
  // the hyperplane functions over the empty flat span a 3-space, so
  // V_{01} n V_{23} strictly contains V_{} and is no T-flat.  The checker
  // must report this as an LF1 failure.
  Tract g2 = Tract::gf(2);
  Matroid u34 = Matroid::from_bases(4, 3, subsets_of_size(4, 3));
  GPFunction phi34 = oracles::finite_gps_for(g2, u34).at(0);
  CheckReport r = check_lf_axioms(g2, 4, lattice_members(phi34));
  CHECK_FALSE(r.ok);
  CHECK(r.axiom == "LF1");

  // Over the Krasner hyperfield the same happens already for U_{2,4},
  // where (0,0,1,1) is orthogonal to eta_0 and eta_1 (two nonzero
  // products each) but not to eta_2.
  GPFunction phi24 = oracles::krasner_gp(uniform(2, 4));
  Tract k = Tract::krasner();
  TVec x = vec(k, {0, 0, 1, 1});
  CHECK(t_flat(phi24, set_of({0})).predicate.membership(x));
  CHECK(t_flat(phi24, set_of({1})).predicate.membership(x));
  CHECK_FALSE(vectors_of(phi24).membership(x));
  CheckReport rk = check_lf_axioms(k, 4, lattice_members(phi24));
  CHECK_FALSE(rk.ok);
  CHECK(rk.axiom == "LF1");
}

TEST_CASE("distinct classes give distinct lattices", "[flats]") {
  // Injectivity at desk scale: the lattice, as a collection of member
  // sets, separates GP classes.
  Tract g2 = Tract::gf(2);
  std::vector<std::vector<std::vector<TVec>>> seen;
  for (const Matroid& m : oracles::all_matroids(3)) {
    std::vector<GPFunction> gps = {oracles::krasner_gp(m)};
    for (const GPFunction& phi : oracles::finite_gps_for(g2, m))
      gps.push_back(phi);
    for (const GPFunction& phi : gps) {
      std::vector<std::vector<TVec>> mem = lattice_members(phi);
      for (auto& ms : mem) std::sort(ms.begin(), ms.end());
      std::sort(mem.begin(), mem.end());
      CHECK(std::find(seen.begin(), seen.end(), mem) == seen.end());
      seen.push_back(std::move(mem));
    }
  }
}

TEST_CASE("reconstruction from a lattice of T-flats", "[flats]") {
  Tract k = Tract::krasner();
  GPFunction u23 = oracles::krasner_gp(uniform(2, 3));
  CHECK(projectively_equal(gp_from_lattice(k, 3, lattice_members(u23)), u23));

  Tract g2 = Tract::gf(2);
  for (const Matroid& m : oracles::all_matroids(3))
    for (const GPFunction& phi : oracles::finite_gps_for(g2, m))
      CHECK(projectively_equal(gp_from_lattice(g2, 3, lattice_members(phi)),
                               phi));

  // Rescaling the generators does not change the member sets, hence the
  // reconstruction.
  Tract g3 = Tract::gf(3);
  oracles::QMatrix mat;
  mat.p = 3;
  mat.rows = {{1, 0, 1, 2}, {0, 1, 1, 1}};
  GPFunction phi = oracles::minors_gp(g3, mat);
  Representation rep = fundamental_rep(phi);
  std::mt19937_64 rng(5);
  std::vector<std::vector<TVec>> members;
  FlatLattice lat = phi.underlying_matroid().flats();
  for (Subset f : lat.flats()) {
    std::vector<TVec> gens;
    for (const auto& [h, row] : rep.eta)
      if (subset_of(f, h))
        gens.push_back(scale_vec(g3, g3.element(1 + (long)(rng() % 2)), row));
    members.push_back(
        VectorSpacePredicate(g3, 4, gens, SpaceRole::t_flat).members());
  }
  CHECK(projectively_equal(gp_from_lattice(g3, 4, members), phi));

  std::vector<std::vector<TVec>> bad = lattice_members(u23);
  bad.pop_back();
  CHECK_THROWS_AS(gp_from_lattice(k, 3, bad), axiom_error);
}
