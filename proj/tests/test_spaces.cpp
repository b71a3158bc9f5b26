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
#include "tracts/spaces.hpp"

using namespace tracts;
using oracles::QMatrix;

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

}  // namespace

TEST_CASE("vector and covector membership", "[spaces]") {
  Tract k = Tract::krasner();
  GPFunction phi = oracles::krasner_gp(uniform(2, 3));

  std::vector<TVec> vs = vectors_of(phi).members();
  CHECK(vs == std::vector<TVec>{vec(k, {0, 0, 0}), vec(k, {1, 1, 1})});
  CHECK(vectors_of(phi).membership(vec(k, {1, 1, 1})));

  // Covectors of a Krasner matroid: supports are the unions of
  // cocircuits.
  std::vector<TVec> cvs = covectors_of(phi).members();
  CHECK(cvs == std::vector<TVec>{vec(k, {0, 0, 0}), vec(k, {0, 1, 1}),
                                 vec(k, {1, 0, 1}), vec(k, {1, 1, 0}),
                                 vec(k, {1, 1, 1})});

  // Tropical: any scalar multiple of a cocircuit function is a covector.
  GPFunction trop = tropical_u24();
  VectorSpacePredicate cov = covectors_of(trop);
  Representation rep = fundamental_rep(trop);
  std::mt19937_64 rng(77);
  for (const auto& [h, row] : rep.eta)
    for (int trial = 0; trial < 5; ++trial) {
      TractElement c = trop.tract().element(
          mpq_class(1 + static_cast<long>(rng() % 9),
                    1 + static_cast<long>(rng() % 5)));
      CHECK(cov.membership(scale_vec(trop.tract(), c, row)));
    }

  // Predicates of finite tracts are closed under scaling, exhaustively.
  QMatrix m;
  m.p = 3;
  m.rows = {{1, 0, 1, 2}, {0, 1, 1, 1}};
  GPFunction g3 = oracles::minors_gp(Tract::gf(3), m);
  VectorSpacePredicate vp = vectors_of(g3);
  for (const TVec& x : vp.members())
    for (const TractElement& c : Tract::gf(3).universe())
      CHECK(vp.membership(scale_vec(vp.tract(), c, x)));
}

TEST_CASE("support bases are the cobases", "[spaces]") {
  GPFunction u23 = oracles::krasner_gp(uniform(2, 3));
  CHECK(support_bases(u23) ==
        std::vector<Subset>{set_of({0}), set_of({1}), set_of({2})});

  GPFunction u24 = oracles::krasner_gp(uniform(2, 4));
  CHECK(support_bases(u24) == subsets_of_size(4, 2));

  // Definitional computation on the explicit Krasner vectors of U_{2,3}.
  Tract k = Tract::krasner();
  std::vector<TVec> members = {vec(k, {0, 0, 0}), vec(k, {1, 1, 1})};
  CHECK(support_bases_definitional(3, members) ==
        std::vector<Subset>{set_of({0}), set_of({1}), set_of({2})});

  CHECK(support_bases(tropical_u24()) == subsets_of_size(4, 2));
}

TEST_CASE("normal bases", "[spaces]") {
  Tract k = Tract::krasner();
  GPFunction u23 = oracles::krasner_gp(uniform(2, 3));
  NormalForm nf = normal_basis(u23, set_of({2}));
  CHECK(nf.rows.at(2) == vec(k, {1, 1, 1}));

  // Tropical rows come from fundamental circuits and are vectors.
  GPFunction trop = tropical_u24();
  NormalForm nt = normal_basis(trop, set_of({2, 3}));
  VectorSpacePredicate vecs = vectors_of(trop);
  for (const auto& [i, row] : nt.rows) {
    CHECK(vecs.membership(row));
    CHECK(row[i] == trop.tract().one());
  }

  // Field case: rows lie in the kernel of the defining matrix.
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 10; ++trial) {
    QMatrix m = oracles::random_field_matrix(rng, 3, 2, 4);
    GPFunction phi = oracles::minors_gp(Tract::gf(3), m);
    for (Subset b : support_bases(phi)) {
      NormalForm nf3 = normal_basis(phi, b);
      for (const auto& [i, row] : nf3.rows) {
        for (const auto& arow : m.rows) {
          mpq_class dot = 0;
          for (int e = 0; e < 4; ++e) dot += arow[e] * row[e].value();
          CHECK(oracles::onorm(dot, 3) == 0);
        }
        for (int j : set_elements(b))
          CHECK(row[j] == (i == j ? phi.tract().one() : phi.tract().zero()));
      }
    }
  }

  CHECK_THROWS_AS(normal_basis(u23, set_of({0, 1})), invalid_input);
}

TEST_CASE("span membership", "[spaces]") {
  Tract k = Tract::krasner();
  GPFunction u23 = oracles::krasner_gp(uniform(2, 3));
  NormalForm nf = normal_basis(u23, set_of({2}));
  CHECK(in_span(k, nf.rows.at(2), nf));
  CHECK(in_span(k, vec(k, {0, 0, 0}), nf));
  CHECK_FALSE(in_span(k, vec(k, {1, 1, 0}), nf));

  // Every enumerated vector of a finite-tract GP function is in the span
  // of every normal basis.
  QMatrix m;
  m.p = 3;
  m.rows = {{1, 0, 1, 1}, {0, 1, 2, 1}};
  GPFunction phi = oracles::minors_gp(Tract::gf(3), m);
  std::vector<TVec> vs = vectors_of(phi).members();
  for (Subset b : support_bases(phi)) {
    NormalForm nf3 = normal_basis(phi, b);
    for (const TVec& x : vs) CHECK(in_span(phi.tract(), x, nf3));
  }
}

TEST_CASE("linear subspace recognition", "[spaces]") {
  Tract k = Tract::krasner();
  CHECK(is_linear_subspace(k, {vec(k, {0, 0, 0}), vec(k, {1, 1, 1})}));
  // Missing the coordinatewise maximum 111.
  CHECK_FALSE(is_linear_subspace(
      k, {vec(k, {0, 0, 0}), vec(k, {1, 1, 0}), vec(k, {0, 1, 1})}));

  // Row spaces over GF(2) are linear subspaces; arbitrary subsets with a
  // missing sum are not.
  Tract g2 = Tract::gf(2);
  std::vector<TVec> rowspace = {vec(g2, {0, 0, 0}), vec(g2, {1, 0, 1}),
                                vec(g2, {0, 1, 1}), vec(g2, {1, 1, 0})};
  CHECK(is_linear_subspace(g2, rowspace));
  CHECK_FALSE(is_linear_subspace(
      g2, {vec(g2, {0, 0, 0}), vec(g2, {1, 0, 1}), vec(g2, {0, 1, 1})}));

  // The vector sets of finite-tract GP functions all pass.
  for (const Matroid& m : oracles::all_matroids(3)) {
    CHECK(is_linear_subspace(k, vectors_of(oracles::krasner_gp(m)).members()));
    for (const GPFunction& phi : oracles::finite_gps_for(g2, m))
      CHECK(is_linear_subspace(g2, vectors_of(phi).members()));
  }

  CHECK_THROWS_AS(is_linear_subspace(Tract::tropical(), {}), invalid_input);
}

TEST_CASE("covectors biject with flats over the Krasner hyperfield",
          "[spaces]") {
  Tract k = Tract::krasner();
  GPFunction u23 = oracles::krasner_gp(uniform(2, 3));
  std::map<Subset, TVec> z = k_flats_bijection(u23);
  CHECK(z.size() == 5);
  CHECK(z.at(full_set(3)) == vec(k, {0, 0, 0}));
  CHECK(z.at(0) == vec(k, {1, 1, 1}));

  for (const Matroid& m : oracles::all_matroids(4)) {
    std::map<Subset, TVec> zz = k_flats_bijection(oracles::krasner_gp(m));
    CHECK(zz.size() == m.flats().flats().size());
  }

  CHECK_THROWS_AS(k_flats_bijection(tropical_u24()), invalid_input);
}

TEST_CASE("vectors are orthogonal to covectors", "[spaces]") {
  // Finite tracts, exhaustively at small size.
  Tract g2 = Tract::gf(2), g3 = Tract::gf(3);
  for (const Matroid& m : oracles::all_matroids(3)) {
    std::vector<GPFunction> gps = {oracles::krasner_gp(m)};
    for (const GPFunction& g : oracles::finite_gps_for(g2, m))
      gps.push_back(g);
    for (const GPFunction& g : oracles::finite_gps_for(g3, m))
      gps.push_back(g);
    for (const GPFunction& phi : gps) {
      std::vector<TVec> vs = vectors_of(phi).members();
      std::vector<TVec> cvs = covectors_of(phi).members();
      for (const TVec& x : vs)
        for (const TVec& y : cvs)
          CHECK(phi.tract().dot_is_null(x, y));
    }
  }

  // Rationals: sampled linear combinations of normal-basis rows are
  // vectors and stay orthogonal to the covector generators.
  Tract q = Tract::rationals();
  QMatrix qm;
  qm.p = 0;
  qm.rows = {{1, 0, 2, -1}, {0, 1, 1, 3}};
  GPFunction qphi = oracles::minors_gp(q, qm);
  VectorSpacePredicate qvecs = vectors_of(qphi);
  VectorSpacePredicate qcovs = covectors_of(qphi);
  std::mt19937_64 qrng(55);
  auto combine = [&q, &qrng](const std::vector<TVec>& gens) {
    TVec out = zero_vec(q, 4);
    for (const TVec& g : gens) {
      TractElement c = q.element(static_cast<long>(qrng() % 11) - 5);
      for (int e = 0; e < 4; ++e)
        out[e] = q.element(out[e].value() + c.value() * g[e].value());
    }
    return out;
  };
  std::vector<TVec> qcocircuits;
  for (const auto& [h, row] : fundamental_rep(qphi).eta)
    qcocircuits.push_back(row);
  for (Subset b : support_bases(qphi)) {
    NormalForm nf = normal_basis(qphi, b);
    std::vector<TVec> rows;
    for (const auto& [i, row] : nf.rows) rows.push_back(row);
    for (int trial = 0; trial < 10; ++trial) {
      TVec x = combine(rows);
      TVec y = combine(qcocircuits);
      REQUIRE(qvecs.membership(x));
      REQUIRE(qcovs.membership(y));
      CHECK(q.dot_is_null(x, y));
    }
  }

  // Tropical: sampled max-combinations of circuits against scaled
  // cocircuits.
  GPFunction trop = tropical_u24();
  Tract tr = trop.tract();
  std::vector<TVec> circuits, cocircuits;
  for (const auto& [h, row] : fundamental_rep(trop.dual()).eta)
    circuits.push_back(row);
  for (const auto& [h, row] : fundamental_rep(trop).eta)
    cocircuits.push_back(row);
  std::mt19937_64 rng(123);
  auto coeff = [&]() {
    return tr.element(mpq_class(rng() % 8, 1 + rng() % 3));
  };
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<TractElement> cs;
    for (size_t i = 0; i < circuits.size(); ++i) cs.push_back(coeff());
    TVec x = tropical_max_combination(tr, circuits, cs);
    REQUIRE(vectors_of(trop).membership(x));
    for (const TVec& cc : cocircuits)
      for (int s = 0; s < 3; ++s)
        CHECK(tr.dot_is_null(x, scale_vec(tr, coeff(), cc)));
  }
}
