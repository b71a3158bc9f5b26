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

#ifndef TRACTS_HYPERARR_HPP
#define TRACTS_HYPERARR_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "tracts/errors.hpp"
#include "tracts/flats.hpp"
#include "tracts/gp.hpp"
#include "tracts/matroid.hpp"
#include "tracts/rep.hpp"
#include "tracts/spaces.hpp"
#include "tracts/subset.hpp"
#include "tracts/tract.hpp"

namespace tracts {

/// Rows over a field tract.
using FieldMatrix = std::vector<TVec>;

namespace linalg {

inline void require_field(const Tract& t) {
  if (t.kind() != TractKind::gf && t.kind() != TractKind::rationals)
    throw invalid_input("operation requires a field tract (gf or rationals)");
}

inline TractElement add(const Tract& t, const TractElement& a,
                        const TractElement& b) {
  require_field(t);
  return t.element(a.value() + b.value());
}

/// In-place reduced row echelon form; returns the rank.  The result is
/// the canonical basis of the row space, so equal row spaces produce
/// identical matrices.
inline int rref(const Tract& t, FieldMatrix& m) {
  require_field(t);
  if (m.empty()) return 0;
  const int ncols = static_cast<int>(m[0].size());
  const int nrows = static_cast<int>(m.size());
  int rank = 0;
  for (int lead = 0; lead < ncols && rank < nrows; ++lead) {
    int pivot = rank;
    while (pivot < nrows && m[pivot][lead].is_zero()) ++pivot;
    if (pivot == nrows) continue;
    std::swap(m[rank], m[pivot]);
    TractElement inv = t.mul_inv(m[rank][lead]);
    for (auto& x : m[rank]) x = t.product(inv, x);
    for (int r = 0; r < nrows; ++r) {
      if (r == rank || m[r][lead].is_zero()) continue;
      TractElement f = m[r][lead];
      for (int c = 0; c < ncols; ++c)
        m[r][c] = add(t, m[r][c], t.negate(t.product(f, m[rank][c])));
    }
    ++rank;
  }
  m.resize(rank, TVec{});
  return rank;
}

inline FieldMatrix row_space_basis(const Tract& t, FieldMatrix m) {
  rref(t, m);
  return m;
}

inline int rank_of(const Tract& t, FieldMatrix m) { return rref(t, m); }

inline bool same_row_space(const Tract& t, FieldMatrix a, FieldMatrix b) {
  rref(t, a);
  rref(t, b);
  return a == b;
}

inline TractElement determinant(const Tract& t, FieldMatrix m) {
  require_field(t);
  const int k = static_cast<int>(m.size());
  TractElement det = t.one();
  for (int col = 0; col < k; ++col) {
    int pivot = col;
    while (pivot < k && m[pivot][col].is_zero()) ++pivot;
    if (pivot == k) return t.zero();
    if (pivot != col) {
      std::swap(m[col], m[pivot]);
      det = t.negate(det);
    }
    det = t.product(det, m[col][col]);
    TractElement inv = t.mul_inv(m[col][col]);
    for (int r = col + 1; r < k; ++r) {
      TractElement f = t.product(m[r][col], inv);
      for (int c = col; c < k; ++c)
        m[r][c] = add(t, m[r][c], t.negate(t.product(f, m[col][c])));
    }
  }
  return det;
}

/// Basis of {w in K^rows : w . col_j = 0 for all j}, i.e. the left kernel
/// of the column-selected submatrix.
inline FieldMatrix left_kernel_on_columns(const Tract& t, const FieldMatrix& m,
                                          Subset cols) {
  const int r = static_cast<int>(m.size());
  // Solve the transposed homogeneous system by rref on [cols^T | I].
  FieldMatrix sys;
  for (int row = 0; row < r; ++row) {
    TVec line;
    for (int c : set_elements(cols)) line.push_back(m[row][c]);
    for (int j = 0; j < r; ++j)
      line.push_back(row == j ? t.one() : t.zero());
    sys.push_back(std::move(line));
  }
  rref(t, sys);
  const int k = set_size(cols);
  FieldMatrix kernel;
  for (const TVec& line : sys) {
    bool zero_left = true;
    for (int c = 0; c < k; ++c)
      if (!line[c].is_zero()) zero_left = false;
    if (!zero_left) continue;
    TVec w(line.begin() + k, line.end());
    kernel.push_back(std::move(w));
  }
  return kernel;
}

inline TVec matvec_left(const Tract& t, const TVec& w, const FieldMatrix& m) {
  const int n = static_cast<int>(m[0].size());
  TVec out(n, t.zero());
  for (int c = 0; c < n; ++c) {
    TractElement acc = t.zero();
    for (size_t r = 0; r < m.size(); ++r)
      acc = add(t, acc, t.product(w[r], m[r][c]));
    out[c] = acc;
  }
  return out;
}

}  // namespace linalg

/// A hyperplane arrangement over a field, given by the r x n matrix whose
/// i-th column is a functional cutting out the i-th hyperplane.  Columns
/// are nonzero and pairwise non-proportional; the matrix has full rank r
/// (the hyperplanes intersect trivially).
struct FieldArrangement {
  Tract field;
  FieldMatrix matrix;

  int r() const { return static_cast<int>(matrix.size()); }
  int n() const { return matrix.empty() ? 0 : static_cast<int>(matrix[0].size()); }
};

/// The r x r minors of the matrix as a GP function over the field.
inline GPFunction minors_gp(const Tract& t, const FieldMatrix& m) {
  linalg::require_field(t);
  const int r = static_cast<int>(m.size());
  const int n = static_cast<int>(m[0].size());
  std::map<Subset, TractElement> vals;
  for (Subset s : subsets_of_size(n, r)) {
    FieldMatrix sub;
    for (int row = 0; row < r; ++row) {
      TVec line;
      for (int c : set_elements(s)) line.push_back(m[row][c]);
      sub.push_back(std::move(line));
    }
    TractElement d = linalg::determinant(t, sub);
    if (!d.is_zero()) vals[s] = d;
  }
  return GPFunction::new_checked(t, n, r, std::move(vals));
}

/// q-adic absolute value |x|_q = q^(-v_q(x)) of an integer, as an exact
/// nonnegative rational.
inline mpq_class qadic_abs(mpz_class x, long q) {
  if (q < 2) throw invalid_input("qadic_abs: q must be at least 2");
  if (x == 0) return 0;
  if (x < 0) x = -x;
  mpq_class val = 1;
  while (x % q == 0) {
    x /= q;
    val /= q;
  }
  return val;
}

/// Tropicalization of an integer matrix: the q-adic absolute values of
/// its r x r minors as a tropical GP function (checked, exact ties).
inline GPFunction qadic_minors_gp(const FieldMatrix& int_matrix, long q) {
  Tract qq = Tract::rationals();
  Tract trop = Tract::tropical();
  const int r = static_cast<int>(int_matrix.size());
  const int n = static_cast<int>(int_matrix[0].size());
  for (const TVec& row : int_matrix)
    for (const TractElement& x : row) {
      qq.require(x);
      if (x.value().get_den() != 1)
        throw invalid_input("qadic_minors_gp: integer entries required");
    }
  std::map<Subset, TractElement> vals;
  for (Subset s : subsets_of_size(n, r)) {
    FieldMatrix sub;
    for (int row = 0; row < r; ++row) {
      TVec line;
      for (int c : set_elements(s)) line.push_back(int_matrix[row][c]);
      sub.push_back(std::move(line));
    }
    TractElement d = linalg::determinant(qq, sub);
    if (!d.is_zero())
      vals[s] = trop.element(qadic_abs(d.value().get_num(), q));
  }
  return GPFunction::new_checked(trop, n, r, std::move(vals));
}

/// Builds the arrangement and its GP function; the underlying matroid of
/// the minors is confirmed against the column matroid computed by
/// elimination.
inline std::pair<FieldArrangement, GPFunction> from_matrix(const Tract& t,
                                                           FieldMatrix rows) {
  linalg::require_field(t);
  if (rows.empty()) throw invalid_input("from_matrix: empty matrix");
  const int r = static_cast<int>(rows.size());
  const int n = static_cast<int>(rows[0].size());
  if (n > kMaxGroundSet) throw invalid_input("from_matrix: too many columns");
  for (const TVec& row : rows) {
    if (static_cast<int>(row.size()) != n)
      throw invalid_input("from_matrix: ragged rows");
    for (const TractElement& x : row) t.require(x);
  }
  if (linalg::rank_of(t, rows) != r)
    throw invalid_input("from_matrix: matrix is rank deficient");
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      FieldMatrix pair;
      for (int row = 0; row < r; ++row)
        pair.push_back(TVec{rows[row][i], rows[row][j]});
      int rk = linalg::rank_of(t, pair);
      if (i == j ? rk == 0 : rk < 2)
        throw invalid_input(
            i == j ? "from_matrix: zero column (column " + std::to_string(i) +
                         ")"
                   : "from_matrix: proportional columns " + std::to_string(i) +
                         ", " + std::to_string(j));
    }
  GPFunction phi = minors_gp(t, rows);

  // Sanity: the minor supports must be the column matroid.
  std::vector<Subset> col_bases;
  for (Subset s : subsets_of_size(n, r)) {
    FieldMatrix sub;
    for (int row = 0; row < r; ++row) {
      TVec line;
      for (int c : set_elements(s)) line.push_back(rows[row][c]);
      sub.push_back(std::move(line));
    }
    if (linalg::rank_of(t, sub) == r) col_bases.push_back(s);
  }
  if (col_bases != phi.supports())
    throw std::logic_error("from_matrix: column matroid disagrees with the "
                           "minor supports");
  return {FieldArrangement{t, std::move(rows)}, std::move(phi)};
}

/// Whether the two arrangements induce the same rescaling class: the
/// minor functions differ by a global unit and a per-element torus
/// factor.  The torus is solved by ratio propagation on the basis
/// exchange graph and the candidate is verified on every basis.
inline bool rescaling_equivalent(const FieldArrangement& a,
                                 const FieldArrangement& b) {
  if (a.field != b.field) throw invalid_input("rescaling: field mismatch");
  if (a.r() != b.r() || a.n() != b.n())
    throw invalid_input("rescaling: shape mismatch");
  const Tract& t = a.field;
  GPFunction pa = minors_gp(t, a.matrix);
  GPFunction pb = minors_gp(t, b.matrix);
  if (pa.supports() != pb.supports()) return false;

  std::vector<Subset> bases = pa.supports();
  auto rho = [&](Subset s) {
    return t.product(pb.value(s), t.mul_inv(pa.value(s)));
  };
  std::map<int, TractElement> torus;
  const int n = a.n();
  for (int start = 0; start < n; ++start) {
    if (torus.count(start)) continue;
    torus[start] = t.one();
    std::vector<int> stack = {start};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (Subset bmask : bases) {
        if (!set_contains(bmask, x)) continue;
        for (int y = 0; y < n; ++y) {
          if (set_contains(bmask, y)) continue;
          Subset b2 = (bmask & ~(1u << x)) | (1u << y);
          if (!std::binary_search(bases.begin(), bases.end(), b2)) continue;
          TractElement ty =
              t.product(torus[x], t.product(rho(b2), t.mul_inv(rho(bmask))));
          auto it = torus.find(y);
          if (it == torus.end()) {
            torus[y] = ty;
            stack.push_back(y);
          } else if (it->second != ty) {
            return false;
          }
        }
      }
    }
  }
  TractElement prod0 = t.one();
  for (int e : set_elements(bases[0])) prod0 = t.product(prod0, torus[e]);
  TractElement c = t.product(rho(bases[0]), t.mul_inv(prod0));
  for (Subset bmask : bases) {
    TractElement prod = c;
    for (int e : set_elements(bmask)) prod = t.product(prod, torus[e]);
    if (prod != rho(bmask)) return false;
  }
  return true;
}

/// Flat-intersection verification: for every flat F, the span of the
/// hyperplane functions through F equals the part of the row space
/// vanishing on F, with dimension cork F.  Exact elimination on both
/// sides.
inline CheckReport verify_flat_intersections(const FieldArrangement& arr) {
  const Tract& t = arr.field;
  GPFunction phi = minors_gp(t, arr.matrix);
  Matroid m = phi.underlying_matroid();
  FlatLattice lat = m.flats();
  Representation rep = fundamental_rep(phi);
  nlohmann::json verdicts = nlohmann::json::array();
  for (Subset f : lat.flats()) {
    FieldMatrix span;
    for (Subset h : lat.hyperplanes_above(f)) span.push_back(rep.eta.at(h));
    if (span.empty()) span.push_back(zero_vec(t, arr.n()));
    FieldMatrix side1 = linalg::row_space_basis(t, span);

    FieldMatrix side2;
    for (const TVec& w :
         linalg::left_kernel_on_columns(t, arr.matrix, f))
      side2.push_back(linalg::matvec_left(t, w, arr.matrix));
    if (side2.empty()) side2.push_back(zero_vec(t, arr.n()));
    side2 = linalg::row_space_basis(t, side2);

    bool equal = side1 == side2;
    bool dim_ok =
        static_cast<int>(side1.size()) == lat.corank_of_flat(f);
    verdicts.push_back({{"F", set_elements(f)},
                        {"equal", equal},
                        {"dim", side1.size()},
                        {"cork", lat.corank_of_flat(f)}});
    if (!equal || !dim_ok)
      return CheckReport::fail("flat-intersection",
                               "span of hyperplane functions differs from "
                               "the vanishing subspace",
                               {{"F", set_elements(f)},
                                {"verdicts", verdicts}});
  }
  CheckReport ok = CheckReport::pass();
  ok.detail = {{"verdicts", verdicts}};
  return ok;
}

/// The canonical hyperplane arrangement of a simple T-matroid: the
/// coordinate-zero slices H_i = {X in covectors : X(i) = 0}.
class CanonicalArrangement {
 public:
  explicit CanonicalArrangement(GPFunction phi)
      : phi_(std::move(phi)), covectors_(covectors_of(phi_)) {
    if (!phi_.underlying_matroid().simple())
      throw invalid_input("canonical arrangement requires a simple matroid");
  }

  const GPFunction& gp() const { return phi_; }
  const VectorSpacePredicate& covectors() const { return covectors_; }

  /// X in H_S: a covector vanishing on all of S.
  bool in_h(Subset s, const TVec& x) const {
    for (int i : set_elements(s))
      if (!x[i].is_zero()) return false;
    return covectors_.membership(x);
  }

  /// Members of H_S; finite tracts only.
  std::vector<TVec> h_members(Subset s,
                              long guard = kEnumerationGuard) const {
    std::vector<TVec> out;
    for (const TVec& x : covectors_.members(guard)) {
      bool vanishes = true;
      for (int i : set_elements(s))
        if (!x[i].is_zero()) {
          vanishes = false;
          break;
        }
      if (vanishes) out.push_back(x);
    }
    return out;
  }

 private:
  GPFunction phi_;
  VectorSpacePredicate covectors_;
};

inline CanonicalArrangement canonical_arrangement(const GPFunction& phi) {
  return CanonicalArrangement(phi);
}

/// Full enumeration check of the canonical arrangement over a finite
/// tract: S is a flat iff S = {i : H_S <= H_i}; for flats, H_F is the
/// orthogonal complement of the T-flat V_F and its support bases have
/// size cork F.
inline CheckReport check_prop_e(const GPFunction& phi,
                                long guard = kEnumerationGuard) {
  if (!phi.tract().finite())
    throw invalid_input("check_prop_e requires a finite tract");
  CanonicalArrangement arr(phi);
  const Tract& t = phi.tract();
  const int n = phi.n();
  Matroid m = phi.underlying_matroid();
  FlatLattice lat = m.flats();
  std::vector<TVec> ambient = enumerate_t_vectors(t, n, guard);

  std::map<Subset, std::vector<TVec>> h_of;
  for (Subset s = 0; s <= full_set(n); ++s) h_of[s] = arr.h_members(s, guard);

  for (Subset s = 0; s <= full_set(n); ++s) {
    Subset fixed = 0;
    for (int i = 0; i < n; ++i) {
      bool contained = std::includes(h_of[1u << i].begin(),
                                     h_of[1u << i].end(), h_of[s].begin(),
                                     h_of[s].end());
      if (contained) fixed |= (1u << i);
    }
    bool is_flat = m.is_flat(s);
    if ((fixed == s) != is_flat)
      return CheckReport::fail(
          "prop-e-flats", "flat classification by H_S differs from the "
                          "matroid",
          {{"S", set_elements(s)},
           {"fixed", set_elements(fixed)},
           {"is_flat", is_flat}});
    if (h_of[s] != h_of[m.closure(s)])
      return CheckReport::fail("prop-e-closure",
                               "H_S differs from H_<S>",
                               {{"S", set_elements(s)}});
  }

  for (Subset f : lat.flats()) {
    std::vector<TVec> vf = t_flat(phi, f).predicate.members(guard);
    std::vector<TVec> orth;
    for (const TVec& y : ambient) {
      bool ok = true;
      for (const TVec& x : vf)
        if (!t.dot_is_null(y, x)) {
          ok = false;
          break;
        }
      if (ok) orth.push_back(y);
    }
    if (orth != h_of[f])
      return CheckReport::fail("prop-e-orthogonal",
                               "H_F is not the orthogonal complement of V_F",
                               {{"F", set_elements(f)}});
    std::vector<Subset> sb = support_bases_definitional(n, h_of[f]);
    for (Subset b : sb)
      if (set_size(b) != lat.corank_of_flat(f))
        return CheckReport::fail(
            "prop-e-dimension", "H_F has the wrong dimension",
            {{"F", set_elements(f)},
             {"support_basis", set_elements(b)},
             {"cork", lat.corank_of_flat(f)}});
  }
  return CheckReport::pass();
}

}  // namespace tracts

#endif  // TRACTS_HYPERARR_HPP
