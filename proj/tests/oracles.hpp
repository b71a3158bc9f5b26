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
//
// Test-only oracles, kept independent of the library code paths they
// check: a from-scratch exchange predicate, plain Gaussian elimination
// over Q and GF(p), and brute-force enumerations of matroids and of
// GP functions over finite tracts.

#ifndef TRACTS_TESTS_ORACLES_HPP
#define TRACTS_TESTS_ORACLES_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "tracts/gp.hpp"
#include "tracts/matroid.hpp"
#include "tracts/subset.hpp"
#include "tracts/tract.hpp"

namespace oracles {

using tracts::GPFunction;
using tracts::Matroid;
using tracts::Subset;
using tracts::Tract;
using tracts::TractElement;

// ---------------------------------------------------------------------
// Basis exchange, written independently of Matroid::from_bases.
inline bool exchange_ok(const std::vector<Subset>& bases) {
  for (Subset b1 : bases)
    for (Subset b2 : bases)
      for (int x : tracts::set_elements(b1 & ~b2)) {
        bool ok = false;
        for (int y : tracts::set_elements(b2 & ~b1)) {
          Subset cand = (b1 & ~(1u << x)) | (1u << y);
          for (Subset b : bases)
            if (b == cand) {
              ok = true;
              break;
            }
          if (ok) break;
        }
        if (!ok) return false;
      }
  return true;
}

// All matroids on {0,...,n-1}: every nonempty family of r-subsets that
// passes exchange, for every rank r.
inline std::vector<Matroid> all_matroids(int n) {
  std::vector<Matroid> out;
  for (int r = 0; r <= n; ++r) {
    std::vector<Subset> rsubs = tracts::subsets_of_size(n, r);
    const std::uint64_t count = 1ull << rsubs.size();
    for (std::uint64_t pick = 1; pick < count; ++pick) {
      std::vector<Subset> fam;
      for (size_t i = 0; i < rsubs.size(); ++i)
        if ((pick >> i) & 1) fam.push_back(rsubs[i]);
      if (exchange_ok(fam)) out.push_back(Matroid::from_bases(n, r, fam));
    }
  }
  return out;
}

// ---------------------------------------------------------------------
// Exact elimination oracle.  Matrices are rows of mpq_class; if p > 0 all
// arithmetic is mod p.
struct QMatrix {
  std::vector<std::vector<mpq_class>> rows;
  long p = 0;  // 0 = rationals
};

inline mpq_class onorm(const mpq_class& x, long p) {
  if (p == 0) return x;
  mpz_class r = x.get_num() % p;
  if (r < 0) r += p;
  return mpq_class(r);
}

inline mpq_class oinv(const mpq_class& x, long p) {
  if (p == 0) return 1 / x;
  mpz_class result, base = x.get_num(), mod(p), e(p - 2);
  mpz_powm(result.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(),
           mod.get_mpz_t());
  return mpq_class(result);
}

// Reduced row echelon form in place; returns the rank.
inline int rref(QMatrix& m) {
  if (m.rows.empty()) return 0;
  size_t nrows = m.rows.size(), ncols = m.rows[0].size();
  size_t lead = 0;
  int rank = 0;
  for (size_t row = 0; row < nrows && lead < ncols; ++row) {
    size_t pivot = row;
    while (pivot < nrows && onorm(m.rows[pivot][lead], m.p) == 0) ++pivot;
    if (pivot == nrows) {
      ++lead;
      --row;
      continue;
    }
    std::swap(m.rows[row], m.rows[pivot]);
    mpq_class inv = oinv(onorm(m.rows[row][lead], m.p), m.p);
    for (size_t c = 0; c < ncols; ++c)
      m.rows[row][c] = onorm(m.rows[row][c] * inv, m.p);
    for (size_t rr = 0; rr < nrows; ++rr) {
      if (rr == row) continue;
      mpq_class f = onorm(m.rows[rr][lead], m.p);
      if (f == 0) continue;
      for (size_t c = 0; c < ncols; ++c)
        m.rows[rr][c] = onorm(m.rows[rr][c] - f * m.rows[row][c], m.p);
    }
    ++lead;
    ++rank;
  }
  return rank;
}

inline int rank_of_columns(const QMatrix& m, const std::vector<int>& cols) {
  QMatrix sub;
  sub.p = m.p;
  for (const auto& row : m.rows) {
    std::vector<mpq_class> r;
    for (int c : cols) r.push_back(row[c]);
    sub.rows.push_back(r);
  }
  return rref(sub);
}

// Column matroid of an r x n matrix, by elimination rank of subsets.
inline Matroid column_matroid(const QMatrix& m) {
  int n = static_cast<int>(m.rows[0].size());
  QMatrix copy = m;
  int r = rref(copy);
  std::vector<Subset> bases;
  for (Subset s : tracts::subsets_of_size(n, r))
    if (rank_of_columns(m, tracts::set_elements(s)) == r) bases.push_back(s);
  return Matroid::from_bases(n, r, bases);
}

inline mpq_class determinant(const QMatrix& m) {
  size_t k = m.rows.size();
  std::vector<std::vector<mpq_class>> a = m.rows;
  mpq_class det = 1;
  for (size_t col = 0; col < k; ++col) {
    size_t pivot = col;
    while (pivot < k && onorm(a[pivot][col], m.p) == 0) ++pivot;
    if (pivot == k) return 0;
    if (pivot != col) {
      std::swap(a[col], a[pivot]);
      det = -det;
    }
    det = onorm(det * a[col][col], m.p);
    mpq_class inv = oinv(onorm(a[col][col], m.p), m.p);
    for (size_t r = col + 1; r < k; ++r) {
      mpq_class f = onorm(a[r][col] * inv, m.p);
      for (size_t c = col; c < k; ++c)
        a[r][c] = onorm(a[r][c] - f * a[col][c], m.p);
    }
  }
  return onorm(det, m.p);
}

// Basis of the right kernel {x : A x = 0}, one vector per row.
inline QMatrix kernel_basis(const QMatrix& m) {
  QMatrix red = m;
  int rank = rref(red);
  size_t ncols = m.rows[0].size();
  std::vector<int> pivot_col;
  std::vector<bool> is_pivot(ncols, false);
  for (int r = 0; r < rank; ++r)
    for (size_t c = 0; c < ncols; ++c)
      if (onorm(red.rows[r][c], m.p) != 0) {
        pivot_col.push_back(static_cast<int>(c));
        is_pivot[c] = true;
        break;
      }
  QMatrix ker;
  ker.p = m.p;
  for (size_t fc = 0; fc < ncols; ++fc) {
    if (is_pivot[fc]) continue;
    std::vector<mpq_class> v(ncols, 0);
    v[fc] = 1;
    for (int r = 0; r < rank; ++r)
      v[pivot_col[r]] = onorm(-red.rows[r][fc], m.p);
    ker.rows.push_back(v);
  }
  return ker;
}

// ---------------------------------------------------------------------
// GP builders.

// The r x r minors of an r x n matrix as a GP function over gf(p) or Q.
inline GPFunction minors_gp(const Tract& t, const QMatrix& m) {
  int r = static_cast<int>(m.rows.size());
  int n = static_cast<int>(m.rows[0].size());
  std::map<Subset, TractElement> vals;
  for (Subset s : tracts::subsets_of_size(n, r)) {
    QMatrix sub;
    sub.p = m.p;
    std::vector<int> cols = tracts::set_elements(s);
    for (int row = 0; row < r; ++row) {
      std::vector<mpq_class> rr;
      for (int c : cols) rr.push_back(m.rows[row][c]);
      sub.rows.push_back(rr);
    }
    mpq_class d = determinant(sub);
    if (d != 0) vals[s] = t.element(d);
  }
  return GPFunction::new_checked(t, n, r, vals);
}

// q-adic absolute value |x|_q = q^(-v_q(x)) of a nonzero integer.
inline mpq_class qadic_abs(mpz_class x, long q) {
  if (x < 0) x = -x;
  mpq_class val = 1;
  while (x % q == 0) {
    x /= q;
    val /= q;
  }
  return val;
}

// Tropicalization: q-adic absolute values of the minors of an integer
// matrix, as a tropical GP function.
inline GPFunction qadic_minors_gp(const QMatrix& m, long q) {
  Tract trop = Tract::tropical();
  int r = static_cast<int>(m.rows.size());
  int n = static_cast<int>(m.rows[0].size());
  std::map<Subset, TractElement> vals;
  for (Subset s : tracts::subsets_of_size(n, r)) {
    QMatrix sub;
    sub.p = 0;
    std::vector<int> cols = tracts::set_elements(s);
    for (int row = 0; row < r; ++row) {
      std::vector<mpq_class> rr;
      for (int c : cols) rr.push_back(m.rows[row][c]);
      sub.rows.push_back(rr);
    }
    mpq_class d = determinant(sub);
    if (d != 0) vals[s] = trop.element(qadic_abs(d.get_num(), q));
  }
  return GPFunction::new_checked(trop, n, r, vals);
}

// The unique Krasner GP function of a matroid: all values 1 on bases.
inline GPFunction krasner_gp(const Matroid& m) {
  Tract k = Tract::krasner();
  std::map<Subset, TractElement> vals;
  for (Subset b : m.bases()) vals[b] = k.one();
  return GPFunction::new_checked(k, m.n(), m.rank(), vals);
}

// All GP functions over a finite tract with the given underlying matroid,
// up to global scaling (value on the first basis pinned to 1).
inline std::vector<GPFunction> finite_gps_for(const Tract& t,
                                              const Matroid& m) {
  std::vector<TractElement> units;
  for (const TractElement& a : t.universe())
    if (!a.is_zero()) units.push_back(a);
  const std::vector<Subset>& bases = m.bases();
  std::vector<GPFunction> out;
  size_t free_slots = bases.size() - 1;
  std::vector<size_t> pick(free_slots, 0);
  while (true) {
    std::map<Subset, TractElement> vals;
    vals[bases[0]] = t.one();
    for (size_t i = 0; i < free_slots; ++i) vals[bases[i + 1]] = units[pick[i]];
    try {
      out.push_back(GPFunction::new_checked(t, m.n(), m.rank(), vals));
    } catch (const tracts::axiom_error&) {
    }
    size_t i = 0;
    for (; i < free_slots; ++i) {
      if (++pick[i] < units.size()) break;
      pick[i] = 0;
    }
    if (i == free_slots) break;
  }
  return out;
}

// ---------------------------------------------------------------------
// Deterministic random generators.

inline QMatrix random_field_matrix(std::mt19937_64& rng, long p, int r, int n,
                                   bool full_rank = true) {
  std::uniform_int_distribution<long> dist(p == 0 ? -9 : 0,
                                           p == 0 ? 9 : p - 1);
  while (true) {
    QMatrix m;
    m.p = p;
    m.rows.assign(r, {});
    for (auto& row : m.rows)
      for (int c = 0; c < n; ++c) row.push_back(mpq_class(dist(rng)));
    if (!full_rank) return m;
    QMatrix copy = m;
    if (rref(copy) == r) return m;
  }
}

inline QMatrix random_integer_matrix(std::mt19937_64& rng, int r, int n,
                                     long lo = -30, long hi = 30) {
  std::uniform_int_distribution<long> dist(lo, hi);
  while (true) {
    QMatrix m;
    m.p = 0;
    m.rows.assign(r, {});
    for (auto& row : m.rows)
      for (int c = 0; c < n; ++c) row.push_back(mpq_class(dist(rng)));
    QMatrix copy = m;
    if (rref(copy) == r) return m;
  }
}

}  // namespace oracles

#endif  // TRACTS_TESTS_ORACLES_HPP
