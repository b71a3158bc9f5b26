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

#ifndef TRACTS_TRACT_HPP
#define TRACTS_TRACT_HPP

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "tracts/errors.hpp"
#include "tracts/subset.hpp"

namespace tracts {

enum class TractKind : std::uint8_t { krasner, tropical, gf, rationals };

inline std::string kind_name(TractKind k) {
  switch (k) {
    case TractKind::krasner: return "krasner";
    case TractKind::tropical: return "tropical";
    case TractKind::gf: return "gf";
    case TractKind::rationals: return "rationals";
  }
  return "?";
}

/// One exact element of a fixed tract.  The payload is always a rational:
/// {0,1} for the Krasner hyperfield, a nonnegative rational for the
/// tropical hyperfield, a residue in [0,p) for GF(p), anything for Q.
/// Elements remember their tract so that cross-tract use is an error
/// instead of a silent wrong answer.
class TractElement {
 public:
  TractElement() : kind_(TractKind::krasner), p_(0), v_(0) {}
  TractElement(TractKind kind, long p, mpq_class v)
      : kind_(kind), p_(p), v_(std::move(v)) {
    v_.canonicalize();
  }

  TractKind kind() const { return kind_; }
  long characteristic() const { return p_; }
  const mpq_class& value() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  friend bool operator==(const TractElement& a, const TractElement& b) {
    return a.kind_ == b.kind_ && a.p_ == b.p_ && a.v_ == b.v_;
  }
  friend bool operator!=(const TractElement& a, const TractElement& b) {
    return !(a == b);
  }
  /// Total order; used only for canonical/deterministic enumeration.
  friend bool operator<(const TractElement& a, const TractElement& b) {
    if (a.kind_ != b.kind_) return a.kind_ < b.kind_;
    if (a.p_ != b.p_) return a.p_ < b.p_;
    return a.v_ < b.v_;
  }

 private:
  TractKind kind_;
  long p_;  // prime for gf, 0 otherwise
  mpq_class v_;
};

/// A map E -> T, stored densely over the ground set {0,...,n-1}.
using TVec = std::vector<TractElement>;

/// A perfect tract: the multiplicative group arithmetic plus the nullset
/// membership predicate on finite multisets, which stands in for addition.
/// Four tracts are supported: the Krasner hyperfield, the tropical
/// hyperfield (nonnegative rationals under ordinary multiplication), the
/// prime fields GF(p) and the rationals.
class Tract {
 public:
  static Tract krasner() { return Tract(TractKind::krasner, 0); }
  static Tract tropical() { return Tract(TractKind::tropical, 0); }
  static Tract gf(long p) {
    if (p < 2) throw invalid_input("gf: modulus must be a prime >= 2");
    for (long d = 2; d * d <= p; ++d)
      if (p % d == 0) throw invalid_input("gf: modulus is not prime");
    return Tract(TractKind::gf, p);
  }
  static Tract rationals() { return Tract(TractKind::rationals, 0); }

  TractKind kind() const { return kind_; }
  long p() const { return p_; }
  bool finite() const {
    return kind_ == TractKind::krasner || kind_ == TractKind::gf;
  }
  long size() const {
    if (!finite()) throw invalid_input("size(): tract is infinite");
    return kind_ == TractKind::krasner ? 2 : p_;
  }

  friend bool operator==(const Tract& a, const Tract& b) {
    return a.kind_ == b.kind_ && a.p_ == b.p_;
  }
  friend bool operator!=(const Tract& a, const Tract& b) { return !(a == b); }

  std::string name() const {
    if (kind_ == TractKind::gf) return "gf(" + std::to_string(p_) + ")";
    return kind_name(kind_);
  }

  TractElement zero() const { return TractElement(kind_, p_, 0); }
  TractElement one() const { return TractElement(kind_, p_, 1); }

  /// Builds an element from a rational, enforcing the per-tract value
  /// invariants (GF residues are reduced into [0,p)).
  TractElement element(const mpq_class& raw) const {
    mpq_class v = raw;
    v.canonicalize();
    switch (kind_) {
      case TractKind::krasner:
        if (v != 0 && v != 1)
          throw invalid_input("krasner element must be 0 or 1");
        break;
      case TractKind::tropical:
        if (v < 0) throw invalid_input("tropical element must be nonnegative");
        break;
      case TractKind::gf: {
        if (v.get_den() != 1)
          throw invalid_input("gf element must be an integer");
        mpz_class r = v.get_num() % p_;
        if (r < 0) r += p_;
        v = mpq_class(r);
        break;
      }
      case TractKind::rationals:
        break;
    }
    return TractElement(kind_, p_, v);
  }

  TractElement element(long v) const { return element(mpq_class(v)); }

  TractElement parse(const std::string& text) const {
    mpq_class v;
    if (v.set_str(text, 10) != 0)
      throw invalid_input("unparsable tract element: '" + text + "'");
    if (v.get_den() == 0) throw invalid_input("zero denominator: " + text);
    v.canonicalize();
    return element(v);
  }

  static std::string to_string(const TractElement& a) {
    return a.value().get_str();
  }

  bool contains(const TractElement& a) const {
    return a.kind() == kind_ && a.characteristic() == p_;
  }

  void require(const TractElement& a) const {
    if (!contains(a))
      throw invalid_input("element of " +
                          Tract(a.kind(), a.characteristic()).name() +
                          " used in " + name());
  }

  /// All elements, smallest first.  Finite tracts only.
  std::vector<TractElement> universe() const {
    if (!finite()) throw invalid_input("universe(): tract is infinite");
    std::vector<TractElement> out;
    for (long v = 0; v < size(); ++v) out.push_back(element(v));
    return out;
  }

  TractElement product(const TractElement& a, const TractElement& b) const {
    require(a);
    require(b);
    mpq_class v = a.value() * b.value();
    if (kind_ == TractKind::gf) {
      mpz_class r = mpz_class(v.get_num()) % p_;
      if (r < 0) r += p_;
      return TractElement(kind_, p_, mpq_class(r));
    }
    return TractElement(kind_, p_, v);
  }

  TractElement mul_inv(const TractElement& a) const {
    require(a);
    if (a.is_zero()) throw invalid_input("mul_inv(0)");
    if (kind_ == TractKind::gf) {
      // Fermat: a^(p-2) mod p.
      mpz_class base = a.value().get_num(), result;
      mpz_class mod(p_), e(p_ - 2);
      mpz_powm(result.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(),
               mod.get_mpz_t());
      return TractElement(kind_, p_, mpq_class(result));
    }
    return TractElement(kind_, p_, mpq_class(1) / a.value());
  }

  /// The unique b with {a, b} null.  Hyperfields here are self-inverse;
  /// fields negate.
  TractElement negate(const TractElement& a) const {
    require(a);
    switch (kind_) {
      case TractKind::krasner:
      case TractKind::tropical:
        return a;
      case TractKind::gf: {
        if (a.is_zero()) return a;
        return TractElement(kind_, p_, mpq_class(p_ - a.value().get_num()));
      }
      case TractKind::rationals:
        return TractElement(kind_, p_, -a.value());
    }
    return a;
  }

  /// Nullset membership for a finite multiset of terms.  Zero terms are
  /// discarded first (harmless: the nullset is an ideal).
  bool is_null(std::span<const TractElement> terms) const {
    std::vector<const TractElement*> nz;
    for (const TractElement& a : terms) {
      require(a);
      if (!a.is_zero()) nz.push_back(&a);
    }
    switch (kind_) {
      case TractKind::krasner:
        return nz.size() != 1;
      case TractKind::tropical: {
        if (nz.empty()) return true;
        const mpq_class* mx = &nz[0]->value();
        int hits = 0;
        for (auto* a : nz)
          if (a->value() > *mx) mx = &a->value();
        for (auto* a : nz)
          if (a->value() == *mx) ++hits;
        return hits >= 2;
      }
      case TractKind::gf: {
        mpz_class sum = 0;
        for (auto* a : nz) sum += a->value().get_num();
        return sum % p_ == 0;
      }
      case TractKind::rationals: {
        mpq_class sum = 0;
        for (auto* a : nz) sum += a->value();
        return sum == 0;
      }
    }
    return false;
  }

  bool is_null(const std::vector<TractElement>& terms) const {
    return is_null(std::span<const TractElement>(terms));
  }

  /// Orthogonality X | Y: the multiset {X(e)Y(e)} is null.
  bool dot_is_null(std::span<const TractElement> x,
                   std::span<const TractElement> y) const {
    if (x.size() != y.size())
      throw invalid_input("dot_is_null: ground sets differ");
    std::vector<TractElement> prods;
    prods.reserve(x.size());
    for (size_t i = 0; i < x.size(); ++i) prods.push_back(product(x[i], y[i]));
    return is_null(prods);
  }

  /// The unique morphism into the Krasner hyperfield: 0 -> 0, else 1.
  TractElement to_krasner(const TractElement& a) const {
    require(a);
    return TractElement(TractKind::krasner, 0, a.is_zero() ? 0 : 1);
  }

 private:
  Tract(TractKind kind, long p) : kind_(kind), p_(p) {}

  TractKind kind_;
  long p_;
};

/// Scalar multiple c*X, coordinatewise.
inline TVec scale_vec(const Tract& t, const TractElement& c, const TVec& x) {
  TVec out;
  out.reserve(x.size());
  for (const auto& xi : x) out.push_back(t.product(c, xi));
  return out;
}

inline Subset support_of(const TVec& x) {
  Subset s = 0;
  for (size_t e = 0; e < x.size(); ++e)
    if (!x[e].is_zero()) s |= (1u << e);
  return s;
}

inline bool is_zero_vec(const TVec& x) {
  return std::all_of(x.begin(), x.end(),
                     [](const TractElement& a) { return a.is_zero(); });
}

/// Standard basis vector delta_e in T^n.
inline TVec delta_vec(const Tract& t, int n, int e) {
  TVec out(n, t.zero());
  out[e] = t.one();
  return out;
}

inline TVec zero_vec(const Tract& t, int n) { return TVec(n, t.zero()); }

}  // namespace tracts

#endif  // TRACTS_TRACT_HPP
