#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "prf/errors.hpp"

namespace prf {

// GF(p^m) described by a primitive polynomial over GF(p), coefficients low
// degree first. For m = 1 the polynomial is x - t for the chosen generator t.
struct FieldSpec {
  unsigned p = 0;
  unsigned m = 0;
  std::vector<unsigned> prim_poly;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

// Field element in generator-label form: 0 is zero, k >= 1 is t^(k-1).
struct Elem {
  std::uint16_t label = 0;

  constexpr bool is_zero() const noexcept { return label == 0; }
  friend constexpr auto operator<=>(Elem, Elem) = default;
};

struct FieldOptions {
  // Use Zech logarithms even when the full addition table would fit.
  bool force_zech = false;
};

bool is_prime(unsigned n);

// (p, m) with q = p^m, or nullopt when q is not a prime power.
std::optional<std::pair<unsigned, unsigned>> prime_power(unsigned q);

// Deterministic default primitive polynomial: for m = 1, x - g with g the
// least primitive root; for m > 1, the first primitive polynomial with
// (c0, c1, ..., c_{m-1}) in ascending lexicographic order. This reproduces
// x+4 for GF(7) and x^3+x^2+1 for GF(8).
FieldSpec default_spec(unsigned p, unsigned m);

class FieldCtx {
 public:
  static constexpr unsigned kMaxOrder = 65536;
  static constexpr unsigned kTableLimit = 1024;

  explicit FieldCtx(FieldSpec spec, FieldOptions options = {});

  const FieldSpec& spec() const noexcept { return spec_; }
  unsigned p() const noexcept { return spec_.p; }
  unsigned m() const noexcept { return spec_.m; }
  unsigned q() const noexcept { return q_; }
  bool uses_tables() const noexcept { return !add_.empty(); }

  static constexpr Elem zero() noexcept { return Elem{0}; }
  static constexpr Elem one() noexcept { return Elem{1}; }
  // The generator t itself (label 2, or label 1 when q = 2).
  Elem generator() const noexcept { return Elem{static_cast<std::uint16_t>(q_ == 2 ? 1 : 2)}; }
  Elem minus_one() const noexcept { return minus_one_; }

  bool valid(Elem a) const noexcept { return a.label < q_; }

  Elem add(Elem a, Elem b) const noexcept {
    if (!add_.empty()) return Elem{add_[static_cast<std::size_t>(a.label) * q_ + b.label]};
    return zech_add(a, b);
  }
  Elem neg(Elem a) const noexcept { return Elem{neg_[a.label]}; }
  Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }

  Elem mul(Elem a, Elem b) const noexcept {
    if (a.label == 0 || b.label == 0) return zero();
    unsigned s = static_cast<unsigned>(a.label - 1) + static_cast<unsigned>(b.label - 1);
    if (s >= order_) s -= order_;
    return Elem{static_cast<std::uint16_t>(s + 1)};
  }
  Elem inv(Elem a) const {
    if (a.label == 0) throw DivisionByZeroError("inverse of zero");
    return Elem{inv_[a.label]};
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  // a^n for any integer n; negative n needs a != 0. 0^0 = 1.
  Elem pow(Elem a, long long n) const;
  // a -> a^p
  Elem frobenius(Elem a) const noexcept {
    if (a.label == 0) return zero();
    auto e = static_cast<unsigned long long>(a.label - 1) * spec_.p % order_;
    return Elem{static_cast<std::uint16_t>(e + 1)};
  }
  // Image of the integer k under Z -> GF(p) -> GF(q).
  Elem from_int(long long k) const;

  // Vector representation (base-p digits, low degree first, packed as an
  // integer) of an element, and the inverse map.
  std::uint32_t to_vector(Elem a) const noexcept { return a.label == 0 ? 0 : exp_[a.label - 1]; }
  Elem from_vector(std::uint32_t v) const;

  // Raw label inverse table, index 0 unused.
  const std::vector<std::uint16_t>& inverse_table() const noexcept { return inv_; }

 private:
  Elem zech_add(Elem a, Elem b) const noexcept;

  FieldSpec spec_;
  unsigned q_ = 0;
  unsigned order_ = 0;               // q - 1
  std::vector<std::uint32_t> exp_;   // k -> vector rep of t^k, k in [0, q-2]
  std::vector<std::uint16_t> log_;   // vector rep -> label
  std::vector<std::uint16_t> add_;   // q*q labels, empty when using Zech
  std::vector<std::uint16_t> zech_;  // k -> label of 1 + t^k
  std::vector<std::uint16_t> inv_;
  std::vector<std::uint16_t> neg_;
  Elem minus_one_{1};
};

// build_field: validated context, deterministic for a given spec.
inline FieldCtx build_field(const FieldSpec& spec, FieldOptions options = {}) {
  return FieldCtx(spec, options);
}

// Accepts "c0,c1,...,cm".
std::vector<unsigned> parse_coeff_list(const std::string& text);

}  // namespace prf
