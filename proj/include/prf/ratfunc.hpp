#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "prf/poly.hpp"

namespace prf {

// Point of the projective line: a field label in [0, q), or q for infinity.
using P1Point = std::uint32_t;

inline P1Point infinity(const FieldCtx& ctx) { return ctx.q(); }

// V/U with gcd(V, U) = 1 and U monic.
struct RatFn {
  Poly num;
  Poly den;

  // Numerator degree, with the zero function treated as degree 0.
  unsigned v() const noexcept { return num.degree().value_or(0); }
  unsigned u() const noexcept { return den.degree().value_or(0); }

  friend bool operator==(const RatFn&, const RatFn&) = default;
  friend bool operator<(const RatFn& a, const RatFn& b) {
    if (a.num == b.num) return a.den < b.den;
    return a.num < b.num;
  }
};

// Image of each point 0..q-1 followed by the image of infinity.
struct PermP1 {
  std::vector<P1Point> image;

  std::size_t q() const noexcept { return image.empty() ? 0 : image.size() - 1; }
  friend bool operator==(const PermP1&, const PermP1&) = default;
};

// Two domain points sharing an image.
struct NotPermutation {
  P1Point first = 0;
  P1Point second = 0;
  P1Point value = 0;
};

// Permutation of the q field labels.
using PermFq = std::vector<std::uint32_t>;

// Divides out gcd(num, den) and makes den monic.
RatFn make_ratfn(const FieldCtx& ctx, const Poly& num, const Poly& den);

P1Point eval_p1(const FieldCtx& ctx, const RatFn& w, P1Point x);

std::variant<PermP1, NotPermutation> to_perm(const FieldCtx& ctx, const RatFn& w);
inline bool is_prf(const FieldCtx& ctx, const RatFn& w) { return std::holds_alternative<PermP1>(to_perm(ctx, w)); }

// U/V in canonical form; throws ZeroNumeratorError when V = 0.
RatFn reciprocal(const FieldCtx& ctx, const RatFn& w);

// W(1/x) in canonical form.
RatFn invert_argument(const FieldCtx& ctx, const RatFn& w);

unsigned hamming(const PermP1& a, const PermP1& b);
unsigned hamming(const PermFq& a, const PermFq& b);

// Removes the infinity coordinate, moving the image of infinity into the
// position that mapped to infinity.
PermFq contract(const PermP1& perm);

PermP1 identity_p1(std::size_t q);

// "num|den", both low degree first.
std::string to_string(const RatFn& w);
RatFn parse_ratfn(const FieldCtx& ctx, const std::string& text);

// Labels, with infinity printed as "inf".
std::string point_string(P1Point x, std::size_t q);
std::string to_string(const PermP1& perm);

}  // namespace prf
