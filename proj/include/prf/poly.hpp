#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "prf/field.hpp"

namespace prf {

// Dense polynomial, coefficient of x^i at index i. Always trimmed, so the
// zero polynomial has no coefficients and no degree.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Elem> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly constant(Elem c) { return Poly(std::vector<Elem>{c}); }
  static Poly monomial(Elem c, unsigned degree) {
    std::vector<Elem> v(degree + 1);
    v[degree] = c;
    return Poly(std::move(v));
  }
  // From raw labels, low degree first.
  static Poly from_labels(const std::vector<unsigned>& labels);

  bool is_zero() const noexcept { return c_.empty(); }
  std::optional<unsigned> degree() const noexcept {
    if (c_.empty()) return std::nullopt;
    return static_cast<unsigned>(c_.size() - 1);
  }
  // Coefficient of x^i, zero past the degree.
  Elem coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : Elem{}; }
  Elem lead() const noexcept { return c_.empty() ? Elem{} : c_.back(); }
  const std::vector<Elem>& coeffs() const noexcept { return c_; }

  friend bool operator==(const Poly&, const Poly&) = default;
  friend bool operator<(const Poly& a, const Poly& b) { return a.c_ < b.c_; }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Elem> c_;
};

Elem eval(const FieldCtx& ctx, const Poly& f, Elem x);

Poly add_poly(const FieldCtx& ctx, const Poly& f, const Poly& g);
Poly sub_poly(const FieldCtx& ctx, const Poly& f, const Poly& g);
Poly mul_poly(const FieldCtx& ctx, const Poly& f, const Poly& g);
Poly scalar_mul(const FieldCtx& ctx, Elem s, const Poly& f);
Poly neg_poly(const FieldCtx& ctx, const Poly& f);

// f(x) -> f(x + b)
Poly shift_arg(const FieldCtx& ctx, const Poly& f, Elem b);
// f(x) -> f(r x), r != 0
Poly scale_arg(const FieldCtx& ctx, const Poly& f, Elem r);

// Quotient and remainder; throws DivisionByZeroError for g = 0.
std::pair<Poly, Poly> divmod_poly(const FieldCtx& ctx, const Poly& f, const Poly& g);

// Monic gcd; throws BothZeroError when f = g = 0.
Poly gcd_poly(const FieldCtx& ctx, const Poly& f, const Poly& g);

// f / lead(f); the zero polynomial is returned unchanged.
Poly make_monic(const FieldCtx& ctx, const Poly& f);

// "0,1,0,1" for x^3 + x (labels). The zero polynomial prints as "0".
std::string to_string(const Poly& f);
Poly parse_poly(const FieldCtx& ctx, const std::string& text);

}  // namespace prf
