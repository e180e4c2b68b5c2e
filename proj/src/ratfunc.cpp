#include "prf/ratfunc.hpp"

#include <algorithm>

namespace prf {

RatFn make_ratfn(const FieldCtx& ctx, const Poly& num, const Poly& den) {
  if (den.is_zero()) throw ZeroDenominatorError("rational function with zero denominator");
  Poly g = gcd_poly(ctx, num, den);
  Poly n = num;
  Poly d = den;
  if (g.degree().value_or(0) > 0) {
    n = divmod_poly(ctx, num, g).first;
    d = divmod_poly(ctx, den, g).first;
  }
  const Elem s = ctx.inv(d.lead());
  return RatFn{scalar_mul(ctx, s, n), scalar_mul(ctx, s, d)};
}

P1Point eval_p1(const FieldCtx& ctx, const RatFn& w, P1Point x) {
  const P1Point inf = ctx.q();
  if (w.num.is_zero()) return 0;
  if (x == inf) {
    if (w.v() > w.u()) return inf;
    if (w.v() < w.u()) return 0;
    return ctx.div(w.num.lead(), w.den.lead()).label;
  }
  const Elem e{static_cast<std::uint16_t>(x)};
  const Elem d = eval(ctx, w.den, e);
  if (d.is_zero()) return inf;
  return ctx.div(eval(ctx, w.num, e), d).label;
}

std::variant<PermP1, NotPermutation> to_perm(const FieldCtx& ctx, const RatFn& w) {
  const std::size_t n = ctx.q() + 1;
  PermP1 perm;
  perm.image.resize(n);
  std::vector<std::int64_t> who(n, -1);
  for (P1Point x = 0; x < n; ++x) {
    P1Point y = eval_p1(ctx, w, x);
    if (who[y] >= 0) return NotPermutation{static_cast<P1Point>(who[y]), x, y};
    who[y] = x;
    perm.image[x] = y;
  }
  return perm;
}

RatFn reciprocal(const FieldCtx& ctx, const RatFn& w) {
  if (w.num.is_zero()) throw ZeroNumeratorError("reciprocal of the zero function");
  return make_ratfn(ctx, w.den, w.num);
}

RatFn invert_argument(const FieldCtx& ctx, const RatFn& w) {
  // x^n V(1/x) / x^n U(1/x) with n = max(v, u)
  const unsigned n = std::max(w.v(), w.u());
  auto flip = [n](const Poly& f) {
    std::vector<Elem> c(n + 1);
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) c[n - i] = f.coeffs()[i];
    return Poly(std::move(c));
  };
  return make_ratfn(ctx, flip(w.num), flip(w.den));
}

unsigned hamming(const PermP1& a, const PermP1& b) {
  if (a.image.size() != b.image.size()) throw SizeMismatchError("permutations on different point sets");
  unsigned d = 0;
  for (std::size_t i = 0; i < a.image.size(); ++i) d += a.image[i] != b.image[i];
  return d;
}

unsigned hamming(const PermFq& a, const PermFq& b) {
  if (a.size() != b.size()) throw SizeMismatchError("permutations on different symbol sets");
  unsigned d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

PermFq contract(const PermP1& perm) {
  const std::size_t q = perm.q();
  PermFq out(perm.image.begin(), perm.image.begin() + static_cast<std::ptrdiff_t>(q));
  const P1Point at_inf = perm.image[q];
  if (at_inf == q) return out;
  for (std::size_t i = 0; i < q; ++i) {
    if (out[i] == q) {
      out[i] = at_inf;
      break;
    }
  }
  return out;
}

PermP1 identity_p1(std::size_t q) {
  PermP1 p;
  p.image.resize(q + 1);
  for (std::size_t i = 0; i <= q; ++i) p.image[i] = static_cast<P1Point>(i);
  return p;
}

std::string to_string(const RatFn& w) { return to_string(w.num) + "|" + to_string(w.den); }

RatFn parse_ratfn(const FieldCtx& ctx, const std::string& text) {
  auto bar = text.find('|');
  if (bar == std::string::npos) throw ParseError("rational function needs 'num|den': " + text);
  return make_ratfn(ctx, parse_poly(ctx, text.substr(0, bar)), parse_poly(ctx, text.substr(bar + 1)));
}

std::string point_string(P1Point x, std::size_t q) { return x == q ? "inf" : std::to_string(x); }

std::string to_string(const PermP1& perm) {
  std::string out = "(";
  for (std::size_t i = 0; i < perm.image.size(); ++i) {
    if (i) out.push_back(',');
    out += point_string(perm.image[i], perm.q());
  }
  out.push_back(')');
  return out;
}

}  // namespace prf
