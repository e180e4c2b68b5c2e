#include "prf/poly.hpp"

#include <algorithm>

namespace prf {

Poly Poly::from_labels(const std::vector<unsigned>& labels) {
  std::vector<Elem> v;
  v.reserve(labels.size());
  for (unsigned l : labels) v.push_back(Elem{static_cast<std::uint16_t>(l)});
  return Poly(std::move(v));
}

Elem eval(const FieldCtx& ctx, const Poly& f, Elem x) {
  const auto& c = f.coeffs();
  Elem acc{};
  for (std::size_t i = c.size(); i-- > 0;) acc = ctx.add(ctx.mul(acc, x), c[i]);
  return acc;
}

Poly add_poly(const FieldCtx& ctx, const Poly& f, const Poly& g) {
  std::vector<Elem> out(std::max(f.coeffs().size(), g.coeffs().size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = ctx.add(f.coeff(i), g.coeff(i));
  return Poly(std::move(out));
}

Poly neg_poly(const FieldCtx& ctx, const Poly& f) {
  std::vector<Elem> out(f.coeffs());
  for (auto& e : out) e = ctx.neg(e);
  return Poly(std::move(out));
}

Poly sub_poly(const FieldCtx& ctx, const Poly& f, const Poly& g) { return add_poly(ctx, f, neg_poly(ctx, g)); }

Poly mul_poly(const FieldCtx& ctx, const Poly& f, const Poly& g) {
  if (f.is_zero() || g.is_zero()) return Poly();
  const auto& a = f.coeffs();
  const auto& b = g.coeffs();
  std::vector<Elem> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = ctx.add(out[i + j], ctx.mul(a[i], b[j]));
  }
  return Poly(std::move(out));
}

Poly scalar_mul(const FieldCtx& ctx, Elem s, const Poly& f) {
  std::vector<Elem> out(f.coeffs());
  for (auto& e : out) e = ctx.mul(s, e);
  return Poly(std::move(out));
}

Poly shift_arg(const FieldCtx& ctx, const Poly& f, Elem b) {
  // Taylor coefficients at b via repeated synthetic division by (x - b).
  if (f.is_zero() || b.is_zero()) return f;
  const Elem root = b;
  std::vector<Elem> work(f.coeffs());
  std::vector<Elem> out(work.size());
  for (std::size_t k = 0; k < out.size(); ++k) {
    std::size_t n = work.size() - k;
    // divide work[0..n) by (x - root); remainder lands in work[0]
    for (std::size_t i = n - 1; i-- > 0;) work[i] = ctx.add(work[i], ctx.mul(root, work[i + 1]));
    out[k] = work[0];
    std::copy(work.begin() + 1, work.begin() + static_cast<std::ptrdiff_t>(n), work.begin());
  }
  return Poly(std::move(out));
}

Poly scale_arg(const FieldCtx& ctx, const Poly& f, Elem r) {
  if (r.is_zero()) throw ZeroScaleError("scale_arg by zero");
  std::vector<Elem> out(f.coeffs());
  Elem power = FieldCtx::one();
  for (auto& e : out) {
    e = ctx.mul(e, power);
    power = ctx.mul(power, r);
  }
  return Poly(std::move(out));
}

std::pair<Poly, Poly> divmod_poly(const FieldCtx& ctx, const Poly& f, const Poly& g) {
  if (g.is_zero()) throw DivisionByZeroError("polynomial division by zero");
  std::vector<Elem> r(f.coeffs());
  const std::size_t dg = g.coeffs().size() - 1;
  if (r.size() <= dg) return {Poly(), f};
  std::vector<Elem> qt(r.size() - dg);
  const Elem inv_lead = ctx.inv(g.lead());
  for (std::size_t k = r.size(); k-- > dg;) {
    Elem c = ctx.mul(r[k], inv_lead);
    qt[k - dg] = c;
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j <= dg; ++j) r[k - dg + j] = ctx.sub(r[k - dg + j], ctx.mul(c, g.coeffs()[j]));
  }
  r.resize(dg);
  return {Poly(std::move(qt)), Poly(std::move(r))};
}

Poly make_monic(const FieldCtx& ctx, const Poly& f) {
  if (f.is_zero()) return f;
  return scalar_mul(ctx, ctx.inv(f.lead()), f);
}

Poly gcd_poly(const FieldCtx& ctx, const Poly& f, const Poly& g) {
  if (f.is_zero() && g.is_zero()) throw BothZeroError("gcd of two zero polynomials");
  Poly a = f;
  Poly b = g;
  while (!b.is_zero()) {
    Poly r = divmod_poly(ctx, a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(ctx, a);
}

std::string to_string(const Poly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(f.coeffs()[i].label);
  }
  return out;
}

Poly parse_poly(const FieldCtx& ctx, const std::string& text) {
  auto labels = parse_coeff_list(text);
  for (unsigned l : labels)
    if (l >= ctx.q()) throw ParseError("label " + std::to_string(l) + " out of range for q = " + std::to_string(ctx.q()));
  return Poly::from_labels(labels);
}

}  // namespace prf
