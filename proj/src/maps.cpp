#include "prf/maps.hpp"

namespace prf {

Poly f_map_poly(const FieldCtx& ctx, const Poly& f) {
  if (f.is_zero()) return f;
  std::vector<Elem> c(f.coeffs());
  const std::size_t v = c.size() - 1;
  const Elem t = ctx.generator();
  Elem scale = FieldCtx::one();
  for (std::size_t k = 0; k <= v; ++k) {
    c[v - k] = ctx.mul(c[v - k], scale);
    scale = ctx.mul(scale, t);
  }
  return Poly(std::move(c));
}

RatFn f_map(const FieldCtx& ctx, const RatFn& w) {
  Poly num = f_map_poly(ctx, w.num);
  Poly den = f_map_poly(ctx, w.den);
  const Elem s = ctx.inv(den.lead());
  return RatFn{scalar_mul(ctx, s, num), scalar_mul(ctx, s, den)};
}

Poly g_map_poly(const FieldCtx& ctx, const Poly& f) {
  std::vector<Elem> c(f.coeffs());
  for (auto& e : c) e = ctx.frobenius(e);
  return Poly(std::move(c));
}

RatFn g_map(const FieldCtx& ctx, const RatFn& w) { return RatFn{g_map_poly(ctx, w.num), g_map_poly(ctx, w.den)}; }

RatFn apply_map(const FieldCtx& ctx, const RatFn& w, MapKind map) {
  return map == MapKind::F ? f_map(ctx, w) : g_map(ctx, w);
}

Orbit orbit(const FieldCtx& ctx, const RatFn& w, MapKind map) {
  Orbit o;
  o.members.push_back(w);
  RatFn cur = apply_map(ctx, w, map);
  while (!(cur == w)) {
    o.members.push_back(cur);
    cur = apply_map(ctx, cur, map);
  }
  return o;
}

}  // namespace prf
