#pragma once

#include <vector>

#include "prf/ratfunc.hpp"

namespace prf {

enum class MapKind { F, G };

struct Orbit {
  std::vector<RatFn> members;
  std::size_t size() const noexcept { return members.size(); }
};

// Coefficient of x^{v-k} multiplied by t^k, i.e. t^v V(x/t).
Poly f_map_poly(const FieldCtx& ctx, const Poly& f);
// F(V)/F(U) = t^{v-u} W(x/t).
RatFn f_map(const FieldCtx& ctx, const RatFn& w);

// Coefficientwise p-th power.
Poly g_map_poly(const FieldCtx& ctx, const Poly& f);
RatFn g_map(const FieldCtx& ctx, const RatFn& w);

RatFn apply_map(const FieldCtx& ctx, const RatFn& w, MapKind map);

// w, map(w), map^2(w), ... up to the first repeat of w.
Orbit orbit(const FieldCtx& ctx, const RatFn& w, MapKind map);

}  // namespace prf
