#include "prf/normalize.hpp"

#include <algorithm>
#include <bit>

namespace prf {

std::string kind_name(NormKind kind) {
  switch (kind) {
    case NormKind::C: return "C";
    case NormKind::M: return "M";
    case NormKind::B: return "B";
    case NormKind::Basic: return "basic";
  }
  return "?";
}

std::string reason_name(NotNormalizableReason reason) {
  switch (reason) {
    case NotNormalizableReason::NotProper: return "v <= u";
    case NotNormalizableReason::ConstantDenominator: return "u = 0";
    case NotNormalizableReason::ExceptionalDegree: return "u = 2^i - 2";
    case NotNormalizableReason::SmallExtension: return "m <= 2";
  }
  return "?";
}

unsigned b_kind_index(unsigned u) {
  if (u == 0) return 0;
  return std::bit_floor(u) - 1;
}

std::variant<NormKind, NotNormalizable> classify(const FieldCtx& ctx, unsigned v, unsigned u) {
  if (v <= u) return NotNormalizable{NotNormalizableReason::NotProper};
  if (u == 0) return NotNormalizable{NotNormalizableReason::ConstantDenominator};
  const unsigned p = ctx.p();
  if (u % p != 0) return NormKind::C;
  if (p > 2) return NormKind::M;
  // p = 2, u even: 2^i <= u <= 2^{i+1} - 3, otherwise u = 2^{i+1} - 2.
  const unsigned top = std::bit_floor(u) * 2;
  if (u + 2 == top) return NotNormalizable{NotNormalizableReason::ExceptionalDegree};
  if (ctx.m() <= 2) return NotNormalizable{NotNormalizableReason::SmallExtension};
  return NormKind::B;
}

bool kind_condition(const Poly& den, unsigned u, NormKind kind) {
  switch (kind) {
    case NormKind::C:
      return u >= 1 && den.coeff(u - 1).is_zero();
    case NormKind::M:
      return u >= 2 && (den.coeff(u - 1).is_zero() || den.coeff(u - 2).is_zero());
    case NormKind::B: {
      if (u < 4) return false;
      const unsigned r = b_kind_index(u);
      return den.coeff(r).is_zero() || den.coeff(r - 1).is_zero();
    }
    case NormKind::Basic:
      return true;
  }
  return false;
}

bool is_normalized(const FieldCtx&, const RatFn& w, NormKind kind) {
  if (w.num.is_zero() || w.den.is_zero()) return false;
  if (w.num.lead() != FieldCtx::one() || w.den.lead() != FieldCtx::one()) return false;
  if (!w.num.coeff(0).is_zero()) return false;
  return kind_condition(w.den, w.u(), kind);
}

RatFn apply_witness(const FieldCtx& ctx, const RatFn& w, const NormWitness& nw) {
  if (nw.y.is_zero() || nw.z.is_zero()) throw ZeroScalarError("witness scalars must be nonzero");
  const Poly vs = shift_arg(ctx, w.num, nw.b);
  const Poly us = shift_arg(ctx, w.den, nw.b);
  Poly num = add_poly(ctx, scalar_mul(ctx, nw.y, vs), scalar_mul(ctx, ctx.mul(nw.c, nw.z), us));
  Poly den = scalar_mul(ctx, nw.z, us);
  if (den.is_zero()) throw ZeroDenominatorError("rational function with zero denominator");
  // gcd is preserved by shifts and affine maps; only rescale.
  const Elem s = ctx.inv(den.lead());
  return RatFn{scalar_mul(ctx, s, num), scalar_mul(ctx, s, den)};
}

NormWitness invert_witness(const FieldCtx& ctx, const NormWitness& nw) {
  if (nw.y.is_zero() || nw.z.is_zero()) throw ZeroScalarError("witness scalars must be nonzero");
  return NormWitness{nw.z, nw.y, ctx.neg(nw.b), ctx.neg(ctx.div(ctx.mul(nw.c, nw.z), nw.y))};
}

std::optional<std::pair<RatFn, NormWitness>> normalize_at(const FieldCtx& ctx, const RatFn& w, Elem b) {
  const Poly us = shift_arg(ctx, w.den, b);
  const Elem ub = us.coeff(0);
  if (ub.is_zero()) return std::nullopt;
  const Poly vs = shift_arg(ctx, w.num, b);
  const Elem ratio = ctx.div(vs.coeff(0), ub);
  Poly n = sub_poly(ctx, vs, scalar_mul(ctx, ratio, us));
  if (n.is_zero()) return std::nullopt;
  const Elem s = ctx.inv(us.lead());
  const Elem y = ctx.inv(ctx.mul(n.lead(), s));
  const Elem c = ctx.neg(ctx.mul(y, ratio));
  RatFn out{scalar_mul(ctx, ctx.mul(y, s), n), scalar_mul(ctx, s, us)};
  // forward witness (y, 1, b, c) takes w to out
  NormWitness back = invert_witness(ctx, NormWitness{y, FieldCtx::one(), b, c});
  return std::make_pair(std::move(out), back);
}

namespace {

std::pair<RatFn, NormWitness> normalize_or_throw(const FieldCtx& ctx, const RatFn& w, Elem b, NormKind kind) {
  auto r = normalize_at(ctx, w, b);
  if (!r || !kind_condition(r->first.den, r->first.u(), kind))
    throw NoRepresentativeError("no " + kind_name(kind) + "-normalized form for " + to_string(w));
  return *std::move(r);
}

}  // namespace

std::pair<RatFn, NormWitness> c_normalize(const FieldCtx& ctx, const RatFn& w) {
  auto k = classify(ctx, w.v(), w.u());
  if (!std::holds_alternative<NormKind>(k) || std::get<NormKind>(k) != NormKind::C)
    throw KindMismatchError("shape (" + std::to_string(w.v()) + "," + std::to_string(w.u()) + ") is not C-normalizable");
  const unsigned u = w.u();
  // coefficient of x^{u-1} in U(x+b) is b_{u-1} + u b
  const Elem b = ctx.neg(ctx.div(w.den.coeff(u - 1), ctx.from_int(u)));
  return normalize_or_throw(ctx, w, b, NormKind::C);
}

std::pair<RatFn, NormWitness> m_normalize(const FieldCtx& ctx, const RatFn& w) {
  auto k = classify(ctx, w.v(), w.u());
  if (!std::holds_alternative<NormKind>(k) || std::get<NormKind>(k) != NormKind::M)
    throw KindMismatchError("shape (" + std::to_string(w.v()) + "," + std::to_string(w.u()) + ") is not M-normalizable");
  const unsigned u = w.u();
  const Elem top = w.den.coeff(u - 1);
  // With p | u the x^{u-2} coefficient of U(x+b) is b_{u-2} - b_{u-1} b.
  const Elem b = top.is_zero() ? Elem{} : ctx.div(w.den.coeff(u - 2), top);
  return normalize_or_throw(ctx, w, b, NormKind::M);
}

std::variant<std::pair<RatFn, NormWitness>, ExceptionalDegree> b_normalize(const FieldCtx& ctx, const RatFn& w) {
  auto k = classify(ctx, w.v(), w.u());
  if (auto* nn = std::get_if<NotNormalizable>(&k); nn && nn->reason == NotNormalizableReason::ExceptionalDegree &&
                                                  ctx.p() == 2)
    return ExceptionalDegree{};
  if (!std::holds_alternative<NormKind>(k) || std::get<NormKind>(k) != NormKind::B)
    throw KindMismatchError("shape (" + std::to_string(w.v()) + "," + std::to_string(w.u()) + ") is not B-normalizable");
  const unsigned r = b_kind_index(w.u());
  // The gap leaves b_r unchanged by shifts; b_{r-1} becomes b_{r-1} + b_r b.
  const Elem br = w.den.coeff(r);
  const Elem b = br.is_zero() ? Elem{} : ctx.div(w.den.coeff(r - 1), br);
  return normalize_or_throw(ctx, w, b, NormKind::B);
}

void for_each_class_member(const FieldCtx& ctx, const RatFn& w, const std::function<void(const RatFn&)>& fn) {
  const unsigned q = ctx.q();
  for (unsigned b = 0; b < q; ++b) {
    const Elem eb{static_cast<std::uint16_t>(b)};
    const Poly vs = shift_arg(ctx, w.num, eb);
    const Poly us = shift_arg(ctx, w.den, eb);
    const Elem s = ctx.inv(us.lead());
    const Poly den = scalar_mul(ctx, s, us);
    for (unsigned a = 1; a < q; ++a) {
      const Poly av = scalar_mul(ctx, ctx.mul(Elem{static_cast<std::uint16_t>(a)}, s), vs);
      for (unsigned c = 0; c < q; ++c) {
        RatFn m{add_poly(ctx, av, scalar_mul(ctx, Elem{static_cast<std::uint16_t>(c)}, den)), den};
        fn(m);
      }
    }
  }
}

std::vector<RatFn> class_members(const FieldCtx& ctx, const RatFn& w) {
  if (!is_normalized(ctx, w, NormKind::Basic))
    throw KindMismatchError("class_members expects a normalized representative");
  std::vector<RatFn> out;
  out.reserve(static_cast<std::size_t>(ctx.q()) * ctx.q() * (ctx.q() - 1));
  for_each_class_member(ctx, w, [&](const RatFn& m) { out.push_back(m); });
  return out;
}

namespace {

std::optional<RatFn> any_normal_form(const FieldCtx& ctx, const RatFn& w) {
  for (unsigned b = 0; b < ctx.q(); ++b)
    if (auto r = normalize_at(ctx, w, Elem{static_cast<std::uint16_t>(b)})) return r->first;
  return std::nullopt;
}

}  // namespace

std::vector<RatFn> normalized_forms(const FieldCtx& ctx, const RatFn& w, NormKind kind) {
  std::vector<RatFn> out;
  auto base = any_normal_form(ctx, w);
  if (!base) return out;
  for (unsigned b = 0; b < ctx.q(); ++b) {
    auto r = normalize_at(ctx, *base, Elem{static_cast<std::uint16_t>(b)});
    if (r && kind_condition(r->first.den, r->first.u(), kind)) out.push_back(std::move(r->first));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

unsigned stabilizer_size(const FieldCtx& ctx, const RatFn& w) {
  auto base = any_normal_form(ctx, w);
  if (!base) throw NoRepresentativeError("no normal form for " + to_string(w));
  unsigned n = 0;
  for (unsigned b = 0; b < ctx.q(); ++b) {
    auto r = normalize_at(ctx, *base, Elem{static_cast<std::uint16_t>(b)});
    if (r && r->first == *base) ++n;
  }
  return n;
}

}  // namespace prf
