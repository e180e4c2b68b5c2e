#include <random>

#include <gtest/gtest.h>

#include "prf/poly.hpp"

using namespace prf;

namespace {

Elem E(unsigned k) { return Elem{static_cast<std::uint16_t>(k)}; }

Poly random_poly(std::mt19937& rng, unsigned q, unsigned deg) {
  std::uniform_int_distribution<unsigned> any(0, q - 1), nz(1, q - 1);
  std::vector<Elem> c(deg + 1);
  for (unsigned i = 0; i < deg; ++i) c[i] = E(any(rng));
  c[deg] = E(nz(rng));
  return Poly(c);
}

}  // namespace

TEST(Poly, TrimAndDegree) {
  EXPECT_FALSE(Poly({E(0), E(0)}).degree());
  EXPECT_EQ(Poly({E(1), E(3), E(0)}).degree(), 1u);
  EXPECT_EQ(to_string(Poly()), "0");
}

TEST(Poly, TextRoundTrip) {
  const FieldCtx F(default_spec(7, 1));
  const Poly f = parse_poly(F, "0,1,0,1");
  EXPECT_EQ(f.degree(), 3u);
  EXPECT_EQ(parse_poly(F, to_string(f)), f);
  EXPECT_THROW(parse_poly(F, "0,7"), ParseError);
  EXPECT_THROW(parse_poly(F, "a"), ParseError);
}

TEST(Poly, DivisionIdentity) {
  std::mt19937 rng(7);
  for (auto [p, m] : {std::pair{7u, 1u}, {2u, 3u}, {3u, 2u}, {13u, 1u}}) {
    const FieldCtx F(default_spec(p, m));
    for (int trial = 0; trial < 200; ++trial) {
      const Poly f = random_poly(rng, F.q(), trial % 7);
      const Poly g = random_poly(rng, F.q(), trial % 4);
      auto [quo, rem] = divmod_poly(F, f, g);
      EXPECT_EQ(add_poly(F, mul_poly(F, quo, g), rem), f);
      if (!rem.is_zero()) EXPECT_LT(*rem.degree(), *g.degree());
    }
  }
}

TEST(Poly, GcdDividesBoth) {
  std::mt19937 rng(11);
  const FieldCtx F(default_spec(5, 1));
  for (int trial = 0; trial < 200; ++trial) {
    const Poly h = random_poly(rng, F.q(), trial % 3);
    const Poly f = mul_poly(F, h, random_poly(rng, F.q(), 2));
    const Poly g = mul_poly(F, h, random_poly(rng, F.q(), 3));
    const Poly d = gcd_poly(F, f, g);
    EXPECT_EQ(d.lead(), FieldCtx::one());
    EXPECT_TRUE(divmod_poly(F, f, d).second.is_zero());
    EXPECT_TRUE(divmod_poly(F, g, d).second.is_zero());
    EXPECT_GE(*d.degree(), *h.degree());
  }
  EXPECT_THROW(gcd_poly(F, Poly(), Poly()), BothZeroError);
  EXPECT_EQ(gcd_poly(F, Poly(), parse_poly(F, "2,3")), make_monic(F, parse_poly(F, "2,3")));
}

TEST(Poly, ShiftAndScaleAgreeWithEvaluation) {
  std::mt19937 rng(3);
  for (auto [p, m] : {std::pair{7u, 1u}, {2u, 3u}, {3u, 2u}}) {
    const FieldCtx F(default_spec(p, m));
    for (int trial = 0; trial < 30; ++trial) {
      const Poly f = random_poly(rng, F.q(), 1 + trial % 5);
      for (unsigned b = 0; b < F.q(); ++b) {
        const Poly s = shift_arg(F, f, E(b));
        const Poly r = b ? scale_arg(F, f, E(b)) : Poly();
        EXPECT_EQ(s.degree(), f.degree());
        for (unsigned x = 0; x < F.q(); ++x) {
          EXPECT_EQ(eval(F, s, E(x)), eval(F, f, F.add(E(x), E(b))));
          if (b) EXPECT_EQ(eval(F, r, E(x)), eval(F, f, F.mul(E(x), E(b))));
        }
      }
    }
    EXPECT_THROW(scale_arg(F, parse_poly(F, "1,1"), FieldCtx::zero()), ZeroScaleError);
  }
}

TEST(Poly, ArithmeticLaws) {
  std::mt19937 rng(5);
  const FieldCtx F(default_spec(2, 4));
  for (int trial = 0; trial < 100; ++trial) {
    const Poly f = random_poly(rng, F.q(), trial % 5), g = random_poly(rng, F.q(), trial % 3);
    const Elem x = E(trial % F.q());
    EXPECT_EQ(eval(F, mul_poly(F, f, g), x), F.mul(eval(F, f, x), eval(F, g, x)));
    EXPECT_EQ(eval(F, sub_poly(F, f, g), x), F.sub(eval(F, f, x), eval(F, g, x)));
    EXPECT_EQ(add_poly(F, f, neg_poly(F, f)), Poly());
    EXPECT_EQ(make_monic(F, scalar_mul(F, E(5), f)), make_monic(F, f));
  }
}
