#include <random>
#include <set>

#include <gtest/gtest.h>

#include "prf/census.hpp"
#include "prf/maps.hpp"

using namespace prf;

namespace {

Elem E(unsigned k) { return Elem{static_cast<std::uint16_t>(k)}; }

P1Point times(const FieldCtx& F, Elem s, P1Point y) {
  return y == F.q() ? y : F.mul(s, E(y)).label;
}

std::vector<RatFn> sample_functions(const FieldCtx& F, unsigned v, unsigned u, std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<unsigned> any(0, F.q() - 1), nz(1, F.q() - 1);
  std::vector<RatFn> out;
  while (out.size() < n) {
    std::vector<Elem> a(v + 1), b(u + 1);
    for (unsigned i = 0; i < v; ++i) a[i] = E(any(rng));
    a[v] = E(nz(rng));
    for (unsigned j = 0; j < u; ++j) b[j] = E(any(rng));
    b[u] = FieldCtx::one();
    RatFn w = make_ratfn(F, Poly(a), Poly(b));
    if (w.v() == v && w.u() == u) out.push_back(w);
  }
  return out;
}

struct Case {
  unsigned p, m;
};

const Case kFields[] = {{2, 1}, {3, 1}, {5, 1}, {7, 1}, {2, 3}, {3, 2}, {2, 4}, {5, 2},
                        {3, 3}, {2, 5}, {31, 1}, {2, 6}, {7, 2}, {61, 1}};

}  // namespace

// F(W)(x) = t^{v-u} W(x/t) at every point of the projective line.
TEST(Maps, FLawPointwise) {
  for (auto [p, m] : kFields) {
    const FieldCtx F(default_spec(p, m));
    const Elem t = F.generator();
    const Elem tinv = F.inv(t);
    for (auto [v, u] : {std::pair{3u, 2u}, {2u, 3u}, {4u, 4u}, {5u, 0u}, {1u, 1u}}) {
      for (const auto& w : sample_functions(F, v, u, 4, p * 100 + m)) {
        const RatFn fw = f_map(F, w);
        EXPECT_EQ(fw.v(), v);
        EXPECT_EQ(fw.u(), u);
        const Elem scale = F.pow(t, static_cast<long long>(v) - static_cast<long long>(u));
        for (P1Point x = 0; x <= F.q(); ++x) {
          const P1Point xs = x == F.q() ? x : F.mul(E(x), tinv).label;
          ASSERT_EQ(eval_p1(F, fw, x), times(F, scale, eval_p1(F, w, xs)))
              << "q=" << F.q() << " w=" << to_string(w) << " x=" << x;
        }
        EXPECT_EQ(is_prf(F, fw), is_prf(F, w));
      }
    }
  }
}

// G(W)(x^p) = W(x)^p at every point.
TEST(Maps, GLawPointwise) {
  for (auto [p, m] : kFields) {
    const FieldCtx F(default_spec(p, m));
    for (auto [v, u] : {std::pair{3u, 2u}, {2u, 3u}, {4u, 4u}, {5u, 0u}}) {
      for (const auto& w : sample_functions(F, v, u, 4, p * 7 + m)) {
        const RatFn gw = g_map(F, w);
        for (P1Point x = 0; x <= F.q(); ++x) {
          const P1Point xp = x == F.q() ? x : F.frobenius(E(x)).label;
          const P1Point y = eval_p1(F, w, x);
          const P1Point yp = y == F.q() ? y : F.frobenius(E(y)).label;
          ASSERT_EQ(eval_p1(F, gw, xp), yp);
        }
        EXPECT_EQ(is_prf(F, gw), is_prf(F, w));
      }
    }
  }
}

TEST(Maps, GOrbitOverEight) {
  const FieldCtx F(default_spec(2, 3));
  const RatFn w = parse_ratfn(F, "0,2,1,1|1,4,1");
  ASSERT_TRUE(is_prf(F, w));
  const Orbit o = orbit(F, w, MapKind::G);
  ASSERT_EQ(o.size(), 3u);
  EXPECT_EQ(o.members[0], w);
  EXPECT_EQ(o.members[1], parse_ratfn(F, "0,3,1,1|1,7,1"));
  EXPECT_EQ(o.members[2], parse_ratfn(F, "0,5,1,1|1,6,1"));
  EXPECT_EQ(g_map(F, o.members[2]), w);
}

TEST(Maps, FOrbitCyclesLeadingCoefficient) {
  const FieldCtx F(default_spec(7, 1));
  // a_{v-1} = 1 cycles through every nonzero value
  const RatFn w = parse_ratfn(F, "0,3,1,1|2,0,1");
  const Orbit o = orbit(F, w, MapKind::F);
  std::set<unsigned> second;
  for (const auto& m : o.members) second.insert(m.num.coeff(2).label);
  EXPECT_EQ(second.size(), 6u);
  EXPECT_EQ(apply_map(F, w, MapKind::F), f_map(F, w));
  EXPECT_EQ(apply_map(F, w, MapKind::G), g_map(F, w));
  // prime fields: G is the identity
  EXPECT_EQ(orbit(F, w, MapKind::G).size(), 1u);
}

TEST(Maps, PolynomialForms) {
  const FieldCtx F(default_spec(2, 3));
  const Poly f = parse_poly(F, "3,2,1");
  // coefficient of x^{v-k} times t^k
  EXPECT_EQ(f_map_poly(F, f), parse_poly(F, "5,3,1"));
  EXPECT_EQ(g_map_poly(F, f), parse_poly(F, "5,3,1"));
}

// Stratifying a_{v-1} over {0, 1} with weights {1, q-1} changes nothing.
TEST(Maps, FStratifiedCountsMatchPlain) {
  for (auto [p, m] : {Case{5, 1}, Case{7, 1}, Case{2, 3}, Case{3, 2}}) {
    const FieldCtx F(default_spec(p, m));
    CensusOptions on, off;
    off.f_stratify = false;
    for (auto [v, u] : {std::pair{3u, 2u}, {4u, 3u}, {3u, 0u}, {3u, 3u}}) {
      const auto a = count(F, v, u, Strategy::Auto, on);
      const auto b = count(F, v, u, Strategy::Auto, off);
      EXPECT_EQ(a.count, b.count) << "q=" << F.q() << " (" << v << "," << u << ")";
    }
  }
}
