#include "prf/bounds.hpp"

#include <map>

#include <json.hpp>

namespace prf {

using json = nlohmann::json;

std::string family_name(Family f) { return f == Family::S ? "S" : "T"; }

Family parse_family(const std::string& text) {
  if (text == "S" || text == "s") return Family::S;
  if (text == "T" || text == "t") return Family::T;
  throw ParseError("family must be S or T, got '" + text + "'");
}

std::string n11_name(N11Convention c) { return c == N11Convention::Pgl2 ? "pgl2" : "exact"; }

N11Convention parse_n11(const std::string& text) {
  if (text == "pgl2") return N11Convention::Pgl2;
  if (text == "exact") return N11Convention::Exact;
  throw ParseError("n11 convention must be pgl2 or exact, got '" + text + "'");
}

std::string multiplier_name(Multiplier m) {
  switch (m) {
    case Multiplier::One: return "1";
    case Multiplier::Two: return "2";
    case Multiplier::OverQMinus1: return "1/(q-1)";
  }
  return "?";
}

namespace {

std::vector<BoundTerm> merge(const std::map<std::pair<unsigned, unsigned>, unsigned>& shapes,
                             std::optional<std::pair<unsigned, unsigned>> over_q) {
  std::map<std::pair<unsigned, unsigned>, unsigned, std::greater<>> merged;
  for (const auto& [vu, n] : shapes) {
    auto key = vu.first >= vu.second ? vu : std::make_pair(vu.second, vu.first);
    merged[key] += n;
  }
  std::vector<BoundTerm> out;
  if (over_q) {
    BoundTerm t;
    t.v = over_q->first;
    t.u = over_q->second;
    t.multiplier = Multiplier::OverQMinus1;
    out.push_back(t);
  }
  for (const auto& [vu, n] : merged) {
    BoundTerm t;
    t.v = vu.first;
    t.u = vu.second;
    t.multiplier = n == 2 ? Multiplier::Two : Multiplier::One;
    out.push_back(t);
  }
  return out;
}

}  // namespace

std::vector<BoundTerm> t_terms(unsigned d) {
  if (d < 2) throw Error("T_d needs d >= 2");
  const unsigned h = (d + 1) / 2;
  std::map<std::pair<unsigned, unsigned>, unsigned> shapes;
  for (unsigned v = 0; v <= h; ++v)
    for (unsigned u = 0; u <= h; ++u)
      if (v || u) shapes[{v, u}] = 1;
  return merge(shapes, std::nullopt);
}

std::vector<BoundTerm> s_terms(unsigned d) {
  if (d < 5 || d % 2 == 0) throw Error("S_d needs odd d >= 5");
  const unsigned t = (d - 3) / 2;
  std::map<std::pair<unsigned, unsigned>, unsigned> shapes;
  for (unsigned v = 0; v <= (d + 1) / 2; ++v)
    for (unsigned u = 0; u <= (d - 1) / 2 && u < v; ++u) shapes[{v, u}] = 1;
  for (unsigned u = 0; u <= (d - 3) / 2; ++u)
    for (unsigned v = 0; v <= (d - 1) / 2 && v < u; ++v) shapes[{v, u}] = 1;
  for (unsigned v = 1; v <= (d - 5) / 2; ++v) shapes[{v, v}] = 1;
  return merge(shapes, std::make_pair(t, t));
}

std::optional<ProvidedCount> provide_count(const FieldCtx& ctx, unsigned v, unsigned u, const ProviderOptions& opts) {
  if (v < u) std::swap(v, u);
  const unsigned q = ctx.q();
  if (v == 0) return ProvidedCount{0, "constant functions", false};

  if (v == 1 && u == 1 && opts.n11 == N11Convention::Pgl2) {
    ProviderOptions exact = opts;
    exact.n11 = N11Convention::Exact;
    auto n11 = provide_count(ctx, 1, 1, exact);
    auto n10 = provide_count(ctx, 1, 0, exact);
    if (!n11 || !n10) return std::nullopt;
    return ProvidedCount{n11->count + 2 * n10->count,
                         "pgl2: N11 + 2 N10 [" + n11->source + "; " + n10->source + "]", false};
  }

  if (opts.cache) {
    if (auto rec = opts.cache->get(q, v, u)) return ProvidedCount{rec->count, "cache:" + strategy_name(rec->strategy), false};
    if (auto rec = opts.cache->get(q, u, v)) return ProvidedCount{rec->count, "cache:" + strategy_name(rec->strategy), false};
  }

  // The (3,3) branch for q divisible by 3 disagrees with exhaustive counts and is not trusted.
  const bool untrusted = v == 3 && u == 3 && q % 3 == 0;
  if (auto f = formula(q, v, u, false); f && !f->lower_bound && !untrusted)
    return ProvidedCount{f->value, "formula " + f->expression, false};

  if (opts.live) {
    CensusOptions census = opts.census;
    census.checkpoint.clear();
    if (candidate_count(ctx, v, u, Strategy::Auto, census) <= opts.live_budget) {
      CountRecord rec = count(ctx, v, u, Strategy::Auto, census);
      if (opts.record_to) opts.record_to->put(rec);
      return ProvidedCount{rec.count, "census:" + rec.provenance, false};
    }
  }

  if (opts.allow_conjectures) {
    const bool ok43 = v == 4 && u == 3 && q >= 11 && q <= 307;
    const bool ok44 = v == 4 && u == 4 && q >= 11 && q <= 47;
    if (ok43 || ok44) {
      auto f = formula(q, v, u, true);
      return ProvidedCount{f->value, "conjecture " + f->expression, true};
    }
  }
  return std::nullopt;
}

namespace {

BoundReport evaluate(const FieldCtx& ctx, Family family, unsigned d, std::vector<BoundTerm> terms,
                     const ProviderOptions& opts) {
  BoundReport rep;
  rep.q = ctx.q();
  rep.d = d;
  rep.family = family;
  rep.n11 = opts.n11;
  std::string missing;
  for (auto& t : terms) {
    auto got = provide_count(ctx, t.v, t.u, opts);
    if (!got) {
      if (!missing.empty()) missing += ",";
      missing += "(" + std::to_string(t.v) + "," + std::to_string(t.u) + ")";
      continue;
    }
    t.count = got->count;
    t.source = got->source;
    rep.conjectures_used = rep.conjectures_used || got->conjectural;
    switch (t.multiplier) {
      case Multiplier::One:
        t.contribution = t.count;
        break;
      case Multiplier::Two:
        t.contribution = 2 * t.count;
        break;
      case Multiplier::OverQMinus1:
        if (t.count % (ctx.q() - 1) != 0)
          throw NonDivisibleError("N_{" + std::to_string(t.v) + "," + std::to_string(t.u) + "} = " + to_decimal(t.count) +
                                  " is not divisible by q-1 = " + std::to_string(ctx.q() - 1));
        t.contribution = t.count / (ctx.q() - 1);
        break;
    }
    rep.value += t.contribution;
  }
  if (!missing.empty())
    throw MissingCountError(family_name(family) + "_" + std::to_string(d) + "(" + std::to_string(ctx.q()) +
                                ") needs counts nobody can supply: " + missing,
                            missing);
  rep.terms = std::move(terms);
  return rep;
}

}  // namespace

BoundReport t_bound(const FieldCtx& ctx, unsigned d, const ProviderOptions& opts) {
  return evaluate(ctx, Family::T, d, t_terms(d), opts);
}

BoundReport s_bound(const FieldCtx& ctx, unsigned d, const ProviderOptions& opts) {
  return evaluate(ctx, Family::S, d, s_terms(d), opts);
}

BoundReport bound(const FieldCtx& ctx, Family family, unsigned d, const ProviderOptions& opts) {
  return family == Family::S ? s_bound(ctx, d, opts) : t_bound(ctx, d, opts);
}

std::string report_to_json(const BoundReport& rep) {
  json terms = json::array();
  for (const auto& t : rep.terms)
    terms.push_back(json{{"v", t.v},
                         {"u", t.u},
                         {"multiplier", multiplier_name(t.multiplier)},
                         {"count", to_decimal(t.count)},
                         {"contribution", to_decimal(t.contribution)},
                         {"source", t.source}});
  json j{{"q", rep.q},
         {"d", rep.d},
         {"family", family_name(rep.family)},
         {"value", to_decimal(rep.value)},
         {"n11", n11_name(rep.n11)},
         {"conjectures_used", rep.conjectures_used},
         {"terms", terms}};
  return j.dump(2);
}

}  // namespace prf
