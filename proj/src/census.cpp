#include "prf/census.hpp"

#include <chrono>

#include "engine.hpp"

namespace prf {

std::string strategy_name(Strategy s) {
  switch (s) {
    case Strategy::Auto: return "auto";
    case Strategy::Brute: return "brute";
    case Strategy::Normalized: return "normalized";
    case Strategy::MonicEqual: return "monic-equal";
    case Strategy::Reciprocal: return "reciprocal";
    case Strategy::Formula: return "formula";
  }
  return "?";
}

Strategy parse_strategy(const std::string& name) {
  for (Strategy s : {Strategy::Auto, Strategy::Brute, Strategy::Normalized, Strategy::MonicEqual,
                     Strategy::Reciprocal, Strategy::Formula})
    if (strategy_name(s) == name) return s;
  throw ParseError("unknown strategy '" + name + "'");
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void check_budget(Wide candidates, Wide budget, const std::string& what) {
  if (candidates > budget)
    throw BudgetExceededError(what + " needs " + to_decimal(candidates) + " candidates, budget is " +
                              to_decimal(budget));
}

CountRecord run(const FieldCtx& ctx, const detail::Plan& plan, const CensusOptions& opts, Strategy strategy,
                Wide default_budget) {
  const auto start = Clock::now();
  check_budget(detail::plan_candidates(plan), opts.budget ? opts.budget : default_budget,
               strategy_name(strategy) + " (" + std::to_string(plan.v) + "," + std::to_string(plan.u) + ")");
  const auto res = detail::run_plan(ctx, plan, opts, strategy_name(strategy));
  CountRecord rec;
  rec.q = ctx.q();
  rec.v = plan.v;
  rec.u = plan.u;
  rec.count = res.count;
  rec.strategy = strategy;
  rec.provenance = plan.describe;
  rec.elapsed_s = seconds_since(start);
  rec.shard_info = "shards=" + std::to_string(res.shards) + " threads=" + std::to_string(std::max(1u, opts.threads)) +
                   (res.resumed ? " resumed=" + std::to_string(res.resumed) : "");
  return rec;
}

NormKind default_kind(const FieldCtx& ctx, unsigned v, unsigned u) {
  auto k = classify(ctx, v, u);
  if (auto* kind = std::get_if<NormKind>(&k)) return *kind;
  return NormKind::Basic;
}

void require_proper(unsigned v, unsigned u) {
  if (v <= u)
    throw KindMismatchError("normalized counting needs v > u, got (" + std::to_string(v) + "," + std::to_string(u) +
                            ")");
}

}  // namespace

CountRecord count_brute(const FieldCtx& ctx, unsigned v, unsigned u, const CensusOptions& opts) {
  return run(ctx, detail::brute_plan(ctx, v, u, opts), opts, Strategy::Brute, kBruteBudget);
}

CountRecord count_normalized(const FieldCtx& ctx, unsigned v, unsigned u, const CensusOptions& opts) {
  require_proper(v, u);
  return count_normalized(ctx, v, u, default_kind(ctx, v, u), opts);
}

CountRecord count_normalized(const FieldCtx& ctx, unsigned v, unsigned u, NormKind kind, const CensusOptions& opts) {
  require_proper(v, u);
  if (kind != NormKind::Basic && default_kind(ctx, v, u) != kind)
    throw KindMismatchError("shape (" + std::to_string(v) + "," + std::to_string(u) + ") is not of kind " +
                            kind_name(kind));
  return run(ctx, detail::normalized_plan(ctx, v, u, kind, opts), opts, Strategy::Normalized, kNormalizedBudget);
}

CountRecord count_equal_degree(const FieldCtx& ctx, unsigned v, const CensusOptions& opts) {
  if (v == 0) {
    CountRecord rec;
    rec.q = ctx.q();
    rec.strategy = Strategy::MonicEqual;
    rec.provenance = "constant functions";
    return rec;
  }
  return run(ctx, detail::equal_plan(ctx, v, opts), opts, Strategy::MonicEqual, kNormalizedBudget);
}

CountRecord count(const FieldCtx& ctx, unsigned v, unsigned u, Strategy strategy, const CensusOptions& opts) {
  switch (strategy) {
    case Strategy::Brute:
      return count_brute(ctx, v, u, opts);
    case Strategy::Normalized:
      return count_normalized(ctx, v, u, opts);
    case Strategy::MonicEqual:
      if (v != u) throw KindMismatchError("monic-equal strategy needs v = u");
      return count_equal_degree(ctx, v, opts);
    case Strategy::Formula: {
      auto f = formula(ctx.q(), v, u, false);
      if (!f || f->lower_bound)
        throw Error("no closed form for (" + std::to_string(v) + "," + std::to_string(u) + ")");
      CountRecord rec;
      rec.q = ctx.q();
      rec.v = v;
      rec.u = u;
      rec.count = f->value;
      rec.strategy = Strategy::Formula;
      rec.provenance = f->expression;
      return rec;
    }
    case Strategy::Reciprocal:
    case Strategy::Auto:
      break;
  }
  if (v < u) {
    CountRecord rec = count(ctx, u, v, Strategy::Auto, opts);
    rec.v = v;
    rec.u = u;
    rec.provenance = "reciprocal of (" + std::to_string(u) + "," + std::to_string(v) + "): " + rec.provenance;
    rec.strategy = Strategy::Reciprocal;
    return rec;
  }
  if (strategy == Strategy::Reciprocal) throw KindMismatchError("reciprocal strategy needs v < u");
  if (v == u) return count_equal_degree(ctx, v, opts);
  return count_normalized(ctx, v, u, opts);
}

Wide candidate_count(const FieldCtx& ctx, unsigned v, unsigned u, Strategy strategy, const CensusOptions& opts) {
  switch (strategy) {
    case Strategy::Brute:
      return detail::plan_candidates(detail::brute_plan(ctx, v, u, opts));
    case Strategy::Normalized:
      require_proper(v, u);
      return detail::plan_candidates(detail::normalized_plan(ctx, v, u, default_kind(ctx, v, u), opts));
    case Strategy::MonicEqual:
      return v == 0 ? 0 : detail::plan_candidates(detail::equal_plan(ctx, v, opts));
    case Strategy::Formula:
      return 0;
    case Strategy::Reciprocal:
    case Strategy::Auto:
      break;
  }
  if (v < u) return candidate_count(ctx, u, v, Strategy::Auto, opts);
  if (v == u) return candidate_count(ctx, v, v, Strategy::MonicEqual, opts);
  return candidate_count(ctx, v, u, Strategy::Normalized, opts);
}

Wide normalized_space_size(const FieldCtx& ctx, unsigned v, unsigned u) {
  CensusOptions plain;
  plain.f_stratify = false;
  require_proper(v, u);
  return detail::plan_candidates(detail::normalized_plan(ctx, v, u, NormKind::C, plain));
}

std::optional<FormulaValue> formula(unsigned q, unsigned v, unsigned u, bool allow_conjectures) {
  if (v < u) std::swap(v, u);
  const Wide Q = q;
  FormulaValue f;
  if (v == 3 && u == 2) {
    f.value = Q * Q * (Q - 1) * (Q - 1) / 2;
    f.expression = "q^2(q-1)^2/2";
    return f;
  }
  if (v == 3 && u == 3) {
    switch (q % 3) {
      case 2:
        f.value = Q * Q * (Q - 1) * (Q - 1) * (Q + 1) / 2;
        f.expression = "q^2(q-1)^2(q+1)/2";
        break;
      case 1:
        f.value = Q * Q * (Q - 1) * (Q - 1) * (Q - 1) / 2;
        f.expression = "q^2(q-1)^3/2";
        break;
      default:
        f.value = (Q * Q * Q * Q - Q * Q * Q + Q * Q - Q) / 2;
        f.expression = "(q^4-q^3+q^2-q)/2";
        break;
    }
    return f;
  }
  if (v == 5 && u == 4) {
    f.value = (Q + 1) * Q * Q * Q * (Q - 1) * (Q - 1) / 2;
    f.expression = "(q+1)q^3(q-1)^2/2";
    f.lower_bound = true;
    f.conjectural = true;
    return f;
  }
  if (!allow_conjectures) return std::nullopt;
  if (v == 4 && u == 3) {
    f.value = (Q + 1) * Q * Q * (Q - 1) * (Q - 1) / 3;
    f.expression = "(q+1)q^2(q-1)^2/3";
    f.conjectural = true;
    return f;
  }
  if (v == 4 && u == 4) {
    f.value = (Q + 1) * Q * Q * (Q - 1) * (Q - 1) * (Q - 1) / 3;
    f.expression = "(q+1)q^2(q-1)^3/3";
    f.conjectural = true;
    return f;
  }
  return std::nullopt;
}

std::vector<Shard> shard_plan(const FieldCtx& ctx, unsigned v, unsigned u, unsigned shards, const CensusOptions& opts) {
  require_proper(v, u);
  const auto plan = detail::normalized_plan(ctx, v, u, default_kind(ctx, v, u), opts);
  const auto layout = detail::unit_layout(plan, std::max(1u, shards));
  return detail::split_units(plan, layout, std::max(1u, shards));
}

}  // namespace prf
