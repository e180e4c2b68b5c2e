#pragma once

// Candidate enumeration shared by the census strategies.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "prf/census.hpp"

namespace prf::detail {

struct Domain {
  std::vector<std::uint16_t> values;
  std::vector<std::uint32_t> mult;  // parallel to values; empty means all 1

  std::size_t size() const noexcept { return values.size(); }
  std::uint32_t weight(std::size_t i) const noexcept { return mult.empty() ? 1u : mult[i]; }
};

// Positions 0..v are numerator coefficients, v+1..v+u+1 denominator ones.
struct Pattern {
  std::vector<Domain> slots;
  std::vector<std::size_t> free;  // enumeration order, outermost first
  std::string name;
  // Slot restricted to Frobenius-orbit minima under G reduction, or -1.
  int designated = -1;
};

enum class WeightMode { Multiply, Dedupe };

struct Plan {
  unsigned v = 0;
  unsigned u = 0;
  std::vector<Pattern> patterns;
  WeightMode mode = WeightMode::Multiply;
  Wide factor = 1;
  NormKind kind = NormKind::Basic;
  bool g_reduce = false;
  std::string describe;
};

Domain fixed(unsigned label);
Domain any_value(unsigned q);
Domain nonzero(unsigned q);
// {0 with weight 1, 1 with weight q-1}: exact F-map stratification.
Domain f_stratum(unsigned q);

// Orders free slots (largest domain first) and applies the G restriction.
void finalize_plan(const FieldCtx& ctx, Plan& plan);

Plan brute_plan(const FieldCtx& ctx, unsigned v, unsigned u, const CensusOptions& opts, bool monic_num = false);
Plan normalized_plan(const FieldCtx& ctx, unsigned v, unsigned u, NormKind kind, const CensusOptions& opts);
Plan equal_plan(const FieldCtx& ctx, unsigned v, const CensusOptions& opts);

Wide plan_candidates(const Plan& plan);

struct UnitLayout {
  std::vector<std::size_t> prefix_len;   // per pattern
  std::vector<std::size_t> unit_offset;  // per pattern, plus total at the end
};

UnitLayout unit_layout(const Plan& plan, std::size_t target_units);
std::vector<Shard> split_units(const Plan& plan, const UnitLayout& layout, std::size_t shards);

struct RunResult {
  Wide count = 0;
  std::size_t shards = 0;
  std::size_t resumed = 0;
};

RunResult run_plan(const FieldCtx& ctx, const Plan& plan, const CensusOptions& opts, const std::string& tag);

// Calls fn with the coefficient slots of every PRF in the plan, single
// threaded and in enumeration order. Weights are ignored.
using Visitor = std::function<void(const std::vector<std::uint16_t>&)>;
void visit_plan(const FieldCtx& ctx, const Plan& plan, const Visitor& fn);

}  // namespace prf::detail
