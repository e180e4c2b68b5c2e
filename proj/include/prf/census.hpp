#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "prf/normalize.hpp"
#include "prf/wide.hpp"

namespace prf {

enum class Strategy { Auto, Brute, Normalized, MonicEqual, Reciprocal, Formula };

std::string strategy_name(Strategy s);
Strategy parse_strategy(const std::string& name);

struct CountRecord {
  unsigned q = 0;
  unsigned v = 0;
  unsigned u = 0;
  Wide count = 0;
  Strategy strategy = Strategy::Brute;
  double elapsed_s = 0.0;
  // Free-form description of how the number was obtained.
  std::string provenance;
  std::optional<std::string> shard_info;
};

struct CensusOptions {
  unsigned threads = 1;
  // 0 picks a shard count from the thread count.
  unsigned shards = 0;
  // Candidate budget; 0 uses the strategy default.
  Wide budget = 0;
  bool f_stratify = true;
  bool g_reduce = false;
  // Resumable progress file; empty disables checkpointing.
  std::string checkpoint;
};

inline constexpr Wide kBruteBudget = 1'000'000'000;
inline constexpr Wide kNormalizedBudget = 10'000'000'000ull;

// Every canonical V/U of exact shape (v,u) with U monic, gcd 1.
CountRecord count_brute(const FieldCtx& ctx, unsigned v, unsigned u, const CensusOptions& opts = {});

// Normalized enumeration for v > u. Uses the Table-2 kind from classify when
// there is one and the Basic kind otherwise.
CountRecord count_normalized(const FieldCtx& ctx, unsigned v, unsigned u, const CensusOptions& opts = {});
CountRecord count_normalized(const FieldCtx& ctx, unsigned v, unsigned u, NormKind kind,
                             const CensusOptions& opts = {});

// Shape (v,v): monic numerator and denominator, times q - 1.
CountRecord count_equal_degree(const FieldCtx& ctx, unsigned v, const CensusOptions& opts = {});

CountRecord count(const FieldCtx& ctx, unsigned v, unsigned u, Strategy strategy = Strategy::Auto,
                  const CensusOptions& opts = {});

// Number of candidates a strategy would evaluate, before any budget check.
Wide candidate_count(const FieldCtx& ctx, unsigned v, unsigned u, Strategy strategy, const CensusOptions& opts = {});

// Normalized candidates for kind C shapes without stratification: q^{u+v-2}.
Wide normalized_space_size(const FieldCtx& ctx, unsigned v, unsigned u);

struct FormulaValue {
  Wide value = 0;
  bool lower_bound = false;   // value is a strict lower bound, not a count
  bool conjectural = false;
  std::string expression;
};

std::optional<FormulaValue> formula(unsigned q, unsigned v, unsigned u, bool allow_conjectures);

// Contiguous range of work units, each unit a value assignment for the
// leading free coefficients of one enumeration pattern.
struct Shard {
  std::size_t index = 0;
  std::size_t unit_begin = 0;
  std::size_t unit_end = 0;
  std::string describe;
};

std::vector<Shard> shard_plan(const FieldCtx& ctx, unsigned v, unsigned u, unsigned shards,
                              const CensusOptions& opts = {});

// One line of the count cache.
std::string record_to_json_line(const CountRecord& rec);
CountRecord record_from_json_line(const std::string& line);

// Exact counts keyed by (q,v,u). Later lines win.
class CountCache {
 public:
  CountCache() = default;
  static CountCache load(const std::string& path);
  void save_append(const std::string& path, const CountRecord& rec) const;

  std::optional<CountRecord> get(unsigned q, unsigned v, unsigned u) const;
  void put(const CountRecord& rec);
  std::size_t size() const noexcept { return records_.size(); }
  const std::vector<CountRecord>& records() const noexcept { return records_; }

 private:
  std::vector<CountRecord> records_;
};

}  // namespace prf
