#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "prf/census.hpp"

namespace prf {

enum class Family { S, T };

std::string family_name(Family f);
Family parse_family(const std::string& text);

// How the (1,1) term is valued. The exact count of degree-(1,1) functions is
// q(q-1)^2. The published sums use |PGL2(q)| = q(q^2-1) for this term, which
// also counts the Moebius maps of shapes (1,0) and (0,1).
enum class N11Convention { Pgl2, Exact };

std::string n11_name(N11Convention c);
N11Convention parse_n11(const std::string& text);

enum class Multiplier { One, Two, OverQMinus1 };

std::string multiplier_name(Multiplier m);

struct BoundTerm {
  unsigned v = 0;
  unsigned u = 0;
  Multiplier multiplier = Multiplier::One;
  Wide count = 0;
  std::string source;
  Wide contribution = 0;
};

struct BoundReport {
  unsigned q = 0;
  unsigned d = 0;
  Family family = Family::S;
  Wide value = 0;
  std::vector<BoundTerm> terms;
  bool conjectures_used = false;
  N11Convention n11 = N11Convention::Pgl2;
};

// Shapes of a bound with merged symmetric pairs, before counts are known.
std::vector<BoundTerm> t_terms(unsigned d);
std::vector<BoundTerm> s_terms(unsigned d);

struct ProviderOptions {
  const CountCache* cache = nullptr;
  bool allow_conjectures = false;
  // Live census when a term is not cached and has no trusted closed form.
  bool live = true;
  Wide live_budget = 100'000'000;
  CensusOptions census;
  N11Convention n11 = N11Convention::Pgl2;
  // Live results are appended here when set.
  CountCache* record_to = nullptr;
};

struct ProvidedCount {
  Wide count = 0;
  std::string source;
  bool conjectural = false;
};

// cache > trusted closed form > live census > conjecture (opt-in).
// Returns nullopt when nothing can supply the exact count N_{v,u}(q).
std::optional<ProvidedCount> provide_count(const FieldCtx& ctx, unsigned v, unsigned u, const ProviderOptions& opts);

BoundReport t_bound(const FieldCtx& ctx, unsigned d, const ProviderOptions& opts = {});
BoundReport s_bound(const FieldCtx& ctx, unsigned d, const ProviderOptions& opts = {});
BoundReport bound(const FieldCtx& ctx, Family family, unsigned d, const ProviderOptions& opts = {});

std::string report_to_json(const BoundReport& rep);

// Rows of symbol labels; T arrays use q as the symbol for infinity.
struct PermArray {
  unsigned q = 0;
  unsigned d = 0;
  Family family = Family::S;
  unsigned n = 0;  // symbols per row
  unsigned min_dist_claim = 0;
  std::vector<std::vector<std::uint32_t>> rows;
};

// Every PRF with v,u <= (d+1)/2 as a permutation of the q+1 points.
PermArray build_pa_t(const FieldCtx& ctx, unsigned d, Wide budget = kBruteBudget);
// The S casework shapes, (t,t) restricted to monic/monic, contracted to q points.
PermArray build_pa_s(const FieldCtx& ctx, unsigned d, Wide budget = kBruteBudget);

// Every PRF of exact shape (v,u), in enumeration order. Monic numerator only
// when monic_num is set.
std::vector<RatFn> enumerate_prfs(const FieldCtx& ctx, unsigned v, unsigned u, bool monic_num = false,
                                  Wide budget = kBruteBudget);

enum class VerifyMode { Exhaustive, Sample, Auto };

struct VerifyOptions {
  VerifyMode mode = VerifyMode::Auto;
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 20240601;
  // Auto mode verifies exhaustively up to this many pairs.
  std::uint64_t exhaustive_pairs = 100'000'000;
};

struct VerifyReport {
  bool exhaustive = false;
  std::uint64_t pairs_checked = 0;
  std::optional<unsigned> min_distance;  // nullopt when fewer than two rows
  std::pair<std::size_t, std::size_t> witness{0, 0};
};

VerifyReport verify_pa(const PermArray& pa, const VerifyOptions& opts = {});

void write_pa(const PermArray& pa, std::ostream& out);
void write_pa_file(const PermArray& pa, const std::string& path);
PermArray read_pa(std::istream& in);
PermArray read_pa_file(const std::string& path);

// Bound tables.
enum class TableId { S5S7, N54, S9, T6, T8 };

TableId parse_table_id(const std::string& text);
std::string table_name(TableId id);

struct TableCell {
  std::optional<Wide> value;  // nullopt renders as "pending"
  std::string source;
  std::optional<BoundReport> report;
};

struct TableRow {
  unsigned q = 0;
  std::vector<TableCell> cells;
};

struct Table {
  TableId id = TableId::S5S7;
  std::vector<std::string> header;
  std::vector<TableRow> rows;
};

// Cells come from the cache and trusted closed forms; live census only when
// opts.live is set. Missing counts yield "pending" cells.
Table emit_table(TableId id, const std::vector<unsigned>& qs, const ProviderOptions& opts);
std::string table_to_csv(const Table& t);
std::string table_to_json(const Table& t);

}  // namespace prf
