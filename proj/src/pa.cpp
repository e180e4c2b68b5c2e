#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "engine.hpp"
#include "prf/bounds.hpp"

namespace prf {

std::vector<RatFn> enumerate_prfs(const FieldCtx& ctx, unsigned v, unsigned u, bool monic_num, Wide budget) {
  CensusOptions plain;
  const auto plan = detail::brute_plan(ctx, v, u, plain, monic_num);
  const Wide n = detail::plan_candidates(plan);
  if (n > budget)
    throw BudgetExceededError("enumerating (" + std::to_string(v) + "," + std::to_string(u) + ") needs " +
                              to_decimal(n) + " candidates, budget is " + to_decimal(budget));
  std::vector<RatFn> out;
  detail::visit_plan(ctx, plan, [&](const std::vector<std::uint16_t>& c) {
    std::vector<Elem> a(v + 1), b(u + 1);
    for (unsigned i = 0; i <= v; ++i) a[i] = Elem{c[i]};
    for (unsigned j = 0; j <= u; ++j) b[j] = Elem{c[v + 1 + j]};
    out.push_back(RatFn{Poly(std::move(a)), Poly(std::move(b))});
  });
  return out;
}

namespace {

std::vector<std::uint32_t> perm_of(const FieldCtx& ctx, const RatFn& w) {
  auto p = to_perm(ctx, w);
  if (!std::holds_alternative<PermP1>(p)) throw Error("enumerated function is not a permutation: " + to_string(w));
  return std::get<PermP1>(p).image;
}

unsigned claim(unsigned q, unsigned d) { return q > d ? q - d : 0; }

}  // namespace

PermArray build_pa_t(const FieldCtx& ctx, unsigned d, Wide budget) {
  PermArray pa;
  pa.q = ctx.q();
  pa.d = d;
  pa.family = Family::T;
  pa.n = ctx.q() + 1;
  pa.min_dist_claim = claim(ctx.q(), d);
  const unsigned h = (d + 1) / 2;
  for (unsigned v = h + 1; v-- > 0;)
    for (unsigned u = h + 1; u-- > 0;) {
      if (v == 0 && u == 0) continue;
      for (const auto& w : enumerate_prfs(ctx, v, u, false, budget)) pa.rows.push_back(perm_of(ctx, w));
    }
  return pa;
}

PermArray build_pa_s(const FieldCtx& ctx, unsigned d, Wide budget) {
  PermArray pa;
  pa.q = ctx.q();
  pa.d = d;
  pa.family = Family::S;
  pa.n = ctx.q();
  pa.min_dist_claim = claim(ctx.q(), d);
  for (const auto& term : s_terms(d)) {
    std::vector<std::pair<unsigned, unsigned>> shapes{{term.v, term.u}};
    if (term.multiplier == Multiplier::Two) shapes.emplace_back(term.u, term.v);
    const bool monic = term.multiplier == Multiplier::OverQMinus1;
    for (auto [v, u] : shapes) {
      if (v == 0 && u == 0) continue;
      for (const auto& w : enumerate_prfs(ctx, v, u, monic, budget)) {
        PermP1 p{perm_of(ctx, w)};
        pa.rows.push_back(contract(p));
      }
    }
  }
  return pa;
}

namespace {

void check_rows(const PermArray& pa) {
  for (std::size_t r = 0; r < pa.rows.size(); ++r) {
    const auto& row = pa.rows[r];
    if (row.size() != pa.n)
      throw MalformedRowError("row " + std::to_string(r) + " has " + std::to_string(row.size()) + " symbols, expected " +
                              std::to_string(pa.n));
    std::vector<bool> seen(pa.n, false);
    for (auto s : row) {
      if (s >= pa.n || seen[s]) throw MalformedRowError("row " + std::to_string(r) + " is not a permutation");
      seen[s] = true;
    }
  }
}

unsigned distance(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
  unsigned n = 0;
  for (std::size_t i = 0; i < a.size(); ++i) n += a[i] != b[i];
  return n;
}

}  // namespace

VerifyReport verify_pa(const PermArray& pa, const VerifyOptions& opts) {
  check_rows(pa);
  VerifyReport rep;
  const std::uint64_t r = pa.rows.size();
  if (r < 2) {
    rep.exhaustive = true;
    return rep;
  }
  const std::uint64_t pairs = r * (r - 1) / 2;
  const bool exhaustive =
      opts.mode == VerifyMode::Exhaustive || (opts.mode == VerifyMode::Auto && pairs <= opts.exhaustive_pairs);
  rep.exhaustive = exhaustive;
  unsigned best = pa.n + 1;
  auto consider = [&](std::size_t i, std::size_t j) {
    unsigned dist = distance(pa.rows[i], pa.rows[j]);
    ++rep.pairs_checked;
    if (dist < best) {
      best = dist;
      rep.witness = {i, j};
    }
  };
  if (exhaustive) {
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = i + 1; j < r; ++j) consider(i, j);
  } else {
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<std::uint64_t> pick(0, r - 1);
    for (std::uint64_t k = 0; k < opts.samples; ++k) {
      std::uint64_t i = pick(rng), j = pick(rng);
      while (j == i) j = pick(rng);
      consider(std::min(i, j), std::max(i, j));
    }
  }
  rep.min_distance = best;
  return rep;
}

void write_pa(const PermArray& pa, std::ostream& out) {
  out << pa.q << ' ' << pa.d << ' ' << pa.rows.size() << ' ' << family_name(pa.family) << '\n';
  for (const auto& row : pa.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ' ';
      if (pa.family == Family::T && row[i] == pa.q)
        out << "inf";
      else
        out << row[i];
    }
    out << '\n';
  }
}

void write_pa_file(const PermArray& pa, const std::string& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw IoError("cannot write " + path);
  write_pa(pa, out);
  if (!out) throw IoError("cannot write " + path);
}

PermArray read_pa(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw MalformedRowError("empty permutation array file");
  std::istringstream hs(header);
  PermArray pa;
  std::size_t count = 0;
  std::string fam;
  if (!(hs >> pa.q >> pa.d >> count >> fam)) throw MalformedRowError("bad header line '" + header + "'");
  pa.family = parse_family(fam);
  pa.n = pa.family == Family::T ? pa.q + 1 : pa.q;
  pa.min_dist_claim = claim(pa.q, pa.d);
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    std::vector<std::uint32_t> row;
    std::string tok;
    while (ls >> tok) {
      if (tok == "inf") {
        if (pa.family != Family::T) throw MalformedRowError("'inf' in an S array");
        row.push_back(pa.q);
        continue;
      }
      std::size_t pos = 0;
      unsigned long val = 0;
      try {
        val = std::stoul(tok, &pos);
      } catch (const std::exception&) {
        throw MalformedRowError("bad symbol '" + tok + "'");
      }
      if (pos != tok.size()) throw MalformedRowError("bad symbol '" + tok + "'");
      row.push_back(static_cast<std::uint32_t>(val));
    }
    pa.rows.push_back(std::move(row));
  }
  if (pa.rows.size() != count)
    throw MalformedRowError("header promises " + std::to_string(count) + " rows, file has " +
                            std::to_string(pa.rows.size()));
  check_rows(pa);
  return pa;
}

PermArray read_pa_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  return read_pa(in);
}

}  // namespace prf
