#include "prf/cli.hpp"

#include <cstdlib>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "prf/bounds.hpp"

namespace prf::cli {

namespace {

using json = nlohmann::json;

struct FieldFlags {
  unsigned p = 0;
  unsigned m = 1;
  std::string prim_poly;
};

void add_field_flags(CLI::App* cmd, FieldFlags& f) {
  cmd->add_option("--p", f.p, "characteristic")->required();
  cmd->add_option("--m", f.m, "extension degree")->capture_default_str();
  cmd->add_option("--prim-poly", f.prim_poly, "primitive polynomial, coefficients low degree first: c0,c1,...,1");
}

FieldCtx make_field(const FieldFlags& f) {
  if (f.prim_poly.empty()) {
    if (!is_prime(f.p)) throw NonPrimePError(std::to_string(f.p) + " is not prime");
    if (f.m == 0) throw DegreeMismatchError("--m must be at least 1");
    return FieldCtx(default_spec(f.p, f.m));
  }
  return FieldCtx(FieldSpec{f.p, f.m, parse_coeff_list(f.prim_poly)});
}

std::string default_cache() {
  const char* env = std::getenv("PRF_CACHE");
  return env ? env : "";
}

Wide parse_budget(const std::string& text) { return text.empty() ? Wide{0} : parse_decimal(text); }

std::vector<unsigned> parse_q_list(const std::string& text) {
  std::vector<unsigned> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    std::size_t pos = 0;
    unsigned long q = 0;
    try {
      q = std::stoul(tok, &pos);
    } catch (const std::exception&) {
      throw ParseError("bad q '" + tok + "'");
    }
    if (pos != tok.size()) throw ParseError("bad q '" + tok + "'");
    out.push_back(static_cast<unsigned>(q));
  }
  return out;
}

json field_json(const FieldCtx& ctx) {
  json powers = json::array();
  for (unsigned k = 1; k < ctx.q(); ++k) powers.push_back(ctx.to_vector(Elem{static_cast<std::uint16_t>(k)}));
  return json{{"p", ctx.p()},
              {"m", ctx.m()},
              {"q", ctx.q()},
              {"prim_poly", ctx.spec().prim_poly},
              {"addition", ctx.uses_tables() ? "table" : "zech"},
              {"powers", powers}};
}

VerifyMode parse_mode(const std::string& s) {
  if (s == "exhaustive") return VerifyMode::Exhaustive;
  if (s == "sample") return VerifyMode::Sample;
  if (s == "auto") return VerifyMode::Auto;
  throw ParseError("mode must be exhaustive, sample or auto, got '" + s + "'");
}

void append_records(const std::string& path, const CountCache& fresh) {
  if (path.empty()) return;
  for (const auto& rec : fresh.records()) fresh.save_append(path, rec);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Permutation rational functions over finite fields: counts, bounds and permutation arrays", "prf"};
  app.require_subcommand(1);

  // field
  FieldFlags field_f;
  auto* field_cmd = app.add_subcommand("field", "print the field tables");
  add_field_flags(field_cmd, field_f);

  // perm
  FieldFlags perm_f;
  std::string perm_w;
  bool perm_recip = false;
  auto* perm_cmd = app.add_subcommand("perm", "evaluate a rational function on the projective line");
  add_field_flags(perm_cmd, perm_f);
  perm_cmd->add_option("--w", perm_w, "num|den as label lists, low degree first")->required();
  perm_cmd->add_flag("--invert-arg", perm_recip, "use W(1/x)");

  // count
  FieldFlags count_f;
  unsigned num_deg = 0, den_deg = 0;
  std::string count_strategy = "auto", count_budget, count_cache = default_cache();
  CensusOptions census;
  bool no_f_stratify = false;
  auto* count_cmd = app.add_subcommand("count", "count PRFs of one degree shape");
  add_field_flags(count_cmd, count_f);
  count_cmd->add_option("--num-deg", num_deg, "numerator degree v")->required();
  count_cmd->add_option("--den-deg", den_deg, "denominator degree u")->required();
  count_cmd->add_option("--strategy", count_strategy, "auto|brute|normalized|monic-equal|reciprocal|formula")
      ->capture_default_str();
  count_cmd->add_option("--threads", census.threads)->capture_default_str();
  count_cmd->add_option("--shards", census.shards, "0 picks from the thread count");
  count_cmd->add_option("--checkpoint", census.checkpoint, "resumable progress file");
  count_cmd->add_option("--budget", count_budget, "candidate budget (decimal)");
  count_cmd->add_flag("--g-reduce", census.g_reduce, "enumerate one coefficient per Frobenius orbit");
  count_cmd->add_flag("--no-f-stratify", no_f_stratify, "disable the F-map stratification");
  count_cmd->add_option("--cache", count_cache, "append the record to this cache (default $PRF_CACHE)");

  // bounds
  FieldFlags bounds_f;
  unsigned bounds_d = 0;
  std::string bounds_family = "S", bounds_cache = default_cache(), bounds_n11 = "pgl2", bounds_live_budget;
  bool bounds_conj = false, bounds_no_live = false;
  auto* bounds_cmd = app.add_subcommand("bounds", "evaluate S_d(q) or T_d(q) with its term ledger");
  add_field_flags(bounds_cmd, bounds_f);
  bounds_cmd->add_option("--d", bounds_d)->required();
  bounds_cmd->add_option("--family", bounds_family, "S|T")->capture_default_str();
  bounds_cmd->add_flag("--allow-conjectures", bounds_conj, "use the conjectured 4/3 and 4/4 formulas where verified");
  bounds_cmd->add_option("--cache", bounds_cache, "count cache (default $PRF_CACHE); live results are appended");
  bounds_cmd->add_option("--n11", bounds_n11, "pgl2|exact valuation of the (1,1) term")->capture_default_str();
  bounds_cmd->add_flag("--no-live", bounds_no_live, "never run a census for a missing term");
  bounds_cmd->add_option("--live-budget", bounds_live_budget, "largest live census in candidates (default 1e8)");

  // pa
  auto* pa_cmd = app.add_subcommand("pa", "build or verify permutation arrays");
  pa_cmd->require_subcommand(1);
  FieldFlags build_f;
  unsigned build_d = 0;
  std::string build_family = "S", build_out, build_budget;
  auto* build_cmd = pa_cmd->add_subcommand("build", "materialize a PA and write it");
  add_field_flags(build_cmd, build_f);
  build_cmd->add_option("--d", build_d)->required();
  build_cmd->add_option("--family", build_family, "S|T")->capture_default_str();
  build_cmd->add_option("--out", build_out)->required();
  build_cmd->add_option("--budget", build_budget, "candidate budget per shape (decimal)");
  std::string verify_file, verify_mode = "auto";
  unsigned verify_min = 0;
  VerifyOptions vopts;
  auto* verify_cmd = pa_cmd->add_subcommand("verify", "check the minimum pairwise Hamming distance");
  verify_cmd->add_option("--file", verify_file)->required();
  verify_cmd->add_option("--min-dist", verify_min)->required();
  verify_cmd->add_option("--mode", verify_mode, "exhaustive|sample|auto")->capture_default_str();
  verify_cmd->add_option("--samples", vopts.samples)->capture_default_str();
  verify_cmd->add_option("--seed", vopts.seed)->capture_default_str();

  // tables
  std::string table_id, table_qs, table_cache = default_cache(), table_format = "csv", table_n11 = "pgl2";
  unsigned table_qmax = 0;
  bool table_live = false, table_conj = false;
  auto* tables_cmd = app.add_subcommand("tables", "reproduce the bound tables");
  tables_cmd->add_option("--table", table_id, "S5S7|N54|S9|T6|T8")->required();
  auto* qopt = tables_cmd->add_option("--q", table_qs, "comma separated field orders");
  auto* qmaxopt = tables_cmd->add_option("--qmax", table_qmax, "every prime power from 5 to qmax");
  qopt->excludes(qmaxopt);
  tables_cmd->add_option("--cache", table_cache, "count cache (default $PRF_CACHE)");
  tables_cmd->add_option("--format", table_format, "csv|json")->capture_default_str();
  tables_cmd->add_flag("--live", table_live, "run small censuses for counts missing from the cache");
  tables_cmd->add_flag("--allow-conjectures", table_conj);
  tables_cmd->add_option("--n11", table_n11)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*field_cmd) {
      out << field_json(make_field(field_f)).dump(2) << '\n';
      return kOk;
    }

    if (*perm_cmd) {
      const FieldCtx ctx = make_field(perm_f);
      RatFn w = parse_ratfn(ctx, perm_w);
      if (perm_recip) w = invert_argument(ctx, w);
      auto p = to_perm(ctx, w);
      json j{{"w", to_string(w)}, {"v", w.v()}, {"u", w.u()}};
      if (auto* perm = std::get_if<PermP1>(&p)) {
        j["permutation"] = to_string(*perm);
      } else {
        const auto& bad = std::get<NotPermutation>(p);
        j["permutation"] = nullptr;
        j["collision"] = {point_string(bad.first, ctx.q()), point_string(bad.second, ctx.q()),
                          point_string(bad.value, ctx.q())};
      }
      out << j.dump() << '\n';
      return kOk;
    }

    if (*count_cmd) {
      const FieldCtx ctx = make_field(count_f);
      census.f_stratify = !no_f_stratify;
      census.budget = parse_budget(count_budget);
      CountRecord rec = count(ctx, num_deg, den_deg, parse_strategy(count_strategy), census);
      out << record_to_json_line(rec) << '\n';
      if (!count_cache.empty()) CountCache{}.save_append(count_cache, rec);
      return kOk;
    }

    if (*bounds_cmd) {
      const FieldCtx ctx = make_field(bounds_f);
      const CountCache cache = bounds_cache.empty() ? CountCache{} : CountCache::load(bounds_cache);
      CountCache fresh;
      ProviderOptions opts;
      opts.cache = &cache;
      opts.record_to = &fresh;
      opts.allow_conjectures = bounds_conj;
      opts.live = !bounds_no_live;
      if (!bounds_live_budget.empty()) opts.live_budget = parse_decimal(bounds_live_budget);
      opts.n11 = parse_n11(bounds_n11);
      try {
        BoundReport rep = bound(ctx, parse_family(bounds_family), bounds_d, opts);
        append_records(bounds_cache, fresh);
        out << report_to_json(rep) << '\n';
      } catch (const MissingCountError& e) {
        append_records(bounds_cache, fresh);
        err << "error: " << e.what() << '\n' << "missing: " << e.missing() << '\n';
        return kMissing;
      }
      return kOk;
    }

    if (*build_cmd) {
      const FieldCtx ctx = make_field(build_f);
      const Wide budget = build_budget.empty() ? kBruteBudget : parse_decimal(build_budget);
      const Family fam = parse_family(build_family);
      const PermArray pa = fam == Family::S ? build_pa_s(ctx, build_d, budget) : build_pa_t(ctx, build_d, budget);
      write_pa_file(pa, build_out);
      out << json{{"file", build_out},
                  {"q", pa.q},
                  {"d", pa.d},
                  {"family", family_name(pa.family)},
                  {"symbols", pa.n},
                  {"rows", pa.rows.size()},
                  {"claimed_min_distance", pa.min_dist_claim}}
                 .dump()
          << '\n';
      return kOk;
    }

    if (*verify_cmd) {
      vopts.mode = parse_mode(verify_mode);
      const PermArray pa = read_pa_file(verify_file);
      const VerifyReport rep = verify_pa(pa, vopts);
      json j{{"file", verify_file},
             {"rows", pa.rows.size()},
             {"exhaustive", rep.exhaustive},
             {"pairs_checked", rep.pairs_checked},
             {"required", verify_min}};
      j["min_distance"] = rep.min_distance ? json(*rep.min_distance) : json("undefined");
      const bool failed = rep.min_distance && *rep.min_distance < verify_min;
      j["status"] = failed ? "violation" : (rep.exhaustive ? "certified" : "no violation found");
      if (rep.min_distance) {
        auto row_text = [&](std::size_t i) {
          std::ostringstream s;
          for (std::size_t k = 0; k < pa.rows[i].size(); ++k)
            s << (k ? " " : "") << point_string(pa.rows[i][k], pa.family == Family::T ? pa.q : pa.q + 1);
          return s.str();
        };
        j["witness"] = {{"rows", {rep.witness.first, rep.witness.second}},
                        {"first", row_text(rep.witness.first)},
                        {"second", row_text(rep.witness.second)}};
      }
      out << j.dump() << '\n';
      return failed ? kVerifyFailed : kOk;
    }

    if (*tables_cmd) {
      std::vector<unsigned> qs;
      if (!table_qs.empty()) {
        qs = parse_q_list(table_qs);
      } else if (table_qmax) {
        for (unsigned q = 5; q <= table_qmax; ++q)
          if (prime_power(q)) qs.push_back(q);
      } else {
        err << "error: tables needs --q or --qmax\n";
        return kUsage;
      }
      if (table_format != "csv" && table_format != "json") throw ParseError("format must be csv or json");
      const CountCache cache = table_cache.empty() ? CountCache{} : CountCache::load(table_cache);
      CountCache fresh;
      ProviderOptions opts;
      opts.cache = &cache;
      opts.record_to = &fresh;
      opts.live = table_live;
      opts.allow_conjectures = table_conj;
      opts.n11 = parse_n11(table_n11);
      const Table t = emit_table(parse_table_id(table_id), qs, opts);
      append_records(table_cache, fresh);
      out << (table_format == "csv" ? table_to_csv(t) : table_to_json(t));
      if (table_format == "json") out << '\n';
      return kOk;
    }
  } catch (const BudgetExceededError& e) {
    err << "error: " << e.what() << '\n';
    return kBudget;
  } catch (const MissingCountError& e) {
    err << "error: " << e.what() << '\n';
    return kMissing;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  } catch (const MalformedRowError& e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  } catch (const CheckpointMismatchError& e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace prf::cli
