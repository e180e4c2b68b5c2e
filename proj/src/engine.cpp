#include "engine.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <set>
#include <thread>

#include <json.hpp>

namespace prf::detail {

using json = nlohmann::json;

Domain fixed(unsigned label) { return Domain{{static_cast<std::uint16_t>(label)}, {}}; }

Domain any_value(unsigned q) {
  Domain d;
  for (unsigned i = 0; i < q; ++i) d.values.push_back(static_cast<std::uint16_t>(i));
  return d;
}

Domain nonzero(unsigned q) {
  Domain d;
  for (unsigned i = 1; i < q; ++i) d.values.push_back(static_cast<std::uint16_t>(i));
  return d;
}

Domain f_stratum(unsigned q) { return Domain{{0, 1}, {1, q - 1}}; }

void finalize_plan(const FieldCtx& ctx, Plan& plan) {
  if (plan.mode != WeightMode::Multiply || ctx.m() == 1) plan.g_reduce = false;
  for (auto& pat : plan.patterns) {
    pat.free.clear();
    for (std::size_t i = 0; i < pat.slots.size(); ++i)
      if (pat.slots[i].size() > 1) pat.free.push_back(i);
    std::stable_sort(pat.free.begin(), pat.free.end(),
                     [&](std::size_t a, std::size_t b) { return pat.slots[a].size() > pat.slots[b].size(); });
    pat.designated = -1;
    if (plan.g_reduce && !pat.free.empty()) {
      const std::size_t slot = pat.free.front();
      Domain& d = pat.slots[slot];
      Domain kept;
      for (std::size_t i = 0; i < d.size(); ++i) {
        Elem e{d.values[i]};
        bool is_min = true;
        Elem f = ctx.frobenius(e);
        while (f != e) {
          if (f < e) is_min = false;
          f = ctx.frobenius(f);
        }
        if (is_min) {
          kept.values.push_back(d.values[i]);
          if (!d.mult.empty()) kept.mult.push_back(d.mult[i]);
        }
      }
      d = std::move(kept);
      pat.designated = static_cast<int>(slot);
    }
  }
}

namespace {

std::vector<Domain> base_slots(unsigned v, unsigned u) { return std::vector<Domain>(v + u + 2); }

}  // namespace

Plan brute_plan(const FieldCtx& ctx, unsigned v, unsigned u, const CensusOptions& opts, bool monic_num) {
  const unsigned q = ctx.q();
  Plan plan;
  plan.v = v;
  plan.u = u;
  Pattern pat;
  pat.slots = base_slots(v, u);
  for (unsigned i = 0; i < v; ++i) pat.slots[i] = any_value(q);
  pat.slots[v] = monic_num ? fixed(1) : nonzero(q);
  for (unsigned j = 0; j < u; ++j) pat.slots[v + 1 + j] = any_value(q);
  pat.slots[v + 1 + u] = fixed(1);
  pat.name = monic_num ? "monic" : "all";
  plan.patterns.push_back(std::move(pat));
  plan.g_reduce = opts.g_reduce;
  plan.describe = "brute";
  finalize_plan(ctx, plan);
  return plan;
}

Plan normalized_plan(const FieldCtx& ctx, unsigned v, unsigned u, NormKind kind, const CensusOptions& opts) {
  const unsigned q = ctx.q();
  Plan plan;
  plan.v = v;
  plan.u = u;
  plan.kind = kind;
  Pattern base;
  base.slots = base_slots(v, u);
  base.slots[0] = fixed(0);
  for (unsigned i = 1; i < v; ++i) base.slots[i] = any_value(q);
  base.slots[v] = fixed(1);
  for (unsigned j = 0; j < u; ++j) base.slots[v + 1 + j] = any_value(q);
  base.slots[v + 1 + u] = fixed(1);
  const std::size_t den0 = v + 1;

  switch (kind) {
    case NormKind::C: {
      base.slots[den0 + u - 1] = fixed(0);
      if (opts.f_stratify && v >= 2) base.slots[v - 1] = f_stratum(q);
      base.name = "b[u-1]=0";
      plan.patterns.push_back(std::move(base));
      plan.mode = WeightMode::Multiply;
      plan.factor = static_cast<Wide>(q) * q * (q - 1);
      plan.describe = std::string("normalized C") + (opts.f_stratify && v >= 2 ? ", F-stratified" : "");
      break;
    }
    case NormKind::M: {
      Pattern a = base;
      a.slots[den0 + u - 1] = fixed(0);
      a.name = "b[u-1]=0";
      Pattern b = base;
      b.slots[den0 + u - 1] = nonzero(q);
      b.slots[den0 + u - 2] = fixed(0);
      b.name = "b[u-1]!=0,b[u-2]=0";
      plan.patterns = {std::move(a), std::move(b)};
      plan.mode = WeightMode::Dedupe;
      plan.describe = "normalized M, class dedupe";
      break;
    }
    case NormKind::B: {
      const unsigned r = b_kind_index(u);
      Pattern a = base;
      a.slots[den0 + r] = fixed(0);
      a.name = "b[r]=0";
      Pattern b = base;
      b.slots[den0 + r] = nonzero(q);
      b.slots[den0 + r - 1] = fixed(0);
      b.name = "b[r]!=0,b[r-1]=0";
      plan.patterns = {std::move(a), std::move(b)};
      plan.mode = WeightMode::Dedupe;
      plan.describe = "normalized B, class dedupe";
      break;
    }
    case NormKind::Basic: {
      base.name = "monic";
      plan.patterns.push_back(std::move(base));
      plan.mode = WeightMode::Dedupe;
      plan.describe = "normalized basic, class dedupe";
      break;
    }
  }
  plan.g_reduce = opts.g_reduce;
  finalize_plan(ctx, plan);
  if (plan.g_reduce) plan.describe += ", G-reduced";
  return plan;
}

Plan equal_plan(const FieldCtx& ctx, unsigned v, const CensusOptions& opts) {
  const unsigned q = ctx.q();
  const unsigned u = v;
  Plan plan;
  plan.v = v;
  plan.u = u;
  Pattern pat;
  pat.slots = base_slots(v, u);
  for (unsigned i = 0; i < v; ++i) pat.slots[i] = any_value(q);
  pat.slots[v] = fixed(1);
  for (unsigned j = 0; j < u; ++j) pat.slots[v + 1 + j] = any_value(q);
  pat.slots[v + 1 + u] = fixed(1);
  plan.factor = q - 1;
  plan.describe = "monic/monic";
  // x -> x+b moves b_{u-1} by u*b, so each shift orbit has one member with b_{u-1} = 0.
  if (u % ctx.p() != 0) {
    pat.slots[v + u] = fixed(0);
    plan.factor *= q;
    plan.describe += ", shift-reduced";
  }
  if (opts.f_stratify) {
    pat.slots[v - 1] = f_stratum(q);
    plan.describe += ", F-stratified";
  }
  pat.name = "monic";
  plan.patterns.push_back(std::move(pat));
  plan.g_reduce = opts.g_reduce;
  finalize_plan(ctx, plan);
  if (plan.g_reduce) plan.describe += ", G-reduced";
  return plan;
}

Wide plan_candidates(const Plan& plan) {
  Wide total = 0;
  for (const auto& pat : plan.patterns) {
    Wide n = 1;
    for (const auto& d : pat.slots) n *= d.size();
    total += n;
  }
  return total;
}

UnitLayout unit_layout(const Plan& plan, std::size_t target_units) {
  UnitLayout layout;
  layout.prefix_len.assign(plan.patterns.size(), 0);
  auto units_for = [&](std::size_t pi) {
    std::size_t n = 1;
    const auto& pat = plan.patterns[pi];
    for (std::size_t k = 0; k < layout.prefix_len[pi]; ++k) n *= pat.slots[pat.free[k]].size();
    return n;
  };
  auto total = [&] {
    std::size_t t = 0;
    for (std::size_t pi = 0; pi < plan.patterns.size(); ++pi) t += units_for(pi);
    return t;
  };
  while (total() < target_units) {
    bool grew = false;
    for (std::size_t pi = 0; pi < plan.patterns.size(); ++pi) {
      // keep at least one slot for the inner loop
      if (layout.prefix_len[pi] + 1 < plan.patterns[pi].free.size()) {
        ++layout.prefix_len[pi];
        grew = true;
      }
    }
    if (!grew) break;
  }
  layout.unit_offset.push_back(0);
  for (std::size_t pi = 0; pi < plan.patterns.size(); ++pi)
    layout.unit_offset.push_back(layout.unit_offset.back() + units_for(pi));
  return layout;
}

std::vector<Shard> split_units(const Plan& plan, const UnitLayout& layout, std::size_t shards) {
  (void)plan;
  const std::size_t n = layout.unit_offset.back();
  shards = std::clamp<std::size_t>(shards, 1, std::max<std::size_t>(n, 1));
  std::vector<Shard> out;
  for (std::size_t s = 0; s < shards; ++s) {
    Shard sh;
    sh.index = s;
    sh.unit_begin = s * n / shards;
    sh.unit_end = (s + 1) * n / shards;
    sh.describe = "units [" + std::to_string(sh.unit_begin) + "," + std::to_string(sh.unit_end) + ")";
    out.push_back(std::move(sh));
  }
  return out;
}

namespace {

// Per-thread evaluation state.
class Kernel {
 public:
  Kernel(const FieldCtx& ctx, const Plan& plan, const Visitor* visitor = nullptr)
      : ctx_(ctx), plan_(plan), visitor_(visitor), q_(ctx.q()), v_(plan.v), u_(plan.u) {
    maxdeg_ = std::max(v_, u_) + 1;
    pw_.assign(static_cast<std::size_t>(q_) * maxdeg_, 0);
    for (unsigned x = 0; x < q_; ++x) {
      Elem acc = FieldCtx::one();
      for (unsigned i = 0; i < maxdeg_; ++i) {
        pw_[x * maxdeg_ + i] = acc.label;
        acc = ctx.mul(acc, Elem{static_cast<std::uint16_t>(x)});
      }
    }
    vr_.assign(q_, 0);
    ur_.assign(q_, 0);
    seen_.assign(q_ + 1, 0);
    cur_.assign(v_ + u_ + 2, 0);
  }

  Wide run_unit(std::size_t pattern_index, std::size_t prefix_len, std::size_t unit) {
    const Pattern& pat = plan_.patterns[pattern_index];
    pat_ = &pat;
    for (std::size_t s = 0; s < pat.slots.size(); ++s) cur_[s] = pat.slots[s].values[0];
    // decode unit: free[0] most significant
    std::uint64_t prefix_mult = 1;
    {
      std::size_t r = unit;
      for (std::size_t k = prefix_len; k-- > 0;) {
        const Domain& d = pat.slots[pat.free[k]];
        std::size_t idx = r % d.size();
        r /= d.size();
        cur_[pat.free[k]] = d.values[idx];
        prefix_mult *= d.weight(idx);
      }
    }
    for (std::size_t s = 0; s < pat.slots.size(); ++s)
      if (pat.slots[s].size() == 1) prefix_mult *= pat.slots[s].weight(0);

    std::vector<std::size_t> rest(pat.free.begin() + static_cast<std::ptrdiff_t>(prefix_len), pat.free.end());
    Wide total = 0;
    if (rest.empty()) {
      recompute_rest(SIZE_MAX);
      if (check_candidate(SIZE_MAX, 0)) total += accept(prefix_mult);
      return total;
    }
    const std::size_t inner = rest.back();
    rest.pop_back();
    const Domain& inner_dom = pat.slots[inner];
    std::vector<std::size_t> idx(rest.size(), 0);
    while (true) {
      std::uint64_t outer_mult = prefix_mult;
      for (std::size_t k = 0; k < rest.size(); ++k) {
        const Domain& d = pat.slots[rest[k]];
        cur_[rest[k]] = d.values[idx[k]];
        outer_mult *= d.weight(idx[k]);
      }
      recompute_rest(inner);
      for (std::size_t ci = 0; ci < inner_dom.size(); ++ci) {
        const std::uint16_t c = inner_dom.values[ci];
        cur_[inner] = c;
        if (check_candidate(inner, c)) total += accept(outer_mult * inner_dom.weight(ci));
      }
      std::size_t k = rest.size();
      while (k > 0) {
        --k;
        if (++idx[k] < pat.slots[rest[k]].size()) break;
        idx[k] = 0;
        if (k == 0) return total;
      }
      if (rest.empty()) return total;
    }
  }

 private:
  // Values of V and U at every point with the inner slot treated as zero.
  void recompute_rest(std::size_t inner) {
    for (unsigned x = 0; x < q_; ++x) {
      const std::uint16_t* px = &pw_[x * maxdeg_];
      Elem vv{};
      for (unsigned i = 0; i <= v_; ++i) {
        if (i == inner || cur_[i] == 0) continue;
        vv = ctx_.add(vv, ctx_.mul(Elem{cur_[i]}, Elem{px[i]}));
      }
      Elem uu{};
      for (unsigned j = 0; j <= u_; ++j) {
        const std::size_t s = v_ + 1 + j;
        if (s == inner || cur_[s] == 0) continue;
        uu = ctx_.add(uu, ctx_.mul(Elem{cur_[s]}, Elem{px[j]}));
      }
      vr_[x] = vv.label;
      ur_[x] = uu.label;
    }
  }

  bool check_candidate(std::size_t inner, std::uint16_t c) {
    if (++stamp_ == 0) {
      std::fill(seen_.begin(), seen_.end(), 0);
      stamp_ = 1;
    }
    const std::uint32_t stamp = stamp_;
    std::uint32_t at_inf;
    if (v_ > u_) {
      at_inf = q_;
    } else if (v_ < u_) {
      at_inf = 0;
    } else {
      at_inf = ctx_.div(Elem{cur_[v_]}, Elem{cur_[v_ + 1 + u_]}).label;
    }
    seen_[at_inf] = stamp;
    const bool inner_num = inner <= v_;
    const unsigned ipow = inner == SIZE_MAX ? 0 : (inner_num ? static_cast<unsigned>(inner) : static_cast<unsigned>(inner - v_ - 1));
    const bool has_inner = inner != SIZE_MAX && c != 0;
    const unsigned order = q_ - 1;
    for (unsigned x = 0; x < q_; ++x) {
      std::uint16_t vv = vr_[x];
      std::uint16_t uu = ur_[x];
      if (has_inner) {
        const Elem term = ctx_.mul(Elem{c}, Elem{pw_[x * maxdeg_ + ipow]});
        if (inner_num)
          vv = ctx_.add(Elem{vv}, term).label;
        else
          uu = ctx_.add(Elem{uu}, term).label;
      }
      std::uint32_t img;
      if (uu == 0) {
        if (vv == 0) return false;
        img = q_;
      } else if (vv == 0) {
        img = 0;
      } else {
        unsigned e = (vv + order - uu) % order;
        img = e + 1;
      }
      if (seen_[img] == stamp) return false;
      seen_[img] = stamp;
    }
    return coprime();
  }

  bool coprime() {
    const RatFn w = current();
    return gcd_poly(ctx_, w.num, w.den).degree().value_or(0) == 0;
  }

  RatFn current() const {
    std::vector<Elem> a(v_ + 1), b(u_ + 1);
    for (unsigned i = 0; i <= v_; ++i) a[i] = Elem{cur_[i]};
    for (unsigned j = 0; j <= u_; ++j) b[j] = Elem{cur_[v_ + 1 + j]};
    return RatFn{Poly(std::move(a)), Poly(std::move(b))};
  }

  Wide accept(std::uint64_t mult) {
    if (visitor_) {
      (*visitor_)(cur_);
      return 1;
    }
    return weigh(mult);
  }

  Wide weigh(std::uint64_t mult) {
    if (plan_.mode == WeightMode::Dedupe) return dedupe_weight();
    Wide w = static_cast<Wide>(mult) * plan_.factor;
    if (plan_.g_reduce) w *= g_orbit_weight();
    return w;
  }

  // |class| if the candidate is the least normal form of its class, else 0.
  Wide dedupe_weight() {
    const RatFn w = current();
    unsigned stab = 0;
    for (unsigned b = 0; b < q_; ++b) {
      auto r = normalize_at(ctx_, w, Elem{static_cast<std::uint16_t>(b)});
      if (!r || !kind_condition(r->first.den, u_, plan_.kind)) continue;
      if (r->first < w) return 0;
      if (r->first == w) ++stab;
    }
    return static_cast<Wide>(q_) * q_ * (q_ - 1) / stab;
  }

  // Orbit size if the coefficient vector is least in its G orbit, else 0.
  Wide g_orbit_weight() {
    const int des = pat_->designated;
    auto key_less = [&](const std::vector<std::uint16_t>& a, const std::vector<std::uint16_t>& b) {
      if (des >= 0 && a[des] != b[des]) return a[des] < b[des];
      return a < b;
    };
    std::vector<std::uint16_t> img(cur_);
    for (unsigned k = 1;; ++k) {
      for (auto& e : img) e = ctx_.frobenius(Elem{e}).label;
      if (img == cur_) return k;
      if (key_less(img, cur_)) return 0;
    }
  }

  const FieldCtx& ctx_;
  const Plan& plan_;
  const Visitor* visitor_;
  const Pattern* pat_ = nullptr;
  unsigned q_, v_, u_, maxdeg_ = 0;
  std::vector<std::uint16_t> pw_;
  std::vector<std::uint16_t> vr_, ur_;
  std::vector<std::uint32_t> seen_;
  std::uint32_t stamp_ = 0;
  std::vector<std::uint16_t> cur_;
};

json field_json(const FieldCtx& ctx) {
  return json{{"p", ctx.p()}, {"m", ctx.m()}, {"prim_poly", ctx.spec().prim_poly}};
}

void write_atomic(const std::string& path, const std::string& text) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw IoError("cannot write checkpoint " + tmp);
    out << text << '\n';
    if (!out) throw IoError("cannot write checkpoint " + tmp);
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw IoError("cannot replace checkpoint " + path + ": " + ec.message());
}

}  // namespace

RunResult run_plan(const FieldCtx& ctx, const Plan& plan, const CensusOptions& opts, const std::string& tag) {
  const unsigned threads = std::max(1u, opts.threads);
  const std::size_t want = opts.shards ? opts.shards : std::max<std::size_t>(1, threads * 16u);
  const UnitLayout layout = unit_layout(plan, want);
  const std::vector<Shard> shards = split_units(plan, layout, want);

  RunResult result;
  result.shards = shards.size();
  std::set<std::size_t> done;
  Wide partial = 0;
  json ck;
  const bool checkpointing = !opts.checkpoint.empty();
  if (checkpointing) {
    ck = json{{"field", field_json(ctx)},
              {"shape", {plan.v, plan.u}},
              {"strategy", tag},
              {"plan", plan.describe},
              {"shards", shards.size()},
              {"completed_shards", json::array()},
              {"partial", "0"}};
    std::ifstream in(opts.checkpoint);
    if (in) {
      json prev;
      try {
        in >> prev;
      } catch (const json::exception& e) {
        throw CheckpointMismatchError("unreadable checkpoint " + opts.checkpoint + ": " + e.what());
      }
      for (const char* key : {"field", "shape", "strategy", "plan", "shards"})
        if (prev.value(key, json()) != ck[key])
          throw CheckpointMismatchError(std::string("checkpoint ") + key + " does not match this run");
      for (const auto& s : prev.at("completed_shards")) done.insert(s.get<std::size_t>());
      partial = parse_decimal(prev.at("partial").get<std::string>());
      ck["completed_shards"] = prev.at("completed_shards");
      ck["partial"] = to_decimal(partial);
      result.resumed = done.size();
    }
  }

  std::vector<std::size_t> pending;
  for (const auto& s : shards)
    if (!done.count(s.index)) pending.push_back(s.index);

  std::atomic<std::size_t> next{0};
  std::mutex mu;
  Wide total = partial;
  std::exception_ptr failure;

  auto worker = [&] {
    Kernel kernel(ctx, plan);
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= pending.size()) return;
      const Shard& sh = shards[pending[i]];
      Wide sum = 0;
      try {
        for (std::size_t unit = sh.unit_begin; unit < sh.unit_end; ++unit) {
          std::size_t pi = 0;
          while (unit >= layout.unit_offset[pi + 1]) ++pi;
          sum += kernel.run_unit(pi, layout.prefix_len[pi], unit - layout.unit_offset[pi]);
        }
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failure) failure = std::current_exception();
        next.store(pending.size());
        return;
      }
      std::lock_guard lock(mu);
      total += sum;
      if (checkpointing) {
        ck["completed_shards"].push_back(sh.index);
        ck["partial"] = to_decimal(total);
        write_atomic(opts.checkpoint, ck.dump());
      }
    }
  };

  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);
  result.count = total;
  return result;
}

void visit_plan(const FieldCtx& ctx, const Plan& plan, const Visitor& fn) {
  const UnitLayout layout = unit_layout(plan, 1);
  Kernel kernel(ctx, plan, &fn);
  for (std::size_t pi = 0; pi < plan.patterns.size(); ++pi)
    for (std::size_t unit = 0; unit < layout.unit_offset[pi + 1] - layout.unit_offset[pi]; ++unit)
      kernel.run_unit(pi, layout.prefix_len[pi], unit);
}

}  // namespace prf::detail
