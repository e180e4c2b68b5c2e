#include <fstream>

#include <json.hpp>

#include "prf/census.hpp"

namespace prf {

using json = nlohmann::json;

std::string record_to_json_line(const CountRecord& rec) {
  json j{{"q", rec.q},
         {"v", rec.v},
         {"u", rec.u},
         {"count", to_decimal(rec.count)},
         {"strategy", strategy_name(rec.strategy)},
         {"elapsed_s", rec.elapsed_s}};
  if (!rec.provenance.empty()) j["provenance"] = rec.provenance;
  if (rec.shard_info) j["shard_info"] = *rec.shard_info;
  return j.dump();
}

CountRecord record_from_json_line(const std::string& line) {
  try {
    const json j = json::parse(line);
    CountRecord rec;
    rec.q = j.at("q").get<unsigned>();
    rec.v = j.at("v").get<unsigned>();
    rec.u = j.at("u").get<unsigned>();
    const auto& c = j.at("count");
    rec.count = c.is_string() ? parse_decimal(c.get<std::string>()) : static_cast<Wide>(c.get<std::uint64_t>());
    rec.strategy = parse_strategy(j.value("strategy", std::string("brute")));
    rec.elapsed_s = j.value("elapsed_s", 0.0);
    rec.provenance = j.value("provenance", std::string());
    if (j.contains("shard_info")) rec.shard_info = j.at("shard_info").get<std::string>();
    return rec;
  } catch (const json::exception& e) {
    throw MalformedRowError(std::string("bad count record: ") + e.what());
  } catch (const ParseError& e) {
    throw MalformedRowError(std::string("bad count record: ") + e.what());
  }
}

CountCache CountCache::load(const std::string& path) {
  CountCache cache;
  std::ifstream in(path);
  if (!in) return cache;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    cache.put(record_from_json_line(line));
  }
  return cache;
}

void CountCache::save_append(const std::string& path, const CountRecord& rec) const {
  std::ofstream out(path, std::ios::app);
  if (!out) throw IoError("cannot append to cache " + path);
  out << record_to_json_line(rec) << '\n';
  if (!out) throw IoError("cannot append to cache " + path);
}

std::optional<CountRecord> CountCache::get(unsigned q, unsigned v, unsigned u) const {
  for (auto it = records_.rbegin(); it != records_.rend(); ++it)
    if (it->q == q && it->v == v && it->u == u) return *it;
  return std::nullopt;
}

void CountCache::put(const CountRecord& rec) { records_.push_back(rec); }

}  // namespace prf
