#pragma once

// Component counting for Hurwitz spaces, the stability report, report
// serialization (json/csv/text) and an on-disk result cache.
//
// Reports are nlohmann::ordered_json documents so key order, and therefore
// the emitted bytes, depend only on the query and the limits.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include <json.hpp>

#include "hurwitz/class_metrics.hpp"
#include "hurwitz/constructions.hpp"
#include "hurwitz/orbit.hpp"

namespace hurwitz {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

struct RunConfig {
  Limits limits;
  std::string cache_dir;  // empty: no caching
  std::string format = "json";
  std::uint64_t seed = 1;
};

// Limits and seed as recorded in reports. The worker count is left out on
// purpose: it must not change any result.
inline Json config_json(const RunConfig& cfg) {
  Json j;
  j["max_states"] = cfg.limits.max_states;
  j["max_fiber"] = cfg.limits.max_fiber;
  j["memory_budget"] = cfg.limits.memory_budget;
  j["seed"] = cfg.seed;
  return j;
}

inline Json new_report(const std::string& command, const RunConfig& cfg) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  j["config"] = config_json(cfg);
  return j;
}

inline Json moves_json(const std::vector<Move>& moves) {
  Json a = Json::array();
  for (const auto& m : moves) a.push_back(m.to_string());
  return a;
}

inline Json to_json(const CheckRow& r) {
  Json j;
  j["label"] = r.label;
  j["expected"] = to_string(r.expected);
  j["verdict"] = to_string(r.verdict);
  j["passed"] = r.passed();
  j["states_explored"] = r.states_explored;
  j["certificate"] = moves_json(r.certificate);
  if (!r.detail.empty()) j["detail"] = r.detail;
  return j;
}

inline Json to_json(const ClaimReport& rep) {
  Json j;
  j["claim"] = rep.claim;
  j["status"] = rep.status();
  j["rows"] = Json::array();
  for (const auto& r : rep.rows) j["rows"].push_back(to_json(r));
  j["notes"] = rep.notes;
  return j;
}

inline Json to_json(const ScanRow& r) {
  Json j;
  j["n"] = r.n;
  j["fiber_size"] = r.fiber_size;
  j["orbits"] = r.complete ? Json(r.orbits) : Json(nullptr);
  j["status"] = r.complete ? "complete" : "unknown";
  if (!r.limit_hit.empty()) j["limit"] = r.limit_hit;
  return j;
}

// ---------------------------------------------------------------------------
// Components

struct ComponentQuery {
  int d = 3;
  int b = 0;
  std::optional<TypeVector> type;  // absent: every type of length b
  bool galois_full = false;        // HUR^{S_d}: G_s = S_d, Hurwitz orbits only
  bool transitive_only = true;     // HUR_{d,b}: connected coverings
  bool conjugation_quotient = true;

  // Applies the defaults of each mode: HUR^{S_d} counts plain Hurwitz orbits.
  static ComponentQuery hur(int d, int b, bool transitive_only = true) {
    ComponentQuery q;
    q.d = d;
    q.b = b;
    q.transitive_only = transitive_only;
    return q;
  }
  static ComponentQuery hur_galois(int d, TypeVector t) {
    ComponentQuery q;
    q.d = d;
    q.b = t.total();
    q.type = std::move(t);
    q.galois_full = true;
    q.transitive_only = false;
    q.conjugation_quotient = false;
    return q;
  }

  void validate() const {
    if (d < 1 || d > kMaxDegree) throw PreconditionError("bad degree " + std::to_string(d));
    if (b < 0) throw PreconditionError("b must be >= 0");
    if (type && type->total() != b) {
      throw PreconditionError("type " + type->to_string() + " has " + std::to_string(type->total()) + " factors, b = " +
                              std::to_string(b));
    }
  }

  Json to_json() const {
    Json j;
    j["d"] = d;
    j["b"] = b;
    j["type"] = type ? Json(type->to_string()) : Json("all");
    j["galois_full"] = galois_full;
    j["transitive_only"] = transitive_only;
    j["conjugation_quotient"] = conjugation_quotient;
    j["convention"] = galois_full ? "HUR^{S_d}: Hurwitz orbits with G_s = S_d"
                      : std::string("HUR_{d,b}: ") + (conjugation_quotient ? "Hurwitz+conjugation classes" : "Hurwitz orbits") +
                            (transitive_only ? ", connected coverings" : ", all coverings");
    return j;
  }
};

namespace detail {

// Every multiset of b non-identity classes of S_d, in ascending label order.
inline std::vector<TypeVector> types_of_length(int d, int b) {
  std::vector<ClassLabel> cls;
  for (const auto& c : partitions(d))
    if (!c.is_identity()) cls.push_back(c);
  std::sort(cls.begin(), cls.end());
  std::vector<TypeVector> out;
  std::vector<int> counts(cls.size(), 0);
  if (cls.empty()) {
    if (b == 0) out.emplace_back();
    return out;
  }
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == cls.size()) {
      counts[i] = left;
      TypeVector t;
      for (std::size_t k = 0; k < cls.size(); ++k)
        if (counts[k]) t.add(cls[k], counts[k]);
      out.push_back(t);
      counts[i] = 0;
      return;
    }
    for (int n = left; n >= 0; --n) {
      counts[i] = n;
      self(self, i + 1, left - n);
    }
    counts[i] = 0;
  };
  rec(rec, 0, b);
  std::sort(out.begin(), out.end(), [](const TypeVector& x, const TypeVector& y) { return x.to_string() < y.to_string(); });
  return out;
}

}  // namespace detail

// Rows per type: fiber size and component count (null when unknown).
inline Json count_components(const ComponentQuery& q, const RunConfig& cfg) {
  q.validate();
  Json rep = new_report("components", cfg);
  rep["query"] = q.to_json();
  std::vector<TypeVector> types;
  if (q.type) {
    types.push_back(*q.type);
  } else {
    types = detail::types_of_length(q.d, q.b);
  }
  Json rows = Json::array();
  std::uint64_t total = 0;
  bool all_known = true, any_known = false;
  for (const auto& t : types) {
    if (t.parity() == Parity::odd) continue;  // empty fiber over the identity
    FiberSpec spec;
    spec.d = q.d;
    spec.type = t;
    spec.product = Perm::identity(q.d);
    spec.constraint = q.galois_full       ? SubgroupConstraint::full_group
                      : q.transitive_only ? SubgroupConstraint::transitive
                                          : SubgroupConstraint::none;
    spec.conjugation_quotient = q.conjugation_quotient;
    Json row;
    row["type"] = t.to_string();
    try {
      const FiberOrbits fo = count_orbits_in_fiber(spec, cfg.limits);
      if (fo.complete && fo.fiber_size == 0 && !q.type) continue;
      row["fiber_size"] = fo.fiber_size;
      if (fo.complete) {
        row["components"] = fo.orbit_count;
        row["status"] = "complete";
        total += fo.orbit_count;
        any_known = true;
      } else {
        row["components"] = nullptr;
        row["status"] = "unknown";
        row["limit"] = fo.limit_hit;
        all_known = false;
      }
    } catch (const LimitExceeded& e) {
      row["fiber_size"] = nullptr;
      row["components"] = nullptr;
      row["status"] = "unknown";
      row["limit"] = e.what();
      all_known = false;
    }
    rows.push_back(row);
  }
  rep["rows"] = rows;
  rep["total_components"] = all_known ? Json(total) : Json(nullptr);
  rep["status"] = all_known ? "complete" : (any_known ? "partial" : "unknown");
  return rep;
}

// ---------------------------------------------------------------------------
// Stability report

inline Json metrics_json(const ClassMetrics& m) {
  Json j;
  j["d"] = m.d;
  j["class"] = m.label.to_string();
  j["n_C"] = m.n_C;
  j["k_C"] = m.k_C;
  j["f_C"] = m.f_C;
  j["parity"] = to_string(m.parity);
  auto word = [](const MinWord& w) {
    Json x;
    switch (w.status) {
      case MinWord::Status::found:
        x["status"] = "found";
        x["length"] = w.length;
        {
          Json a = Json::array();
          for (const auto& p : w.witness) a.push_back(to_cycle_string(p));
          x["witness"] = a;
        }
        break;
      case MinWord::Status::not_applicable:
        x["status"] = "not_applicable";
        x["reason"] = w.reason;
        break;
      case MinWord::Status::limit_exceeded:
        x["status"] = "limit_exceeded";
        x["reason"] = w.reason;
        break;
    }
    return x;
  };
  j["m_C"] = word(m.m_C);
  j["m_C_constrained"] = m.m_C_constrained ? word(*m.m_C_constrained) : Json(nullptr);
  j["generates_full_group"] = m.generates_full;
  return j;
}

struct Theorem1Result {
  Json report;
  bool falsified = false;
  bool all_unknown = false;
};

// Metrics, the bound N_C and a scan of orbit counts over product id. A
// complete row with n >= N_C and more than one orbit is a falsification.
inline Theorem1Result theorem1_report(int d, const ClassLabel& c, const RunConfig& cfg, int n_from = 2, int n_to = 8) {
  if (c.degree() != d) throw PreconditionError("class " + c.to_string() + " is not a partition of " + std::to_string(d));
  if (c.parity() != Parity::odd) throw PreconditionError("class " + c.to_string() + " is even");
  if (c.fixed_points() < 2) throw PreconditionError("f_C = " + std::to_string(c.fixed_points()) + " < 2");
  Theorem1Result out;
  Json& rep = out.report;
  rep = new_report("theorem1-report", cfg);
  const ClassMetrics m = compute_class_metrics(d, c);
  rep["metrics"] = metrics_json(m);
  const std::uint64_t bound = bound_N_C(m);
  rep["bound_N_C"] = bound;
  if (m.m_C_constrained && m.m_C_constrained->found() && m.m_C_constrained->length != m.m_C.length) {
    rep["bound_N_C_constrained_witness"] = bound_N_C(m, static_cast<std::uint64_t>(m.m_C_constrained->length));
  }
  const auto rows = stable_length_scan(d, c, Perm::identity(d), n_from, n_to, cfg.limits);
  Json jr = Json::array();
  std::optional<int> first_single;
  bool any_known = false;
  for (const auto& r : rows) {
    Json x = to_json(r);
    const bool fals = r.complete && static_cast<std::uint64_t>(r.n) >= bound && r.orbits > 1;
    x["falsification"] = fals;
    out.falsified |= fals;
    any_known |= r.complete;
    if (r.complete && r.orbits == 1 && !first_single) first_single = r.n;
    jr.push_back(x);
  }
  out.all_unknown = !rows.empty() && !any_known;
  rep["scan"] = {{"product", "()"}, {"constraint", "G_s = S_d"}, {"rows", jr}};
  rep["first_single_orbit_n"] = first_single ? Json(*first_single) : Json(nullptr);
  rep["falsification"] = out.falsified;
  return out;
}

// ---------------------------------------------------------------------------
// Emission

namespace detail {

inline std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  return v.dump();
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

// The first array of objects found: "rows", then "scan.rows".
inline const Json* table_of(const Json& rep) {
  if (rep.contains("rows") && rep["rows"].is_array()) return &rep["rows"];
  if (rep.contains("scan") && rep["scan"].contains("rows")) return &rep["scan"]["rows"];
  return nullptr;
}

inline void text_lines(std::ostream& out, const Json& v, const std::string& indent) {
  for (auto it = v.begin(); it != v.end(); ++it) {
    const Json& x = it.value();
    if (x.is_object()) {
      out << indent << it.key() << ":\n";
      text_lines(out, x, indent + "  ");
    } else if (x.is_array() && !x.empty() && x.front().is_object()) {
      out << indent << it.key() << ":\n";
      for (const auto& row : x) {
        std::string line;
        for (auto f = row.begin(); f != row.end(); ++f) {
          if (!line.empty()) line += "  ";
          line += f.key() + "=" + (f.value().is_array() ? f.value().dump() : scalar_text(f.value()));
        }
        out << indent << "  " << line << "\n";
      }
    } else {
      out << indent << it.key() << ": " << (x.is_array() ? x.dump() : scalar_text(x)) << "\n";
    }
  }
}

}  // namespace detail

// json: one pretty-printed document; csv: the report's row table; text:
// indented key/value lines.
inline std::string emit(const Json& rep, const std::string& format) {
  if (format == "json") return rep.dump(2) + "\n";
  if (format == "text") {
    std::ostringstream out;
    detail::text_lines(out, rep, "");
    return out.str();
  }
  if (format == "csv") {
    const Json* rows = detail::table_of(rep);
    std::ostringstream out;
    if (!rows || rows->empty()) return "";
    std::vector<std::string> cols;
    for (const auto& row : *rows)
      for (auto f = row.begin(); f != row.end(); ++f)
        if (std::find(cols.begin(), cols.end(), f.key()) == cols.end()) cols.push_back(f.key());
    for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
    out << "\n";
    for (const auto& row : *rows) {
      for (std::size_t i = 0; i < cols.size(); ++i) {
        std::string v;
        if (row.contains(cols[i])) {
          const Json& x = row[cols[i]];
          v = x.is_array() ? x.dump() : detail::scalar_text(x);
        }
        out << (i ? "," : "") << detail::csv_field(v);
      }
      out << "\n";
    }
    return out.str();
  }
  throw PreconditionError("unknown format '" + format + "' (json, csv, text)");
}

// ---------------------------------------------------------------------------
// Cache

// FNV-1a over the canonical query text, as 16 hex digits.
inline std::string cache_key(const Json& query) {
  const std::string text = Json{{"schema_version", kSchemaVersion}, {"query", query}}.dump();
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  // The stored payload for `query`, if present and written for the same query.
  std::optional<std::string> get(const Json& query) const {
    const auto path = dir_ / (cache_key(query) + ".json");
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    Json doc;
    try {
      doc = Json::parse(buf.str());
    } catch (const Json::parse_error&) {
      return std::nullopt;  // torn or foreign file: treat as a miss
    }
    if (doc.value("schema_version", 0) != kSchemaVersion || doc["query"] != query) return std::nullopt;
    return doc["payload"].get<std::string>();
  }

  // Writes to a temporary file and renames it into place.
  void put(const Json& query, const std::string& payload) const {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec) throw Error("cannot create cache directory " + dir_.string() + ": " + ec.message());
    const auto path = dir_ / (cache_key(query) + ".json");
    const auto tmp = dir_ / (cache_key(query) + ".tmp." + std::to_string(::getpid()));
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      if (!out) throw Error("cannot write cache file " + tmp.string());
      Json doc;
      doc["schema_version"] = kSchemaVersion;
      doc["query"] = query;
      doc["payload"] = payload;
      out << doc.dump() << "\n";
      if (!out) throw Error("write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
      std::filesystem::remove(tmp);
      throw Error("cannot rename cache file to " + path.string() + ": " + ec.message());
    }
  }

 private:
  std::filesystem::path dir_;
};

}  // namespace hurwitz
