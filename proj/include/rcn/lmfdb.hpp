#pragma once

#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "rcn/label.hpp"
#include "rcn/numeric.hpp"
#include "rcn/poly.hpp"
#include "rcn/weil.hpp"

// Store for externally tabulated isogeny-class data: point counts per label,
// how many curves in the class have that Jacobian, and simplicity flags.
// Sources are JSON-lines files (one record per line); every record is
// validated against its own label before being served, since the label
// already determines the counts.  Curve existence is answered closed-world
// per (q, g): once any record at that field and genus carries a
// jacobian_count, the table is taken as complete there and absent labels
// mean "no curve".  Levels with no such records stay unknown.

namespace rcn {

struct IsogenyRecord {
  std::string label;
  long q = 0;
  int g = 0;
  std::vector<Int> counts;  // counts[i] = #C(F_{q^i}), entry 0 unused
  std::optional<long> jacobian_count;
  std::optional<bool> simple;
};

enum class Known { yes, no, unknown };

inline const char* to_string(Known k) {
  switch (k) {
    case Known::yes: return "yes";
    case Known::no: return "no";
    default: return "unknown";
  }
}

// Counts implied by the label itself; depth 10 matches the stored tables.
inline IsogenyRecord record_from_label(const std::string& label, int depth = 10) {
  auto dec = decode_label(label);
  IsogenyRecord r;
  r.label = label;
  r.q = dec.q;
  r.g = dec.g;
  r.counts = point_counts(dec.q, frobenius_traces(dec.P, depth));
  return r;
}

inline void validate_record(const IsogenyRecord& r) {
  auto dec = decode_label(r.label);
  if (encode_label(dec.P, dec.q) != r.label)
    throw WeilError("label " + r.label + " is not in canonical form");
  if (dec.q != r.q || dec.g != r.g)
    throw WeilError("label " + r.label + " does not live over q=" + std::to_string(r.q) +
                    ", g=" + std::to_string(r.g));
  if (r.counts.size() < 2 || r.counts.size() > 11)
    throw WeilError("label " + r.label + " needs between 1 and 10 point counts");
  auto expect = point_counts(r.q, frobenius_traces(dec.P, static_cast<int>(r.counts.size()) - 1));
  for (size_t i = 1; i < r.counts.size(); ++i)
    if (r.counts[i] != expect[i])
      throw WeilError("point counts of " + r.label + " do not match the label (N_" +
                      std::to_string(i) + " is " + Int(r.counts[i]).str() + ", expected " +
                      Int(expect[i]).str() + ")");
  if (r.jacobian_count && *r.jacobian_count < 0)
    throw WeilError("label " + r.label + " has a negative jacobian_count");
}

inline IsogenyRecord record_from_json(const nlohmann::json& j) {
  IsogenyRecord r;
  r.label = j.at("label").get<std::string>();
  r.q = j.at("q").get<long>();
  r.g = j.at("g").get<int>();
  r.counts.push_back(Int(0));
  for (const auto& c : j.at("counts")) r.counts.push_back(Int(c.get<long long>()));
  if (j.contains("jacobian_count")) r.jacobian_count = j.at("jacobian_count").get<long>();
  if (j.contains("simple")) r.simple = j.at("simple").get<bool>();
  return r;
}

inline std::string record_to_json_line(const IsogenyRecord& r) {
  std::ostringstream out;
  out << "{\"label\":\"" << r.label << "\",\"q\":" << r.q << ",\"g\":" << r.g << ",\"counts\":[";
  for (size_t i = 1; i < r.counts.size(); ++i) {
    if (i > 1) out << ",";
    out << Int(r.counts[i]).str();
  }
  out << "]";
  if (r.jacobian_count) out << ",\"jacobian_count\":" << *r.jacobian_count;
  if (r.simple) out << ",\"simple\":" << (*r.simple ? "true" : "false");
  out << "}";
  return out.str();
}

enum class SourceKind { file, cache, http };

struct DataSource {
  SourceKind kind = SourceKind::file;
  std::string location;
  std::size_t records = 0;
};

class IsogenyStore {
 public:
  void add(IsogenyRecord r) {
    validate_record(r);
    if (r.jacobian_count) coverage_.insert({r.q, r.g});
    records_[r.label] = std::move(r);
  }

  DataSource load_jsonl(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw WeilError("cannot open " + path);
    std::string line;
    std::size_t lineno = 0, loaded = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (line.empty()) continue;
      try {
        add(record_from_json(nlohmann::json::parse(line)));
      } catch (const nlohmann::json::exception& e) {
        throw WeilError(path + ":" + std::to_string(lineno) + ": " + e.what());
      } catch (const WeilError& e) {
        throw WeilError(path + ":" + std::to_string(lineno) + ": " + e.what());
      }
      ++loaded;
    }
    return DataSource{SourceKind::file, path, loaded};
  }

  // Deterministic export: one line per record, sorted by label.
  void export_jsonl(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw WeilError("cannot write " + path);
    for (const auto& [label, rec] : records_) out << record_to_json_line(rec) << "\n";
  }

  const IsogenyRecord* find(const std::string& label) const {
    auto it = records_.find(label);
    return it == records_.end() ? nullptr : &it->second;
  }

  IsogenyRecord fetch(const std::string& label) const {
    const IsogenyRecord* r = find(label);
    if (!r) throw WeilError("unknown label: " + label);
    return *r;
  }

  bool covers(long q, int g) const { return coverage_.count({q, g}) > 0; }

  Known jacobian_exists(const IPoly& P, long q) const {
    int g = weil_genus(P);
    const IsogenyRecord* r = find(encode_label(P, q));
    if (r && r->jacobian_count) return *r->jacobian_count > 0 ? Known::yes : Known::no;
    if (covers(q, g)) return Known::no;
    return Known::unknown;
  }

  std::size_t size() const { return records_.size(); }
  const std::map<std::string, IsogenyRecord>& records() const { return records_; }

 private:
  std::map<std::string, IsogenyRecord> records_;
  std::set<std::pair<long, int>> coverage_;
};

inline std::string default_cache_dir() {
  if (const char* env = std::getenv("RCN_CACHE_DIR")) return env;
  return "";
}

// Remote endpoint as a template, e.g.
//   http://host:8080/api/records/{label}
// The placeholder is replaced verbatim; the response body must be a single
// JSON record in the same schema as a file line.  The client itself lives in
// lmfdb_http.hpp so that offline translation units stay clear of it.
struct HttpConfig {
  std::string url_template;
};

inline std::string expand_url_template(const std::string& tmpl, const std::string& label) {
  auto pos = tmpl.find("{label}");
  if (pos == std::string::npos) throw WeilError("endpoint template has no {label} placeholder");
  return tmpl.substr(0, pos) + label + tmpl.substr(pos + 7);
}

}  // namespace rcn
