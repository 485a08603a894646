#pragma once

#include <string>

#include <httplib.h>
#include <json.hpp>

#include "rcn/lmfdb.hpp"

namespace rcn {

// Splits http://host[:port]/path into a client target and a path.  The build
// carries no TLS, so https endpoints are refused up front.
inline std::pair<std::string, std::string> split_http_url(const std::string& url) {
  if (url.rfind("https://", 0) == 0) throw WeilError("TLS not built in");
  if (url.rfind("http://", 0) != 0) throw WeilError("endpoint must start with http://");
  auto rest = url.substr(7);
  auto slash = rest.find('/');
  std::string host = slash == std::string::npos ? rest : rest.substr(0, slash);
  std::string path = slash == std::string::npos ? "/" : rest.substr(slash);
  if (host.empty()) throw WeilError("endpoint has no host");
  return {"http://" + host, path};
}

inline IsogenyRecord fetch_remote(const HttpConfig& cfg, const std::string& label) {
  auto url = expand_url_template(cfg.url_template, label);
  auto [origin, path] = split_http_url(url);
  httplib::Client client(origin);
  client.set_connection_timeout(5);
  client.set_read_timeout(10);
  auto res = client.Get(path);
  if (!res) throw WeilError("network failure fetching " + label);
  if (res->status != 200)
    throw WeilError("endpoint returned status " + std::to_string(res->status) + " for " + label);
  IsogenyRecord rec;
  try {
    rec = record_from_json(nlohmann::json::parse(res->body));
  } catch (const nlohmann::json::exception& e) {
    throw WeilError(std::string("bad response body for ") + label + ": " + e.what());
  }
  if (rec.label != label)
    throw WeilError("endpoint answered with " + rec.label + " instead of " + label);
  validate_record(rec);
  return rec;
}

}  // namespace rcn
