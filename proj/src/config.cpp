#include "sparsefac/config.hpp"

#include <fstream>
#include <sstream>

#include "sparsefac/errors.hpp"

namespace sparsefac {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

unsigned long long to_number(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    std::string clean;
    for (char c : v)
      if (c != '_') clean += c;
    if (clean.empty() || clean[0] < '0' || clean[0] > '9') throw std::invalid_argument(v);
    auto r = std::stoull(clean, &used);
    if (used != clean.size()) throw std::invalid_argument(v);
    return r;
  } catch (const std::exception&) {
    throw ParseError("config key '" + key + "' expects a non-negative integer", 0);
  }
}

}  // namespace

Config parse_config(const std::string& text) {
  Config c;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty() || line.front() == '[') continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("config line " + std::to_string(lineno) + " lacks '='", 0);
    std::string key = trim(line.substr(0, eq)), val = trim(line.substr(eq + 1));
    if (val.size() >= 2 && val.front() == '"' && val.back() == '"') val = val.substr(1, val.size() - 2);
    if (key == "max_dense_cells") c.max_dense_cells = to_number(key, val);
    else if (key == "max_delta") c.max_delta = static_cast<unsigned>(to_number(key, val));
    else if (key == "iso_degree_cap") c.iso_degree_cap = static_cast<unsigned>(to_number(key, val));
    else if (key == "su_cap") c.su_cap = to_number(key, val);
    else if (key == "su_sample") c.su_sample = to_number(key, val);
    else if (key == "cd_oracle_limit") c.cd_oracle_limit = to_number(key, val);
    else if (key == "jobs") c.jobs = static_cast<unsigned>(to_number(key, val));
    else if (key == "verbose") c.verbose = (val == "true" || val == "1");
    else throw ParseError("unknown config key '" + key + "'", 0);
  }
  return c;
}

Config load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config file " + path, 0);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

}  // namespace sparsefac
