#include "config.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace emlab::cli {
namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

}  // namespace

void Config::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("config: cannot open " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    const std::size_t eq = stripped.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config: malformed line " + std::to_string(lineno) + " in " +
                                  path + " (expected key = value)");
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (key.empty())
      throw std::invalid_argument("config: empty key on line " + std::to_string(lineno) + " in " + path);
    kv_[key] = value;
  }
}

std::string Config::env_name(const std::string& key) {
  std::string name = "EMLAB_";
  for (char c : key) name += c == '.' ? '_' : static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return name;
}

void Config::apply_env() {
  // probe the documented keys, then let the environment override anything set
  static const char* known[] = {
      "grid.n",        "grid.h",      "phys.c",       "phys.hbar",   "phys.kb",
      "run.steps",     "run.dt",      "run.cadence",  "run.seed",    "run.threads",
      "ic.preset",     "ic.kx",       "ic.ky",        "ic.kz",       "ic.alpha",
      "ic.amplitude",  "ic.sigma",    "ic.a_file",    "ic.e_file",   "out.dir",
      "out.snapshots", "dual.preset", "dual.jm_sign", "fock.nmax",   "fock.omega",
      "fock.temps",    "clebsch.h_list", "brackets.states", "brackets.points",
      "majorana.compare"};
  for (const char* key : known) {
    if (const char* v = std::getenv(env_name(key).c_str())) kv_[key] = v;
  }
  for (auto& [key, value] : kv_) {
    if (const char* v = std::getenv(env_name(key).c_str())) value = v;
  }
}

void Config::set(const std::string& key, const std::string& value) { kv_[key] = value; }

std::string Config::get_str(const std::string& key, const std::string& fallback) const {
  const auto it = kv_.find(key);
  return it == kv_.end() ? fallback : it->second;
}

long Config::get_int(const std::string& key, long fallback) const {
  const auto it = kv_.find(key);
  if (it == kv_.end()) return fallback;
  try {
    std::size_t used = 0;
    const long v = std::stol(it->second, &used);
    if (used != it->second.size()) throw std::invalid_argument("");
    return v;
  } catch (...) {
    throw std::invalid_argument("config: key '" + key + "' is not an integer: " + it->second);
  }
}

double Config::get_num(const std::string& key, double fallback) const {
  const auto it = kv_.find(key);
  if (it == kv_.end()) return fallback;
  try {
    std::size_t used = 0;
    const double v = std::stod(it->second, &used);
    if (used != it->second.size()) throw std::invalid_argument("");
    return v;
  } catch (...) {
    throw std::invalid_argument("config: key '" + key + "' is not a number: " + it->second);
  }
}

bool Config::get_flag(const std::string& key, bool fallback) const {
  const auto it = kv_.find(key);
  if (it == kv_.end()) return fallback;
  const std::string& v = it->second;
  if (v == "1" || v == "true" || v == "yes" || v == "on") return true;
  if (v == "0" || v == "false" || v == "no" || v == "off") return false;
  throw std::invalid_argument("config: key '" + key + "' is not a boolean: " + v);
}

std::vector<double> Config::get_list(const std::string& key, const std::string& fallback) const {
  const std::string raw = get_str(key, fallback);
  std::vector<double> out;
  std::stringstream ss(raw);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    try {
      out.push_back(std::stod(item));
    } catch (...) {
      throw std::invalid_argument("config: key '" + key + "' has a non-numeric entry: " + item);
    }
  }
  if (out.empty()) throw std::invalid_argument("config: key '" + key + "' is an empty list");
  return out;
}

std::string Config::canonical() const {
  std::string text;
  for (const auto& [key, value] : kv_) {
    if (key == "out.dir") continue;  // the output location is not part of the scenario
    text += key;
    text += '=';
    text += value;
    text += '\n';
  }
  return text;
}

std::uint64_t Config::hash() const {
  std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
  for (char c : canonical()) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  return h;
}

std::string Provenance::header() const {
  std::ostringstream out;
  out << "# emlab " << version << "\n";
  out << "# config-hash " << std::hex << config_hash << std::dec << "\n";
  out << "# seed " << seed << "\n";
  return out.str();
}

}  // namespace emlab::cli
