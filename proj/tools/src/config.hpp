#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace emlab::cli {

// Flat key-value configuration with dotted namespaces (grid.n, run.steps).
// Precedence: defaults < config file < EMLAB_* environment < explicit flags.
class Config {
 public:
  void load_file(const std::string& path);
  void apply_env();  // EMLAB_GRID_N overrides grid.n, etc.
  void set(const std::string& key, const std::string& value);
  bool has(const std::string& key) const { return kv_.count(key) != 0; }

  std::string get_str(const std::string& key, const std::string& fallback) const;
  long get_int(const std::string& key, long fallback) const;
  double get_num(const std::string& key, double fallback) const;
  bool get_flag(const std::string& key, bool fallback) const;
  std::vector<double> get_list(const std::string& key, const std::string& fallback) const;

  // canonical "key=value\n" text, sorted by key, and its FNV-1a hash
  std::string canonical() const;
  std::uint64_t hash() const;

  static std::string env_name(const std::string& key);

 private:
  std::map<std::string, std::string> kv_;
};

struct Provenance {
  std::string version;
  std::uint64_t config_hash = 0;
  std::uint64_t seed = 0;

  std::string header() const;  // "# ..." comment lines for output files
};

}  // namespace emlab::cli
