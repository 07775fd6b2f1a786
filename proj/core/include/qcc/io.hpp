#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace qcc::io {

/// Fixed 12-significant-digit rendering; stable across runs so CSV re-runs
/// are byte-identical.
std::string format_number(double v);

/// Headered CSV. Cells are preformatted strings; use format_number for
/// numeric columns.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  void add_row(std::vector<std::string> cells);
};

void write_csv(const std::string& path, const Table& table,
               const std::string& manifest_ref);

struct ConfigError : std::runtime_error {
  ConfigError(const std::string& msg, int line_no, std::string field_name)
      : std::runtime_error(msg), line(line_no), field(std::move(field_name)) {}
  int line = 0;
  std::string field;
};

/// Plain-text key=value run config with [section] headers. Keys outside a
/// section live in the "" section. Lookups take "section.key" or bare "key".
class RunConfig {
 public:
  void set(const std::string& key, const std::string& value, int line = 0);
  bool has(const std::string& key) const;

  std::string get_string(const std::string& key,
                         const std::string& fallback) const;
  double get_double(const std::string& key, double fallback) const;
  int get_int(const std::string& key, int fallback) const;
  bool get_bool(const std::string& key, bool fallback) const;
  /// Comma-separated list.
  std::vector<double> get_list(const std::string& key,
                               const std::vector<double>& fallback) const;

  /// Canonical serialization (sorted keys); input to the manifest hash.
  std::string canonical() const;
  const std::map<std::string, std::string>& entries() const { return kv_; }

 private:
  int line_of(const std::string& key) const;
  std::map<std::string, std::string> kv_;
  std::map<std::string, int> lines_;
};

RunConfig parse_config_text(const std::string& text,
                            const std::string& origin = "<string>");
RunConfig parse_config_file(const std::string& path);

/// FNV-1a 64-bit hex digest.
std::string digest(const std::string& data);

struct Manifest {
  std::string subcommand;
  std::string config_hash;
  std::vector<std::uint64_t> seeds;
  std::vector<std::string> outputs;
  double walltime_seconds = 0.0;
  std::string tool_version;
};

void write_manifest(const std::string& path, const Manifest& m,
                    const RunConfig& config);

/// $QCC_OUTPUT_DIR if set, otherwise ".". Created on demand by callers.
std::string default_output_dir();

}  // namespace qcc::io
