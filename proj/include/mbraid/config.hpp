#pragma once
#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "mbraid/readout.hpp"
#include "mbraid/sweep.hpp"

namespace mbraid {

// FNV-1a, 64-bit.
std::uint64_t fnv1a64(std::string_view bytes);

// Flat INI-style configuration: [section] headers, key = value lines,
// '#' or ';' comments.  Sections and keys are validated against the
// documented schema (device, disorder, path, sweep, readout).
class ConfigFile {
 public:
  static ConfigFile parse(const std::string& text);
  static ConfigFile load(const std::string& path);

  bool has(const std::string& section, const std::string& key) const;
  std::string get_str(const std::string& section, const std::string& key,
                      const std::string& fallback) const;
  double get_double(const std::string& section, const std::string& key,
                    double fallback) const;
  int get_int(const std::string& section, const std::string& key,
              int fallback) const;
  std::vector<double> get_list(const std::string& section,
                               const std::string& key) const;  // empty if absent

  // Sorted "section.key=value" lines, one per entry, LF-terminated.
  std::string canonical() const;
  std::uint64_t hash() const;  // fnv1a64 over canonical()

  const std::map<std::string, std::map<std::string, std::string>>& sections()
      const {
    return table_;
  }

 private:
  std::map<std::string, std::map<std::string, std::string>> table_;
};

// Typed views over the five sections (defaults = clean device, circular
// path at d_max 500, the 301-point sweep, default readout parameters).
DeviceSpec device_from_config(const ConfigFile& c);
DisorderConfig disorder_from_config(const ConfigFile& c);
PathSpec path_from_config(const ConfigFile& c);
ReadoutParams readout_from_config(const ConfigFile& c);
SweepSpec sweep_from_config(const ConfigFile& c);

struct PflipSettings {
  int n_max = 4;
  int steps_per_leg = 15000;
  int shots = 0;  // 0 = exact Born probabilities
  SectorChoice sector;
};
PflipSettings pflip_from_config(const ConfigFile& c);

// Detuning grid of the readout report: values of the pair coupling delta.
std::vector<double> readout_grid_from_config(const ConfigFile& c);

}  // namespace mbraid
