#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "mbraid/sweep.hpp"

namespace mbraid {

inline constexpr const char* kVersion = "mbraid 1.0.0";

// printf %.17g — full round-trip precision, locale-independent.
std::string format_g17(double x);
// "0x" + 16 lowercase hex digits.
std::string hex_hash(std::uint64_t h);

// Pinned comment block: version, config hash, units contract, then any
// extra "key = value" lines.  Every line starts with "# "; LF endings.
std::string csv_header(std::uint64_t config_hash,
                       const std::vector<std::string>& extra);

// Full CSV document for sweep rows.  x_column names the first column
// ("delta" for pair-coupling sweeps).
std::string sweep_csv(const std::vector<SweepRow>& rows,
                      const std::string& x_column, std::uint64_t config_hash,
                      const std::vector<std::string>& extra);

// Writes content to path + ".partial", then renames onto path; an
// interrupted run leaves only the clearly-marked partial file behind.
void write_file_atomic(const std::string& path, const std::string& content);

// Reads a whole file; throws ConfigError when it cannot be opened.
std::string read_file(const std::string& path);

// Extracts the "# config_hash = 0x..." value from an output document;
// returns false when no such line exists.
bool parse_embedded_hash(const std::string& content, std::uint64_t& out);

}  // namespace mbraid
