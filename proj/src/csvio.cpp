#include "mbraid/csvio.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace mbraid {

std::string format_g17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string hex_hash(std::uint64_t h) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "0x%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string csv_header(std::uint64_t config_hash,
                       const std::vector<std::string>& extra) {
  std::string out;
  out += std::string("# ") + kVersion + "\n";
  out += "# config_hash = " + hex_hash(config_hash) + "\n";
  out += "# units: energies in D0, times in T0 = hbar/D0, frequencies in rad/T0\n";
  for (const auto& line : extra) out += "# " + line + "\n";
  return out;
}

std::string sweep_csv(const std::vector<SweepRow>& rows,
                      const std::string& x_column, std::uint64_t config_hash,
                      const std::vector<std::string>& extra) {
  std::string out = csv_header(config_hash, extra);
  out += x_column +
         ",norm_b2,norm_11,norm_12,norm_21,"
         "analytic_b2,analytic_11,analytic_12,analytic_21,converged\n";
  for (const auto& r : rows) {
    out += format_g17(r.x);
    for (double v : r.norm) out += "," + format_g17(v);
    for (double v : r.analytic) out += "," + format_g17(v);
    out += r.converged ? ",1\n" : ",0\n";
  }
  return out;
}

void write_file_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".partial";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ConfigError("cannot write output file '" + tmp + "'");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw ConfigError("short write to '" + tmp + "'");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec)
    throw ConfigError("cannot move '" + tmp + "' onto '" + path +
                      "': " + ec.message());
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool parse_embedded_hash(const std::string& content, std::uint64_t& out) {
  const std::string tag = "config_hash = 0x";
  const std::size_t at = content.find(tag);
  if (at == std::string::npos) return false;
  const std::string hex = content.substr(at + tag.size(), 16);
  if (hex.size() != 16) return false;
  out = 0;
  for (char c : hex) {
    int d;
    if (c >= '0' && c <= '9')
      d = c - '0';
    else if (c >= 'a' && c <= 'f')
      d = c - 'a' + 10;
    else
      return false;
    out = (out << 4) | static_cast<std::uint64_t>(d);
  }
  return true;
}

}  // namespace mbraid
