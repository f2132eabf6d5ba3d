#include "mbraid/config.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace mbraid {

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

const std::map<std::string, std::set<std::string>>& schema() {
  static const std::map<std::string, std::set<std::string>> s = {
      {"device", {"n_b", "n_1", "n_2", "n_3", "n_g"}},
      {"disorder",
       {"delta_b", "delta_1", "delta_2", "delta_3", "delta_g", "eps_b1",
        "eps_b2", "eps_g1", "eps_g2", "eps_11", "eps_12", "eps_21", "eps_22",
        "eps_31", "eps_32"}},
      {"path", {"kind", "d_max", "d_min", "t0", "direction"}},
      {"sweep",
       {"variable", "start", "stop", "points", "scale", "sector",
        "steps_per_leg", "delta", "pflip_n_max", "pflip_steps_per_leg",
        "pflip_shots", "pflip_sector", "eps_scale"}},
      {"readout",
       {"omega0", "Omega0", "g", "delta_plus", "delta_minus", "eps11", "delta",
        "delta_b", "n_max", "grid_start", "grid_stop", "grid_points"}},
  };
  return s;
}

void check_known(const std::string& section, const std::string& key,
                 int lineno) {
  const auto& s = schema();
  auto it = s.find(section);
  if (it == s.end())
    throw ConfigError("config line " + std::to_string(lineno) +
                      ": unknown section [" + section + "]");
  if (!key.empty() && it->second.find(key) == it->second.end())
    throw ConfigError("config line " + std::to_string(lineno) +
                      ": unknown key '" + key + "' in section [" + section +
                      "]");
}

}  // namespace

ConfigFile ConfigFile::parse(const std::string& text) {
  ConfigFile cf;
  std::istringstream in(text);
  std::string line, section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::size_t cut = line.find_first_of("#;");
    if (cut != std::string::npos) line.erase(cut);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw ConfigError("config line " + std::to_string(lineno) +
                          ": malformed section header");
      section = trim(line.substr(1, line.size() - 2));
      check_known(section, "", lineno);
      cf.table_[section];
      continue;
    }
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config line " + std::to_string(lineno) +
                        ": expected key = value");
    if (section.empty())
      throw ConfigError("config line " + std::to_string(lineno) +
                        ": key outside any section");
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    if (key.empty())
      throw ConfigError("config line " + std::to_string(lineno) +
                        ": empty key");
    check_known(section, key, lineno);
    cf.table_[section][key] = val;
  }
  return cf;
}

ConfigFile ConfigFile::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

bool ConfigFile::has(const std::string& section, const std::string& key) const {
  auto it = table_.find(section);
  return it != table_.end() && it->second.find(key) != it->second.end();
}

std::string ConfigFile::get_str(const std::string& section,
                                const std::string& key,
                                const std::string& fallback) const {
  auto it = table_.find(section);
  if (it == table_.end()) return fallback;
  auto jt = it->second.find(key);
  return jt == it->second.end() ? fallback : jt->second;
}

double ConfigFile::get_double(const std::string& section,
                              const std::string& key, double fallback) const {
  if (!has(section, key)) return fallback;
  const std::string v = get_str(section, key, "");
  try {
    std::size_t pos = 0;
    const double x = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw ConfigError("config: " + section + "." + key + " = '" + v +
                      "' is not a number");
  }
}

int ConfigFile::get_int(const std::string& section, const std::string& key,
                        int fallback) const {
  if (!has(section, key)) return fallback;
  const std::string v = get_str(section, key, "");
  try {
    std::size_t pos = 0;
    const long x = std::stol(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return static_cast<int>(x);
  } catch (const std::exception&) {
    throw ConfigError("config: " + section + "." + key + " = '" + v +
                      "' is not an integer");
  }
}

std::vector<double> ConfigFile::get_list(const std::string& section,
                                         const std::string& key) const {
  std::vector<double> out;
  if (!has(section, key)) return out;
  std::istringstream in(get_str(section, key, ""));
  std::string tok;
  while (in >> tok) {
    try {
      std::size_t pos = 0;
      out.push_back(std::stod(tok, &pos));
      if (pos != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw ConfigError("config: " + section + "." + key +
                        " contains non-numeric entry '" + tok + "'");
    }
  }
  return out;
}

std::string ConfigFile::canonical() const {
  std::string out;
  for (const auto& [sec, kv] : table_)  // std::map: already sorted
    for (const auto& [key, val] : kv)
      out += sec + "." + key + "=" + val + "\n";
  return out;
}

std::uint64_t ConfigFile::hash() const { return fnv1a64(canonical()); }

DeviceSpec device_from_config(const ConfigFile& c) {
  DeviceSpec spec;
  spec.counts["b"] = c.get_int("device", "n_b", 0);
  spec.counts["1"] = c.get_int("device", "n_1", 0);
  spec.counts["2"] = c.get_int("device", "n_2", 0);
  spec.counts["3"] = c.get_int("device", "n_3", 0);
  spec.counts["g"] = c.get_int("device", "n_g", 0);
  spec.validate();
  return spec;
}

DisorderConfig disorder_from_config(const ConfigFile& c) {
  DisorderConfig dis;
  for (const auto& id : island_ids()) {
    std::vector<double> bonds = c.get_list("disorder", "delta_" + id);
    if (!bonds.empty()) dis.delta[id] = std::move(bonds);
  }
  for (const char* ch : {"b1", "b2", "g1", "g2", "11", "12", "21", "22", "31", "32"}) {
    const std::string key = std::string("eps_") + ch;
    if (c.has("disorder", key)) dis.eps[ch] = c.get_double("disorder", key, 0.0);
  }
  return dis;
}

PathSpec path_from_config(const ConfigFile& c) {
  PathSpec p;
  const std::string kind = c.get_str("path", "kind", "circular");
  if (kind == "circular")
    p.kind = PathKind::circular;
  else if (kind == "square")
    p.kind = PathKind::square;
  else
    throw ConfigError("config: path.kind must be circular or square");
  p.d_max = c.get_double("path", "d_max", 500.0);
  p.d_min = c.get_double("path", "d_min", -1.0);
  p.T0 = c.get_double("path", "t0", 1.0);
  const std::string dir = c.get_str("path", "direction", "forward");
  if (dir == "forward")
    p.direction = Direction::forward;
  else if (dir == "reversed")
    p.direction = Direction::reversed;
  else
    throw ConfigError("config: path.direction must be forward or reversed");
  return p;
}

ReadoutParams readout_from_config(const ConfigFile& c) {
  ReadoutParams p;
  p.omega0 = c.get_double("readout", "omega0", p.omega0);
  p.Omega0 = c.get_double("readout", "Omega0", p.Omega0);
  p.g = c.get_double("readout", "g", p.g);
  p.delta_plus = c.get_double("readout", "delta_plus", p.delta_plus);
  p.delta_minus = c.get_double("readout", "delta_minus", p.delta_minus);
  p.eps11 = c.get_double("readout", "eps11", p.eps11);
  p.delta = c.get_double("readout", "delta", p.delta);
  p.delta_b = c.get_double("readout", "delta_b", p.delta_b);
  p.n_max = c.get_int("readout", "n_max", p.n_max);
  p.validate();
  return p;
}

SweepSpec sweep_from_config(const ConfigFile& c) {
  SweepSpec s;
  const std::string var = c.get_str("sweep", "variable", "delta");
  if (var == "delta")
    s.variable = SweepVariable::delta;
  else if (var == "d_max")
    s.variable = SweepVariable::d_max;
  else if (var == "eps_11")
    s.variable = SweepVariable::eps_11;
  else if (var == "detuning")
    s.variable = SweepVariable::detuning;
  else
    throw ConfigError("config: sweep.variable must be one of delta, d_max, "
                      "eps_11, detuning");
  s.start = c.get_double("sweep", "start", s.start);
  s.stop = c.get_double("sweep", "stop", s.stop);
  s.points = c.get_int("sweep", "points", s.points);
  const std::string scale = c.get_str("sweep", "scale", "linear");
  if (scale == "linear")
    s.log_scale = false;
  else if (scale == "log")
    s.log_scale = true;
  else
    throw ConfigError("config: sweep.scale must be linear or log");
  s.path = path_from_config(c);
  s.steps_per_leg = c.get_int("sweep", "steps_per_leg", 0);
  s.fixed_delta = c.get_double("sweep", "delta", s.fixed_delta);
  s.sector = c.get_str("sweep", "sector", "max");
  s.validate();
  return s;
}

PflipSettings pflip_from_config(const ConfigFile& c) {
  PflipSettings p;
  p.n_max = c.get_int("sweep", "pflip_n_max", p.n_max);
  p.steps_per_leg = c.get_int("sweep", "pflip_steps_per_leg", p.steps_per_leg);
  p.shots = c.get_int("sweep", "pflip_shots", p.shots);
  const std::string sec = c.get_str("sweep", "pflip_sector", "");
  if (!sec.empty()) {
    const std::size_t colon = sec.find(':');
    if (colon == std::string::npos)
      throw ConfigError(
          "config: sweep.pflip_sector must be '<island>:<+1|-1>' or empty");
    const std::string island = sec.substr(0, colon);
    const std::string pval = sec.substr(colon + 1);
    int pv;
    if (pval == "+1" || pval == "1")
      pv = 1;
    else if (pval == "-1")
      pv = -1;
    else
      throw ConfigError("config: sweep.pflip_sector parity must be +1 or -1");
    p.sector.island_parity[island] = pv;
  }
  if (p.n_max < 1) throw ConfigError("config: sweep.pflip_n_max must be >= 1");
  if (p.shots < 0) throw ConfigError("config: sweep.pflip_shots must be >= 0");
  return p;
}

std::vector<double> readout_grid_from_config(const ConfigFile& c) {
  const double start = c.get_double("readout", "grid_start", 0.1);
  const double stop = c.get_double("readout", "grid_stop", 0.6);
  const int points = c.get_int("readout", "grid_points", 6);
  if (points < 2) throw ConfigError("config: readout.grid_points must be >= 2");
  if (!std::isfinite(start) || !std::isfinite(stop))
    throw ConfigError("config: readout grid must be finite");
  std::vector<double> g(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i)
    g[static_cast<std::size_t>(i)] =
        start + (stop - start) * static_cast<double>(i) / (points - 1);
  return g;
}

}  // namespace mbraid
