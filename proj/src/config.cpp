#include "ellstab/config.hpp"

#include "ellstab/errors.hpp"

#include <fstream>
#include <sstream>

namespace ellstab {

namespace {

std::string strip(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::pair<std::string, std::string> split_colon(const std::string& text,
                                                const std::string& key) {
  size_t pos = text.find(':');
  if (pos == std::string::npos)
    throw usage_error("config key '" + key + "' needs a \"lo:hi\" value");
  return {strip(text.substr(0, pos)), strip(text.substr(pos + 1))};
}

void set_int_range(Int& lo, Int& hi, const std::string& value,
                   const std::string& key) {
  auto [l, h] = split_colon(value, key);
  auto li = parse_int(l);
  auto hi_i = parse_int(h);
  if (!li || !hi_i)
    throw usage_error("config key '" + key + "': bad integer range '" +
                      value + "'");
  lo = *li;
  hi = *hi_i;
}

} // namespace

OutputFormat parse_format(const std::string& text) {
  if (text == "json") return OutputFormat::Json;
  if (text == "tsv") return OutputFormat::Tsv;
  if (text == "svg+json") return OutputFormat::SvgJson;
  throw usage_error("unknown format '" + text +
                    "' (expected json, tsv or svg+json)");
}

CheckLevel parse_check_level(const std::string& text) {
  if (text == "fast") return CheckLevel::Fast;
  if (text == "full") return CheckLevel::Full;
  throw usage_error("unknown check level '" + text +
                    "' (expected fast or full)");
}

void apply_config_file(RunConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw usage_error("cannot open config file '" + path + "'");
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = strip(line);
    if (t.empty() || t[0] == '#') continue;
    size_t eq = t.find('=');
    if (eq == std::string::npos)
      throw usage_error(path + ":" + std::to_string(lineno) +
                        ": expected key = value");
    std::string key = strip(t.substr(0, eq));
    std::string value = strip(t.substr(eq + 1));
    if (key == "e") {
      auto e = parse_int(value);
      if (!e || *e < 1)
        throw usage_error(path + ":" + std::to_string(lineno) +
                          ": e must be a positive integer");
      cfg.e = *e;
    } else if (key == "format") {
      cfg.format = parse_format(value);
    } else if (key == "check") {
      cfg.check = parse_check_level(value);
    } else if (key == "threads") {
      auto n = parse_int(value);
      if (!n || *n < 0)
        throw usage_error(path + ":" + std::to_string(lineno) +
                          ": threads must be a nonnegative integer");
      cfg.threads = (unsigned)n->get_ui();
    } else if (key == "box_n") {
      set_int_range(cfg.box.n_lo, cfg.box.n_hi, value, key);
    } else if (key == "box_d") {
      set_int_range(cfg.box.d_lo, cfg.box.d_hi, value, key);
    } else if (key == "box_c") {
      set_int_range(cfg.box.c_lo, cfg.box.c_hi, value, key);
    } else if (key == "box_s") {
      auto [l, h] = split_colon(value, key);
      auto lo = parse_rat(l);
      auto hi = parse_rat(h);
      if (!lo || !hi)
        throw usage_error(path + ":" + std::to_string(lineno) +
                          ": bad rational range '" + value + "'");
      cfg.box.s_range = std::make_pair(*lo, *hi);
    } else {
      throw usage_error(path + ":" + std::to_string(lineno) +
                        ": unknown key '" + key + "'");
    }
  }
}

} // namespace ellstab
