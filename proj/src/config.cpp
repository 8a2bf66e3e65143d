#include "degen/config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace degen {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

unsigned parse_unsigned(const std::string& s) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw std::invalid_argument("expected a non-negative integer, got '" + s + "'");
  return static_cast<unsigned>(std::stoul(s));
}

std::vector<unsigned> odd_list(const std::string& key, std::string_view text) {
  auto v = parse_unsigned_list(text);
  for (unsigned x : v)
    if (x % 2 == 0) throw std::invalid_argument(key + " values must be odd, got " + std::to_string(x));
  return v;
}

}  // namespace

const std::vector<std::string>& known_config_keys() {
  static const std::vector<std::string> keys{"identities", "d", "chi", "lambda", "w1", "w2", "x", "L", "n",
                                             "p", "N", "f", "fault_degree", "workers", "format", "out"};
  return keys;
}

std::vector<std::string> split_list(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  if (out.size() == 1 && out[0].empty()) out.clear();
  for (const auto& s : out)
    if (s.empty()) throw std::invalid_argument("empty entry in list '" + std::string(text) + "'");
  return out;
}

std::vector<unsigned> parse_unsigned_list(std::string_view text) {
  std::vector<unsigned> v;
  for (const auto& s : split_list(text)) v.push_back(parse_unsigned(s));
  return v;
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> v;
  for (const auto& s : split_list(text)) v.push_back(Rational::parse(s));
  return v;
}

std::vector<BigInt> parse_integer_list(std::string_view text) {
  std::vector<BigInt> v;
  for (const auto& s : split_list(text)) {
    const Rational r = Rational::parse(s);
    if (!r.is_integer()) throw std::invalid_argument("expected an integer coefficient, got '" + s + "'");
    v.push_back(r.numerator());
  }
  return v;
}

std::pair<unsigned, unsigned> parse_range(std::string_view text) {
  const std::string s = trim(text);
  const auto dots = s.find("..");
  if (dots == std::string::npos) {
    const unsigned b = parse_unsigned(s);
    return {b, b};
  }
  const unsigned a = parse_unsigned(trim(s.substr(0, dots)));
  const unsigned b = parse_unsigned(trim(s.substr(dots + 2)));
  if (a > b) throw std::invalid_argument("empty range '" + s + "'");
  return {a, b};
}

FlatConfig parse_flat_config(std::string_view text) {
  FlatConfig cfg;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  const auto& keys = known_config_keys();
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string t = trim(line);
    if (t.empty()) continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected 'key = values'");
    const std::string key = trim(t.substr(0, eq));
    if (std::find(keys.begin(), keys.end(), key) == keys.end())
      throw std::invalid_argument("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    cfg[key] = trim(t.substr(eq + 1));
  }
  return cfg;
}

FlatConfig load_flat_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read config file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_flat_config(ss.str());
}

SweepGrid apply_config(const FlatConfig& config, SweepGrid g) {
  for (const auto& [key, value] : config) {
    if (key == "identities") {
      g.identities.clear();
      for (const auto& name : split_list(value)) {
        if (name == "all") {
          g.identities = all_identities();
          break;
        }
        const auto id = parse_identity(name);
        if (!id) throw std::invalid_argument("unknown identity '" + name + "'");
        g.identities.push_back(*id);
      }
    } else if (key == "d") {
      g.d = odd_list("d", value);
    } else if (key == "chi") {
      if (trim(value) == "all") g.chi.reset();
      else {
        std::vector<std::size_t> v;
        for (unsigned c : parse_unsigned_list(value)) v.push_back(c);
        g.chi = std::move(v);
      }
    } else if (key == "lambda") {
      g.lambda = parse_rational_list(value);
    } else if (key == "w1") {
      g.w1 = odd_list("w1", value);
    } else if (key == "w2") {
      g.w2 = odd_list("w2", value);
    } else if (key == "x") {
      g.x = parse_rational_list(value);
    } else if (key == "L") {
      g.L = parse_unsigned(trim(value));
    } else if (key == "n") {
      g.n = odd_list("n", value);
    } else if (key == "p") {
      g.p.clear();
      for (unsigned p : parse_unsigned_list(value)) g.p.push_back(p);
    } else if (key == "N") {
      g.N = parse_range(value).second;
    } else if (key == "f") {
      g.f.clear();
      for (const auto& poly : split_list(value, ';')) g.f.push_back(parse_integer_list(poly));
    } else if (key == "fault_degree") {
      g.fault_degree = parse_unsigned(trim(value));
    }
    // workers, format, out are consumed by the CLI.
  }
  return g;
}

}  // namespace degen
