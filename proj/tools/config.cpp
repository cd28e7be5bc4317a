#include "config.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

namespace fvir::cli {

namespace pt = boost::property_tree;

namespace {

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_tokens(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',' || c == ' ' || c == '\t' || c == '[' || c == ']') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

/// Splits on commas that are not inside brackets.
std::vector<std::string> split_args(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '[') ++depth;
    if (c == ']') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!trim(cur).empty()) out.push_back(trim(cur));
  return out;
}

Rational rational(const std::string& text, const std::string& what) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(what + ": " + e.what());
  }
}

std::vector<Rational> rationals(const std::string& text, const std::string& what) {
  std::vector<Rational> out;
  for (const auto& t : split_tokens(text)) out.push_back(rational(t, what));
  return out;
}

double real(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    double v = std::stod(text, &used);
    if (trim(text.substr(used)).empty() && std::isfinite(v)) return v;
  } catch (const std::exception&) {
  }
  throw ConfigError(what + ": expected a number, got '" + text + "'");
}

std::size_t count(const std::string& text, const std::string& what) {
  const double v = real(text, what);
  if (v < 0 || v != std::floor(v)) throw ConfigError(what + ": expected a non-negative integer, got '" + text + "'");
  return std::size_t(v);
}

std::optional<std::string> get(const pt::ptree& tree, const std::string& path) {
  if (auto v = tree.get_optional<std::string>(pt::ptree::path_type(path, '.'))) return trim(*v);
  return std::nullopt;
}

ExactElement element(const std::string& text, const ExactAlgebra& alg, const std::string& what) {
  const std::string t = trim(text);
  if (t == "unit" || t == "1_F") return alg.unit();
  if (t == "zero") return alg.zero();
  auto v = rationals(t, what);
  if (v.size() != alg.dim())
    throw ConfigError(what + ": expected " + std::to_string(alg.dim()) + " components, got " + std::to_string(v.size()));
  return ExactElement(std::move(v));
}

ExactAlgebra algebra_from_keys(const pt::ptree& section) {
  auto dim = get(section, "dim");
  auto table = get(section, "structure_constants");
  auto unit = get(section, "unit");
  auto trace = get(section, "trace");
  if (!dim || !table || !unit || !trace)
    throw ConfigError("[algebra] needs a preset or all of dim, structure_constants, unit, trace");
  return ExactAlgebra::make(count(*dim, "algebra.dim"), rationals(*table, "algebra.structure_constants"),
                            rationals(*unit, "algebra.unit"), rationals(*trace, "algebra.trace"),
                            get(section, "name").value_or("custom"));
}

std::vector<TraceChoice> parse_traces(const std::string& text, const RunConfig& cfg) {
  if (text == "basic") return default_traces(*cfg.algebra, cfg.z2_eps);
  if (text == "own") return {{"tr", cfg.algebra->trace_vector()}};
  std::vector<TraceChoice> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    item = trim(item);
    if (item.empty()) continue;
    auto colon = item.find(':');
    if (colon == std::string::npos) throw ConfigError("algebra.traces: expected 'name: a,b', got '" + item + "'");
    TraceChoice t{trim(item.substr(0, colon)), rationals(item.substr(colon + 1), "algebra.traces")};
    if (t.trace.size() != cfg.algebra->dim()) throw ConfigError("algebra.traces: '" + t.name + "' has wrong length");
    out.push_back(std::move(t));
  }
  if (out.empty()) throw ConfigError("algebra.traces: no traces listed");
  return out;
}

}  // namespace

ExactAlgebra parse_preset(const std::string& text, std::optional<Rational>* z2_eps) {
  static const std::regex shape(R"(^\s*([A-Za-z0-9_]+)\s*(?:\((.*)\))?\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, shape)) throw ConfigError("malformed algebra preset '" + text + "'");
  const std::string name = m[1];
  std::vector<std::pair<std::string, std::string>> args;
  for (const auto& a : split_args(m[2])) {
    auto eq = a.find('=');
    if (eq == std::string::npos)
      args.emplace_back("", a);
    else
      args.emplace_back(trim(a.substr(0, eq)), trim(a.substr(eq + 1)));
  }
  for (auto& [k, v] : args)
    if (v.size() >= 2 && v.front() == '"' && v.back() == '"') v = v.substr(1, v.size() - 2);
  auto arg = [&](const std::string& key, std::size_t position) -> std::optional<std::string> {
    for (const auto& [k, v] : args)
      if (k == key) return v;
    std::size_t seen = 0;
    for (const auto& [k, v] : args)
      if (k.empty() && seen++ == position) return v;
    return std::nullopt;
  };

  if (name == "R") return builtin_R();
  if (name == "Z2") {
    auto eps_text = arg("eps", 0);
    if (!eps_text) throw ConfigError("Z2 preset needs eps");
    Rational eps = rational(*eps_text, "Z2 eps");
    int k = int(count(arg("k", 1).value_or("1"), "Z2 k"));
    if (k != 1 && k != 2) throw ConfigError("Z2 trace index k must be 1 or 2");
    if (z2_eps) *z2_eps = eps;
    return builtin_Z2(eps, k);
  }
  if (name == "Zl") {
    auto l_text = arg("l", 0);
    if (!l_text) throw ConfigError("Zl preset needs l");
    std::size_t l = count(*l_text, "Zl l");
    if (l == 0) throw ConfigError("Zl needs l >= 1");
    auto trace = arg("trace", 1);
    if (!trace || *trace == "top") return builtin_Zl_top(l);
    return builtin_Zl(l, rationals(*trace, "Zl trace"));
  }
  throw ConfigError("unknown algebra preset '" + name + "' (expected R, Z2, Zl)");
}

RunConfig parse_config(const std::string& text, const std::string& base_dir) {
  pt::ptree tree;
  try {
    std::istringstream in(text);
    pt::ini_parser::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError(std::string("config syntax: ") + e.what());
  }
  auto section = [&](const std::string& name) -> const pt::ptree& {
    static const pt::ptree empty;
    auto it = tree.find(name);
    return it == tree.not_found() ? empty : it->second;
  };
  auto resolve = [&](const std::string& p) {
    std::filesystem::path path(p);
    return path.is_absolute() ? path.string() : (std::filesystem::path(base_dir) / path).string();
  };

  RunConfig cfg;
  const pt::ptree& alg = section("algebra");
  if (auto preset = get(alg, "preset")) {
    cfg.algebra = std::make_shared<const ExactAlgebra>(parse_preset(*preset, &cfg.z2_eps));
  } else if (auto def = get(alg, "definition")) {
    std::ifstream f(resolve(*def));
    if (!f) throw ConfigError("cannot open algebra definition '" + *def + "'");
    pt::ptree defs;
    try {
      pt::ini_parser::read_ini(f, defs);
    } catch (const pt::ini_parser_error& e) {
      throw ConfigError(std::string("algebra definition syntax: ") + e.what());
    }
    auto it = defs.find("algebra");
    cfg.algebra = std::make_shared<const ExactAlgebra>(algebra_from_keys(it == defs.not_found() ? defs : it->second));
  } else {
    cfg.algebra = std::make_shared<const ExactAlgebra>(algebra_from_keys(alg));
  }
  cfg.traces = parse_traces(get(alg, "traces").value_or("basic"), cfg);

  const pt::ptree& inertia = section("inertia");
  cfg.zeta = element(get(inertia, "zeta").value_or("zero"), *cfg.algebra, "inertia.zeta");
  for (std::size_t k = 0;; ++k) {
    auto a = get(inertia, "alpha" + std::to_string(k));
    if (!a) break;
    cfg.inertia.alpha.push_back(element(*a, *cfg.algebra, "inertia.alpha" + std::to_string(k)));
  }
  cfg.has_inertia = !cfg.inertia.alpha.empty();
  for (const auto& [key, value] : inertia) {
    (void)value;
    if (key == "zeta") continue;
    static const std::regex alpha_key(R"(alpha([0-9]+))");
    std::smatch km;
    if (!std::regex_match(key, km, alpha_key) || std::stoul(km[1]) >= cfg.inertia.alpha.size())
      throw ConfigError("[inertia] unexpected key '" + key + "' (coefficients must be alpha0, alpha1, … without gaps)");
  }

  const pt::ptree& domain = section("domain");
  if (auto v = get(domain, "L")) cfg.length = real(*v, "domain.L");
  if (auto v = get(domain, "N")) cfg.n = count(*v, "domain.N");
  if (!(cfg.length > 0)) throw ConfigError("domain.L must be positive");
  if (cfg.n < 16 || (cfg.n & (cfg.n - 1)) != 0) throw ConfigError("domain.N must be a power of two >= 16");

  const pt::ptree& time = section("time");
  if (auto v = get(time, "dt")) cfg.time.dt = real(*v, "time.dt");
  if (auto v = get(time, "t_end")) cfg.time.t_end = real(*v, "time.t_end");
  if (!(cfg.time.dt > 0)) throw ConfigError("time.dt must be positive");
  if (!(cfg.time.t_end > 0)) throw ConfigError("time.t_end must be positive");
  if (auto v = get(time, "scheme")) {
    try {
      cfg.scheme = parse_scheme(*v);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string("time.scheme: ") + e.what());
    }
  }

  const pt::ptree& init = section("initial");
  const std::size_t l = cfg.algebra->dim();
  InitialSpec& ini = cfg.initial;
  ini.profile = get(init, "profile").value_or("zero");
  ini.variable = get(init, "variable").value_or("u");
  if (ini.variable != "u" && ini.variable != "m") throw ConfigError("initial.variable must be u or m");
  auto doubles = [&](const std::string& key, double fallback) {
    std::vector<double> out(l, fallback);
    if (auto v = get(init, key)) {
      auto tokens = split_tokens(*v);
      if (tokens.size() != l) throw ConfigError("initial." + key + ": expected " + std::to_string(l) + " components");
      for (std::size_t c = 0; c < l; ++c) out[c] = real(tokens[c], "initial." + key);
    }
    return out;
  };
  if (ini.profile == "sine") {
    ini.k = int(count(get(init, "k").value_or("1"), "initial.k"));
    ini.amplitude = doubles("amplitude", 1.0);
    ini.offset = doubles("offset", 0.0);
  } else if (ini.profile == "sech2") {
    ini.c = real(get(init, "c").value_or("1"), "initial.c");
    if (!(ini.c > 0)) throw ConfigError("initial.c must be positive");
    ini.x0 = real(get(init, "x0").value_or(std::to_string(cfg.length / 2)), "initial.x0");
    const std::size_t comp = count(get(init, "component").value_or("1"), "initial.component");
    if (comp < 1 || comp > l) throw ConfigError("initial.component must be between 1 and " + std::to_string(l));
    ini.component = comp - 1;
  } else if (ini.profile == "file") {
    auto p = get(init, "path");
    if (!p) throw ConfigError("initial.path is required for the file profile");
    ini.path = resolve(*p);
  } else if (ini.profile != "zero") {
    throw ConfigError("unknown initial profile '" + ini.profile + "' (expected zero, sine, sech2, file)");
  }

  const pt::ptree& out = section("output");
  if (auto v = get(out, "path")) cfg.output.path = resolve(*v);
  if (auto v = get(out, "every")) cfg.output.every = count(*v, "output.every");
  if (cfg.output.every == 0) throw ConfigError("output.every must be at least 1");
  if (auto v = get(out, "fields")) {
    if (*v == "true" || *v == "1" || *v == "yes")
      cfg.output.fields = true;
    else if (*v == "false" || *v == "0" || *v == "no")
      cfg.output.fields = false;
    else
      throw ConfigError("output.fields must be true or false");
  }
  cfg.time.every = cfg.output.every;
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot open config '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_config(ss.str(), std::filesystem::path(path).parent_path().string());
}

GridField initial_field(const RunConfig& cfg) {
  const std::size_t l = cfg.algebra->dim();
  GridField f(cfg.n, l, cfg.length);
  const InitialSpec& ini = cfg.initial;
  const double two_pi = 2.0 * 3.141592653589793;
  if (ini.profile == "sine") {
    for (std::size_t j = 0; j < cfg.n; ++j)
      for (std::size_t c = 0; c < l; ++c)
        f(j, c) = ini.offset[c] + ini.amplitude[c] * std::sin(two_pi * ini.k * f.x(j) / cfg.length);
  } else if (ini.profile == "sech2") {
    for (std::size_t j = 0; j < cfg.n; ++j) {
      double s = 1.0 / std::cosh(std::sqrt(ini.c) * (f.x(j) - ini.x0) / 2.0);
      f(j, ini.component) = ini.c * s * s;
    }
  } else if (ini.profile == "file") {
    std::ifstream in(ini.path);
    if (!in) throw ConfigError("cannot open initial data '" + ini.path + "'");
    std::string line;
    std::size_t row = 0;
    while (std::getline(in, line)) {
      line = trim(line);
      if (line.empty() || line[0] == '#') continue;
      auto tokens = split_tokens(line);
      if (tokens.size() != l) throw ConfigError("initial data rows need " + std::to_string(l) + " columns");
      if (row >= cfg.n) throw ConfigError("initial data has more than N rows");
      for (std::size_t c = 0; c < l; ++c) f(row, c) = real(tokens[c], "initial data");
      ++row;
    }
    if (row != cfg.n) throw ConfigError("initial data has " + std::to_string(row) + " rows, expected N");
  }
  return f;
}

}  // namespace fvir::cli
