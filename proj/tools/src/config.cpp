#include "bosonlab/config.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "bosonhopf/errors.hpp"
#include "bosonhopf/scalars.hpp"

namespace bosonlab {

using bosonhopf::AlgebraSpec;
using bosonhopf::Family;

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

const std::vector<std::string>& family_params(Family f) {
  static const std::vector<std::string> b = {"alpha", "beta"}, bq = {"alpha", "beta", "q"}, bbar = {"sigma", "tau"},
                                        bbarq = {"sigma", "tau", "q"}, h = {"delta", "nu", "rho"};
  switch (f) {
    case Family::B: return b;
    case Family::Bq: return bq;
    case Family::Bbar: return bbar;
    case Family::Bbarq: return bbarq;
    case Family::H: return h;
  }
  return b;
}

const std::vector<std::string>& all_params() {
  static const std::vector<std::string> p = {"alpha", "beta", "sigma", "tau", "delta", "nu", "rho", "q"};
  return p;
}

bool contains(const std::vector<std::string>& xs, const std::string& x) {
  return std::find(xs.begin(), xs.end(), x) != xs.end();
}

class Reader {
 public:
  explicit Reader(std::string source) : source_(std::move(source)) {}

  [[noreturn]] void fail(const std::string& what) const {
    throw ConfigError(source_ + ":" + std::to_string(line_) + ": " + what);
  }

  void set_line(int l) { line_ = l; }

  double number(const std::string& key, const std::string& text) const {
    char* end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (text.empty() || *end != '\0') fail("'" + key + "' expects a number, got '" + text + "'");
    return v;
  }

  int integer(const std::string& key, const std::string& text, int min) const {
    const double v = number(key, text);
    if (v != static_cast<int>(v) || v < min) fail("'" + key + "' expects an integer >= " + std::to_string(min));
    return static_cast<int>(v);
  }

  std::string suite(const std::string& key, const std::string& name) const {
    if (!contains(known_suites(), name)) fail("unknown suite '" + name + "' in '" + key + "'");
    return name;
  }

 private:
  std::string source_;
  int line_ = 0;
};

void validate(const Reader& rd, Scenario& s, bool has_family) {
  if (!has_family) rd.fail("scenario '" + s.name + "' has no family");
  if (s.suites.empty()) rd.fail("scenario '" + s.name + "' lists no suites");
  const auto& need = family_params(s.family);
  for (const std::string& p : need) {
    if (s.grid.count(p)) continue;
    if (p == "rho") {
      s.grid["rho"] = {0.0};
      continue;
    }
    rd.fail("scenario '" + s.name + "' needs parameter '" + p + "' for family " + bosonhopf::to_string(s.family));
  }
  for (auto it = s.grid.begin(); it != s.grid.end();) {
    if (contains(need, it->first)) {
      ++it;
      continue;
    }
    s.warnings.push_back("parameter '" + it->first + "' ignored: family " + bosonhopf::to_string(s.family) +
                         (it->first == "q" ? " is undeformed" : " does not use it"));
    it = s.grid.erase(it);
  }
}

}  // namespace

RunConfig parse_config(std::istream& in, const std::string& source) {
  RunConfig cfg;
  Reader rd(source);
  std::string raw;
  int line = 0;
  Scenario* cur = nullptr;
  bool has_family = false;
  auto close = [&]() {
    if (cur) validate(rd, *cur, has_family);
  };
  while (std::getline(in, raw)) {
    rd.set_line(++line);
    const auto hash = raw.find('#');
    const std::string text = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (text.empty()) continue;
    if (text.front() == '[') {
      if (text.back() != ']') rd.fail("unterminated section header");
      const std::string inner = trim(text.substr(1, text.size() - 2));
      if (inner.rfind("scenario", 0) != 0) rd.fail("unknown section '" + inner + "' (expected [scenario NAME])");
      const std::string name = trim(inner.substr(8));
      if (name.empty()) rd.fail("scenario needs a name");
      for (const Scenario& s : cfg.scenarios)
        if (s.name == name) rd.fail("duplicate scenario '" + name + "'");
      close();
      cfg.scenarios.push_back({});
      cur = &cfg.scenarios.back();
      cur->name = name;
      has_family = false;
      continue;
    }
    const auto eq = text.find('=');
    if (eq == std::string::npos) rd.fail("expected 'key = value'");
    const std::string key = trim(text.substr(0, eq));
    const std::string value = trim(text.substr(eq + 1));
    if (value.empty()) rd.fail("'" + key + "' has no value");

    if (!cur) {
      if (key == "jobs") cfg.jobs = rd.integer(key, value, 1);
      else if (key == "ybe_jobs") cfg.ybe_jobs = rd.integer(key, value, 1);
      else if (key == "output") cfg.output = value;
      else rd.fail("unknown global key '" + key + "'");
      continue;
    }
    Scenario& s = *cur;
    if (key == "family") {
      try {
        s.family = bosonhopf::family_from_string(value);
      } catch (const std::invalid_argument& e) {
        rd.fail(e.what());
      }
      has_family = true;
    } else if (contains(all_params(), key)) {
      std::vector<double> vals;
      for (const std::string& v : split_list(value)) vals.push_back(rd.number(key, v));
      if (vals.empty()) rd.fail("'" + key + "' lists no values");
      s.grid[key] = vals;
    } else if (key == "dim") {
      s.dim = rd.integer(key, value, 2);
    } else if (key.rfind("dim.", 0) == 0) {
      s.suite_dims[rd.suite(key, key.substr(4))] = rd.integer(key, value, 2);
    } else if (key == "tol") {
      s.tol = rd.number(key, value);
    } else if (key.rfind("tol.", 0) == 0) {
      s.suite_tols[rd.suite(key, key.substr(4))] = rd.number(key, value);
    } else if (key == "suites") {
      for (const std::string& v : split_list(value))
        if (!contains(s.suites, v)) s.suites.push_back(rd.suite(key, v));
    } else if (key == "basis") {
      if (value == "auto") s.basis = BasisMode::automatic;
      else if (value == "unitary") s.basis = BasisMode::unitary;
      else if (value == "unnormalized") s.basis = BasisMode::unnormalized;
      else rd.fail("basis must be auto, unitary or unnormalized");
    } else if (key == "lambda1") {
      s.lambda1 = rd.number(key, value);
    } else if (key == "lambda4") {
      s.lambda4 = rd.number(key, value);
    } else if (key.rfind("iso.", 0) == 0) {
      const std::string p = key.substr(4);
      if (!contains(all_params(), p)) rd.fail("unknown iso partner parameter '" + p + "'");
      s.iso[p] = rd.number(key, value);
    } else {
      rd.fail("unknown scenario key '" + key + "'");
    }
  }
  close();
  if (cfg.scenarios.empty()) throw ConfigError(source + ": no [scenario NAME] blocks");
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config '" + path + "'");
  return parse_config(in, path);
}

std::vector<GridPoint> grid_expand(const Scenario& s) {
  const auto& names = family_params(s.family);
  std::vector<GridPoint> out;
  std::vector<std::size_t> idx(names.size(), 0);
  for (;;) {
    std::map<std::string, double> v;
    for (std::size_t i = 0; i < names.size(); ++i) v[names[i]] = s.grid.at(names[i])[idx[i]];
    GridPoint p;
    p.index = static_cast<int>(out.size());
    switch (s.family) {
      case Family::B: p.spec = AlgebraSpec::b(v["alpha"], v["beta"]); break;
      case Family::Bq: p.spec = AlgebraSpec::bq(v["alpha"], v["beta"], v["q"]); break;
      case Family::Bbar: p.spec = AlgebraSpec::bbar(v["sigma"], v["tau"]); break;
      case Family::Bbarq: p.spec = AlgebraSpec::bbarq(v["sigma"], v["tau"], v["q"]); break;
      case Family::H: p.spec = AlgebraSpec::h(v["delta"], v["nu"], v["rho"]); break;
    }
    if (bosonhopf::is_deformed(s.family) && !bosonhopf::QValue::valid(v["q"])) {
      p.skip_reason = "generic q required (q > 0, q != 1)";
    } else {
      try {
        bosonhopf::build_rep(p.spec, 2);
      } catch (const bosonhopf::ProvisoError& e) {
        p.skip_reason = e.what();
      }
    }
    out.push_back(p);
    std::size_t k = names.size();
    while (k > 0) {
      --k;
      if (++idx[k] < s.grid.at(names[k]).size()) break;
      idx[k] = 0;
      if (k == 0) return out;
    }
    if (names.empty()) return out;
  }
}

}  // namespace bosonlab
