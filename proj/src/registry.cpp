#include "siegel/registry.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <fstream>
#include <regex>
#include <sstream>

#include "siegel/zoo.hpp"

namespace siegel {

using nlohmann::json;

namespace {

std::string strip_spaces(const std::string& s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

Field parse_field(const std::string& s) {
  if (s == "C" || s == "c") return Field::Complex;
  if (s == "H" || s == "h") return Field::Quaternion;
  throw ConfigError("unknown field '" + s + "' (expected C or H)");
}

std::vector<std::string> key_args(const std::string& key, const std::string& head) {
  const std::regex re(head + R"(\(([^()]*)\))");
  std::smatch m;
  if (!std::regex_match(key, m, re)) return {};
  std::vector<std::string> out;
  std::stringstream ss(m[1].str());
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

int to_int(const std::string& s, const std::string& key) {
  try {
    std::size_t pos = 0;
    const int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("bad integer '" + s + "' in domain key " + key);
  }
}

struct ParsedKey {
  enum { Heisenberg, Ex1, Ex2 } kind;
  int n = 1;
  MatrixDomainSpec ex1;
  SpinDomainSpec ex2;
};

ParsedKey parse_key(const std::string& raw) {
  const std::string key = strip_spaces(raw);
  ParsedKey pk{};
  if (auto a = key_args(key, "heisenberg"); a.size() == 1) {
    pk.kind = ParsedKey::Heisenberg;
    pk.n = to_int(a[0], key);
    if (pk.n < 1) throw ConfigError("heisenberg(n) needs n >= 1");
    return pk;
  }
  if (auto a = key_args(key, "ex1"); a.size() == 4) {
    pk.kind = ParsedKey::Ex1;
    pk.ex1 = {parse_field(a[0]), to_int(a[1], key), to_int(a[2], key), to_int(a[3], key)};
    try {
      pk.ex1.validate();
    } catch (const ArgumentError& e) {
      throw ConfigError(e.what());
    }
    return pk;
  }
  if (auto a = key_args(key, "ex2"); a.size() == 3) {
    pk.kind = ParsedKey::Ex2;
    pk.ex2 = {to_int(a[0], key), to_int(a[1], key), to_int(a[2], key)};
    try {
      pk.ex2.validate();
    } catch (const ArgumentError& e) {
      throw ConfigError(e.what());
    }
    return pk;
  }
  throw ConfigError("unknown domain key '" + raw + "'");
}

std::vector<double> to_std(const RVec& v) { return {v.data(), v.data() + v.size()}; }

// Scalars are promoted to one-element arrays so that TOML and JSON inputs read alike.
std::vector<double> number_list(const json& j, const std::string& what) {
  std::vector<double> out;
  if (j.is_number()) {
    out.push_back(j.get<double>());
    return out;
  }
  if (!j.is_array()) throw ConfigError(what + ": expected a number or an array of numbers");
  for (const auto& x : j) {
    if (!x.is_number()) throw ConfigError(what + ": expected numbers");
    out.push_back(x.get<double>());
  }
  return out;
}

RVec number_vector(const json& j, const std::string& what, Eigen::Index expected) {
  const auto v = number_list(j, what);
  if (expected >= 0 && Eigen::Index(v.size()) != expected) {
    throw ConfigError(what + ": expected " + std::to_string(expected) + " components, got " +
                      std::to_string(v.size()));
  }
  return Eigen::Map<const RVec>(v.data(), Eigen::Index(v.size()));
}

template <class T>
T get_or(const json& j, const char* key, T fallback) {
  if (!j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw ConfigError(std::string("bad value for '") + key + "'");
  }
}

OmegaCone parse_cone(const std::string& raw) {
  const std::string s = strip_spaces(raw);
  if (s == "half_line") return OmegaCone::half_line();
  if (s == "generated") return OmegaCone(OmegaCone::GeneratedInterior{});
  if (auto a = key_args(s, "positive_definite"); a.size() == 2) {
    return OmegaCone::positive_definite(parse_field(a[0]), to_int(a[1], s));
  }
  if (auto a = key_args(s, "spin"); a.size() == 1) return OmegaCone::spin(to_int(a[0], s));
  throw ConfigError("unknown cone '" + raw + "'");
}

std::shared_ptr<const SiegelSpec> inline_domain(const json& j) {
  const int n = get_or<int>(j, "n", -1);
  const int m = get_or<int>(j, "m", -1);
  if (n < 0 || m < 1) throw ConfigError("inline domain needs n >= 0 and m >= 1");
  if (!j.contains("matrices")) throw ConfigError("inline domain needs 'matrices'");
  const auto flat = number_list(j.at("matrices"), "matrices");
  if (flat.size() != std::size_t(2) * m * n * n) {
    throw ConfigError("matrices: expected " + std::to_string(2 * m * n * n) + " numbers (row-major re, im pairs)");
  }
  std::vector<CMat> mats;
  std::size_t pos = 0;
  for (int k = 0; k < m; ++k) {
    CMat a(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c, pos += 2) a(r, c) = cplx(flat[pos], flat[pos + 1]);
    mats.push_back(std::move(a));
  }
  const OmegaCone omega = parse_cone(get_or<std::string>(j, "cone", "generated"));
  RVec base = j.contains("base_point") ? number_vector(j.at("base_point"), "base_point", m) : RVec::Ones(m);
  try {
    HermitianForm form(n, std::move(mats));
    return std::make_shared<const SiegelSpec>(make_siegel_spec(get_or<std::string>(j, "name", "inline"),
                                                               std::move(form), omega, std::move(base),
                                                               get_or<int>(j, "rank", 1)));
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  } catch (const std::domain_error& e) {
    throw ConfigError(e.what());
  }
}

// CLI11 reports every value as a list of strings; recover JSON scalars.
json toml_scalar(const std::string& s) {
  if (s == "true") return true;
  if (s == "false") return false;
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos == s.size()) return v;
  } catch (const std::exception&) {
  }
  return s;
}

}  // namespace

std::shared_ptr<const SiegelSpec> builtin_domain(const std::string& key) {
  const ParsedKey pk = parse_key(key);
  switch (pk.kind) {
    case ParsedKey::Heisenberg:
      return std::make_shared<const SiegelSpec>(heisenberg_domain(pk.n));
    case ParsedKey::Ex1:
      return std::make_shared<const SiegelSpec>(ex1_domain(pk.ex1));
    case ParsedKey::Ex2:
      return std::make_shared<const SiegelSpec>(ex2_domain(pk.ex2));
  }
  throw ConfigError("unreachable");
}

std::vector<std::string> catalog_keys() {
  return {"heisenberg(1)", "heisenberg(2)", "ex1(C,1,1,1)", "ex1(C,2,1,2)", "ex1(C,2,3,1)",
          "ex1(H,1,1,1)",  "ex1(H,2,2,2)",  "ex2(1,1,1)",   "ex2(1,2,1)",   "ex2(2,2,2)"};
}

json domain_metadata(const std::string& key) {
  const ParsedKey pk = parse_key(key);
  const auto spec = builtin_domain(key);
  json j;
  j["key"] = spec->name;
  j["n"] = spec->n();
  j["m"] = spec->m();
  j["r"] = spec->rank;
  j["omega"] = spec->omega.describe();
  j["base_point"] = to_std(spec->base_point);
  j["spans_F"] = spans_F(*spec->cone);
  Rng rng(sub_seed(0x5eed, std::hash<std::string>{}(spec->name)));
  double worst = 0.0;
  switch (pk.kind) {
    case ParsedKey::Heisenberg:
      j["b"] = std::vector<double>{-double(pk.n)};
      j["b_max_rel_error"] = 0.0;
      break;
    case ParsedKey::Ex1: {
      const BCalibration bc = b_vector(pk.ex1);
      j["b"] = to_std(bc.b);
      j["b_max_rel_error"] = bc.max_rel_error;
      for (int i = 0; i < 100; ++i) {
        const TriangularElement t = random_triangular(pk.ex1.field, pk.ex1.r, rng);
        worst = std::max(worst, ex1_equivariance_residual(pk.ex1, t, random_E(pk.ex1, rng)));
      }
      break;
    }
    case ParsedKey::Ex2: {
      const BCalibration bc = ex2_b_vector(pk.ex2);
      j["b"] = to_std(bc.b);
      j["b_max_rel_error"] = bc.max_rel_error;
      for (int i = 0; i < 100; ++i) {
        const SpinTriangular t = random_spin_triangular(pk.ex2.q, rng);
        worst = std::max(worst, ex2_equivariance_residual(pk.ex2, t, random_spin_E(pk.ex2, rng)));
      }
      break;
    }
  }
  j["equivariance_max_residual"] = worst;
  j["equivariant"] = worst <= kAlgebraTol;
  return j;
}

std::shared_ptr<const SiegelSpec> domain_from_json(const json& j) {
  if (j.is_string()) return builtin_domain(j.get<std::string>());
  if (j.is_object()) return inline_domain(j);
  throw ConfigError("domain: expected a builtin key or an inline description");
}

json parse_config_text(const std::string& text, bool toml) {
  if (!toml) {
    try {
      return json::parse(text);
    } catch (const json::parse_error& e) {
      throw ConfigError(std::string("JSON parse error: ") + e.what());
    }
  }
  std::istringstream in(text);
  std::vector<CLI::ConfigItem> items;
  try {
    items = CLI::ConfigTOML().from_config(in);
  } catch (const CLI::Error& e) {
    throw ConfigError(std::string("TOML parse error: ") + e.what());
  }
  json out = json::object();
  for (const auto& item : items) {
    if (item.name == "++" || item.name == "--") continue;
    json* node = &out;
    for (const auto& parent : item.parents) node = &(*node)[parent];
    json value;
    if (item.inputs.size() == 1) {
      value = toml_scalar(item.inputs.front());
    } else {
      value = json::array();
      for (const auto& s : item.inputs) value.push_back(toml_scalar(s));
    }
    (*node)[item.name] = value;
  }
  return out;
}

json load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();
  bool toml;
  if (path.size() >= 5 && path.substr(path.size() - 5) == ".toml") {
    toml = true;
  } else if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") {
    toml = false;
  } else {
    const auto first = text.find_first_not_of(" \t\r\n");
    toml = first == std::string::npos || text[first] != '{';
  }
  return parse_config_text(text, toml);
}

ExperimentConfig parse_experiment(const json& j) {
  if (!j.is_object()) throw ConfigError("config must be an object");
  ExperimentConfig cfg;
  cfg.domain = domain_from_json(j.contains("domain") ? j.at("domain") : json("heisenberg(1)"));
  cfg.domain_name = cfg.domain->name;
  const int m = cfg.domain->m();

  if (j.contains("p")) {
    cfg.p.clear();
    const json& pj = j.at("p");
    auto read_p = [&](const json& x) {
      if (x.is_string() && (x == "inf" || x == "infinity")) return kInfP;
      if (!x.is_number() || !(x.get<double>() > 0.0)) throw ConfigError("p values must be positive or \"inf\"");
      return x.get<double>();
    };
    if (pj.is_array()) {
      for (const auto& x : pj) cfg.p.push_back(read_p(x));
    } else {
      cfg.p.push_back(read_p(pj));
    }
    if (cfg.p.empty()) throw ConfigError("p list is empty");
  }

  if (j.contains("function")) {
    const json& f = j.at("function");
    cfg.function.kind = get_or<std::string>(f, "kind", "kernel");
    cfg.function.exponent = get_or<int>(f, "exponent", 0);
    cfg.function.s = get_or<double>(f, "s", 0.5);
    if (f.contains("u")) cfg.function.u = number_vector(f.at("u"), "function.u", m);
    cfg.function.c = cplx(get_or<double>(f, "re", 0.0), get_or<double>(f, "im", 0.0));
    if (cfg.function.kind != "kernel" && cfg.function.kind != "control" && cfg.function.kind != "constant") {
      throw ConfigError("function.kind must be kernel, control or constant");
    }
  }
  if (cfg.function.u.size() == 0) cfg.function.u = RVec::Ones(m);

  cfg.grid.h0 = 0.25 * cfg.domain->base_point;
  cfg.grid.hdir = cfg.domain->base_point;
  cfg.grid.t = {0.0, 0.25, 0.75, 1.75};
  if (j.contains("grid")) {
    const json& g = j.at("grid");
    if (g.contains("h0")) cfg.grid.h0 = number_vector(g.at("h0"), "grid.h0", m);
    if (g.contains("hdir")) cfg.grid.hdir = number_vector(g.at("hdir"), "grid.hdir", m);
    if (g.contains("t")) cfg.grid.t = number_list(g.at("t"), "grid.t");
    if (cfg.grid.t.empty()) throw ConfigError("grid.t is empty");
  }

  if (j.contains("sampler")) {
    const json& s = j.at("sampler");
    cfg.sampler.samples = get_or<std::int64_t>(s, "samples", cfg.sampler.samples);
    cfg.sampler.blocks = get_or<int>(s, "blocks", cfg.sampler.blocks);
    cfg.sampler.seed = get_or<std::uint64_t>(s, "seed", cfg.sampler.seed);
    cfg.sampler.workers = get_or<int>(s, "workers", cfg.sampler.workers);
  }
  if (cfg.sampler.samples < 1 || cfg.sampler.blocks < 2 || cfg.sampler.workers < 1) {
    throw ConfigError("sampler: need samples >= 1, blocks >= 2, workers >= 1");
  }

  if (j.contains("disc")) {
    const json& d = j.at("disc");
    cfg.disc.count = get_or<int>(d, "count", cfg.disc.count);
    cfg.disc.n_theta = get_or<int>(d, "n_theta", cfg.disc.n_theta);
    cfg.disc.coeff_scale = get_or<double>(d, "coeff_scale", cfg.disc.coeff_scale);
    cfg.disc.hpp_scale = get_or<double>(d, "hpp_scale", cfg.disc.hpp_scale);
    if (cfg.disc.count < 1 || cfg.disc.n_theta < 1 || !(cfg.disc.hpp_scale > 0.0)) {
      throw ConfigError("disc: need count >= 1, n_theta >= 1, hpp_scale > 0");
    }
  }

  if (j.contains("cone")) {
    const json& c = j.at("cone");
    cfg.cone.vectors = get_or<int>(c, "vectors", cfg.cone.vectors);
    cfg.cone.decompose_points = get_or<int>(c, "decompose_points", cfg.cone.decompose_points);
    cfg.cone.dual_probes = get_or<int>(c, "dual_probes", cfg.cone.dual_probes);
  }

  cfg.corollary.direction = cfg.domain->base_point;
  if (j.contains("corollary")) {
    const json& c = j.at("corollary");
    if (c.contains("direction")) cfg.corollary.direction = number_vector(c.at("direction"), "corollary.direction", m);
    if (c.contains("to_zero")) cfg.corollary.to_zero = number_list(c.at("to_zero"), "corollary.to_zero");
    if (c.contains("global")) cfg.corollary.global = number_list(c.at("global"), "corollary.global");
    if (cfg.corollary.to_zero.empty()) throw ConfigError("corollary.to_zero is empty");
  }
  return cfg;
}

TestFunction make_function(const ExperimentConfig& cfg, double p) {
  const auto& spec = *cfg.domain;
  const int exponent =
      cfg.function.exponent > 0 ? cfg.function.exponent : kernel_exponent_for(spec.n(), spec.m(), p);
  if (cfg.function.kind == "constant") return TestFunction::constant(cfg.domain, cfg.function.c);
  if (cfg.function.kind == "control") {
    return TestFunction::scaled_control(cfg.domain, exponent, cfg.function.s, cfg.function.u);
  }
  return TestFunction::dual_cone_kernel(cfg.domain, exponent);
}

}  // namespace siegel
