#ifndef GLAB_IO_HPP
#define GLAB_IO_HPP

#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

#include "glab/action.hpp"
#include "glab/multiplier.hpp"
#include "glab/theorems.hpp"

namespace glab {

using nlohmann::json;

/// Structural problems in an input file (wrong types, unknown identifiers).
struct FormatError : std::runtime_error {
  explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

/// A structurally well-formed groupoid file that fails the axioms.
struct InvalidGroupoid : std::runtime_error {
  std::vector<std::string> violations;
  explicit InvalidGroupoid(std::vector<std::string> v)
      : std::runtime_error(v.empty() ? "invalid groupoid" : v.front()), violations(std::move(v)) {}
};

/// Norms are printed with twelve digits after the decimal point.
inline std::string format_norm(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12f", x);
  return buf;
}

inline json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw FormatError("cannot parse '" + path + "': " + e.what());
  }
  return j;
}

// ---------------------------------------------------------------------------
// Groupoid files:
// {"arrows": [...], "source": {a: u}, "range": {...}, "inverse": {...},
//  "compose": [[a, b, ab], ...]}

inline NamedRawGroupoid parse_named_raw_groupoid(const json& j) {
  NamedRawGroupoid raw;
  try {
    if (!j.is_object()) throw FormatError("groupoid file must be a JSON object");
    for (const auto& a : j.at("arrows")) raw.names.push_back(a.get<std::string>());
    for (const char* key : {"source", "range", "inverse"}) {
      const json& m = j.at(key);
      if (!m.is_object()) throw FormatError(std::string(key) + " must be an object");
      auto& target = key == std::string("source") ? raw.source
                     : key == std::string("range") ? raw.range
                                                   : raw.inverse;
      for (auto it = m.begin(); it != m.end(); ++it)
        target[it.key()] = it.value().get<std::string>();
    }
    for (const auto& t : j.at("compose")) {
      if (!t.is_array() || t.size() != 3)
        throw FormatError("compose entries must be [first, second, product] triples");
      raw.compose.push_back(
          {t[0].get<std::string>(), t[1].get<std::string>(), t[2].get<std::string>()});
    }
  } catch (const json::exception& e) {
    throw FormatError(std::string("malformed groupoid file: ") + e.what());
  }
  return raw;
}

inline GroupoidPtr load_groupoid(const json& j) {
  GroupoidValidation v = validate_groupoid(parse_named_raw_groupoid(j));
  if (!v.ok()) throw InvalidGroupoid(v.violations);
  return v.groupoid;
}

inline json groupoid_to_json(const FiniteGroupoid& G) {
  json j;
  j["arrows"] = G.names();
  json src = json::object(), rng = json::object(), inv = json::object();
  for (int g = 0; g < G.size(); ++g) {
    src[G.name(g)] = G.name(G.source(g));
    rng[G.name(g)] = G.name(G.range(g));
    inv[G.name(g)] = G.name(G.inverse(g));
  }
  j["source"] = src;
  j["range"] = rng;
  j["inverse"] = inv;
  json comp = json::array();
  for (int g = 0; g < G.size(); ++g)
    for (int h = 0; h < G.size(); ++h)
      if (G.composable(g, h))
        comp.push_back(json::array({G.name(g), G.name(h), G.name(G.compose(g, h))}));
  j["compose"] = comp;
  return j;
}

// ---------------------------------------------------------------------------
// Action files:
// {"elements": [...], "cayley": [[int indices]], "space": [...],
//  "act": {g: {x: y}}}

inline GroupAction parse_action(const json& j) {
  GroupAction a;
  try {
    for (const auto& e : j.at("elements")) a.group.elements.push_back(e.get<std::string>());
    for (const auto& row : j.at("cayley")) {
      a.group.mult.emplace_back();
      for (const auto& v : row) a.group.mult.back().push_back(v.get<int>());
    }
    for (const auto& x : j.at("space")) a.space.push_back(x.get<std::string>());
    std::unordered_map<std::string, int> gi, xi;
    for (std::size_t i = 0; i < a.group.elements.size(); ++i)
      gi[a.group.elements[i]] = static_cast<int>(i);
    for (std::size_t i = 0; i < a.space.size(); ++i) xi[a.space[i]] = static_cast<int>(i);
    a.act.assign(a.group.elements.size(), std::vector<int>(a.space.size(), -1));
    const json& act = j.at("act");
    for (auto it = act.begin(); it != act.end(); ++it) {
      auto g = gi.find(it.key());
      if (g == gi.end()) throw FormatError("act references unknown element '" + it.key() + "'");
      for (auto px = it.value().begin(); px != it.value().end(); ++px) {
        auto x = xi.find(px.key());
        auto y = xi.find(px.value().get<std::string>());
        if (x == xi.end() || y == xi.end())
          throw FormatError("act references an unknown point");
        a.act[g->second][x->second] = y->second;
      }
    }
    for (const auto& row : a.act)
      for (int v : row)
        if (v < 0) throw FormatError("act table is incomplete");
  } catch (const json::exception& e) {
    throw FormatError(std::string("malformed action file: ") + e.what());
  }
  auto bad = validate_action(a);
  if (!bad.empty()) throw InvalidGroupoid(bad);
  return a;
}

// ---------------------------------------------------------------------------
// Coefficient maps: {"name": [re, im]} with plain numbers accepted too.

inline Eigen::VectorXcd parse_coefficients(const json& m, const FiniteGroupoid& G,
                                           const char* what) {
  Eigen::VectorXcd c = Eigen::VectorXcd::Zero(G.size());
  if (!m.is_object()) throw FormatError(std::string(what) + " must be an object");
  for (auto it = m.begin(); it != m.end(); ++it) {
    const int idx = G.index_of(it.key());
    if (idx < 0)
      throw FormatError(std::string(what) + " references unknown arrow '" + it.key() + "'");
    const json& v = it.value();
    try {
      if (v.is_array() && v.size() == 2)
        c(idx) = Complex{v[0].get<double>(), v[1].get<double>()};
      else
        c(idx) = Complex{v.get<double>(), 0.0};
    } catch (const json::exception& e) {
      throw FormatError(std::string(what) + ": bad value for '" + it.key() + "': " + e.what());
    }
  }
  return c;
}

inline json coefficients_to_json(const FiniteGroupoid& G, const Eigen::VectorXcd& c) {
  json m = json::object();
  for (int g = 0; g < G.size(); ++g)
    if (c(g) != Complex{0.0, 0.0})
      m[G.name(g)] = json::array({c(g).real(), c(g).imag()});
  return m;
}

/// Function files carry {"coeffs": {...}} and may embed or point at the
/// groupoid they live on; when present it must agree with G.
inline ArrowFunction load_function(const json& j, GroupoidPtr G,
                                   const std::string& base_dir = "") {
  if (!j.is_object() || !j.contains("coeffs"))
    throw FormatError("function file must carry a 'coeffs' object");
  if (j.contains("groupoid")) {
    const json& g = j["groupoid"];
    GroupoidPtr other;
    if (g.is_string()) {
      std::string path = g.get<std::string>();
      if (!base_dir.empty() && !path.empty() && path.front() != '/')
        path = base_dir + "/" + path;
      other = load_groupoid(load_json_file(path));
    } else if (g.is_object()) {
      other = load_groupoid(g);
    } else {
      throw FormatError("'groupoid' must be a path or an inline object");
    }
    if (!other->same_tables(*G))
      throw FormatError("function file groupoid differs from the given groupoid");
  }
  return {G, parse_coefficients(j["coeffs"], *G, "coeffs")};
}

inline json function_to_json(const ArrowFunction& f) {
  json j;
  j["coeffs"] = coefficients_to_json(*f.G, f.coeffs);
  return j;
}

inline MultiplierSymbol load_multiplier(const json& j, GroupoidPtr G) {
  if (!j.is_object() || !j.contains("h"))
    throw FormatError("multiplier file must carry an 'h' object");
  return {G, parse_coefficients(j["h"], *G, "h")};
}

/// Net files: {"net": [multiplier objects...], "eps": e}, or a plain array
/// of multiplier objects with an {"eps": e} element mixed in.
inline FejerNet load_net(const json& j, GroupoidPtr G) {
  FejerNet net;
  net.eps = 1e-9;
  const json* list = nullptr;
  if (j.is_object() && j.contains("net")) {
    list = &j["net"];
    if (j.contains("eps")) net.eps = j["eps"].get<double>();
  } else if (j.is_array()) {
    list = &j;
  } else {
    throw FormatError("net file must carry a 'net' array");
  }
  for (const auto& entry : *list) {
    if (entry.is_object() && entry.contains("eps") && !entry.contains("h")) {
      net.eps = entry["eps"].get<double>();
      continue;
    }
    net.symbols.push_back(load_multiplier(entry, G));
  }
  if (net.symbols.empty()) throw FormatError("net file lists no multipliers");
  return net;
}

// ---------------------------------------------------------------------------
// Report serialization.

inline json matrix_to_json(const Eigen::MatrixXcd& M) {
  json rows = json::array();
  for (int i = 0; i < M.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < M.cols(); ++j) row.push_back(json::array({M(i, j).real(), M(i, j).imag()}));
    rows.push_back(row);
  }
  return rows;
}

inline json arrow_set_to_json(const FiniteGroupoid& G, const ArrowSet& S) {
  json names = json::array();
  for (int g : S.indices()) names.push_back(G.name(g));
  return names;
}

inline json gamma2_certificate_to_json(const Gamma2Certificate& c) {
  json j;
  j["value"] = c.value;
  j["lower"] = c.lower;
  j["upper"] = c.upper;
  j["gap"] = c.gap;
  j["iterations"] = c.iterations;
  j["psd_fast_path"] = c.psd_fast_path;
  j["primal_X"] = matrix_to_json(c.X);
  j["primal_Y"] = matrix_to_json(c.Y);
  j["dual_W"] = matrix_to_json(c.W);
  j["dual_p"] = std::vector<double>(c.p.data(), c.p.data() + c.p.size());
  j["dual_q"] = std::vector<double>(c.q.data(), c.q.data() + c.q.size());
  return j;
}

inline json inner_exact_to_json(const FiniteGroupoid& G, const InnerExactReport& r) {
  json j;
  j["theorem"] = "inner_exactness";
  json instances = json::array();
  for (const auto& inst : r.instances) {
    json e;
    e["F"] = arrow_set_to_json(G, inst.F);
    e["arrows_restricted_F"] = inst.arrows_restricted_F;
    e["arrows_restricted_U"] = inst.arrows_restricted_U;
    e["kernel_dim"] = inst.kernel_dim;
    e["image_dim"] = inst.image_dim;
    e["middle_exact"] = inst.middle_exact;
    e["pass"] = inst.pass;
    instances.push_back(e);
  }
  j["instances"] = instances;
  j["pass"] = r.pass;
  j["witnesses"] = json::array();
  return j;
}

inline json galois_to_json(const FiniteGroupoid& G, const GaloisReport& r) {
  json j;
  j["theorem"] = "galois_correspondence";
  j["principal"] = r.principal;
  j["warned_non_principal"] = r.warned_non_principal;
  json instances = json::array();
  for (const auto& t : r.trials) {
    json e;
    e["H"] = arrow_set_to_json(G, t.H);
    e["algebra_rank"] = t.algebra_rank;
    e["span_rank"] = t.span_rank;
    e["match_residual"] = t.match_residual;
    e["subgroupoid_ok"] = t.subgroupoid_ok;
    e["census_index"] = t.census_index;
    e["pass"] = t.pass;
    instances.push_back(e);
  }
  j["instances"] = instances;
  j["all_trials_ok"] = r.all_trials_ok;
  j["expected_failures"] = r.expected_failures;
  j["census_ran"] = r.census_ran;
  if (r.census_ran) {
    json census = json::array();
    for (const auto& H : r.census) census.push_back(arrow_set_to_json(G, H));
    j["census"] = census;
    j["census_size"] = census.size();
    j["census_matched"] = r.census_matched;
  }
  j["pass"] = r.pass;
  j["witnesses"] = json::array();
  return j;
}

inline json bimodule_spectrum_to_json(const FiniteGroupoid& G, const BimoduleSpectrumReport& r) {
  json j;
  j["U"] = arrow_set_to_json(G, r.U);
  j["module_rank"] = r.module_rank;
  j["span_rank"] = r.span_rank;
  j["match_residual"] = r.match_residual;
  j["match"] = r.match;
  j["expected_failure"] = r.expected_failure;
  json ws = json::array();
  for (const auto& w : r.witnesses) {
    json e;
    e["bisection"] = arrow_set_to_json(G, w.bisection);
    e["normalizer_ok"] = w.normalizer_ok;
    e["support_ok"] = w.support_ok;
    e["module_residual"] = w.module_residual;
    e["in_module"] = w.in_module;
    e["coeffs"] = coefficients_to_json(G, w.element.coeffs);
    ws.push_back(e);
  }
  j["witnesses"] = ws;
  j["witnesses_ok"] = r.witnesses_ok;
  j["pass"] = r.pass;
  return j;
}

inline json bimodule_trials_to_json(const FiniteGroupoid& G, const BimoduleTrialReport& r) {
  json j;
  j["theorem"] = "bimodule_spectral";
  j["principal"] = r.principal;
  json instances = json::array();
  for (const auto& t : r.trials) instances.push_back(bimodule_spectrum_to_json(G, t));
  j["instances"] = instances;
  j["all_trials_ok"] = r.all_trials_ok;
  j["expected_failures"] = r.expected_failures;
  j["pass"] = r.pass;
  j["witnesses"] = json::array();
  return j;
}

inline json fejer_to_json(const FejerReport& r) {
  json j;
  j["eps"] = r.eps;
  json tests = json::array();
  for (const auto& t : r.tests) {
    json e;
    e["label"] = t.label;
    e["distances"] = t.distances;
    e["final_distance"] = t.final_distance;
    e["pass"] = t.pass;
    tests.push_back(e);
  }
  j["tests"] = tests;
  j["pass"] = r.pass;
  return j;
}

}  // namespace glab

#endif  // GLAB_IO_HPP
