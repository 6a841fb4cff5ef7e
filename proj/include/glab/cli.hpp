#ifndef GLAB_CLI_HPP
#define GLAB_CLI_HPP

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "glab/io.hpp"

namespace glab::cli {

struct Caps {
  int enumerate_cap = 16;
  int census_cap = 12;
  int closure_cap = 64;
};

inline Caps caps_from_environment() {
  Caps caps;
  if (const char* env = std::getenv("GLAB_CAP")) {
    try {
      const int v = std::stoi(env);
      if (v > 0) {
        caps.enumerate_cap = v;
        caps.census_cap = v;
        caps.closure_cap = std::max(v, caps.closure_cap);
      }
    } catch (...) {
      // ignore unusable values
    }
  }
  return caps;
}

inline std::string directory_of(const std::string& path) {
  const auto pos = path.find_last_of('/');
  return pos == std::string::npos ? std::string(".") : path.substr(0, pos);
}

/// Required top-level keys per subcommand, used by --check-report.
inline const std::vector<std::string>& report_schema(const std::string& command) {
  static const std::unordered_map<std::string, std::vector<std::string>> schemas = {
      {"validate", {"command", "valid", "violations", "arrows", "units"}},
      {"norm", {"command", "reduced_norm", "reduced_norm_fixed", "sup_norm"}},
      {"cbnorm", {"command", "value", "value_fixed", "gap", "units"}},
      {"fejer", {"command", "eps", "tests", "pass"}},
      {"innerexact", {"command", "theorem", "instances", "pass"}},
      {"galois", {"command", "theorem", "instances", "pass"}},
      {"bimodule", {"command", "theorem", "instances", "pass"}},
      {"transform", {"command", "arrows", "units", "principal"}},
      {"decompose", {"command", "pieces", "sum_exact", "bisections_ok"}},
      {"census", {"command", "count", "subgroupoids"}},
  };
  auto it = schemas.find(command);
  if (it == schemas.end()) throw std::logic_error("no schema for " + command);
  return it->second;
}

inline int check_report_file(const std::string& command, const std::string& path,
                             std::ostream& err) {
  json j;
  try {
    j = load_json_file(path);
  } catch (const FormatError& e) {
    err << "check-report: " << e.what() << "\n";
    return 2;
  }
  if (!j.is_object()) {
    err << "check-report: report must be a JSON object\n";
    return 2;
  }
  for (const std::string& key : report_schema(command)) {
    if (!j.contains(key)) {
      err << "check-report: missing key '" << key << "'\n";
      return 2;
    }
  }
  if (j["command"].get<std::string>() != command) {
    err << "check-report: report was produced by '" << j["command"].get<std::string>() << "'\n";
    return 2;
  }
  return 0;
}

namespace detail {

inline void emit(const json& j, std::ostream& out) { out << j.dump(2) << "\n"; }

struct CommandContext {
  bool summary = false;
  std::string check_report;
  Caps caps;
  std::ostream* out;
  std::ostream* err;
};

}  // namespace detail

/// Entry point shared by the binary and the tests; argv-style arguments
/// without the program name. Exit codes: 0 success, 1 assertion failure,
/// 2 malformed input, 3 cap exceeded.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"finite groupoid C*-algebra laboratory"};
  app.require_subcommand(1);

  struct {
    std::string groupoid, function, multiplier, net, action, out_path, check_report;
    double tol = 1e-6;
    double eps = -1.0;
    int trials = 64;
    std::uint64_t seed = 7;
    bool summary = false;
  } opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--summary", opt.summary, "print a prose summary on stderr");
    sub->add_option("--check-report", opt.check_report,
                    "validate a previously emitted report instead of running");
  };

  CLI::App* c_validate = app.add_subcommand("validate", "check the groupoid axioms on a file");
  c_validate->add_option("groupoid", opt.groupoid, "groupoid JSON file");
  add_common(c_validate);

  CLI::App* c_norm = app.add_subcommand("norm", "reduced norm of a function");
  c_norm->add_option("groupoid", opt.groupoid, "groupoid JSON file");
  c_norm->add_option("function", opt.function, "function JSON file");
  add_common(c_norm);

  CLI::App* c_cbnorm = app.add_subcommand("cbnorm", "completely bounded multiplier norm");
  c_cbnorm->add_option("groupoid", opt.groupoid, "groupoid JSON file");
  c_cbnorm->add_option("multiplier", opt.multiplier, "multiplier JSON file");
  c_cbnorm->add_option("--tol", opt.tol, "duality gap target");
  add_common(c_cbnorm);

  CLI::App* c_fejer = app.add_subcommand("fejer", "check a Fejér net");
  c_fejer->add_option("groupoid", opt.groupoid, "groupoid JSON file");
  c_fejer->add_option("net", opt.net, "net JSON file");
  c_fejer->add_option("--eps", opt.eps, "override the net tolerance");
  add_common(c_fejer);

  CLI::App* c_inner = app.add_subcommand("innerexact", "verify inner exactness");
  c_inner->add_option("groupoid", opt.groupoid, "groupoid JSON file");
  add_common(c_inner);

  CLI::App* c_galois = app.add_subcommand("galois", "randomized Galois correspondence check");
  c_galois->add_option("groupoid", opt.groupoid, "groupoid JSON file");
  c_galois->add_option("--trials", opt.trials, "number of random intermediate algebras");
  c_galois->add_option("--seed", opt.seed, "random seed");
  add_common(c_galois);

  CLI::App* c_bimodule = app.add_subcommand("bimodule", "randomized bimodule spectral check");
  c_bimodule->add_option("groupoid", opt.groupoid, "groupoid JSON file");
  c_bimodule->add_option("--trials", opt.trials, "number of random bimodules");
  c_bimodule->add_option("--seed", opt.seed, "random seed");
  add_common(c_bimodule);

  CLI::App* c_transform = app.add_subcommand("transform", "build a transformation groupoid");
  c_transform->add_option("action", opt.action, "action JSON file");
  c_transform->add_option("--out", opt.out_path, "write the groupoid JSON here");
  add_common(c_transform);

  CLI::App* c_decompose = app.add_subcommand("decompose", "partition of unity over bisections");
  c_decompose->add_option("groupoid", opt.groupoid, "groupoid JSON file");
  c_decompose->add_option("function", opt.function, "function JSON file");
  add_common(c_decompose);

  CLI::App* c_census = app.add_subcommand("census", "brute-force subgroupoid census");
  c_census->add_option("groupoid", opt.groupoid, "groupoid JSON file");
  add_common(c_census);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  const Caps caps = caps_from_environment();
  CLI::App* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();

  if (!opt.check_report.empty()) return check_report_file(command, opt.check_report, err);

  auto need = [&](const std::string& value, const char* what) {
    if (value.empty()) throw FormatError(std::string("missing ") + what + " argument");
    return value;
  };

  try {
    json report;
    report["command"] = command;
    int exit_code = 0;

    if (command == "validate") {
      const json input = load_json_file(need(opt.groupoid, "groupoid"));
      GroupoidValidation v = validate_groupoid(parse_named_raw_groupoid(input));
      report["valid"] = v.ok();
      report["violations"] = v.violations;
      if (v.ok()) {
        report["arrows"] = v.groupoid->size();
        report["units"] = static_cast<int>(v.groupoid->units().size());
        report["principal"] = is_principal(*v.groupoid);
        report["orbits"] = static_cast<int>(unit_orbits(*v.groupoid).size());
        if (opt.summary)
          err << "groupoid OK: " << v.groupoid->size() << " arrows, "
              << v.groupoid->units().size() << " units\n";
      } else {
        report["arrows"] = 0;
        report["units"] = 0;
        exit_code = 1;
        if (opt.summary) err << "groupoid INVALID: " << v.violations.size() << " violations\n";
      }
      detail::emit(report, out);
      return exit_code;
    }

    if (command == "transform") {
      const GroupAction action = parse_action(load_json_file(need(opt.action, "action")));
      const TransformationGroupoid T = transformation_groupoid(action);
      report["arrows"] = T.G->size();
      report["units"] = static_cast<int>(T.G->units().size());
      report["principal"] = is_principal(*T.G);
      const json gj = groupoid_to_json(*T.G);
      if (!opt.out_path.empty()) {
        std::ofstream file(opt.out_path);
        if (!file) throw FormatError("cannot write '" + opt.out_path + "'");
        file << gj.dump(2) << "\n";
        report["written"] = opt.out_path;
      } else {
        report["groupoid"] = gj;
      }
      if (opt.summary)
        err << "transformation groupoid with " << T.G->size() << " arrows\n";
      detail::emit(report, out);
      return 0;
    }

    GroupoidPtr G = load_groupoid(load_json_file(need(opt.groupoid, "groupoid")));

    if (command == "norm") {
      const ArrowFunction f = load_function(load_json_file(need(opt.function, "function")), G,
                                            directory_of(opt.function));
      const double r = reduced_norm(f);
      report["reduced_norm"] = r;
      report["reduced_norm_fixed"] = format_norm(r);
      report["sup_norm"] = sup_norm(f);
      report["sup_norm_fixed"] = format_norm(sup_norm(f));
      report["support_size"] = static_cast<int>(support(f, 0.0).size());
      if (opt.summary) err << "reduced norm " << format_norm(r) << "\n";
      detail::emit(report, out);
      return 0;
    }

    if (command == "cbnorm") {
      const MultiplierSymbol h =
          load_multiplier(load_json_file(need(opt.multiplier, "multiplier")), G);
      const CbNormResult cb = multiplier_cb_norm(h, opt.tol);
      report["value"] = cb.value;
      report["value_fixed"] = format_norm(cb.value);
      report["gap"] = cb.gap;
      report["iterations"] = cb.iterations;
      report["op_norm_lower_bound"] = randomized_contraction_lower_bound(h, 64, 1);
      json units = json::array();
      for (std::size_t i = 0; i < cb.per_unit.size(); ++i) {
        json u = gamma2_certificate_to_json(cb.per_unit[i]);
        u["unit"] = G->name(G->units()[i]);
        units.push_back(u);
      }
      report["units"] = units;
      if (opt.summary) err << "cb norm " << format_norm(cb.value) << "\n";
      detail::emit(report, out);
      return 0;
    }

    if (command == "fejer") {
      FejerNet net = load_net(load_json_file(need(opt.net, "net")), G);
      if (opt.eps >= 0.0) net.eps = opt.eps;
      const FejerReport r = check_fejer_net(G, net, default_test_functions(G), net.eps);
      report.update(fejer_to_json(r));
      if (opt.summary)
        err << "fejer " << (r.pass ? "pass" : "fail") << " at eps " << net.eps << "\n";
      detail::emit(report, out);
      return r.pass ? 0 : 1;
    }

    if (command == "innerexact") {
      const InnerExactReport r = check_inner_exact(G);
      report.update(inner_exact_to_json(*G, r));
      if (opt.summary)
        err << "inner exactness " << (r.pass ? "pass" : "fail") << " on "
            << r.instances.size() << " invariant subsets\n";
      detail::emit(report, out);
      return r.pass ? 0 : 1;
    }

    if (command == "galois") {
      const GaloisReport r =
          check_galois(G, opt.trials, opt.seed, caps.census_cap, caps.enumerate_cap);
      report.update(galois_to_json(*G, r));
      report["trials"] = opt.trials;
      report["seed"] = opt.seed;
      if (opt.summary) {
        if (r.warned_non_principal)
          err << "warning: groupoid is not principal; failures are expected\n";
        err << "galois " << (r.pass ? "pass" : "fail") << " over " << opt.trials << " trials\n";
      }
      detail::emit(report, out);
      return r.pass ? 0 : 1;
    }

    if (command == "bimodule") {
      const BimoduleTrialReport r = check_bimodule(G, opt.trials, opt.seed);
      report.update(bimodule_trials_to_json(*G, r));
      report["trials"] = opt.trials;
      report["seed"] = opt.seed;
      if (opt.summary) {
        if (!r.principal)
          err << "warning: groupoid is not principal; failures are expected\n";
        err << "bimodule " << (r.pass ? "pass" : "fail") << " over " << opt.trials
            << " trials\n";
      }
      detail::emit(report, out);
      return r.pass ? 0 : 1;
    }

    if (command == "decompose") {
      const ArrowFunction f = load_function(load_json_file(need(opt.function, "function")), G,
                                            directory_of(opt.function));
      const auto pieces = decompose_partition_of_unity(f);
      ArrowFunction sum(G);
      bool bisections_ok = true;
      json parts = json::array();
      for (const auto& piece : pieces) {
        sum = sum + piece;
        const ArrowSet supp = support(piece, 0.0);
        bisections_ok = bisections_ok && is_bisection(*G, supp);
        json e;
        e["support"] = arrow_set_to_json(*G, supp);
        e["coeffs"] = coefficients_to_json(*G, piece.coeffs);
        parts.push_back(e);
      }
      const bool sum_exact = (sum.coeffs - f.coeffs).cwiseAbs().maxCoeff() == 0.0;
      report["pieces"] = parts;
      report["count"] = parts.size();
      report["sum_exact"] = sum_exact;
      report["bisections_ok"] = bisections_ok;
      if (opt.summary) err << pieces.size() << " bisection pieces\n";
      detail::emit(report, out);
      return (sum_exact && bisections_ok) ? 0 : 1;
    }

    if (command == "census") {
      const auto census = galois_census(*G, caps.enumerate_cap);
      json subs = json::array();
      for (const auto& entry : census) {
        json e;
        e["arrows"] = arrow_set_to_json(*G, entry.H);
        e["rank"] = entry.rank;
        subs.push_back(e);
      }
      report["count"] = subs.size();
      report["subgroupoids"] = subs;
      if (opt.summary) err << census.size() << " unit-containing subgroupoids\n";
      detail::emit(report, out);
      return 0;
    }

    throw std::logic_error("unhandled subcommand " + command);
  } catch (const CapExceeded& e) {
    err << e.what() << "\n";
    return 3;
  } catch (const InvalidGroupoid& e) {
    err << "invalid groupoid:";
    for (const auto& v : e.violations) err << "\n  " << v;
    err << "\n";
    return 1;
  } catch (const SolverError& e) {
    err << e.what() << "\n";
    return 1;
  } catch (const FormatError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    err << "malformed input: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << e.what() << "\n";
    return 2;
  }
}

}  // namespace glab::cli

#endif  // GLAB_CLI_HPP
