#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "subcirc/json_io.hpp"
#include "subcirc/reference_suite.hpp"
#include "subcirc/sage.hpp"

namespace {

using namespace subcirc;
using Clock = std::chrono::steady_clock;

constexpr const char* kVersion = "0.1.0";

// exit codes: 2 parse, 3 empty/infeasible, 4 precondition, 5 dependent exponentials
enum ExitCode {
  kOk = 0,
  kVerifyFailed = 1,
  kParseError = 2,
  kEmptySet = 3,
  kPrecondition = 4,
  kDependentExponentials = 5
};

int log_level() {
  const char* env = std::getenv("SUBCIRC_LOG");
  if (!env) return 1;
  std::string v = env;
  if (v == "debug") return 3;
  if (v == "info") return 2;
  if (v == "warn") return 1;
  if (v == "error") return 0;
  return 1;
}

void log_info(const std::string& msg) {
  if (log_level() >= 2) std::cerr << "[subcirc] " << msg << "\n";
}

Json read_json_source(const std::string& source) {
  std::string text;
  if (source == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    text = os.str();
  } else {
    std::ifstream in(source);
    if (!in) throw ParseError("cannot open '" + source + "'");
    std::ostringstream os;
    os << in.rdbuf();
    text = os.str();
  }
  // bare inline JSON is accepted as well as file contents
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

struct SetSpec {
  std::string preset;  // empty when an explicit representation was given
  std::string hrep_file, vrep_file;
};

Polyhedron resolve_set(const SetSpec& spec, Index support_dim) {
  if (!spec.hrep_file.empty())
    return Polyhedron::from_hrep(hrep_from_json(read_json_source(spec.hrep_file)));
  if (!spec.vrep_file.empty())
    return Polyhedron::from_vrep(vrep_from_json(read_json_source(spec.vrep_file)));
  const std::string& p = spec.preset;
  auto need_dim = [&](Index n) {
    if (support_dim != n)
      throw Error("preset dimension " + std::to_string(n) +
                  " does not match the support dimension " + std::to_string(support_dim));
  };
  if (p == "line") { need_dim(1); return preset_line(); }
  if (p == "halfline") { need_dim(1); return preset_halfline(); }
  if (p == "interval") { need_dim(1); return preset_interval(); }
  auto parse_sized = [&](const std::string& prefix) -> std::optional<Index> {
    if (p.rfind(prefix + ":", 0) != 0) return std::nullopt;
    return static_cast<Index>(std::stoi(p.substr(prefix.size() + 1)));
  };
  if (auto n = parse_sized("rn")) { need_dim(*n); return preset_rn(*n); }
  if (auto n = parse_sized("orthant")) { need_dim(*n); return preset_orthant(*n); }
  if (auto n = parse_sized("cube")) { need_dim(*n); return preset_cube(*n); }
  throw ParseError("unknown preset '" + p + "'");
}

std::optional<UnivariateShape> preset_shape(const std::string& preset) {
  if (preset == "line") return UnivariateShape::Line;
  if (preset == "halfline") return UnivariateShape::HalfLine;
  if (preset == "interval") return UnivariateShape::Interval;
  return std::nullopt;
}

CircuitFamily enumerate_by_route(const SupportSet& a, const Polyhedron& x, const SetSpec& spec,
                                 std::string route, bool verify, int parallel) {
  auto closed_form = [&]() -> std::optional<CircuitFamily> {
    auto shape = preset_shape(spec.preset);
    if (!shape || a.ambient_dim() != 1) return std::nullopt;
    return circuits_univariate(a, *shape);
  };
  if (route == "auto") {
    if (preset_shape(spec.preset) && a.ambient_dim() == 1)
      route = "closed-form";
    else if (spec.preset.rfind("orthant:", 0) == 0)
      route = "orthant";
    else if (x.is_cone())
      route = "cone";
    else
      route = "general";
    log_info("route auto resolved to " + route);
  }
  std::optional<CircuitFamily> fam;
  if (route == "general") fam = enumerate_circuits(a, x, parallel);
  if (route == "cone") fam = enumerate_circuits_cone(a, x);
  if (route == "orthant") fam = circuits_orthant(a);
  if (route == "closed-form") {
    fam = closed_form();
    if (!fam) throw Error("closed-form route needs a univariate support with a univariate preset");
  }
  if (!fam) throw ParseError("unknown route '" + route + "'");
  if (verify && route != "general") {
    CircuitFamily general = enumerate_circuits(a, x, parallel);
    if (!same_family(*fam, general))
      throw Error("route cross-validation failed: " + route + " differs from the general route");
    log_info("route cross-validation against the general route passed");
  }
  return std::move(*fam);
}

std::string csv_counts(const CircuitFamily& f) {
  Json table = counts_table(f);
  std::ostringstream os;
  for (const Json& row : table) {
    bool first = true;
    for (const Json& v : row) {
      if (!first) os << ",";
      os << v.get<int>();
      first = false;
    }
    os << "\n";
  }
  return os.str();
}

std::string ascii_counts(const CircuitFamily& f) {
  Json table = counts_table(f);
  std::ostringstream os;
  os << "count " << f.size() << "\n";
  for (const Json& row : table) {
    for (const Json& v : row) os << "\t" << v.get<int>();
    os << "\n";
  }
  return os.str();
}

void write_output(const std::string& text, const std::string& output_file) {
  if (output_file.empty() || output_file == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(output_file);
  if (!out) throw Error("cannot write '" + output_file + "'");
  out << text;
}

Json run_report(const Json& payload, double elapsed_ms) {
  Json report;
  report["version"] = kVersion;
  std::ostringstream toolchain;
#if defined(__clang__)
  toolchain << "clang " << __clang_major__ << "." << __clang_minor__;
#elif defined(__GNUC__)
  toolchain << "gcc " << __GNUC__ << "." << __GNUC_MINOR__;
#endif
  report["toolchain"] = toolchain.str();
  report["checksum"] = fnv1a_hex(payload.dump());
  report["timing_ms"] = elapsed_ms;
  return report;
}

std::string render_family(const CircuitFamily& fam, const std::string& format, double elapsed_ms) {
  if (format == "csv") return csv_counts(fam);
  if (format == "table") return ascii_counts(fam);
  Json payload = family_to_json(fam);
  Json out = payload;
  out["report"] = run_report(payload, elapsed_ms);
  return out.dump(2) + "\n";
}

int dispatch(const std::function<int()>& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const EmptyPolyhedronError& e) {
    std::cerr << "empty constraint set: " << e.what() << "\n";
    return kEmptySet;
  } catch (const DependentExponentialsError& e) {
    std::cerr << "dependent exponentials: " << e.what() << "\n";
    return kDependentExponentials;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kPrecondition;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sublinear circuit enumeration over polyhedral constraint sets"};
  app.require_subcommand(1);

  std::string support_source, route = "auto", format = "json", output_file;
  SetSpec set_spec;
  bool verify = false;
  int parallel = static_cast<int>(std::thread::hardware_concurrency());
  if (parallel <= 0) parallel = 1;
  uint64_t seed = 0;

  auto add_common = [&](CLI::App* cmd, bool with_set) {
    cmd->add_option("--support", support_source, "support set JSON (file path or '-' for stdin)")
        ->required();
    if (with_set) {
      auto* preset = cmd->add_option("--set", set_spec.preset,
                                     "constraint preset: line|halfline|interval|rn:N|orthant:N|cube:N");
      auto* hrep = cmd->add_option("--hrep", set_spec.hrep_file, "constraint set H-rep JSON file");
      auto* vrep = cmd->add_option("--vrep", set_spec.vrep_file, "constraint set V-rep JSON file");
      preset->excludes(hrep)->excludes(vrep);
      hrep->excludes(vrep);
    }
    cmd->add_option("--format", format, "output format: json|csv|table")
        ->check(CLI::IsMember({"json", "csv", "table"}));
    cmd->add_option("--output", output_file, "output file (default stdout)");
    cmd->add_option("--parallel", parallel, "bound on concurrent per-beta tasks");
    cmd->add_option("--seed", seed, "seed for sampling subcommands");
  };

  auto* enumerate_cmd = app.add_subcommand("enumerate", "enumerate the circuit family");
  add_common(enumerate_cmd, true);
  enumerate_cmd->add_option("--route", route, "auto|general|cone|closed-form|orthant");
  enumerate_cmd->add_flag("--verify", verify, "cross-check against the general route");

  auto* reduce_cmd = app.add_subcommand("reduce", "reduced circuits with filter attribution");
  add_common(reduce_cmd, true);

  std::string vector_json;
  auto* check_cmd = app.add_subcommand("check", "circuit and support-criteria verdicts");
  add_common(check_cmd, true);
  check_cmd->add_option("--vector", vector_json, "candidate vector as a JSON array")->required();

  std::string coeffs_json, witness_json;
  int sample_count = 0;
  auto* age_cmd = app.add_subcommand("age-check", "AGE membership and extremality verdicts");
  add_common(age_cmd, true);
  age_cmd->add_option("--coeffs", coeffs_json, "signomial coefficients as a JSON array")
      ->required();
  age_cmd->add_option("--witness", witness_json, "witness circuit vector as a JSON array")
      ->required();
  age_cmd->add_flag("--verify", verify, "verify the witness is a circuit first");
  age_cmd->add_option("--sample", sample_count, "also sample this many points of X");

  auto* verify_cmd = app.add_subcommand("verify-paper", "recompute the pinned reference values");
  verify_cmd->add_option("--parallel", parallel, "bound on concurrent per-beta tasks");
  verify_cmd->add_option("--output", output_file, "output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  if (enumerate_cmd->parsed()) {
    return dispatch([&] {
      auto t0 = Clock::now();
      SupportSet a = support_from_json(read_json_source(support_source));
      Polyhedron x = resolve_set(set_spec, a.ambient_dim());
      CircuitFamily fam = enumerate_by_route(a, x, set_spec, route, verify, parallel);
      double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
      write_output(render_family(fam, format, ms), output_file);
      return kOk;
    });
  }

  if (reduce_cmd->parsed()) {
    return dispatch([&] {
      auto t0 = Clock::now();
      SupportSet a = support_from_json(read_json_source(support_source));
      Polyhedron x = resolve_set(set_spec, a.ambient_dim());
      CircuitFamily fam = enumerate_circuits(a, x, parallel);
      CircuitGraph graph = build_circuit_graph(a, x, fam);
      CircuitFamily red = reduced_circuits(graph);
      auto hull = filter_convex_hull(a, fam);
      auto wit = filter_nonreduced_combinatorial(a, fam);
      double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();

      Json circuits = Json::array();
      for (size_t i = 0; i < static_cast<size_t>(fam.size()); ++i) {
        const Circuit& c = fam.circuits()[i];
        Json entry = circuit_to_json(c);
        bool is_red = red.contains_ray(c.primitive);
        entry["reduced"] = is_red;
        entry["witness"] = nullptr;
        if (is_red) {
          entry["decided_by"] = "extreme-ray";
        } else if (hull[i]) {
          entry["decided_by"] = "convex-hull";
          entry["witness"] = Json{{"point", *hull[i]}};
        } else if (wit[i]) {
          entry["decided_by"] = "combinatorial";
          entry["witness"] = Json{{"beta_prime", wit[i]->beta_prime},
                                  {"lambda_prime", vec_to_json(wit[i]->lambda_prime)},
                                  {"gamma", rational_to_json(wit[i]->gamma)}};
        } else {
          entry["decided_by"] = "extreme-ray";
        }
        circuits.push_back(std::move(entry));
      }
      Json payload;
      payload["support"] = support_points_to_json(a);
      payload["count"] = fam.size();
      payload["reduced_count"] = red.size();
      payload["count_by_beta"] = counts_table(red);
      payload["circuits"] = std::move(circuits);
      if (format == "csv") {
        write_output(csv_counts(red), output_file);
      } else if (format == "table") {
        write_output(ascii_counts(red), output_file);
      } else {
        Json out = payload;
        out["report"] = run_report(payload, ms);
        write_output(out.dump(2) + "\n", output_file);
      }
      return kOk;
    });
  }

  if (check_cmd->parsed()) {
    return dispatch([&] {
      SupportSet a = support_from_json(read_json_source(support_source));
      Polyhedron x = resolve_set(set_spec, a.ambient_dim());
      Vec nu = vec_from_json(Json::parse(vector_json, nullptr, true));
      Json verdict;
      auto beta = nbeta_index(nu);
      verdict["in_nbeta"] = beta.has_value();
      if (beta) verdict["beta"] = *beta;
      auto sigma = support_function(x, Vec(-a.apply(nu)));
      verdict["sigma"] = sigma ? rational_to_json(*sigma) : Json("infinite");
      auto circ = is_circuit(a, x, nu);
      verdict["circuit"] = circ.value;
      if (!circ.value) verdict["reason"] = circ.reason;
      if (circ.value)
        verdict["certificate"] =
            Json{{"kind", circ.certificate.kind}, {"tight", circ.certificate.tight}};
      if (beta && sigma) {
        Circuit c = make_circuit(a, nu, *sigma, circ.certificate);
        auto nec = check_support_necessary(a, x, c);
        verdict["necessary_criterion"] =
            nec.pass ? Json{{"pass", true}} : Json{{"pass", false}, {"violation", nec.violation}};
        auto suf = check_edge_case_sufficient(a, x, c.normalized);
        verdict["sufficient_edge_case"] =
            Json{{"applies", suf.verdict == SufficientVerdict::CertifiedCircuit},
                 {"case", suf.which_case},
                 {"detail", suf.detail}};
        if (c.support.size() >= 3) {
          verdict["cube_exclusion"] =
              check_cube_exclusion(a, c) == ExclusionVerdict::Excluded ? "excluded"
                                                                       : "inconclusive";
          auto gen = check_cube_exclusion_general(a, c);
          verdict["cube_exclusion_general"] =
              Json{{"verdict",
                    gen.verdict == ExclusionVerdict::Excluded ? "excluded" : "inconclusive"},
                   {"j_set", gen.j_set}};
        }
      }
      write_output(verdict.dump(2) + "\n", output_file);
      return kOk;
    });
  }

  if (age_cmd->parsed()) {
    return dispatch([&] {
      SupportSet a = support_from_json(read_json_source(support_source));
      Polyhedron x = resolve_set(set_spec, a.ambient_dim());
      const Json cj = Json::parse(coeffs_json, nullptr, true);
      Eigen::VectorXd c(static_cast<Eigen::Index>(cj.size()));
      Eigen::Index ci = 0;
      for (const Json& e : cj)
        c(ci++) = e.is_string() ? parse_rational(e.get<std::string>()).get_d() : e.get<double>();
      Signomial f(a, c);
      Vec w = vec_from_json(Json::parse(witness_json, nullptr, true));
      auto sigma = support_function(x, Vec(-a.apply(w)));
      if (!sigma) throw Error("witness has an infinite support function value");
      if (verify && !is_circuit(a, x, w).value)
        throw Error("witness failed circuit verification");
      Circuit lam = make_circuit(a, w, *sigma, {"witness", {}});
      Json verdict = membership_to_json(age_membership(f, {lam}));
      verdict["sigma"] = rational_to_json(lam.sigma);
      if (a.ambient_dim() == 1 && set_spec.preset == "interval") {
        auto ext = interval_extreme_ray_check(f);
        verdict["extremal"] = ext.extremal;
        verdict["extremal_case"] = ext.which_case;
        verdict["extremal_detail"] = ext.reason;
      }
      if (sample_count > 0) {
        auto sr = sample_nonnegativity(f, x, sample_count, seed);
        verdict["sample_min"] = sr.min_value;
        verdict["sample_accepted"] = sr.accepted;
      }
      write_output(verdict.dump(2) + "\n", output_file);
      return kOk;
    });
  }

  // verify-paper
  return dispatch([&] {
    auto cases = run_reference_suite(parallel);
    std::ostringstream os;
    size_t width = 0;
    for (const auto& c : cases) width = std::max(width, c.name.size());
    int failed = 0;
    for (const auto& c : cases) {
      os << (c.pass ? "PASS  " : "FAIL  ") << c.name;
      os << std::string(width - c.name.size() + 2, ' ');
      if (c.pass) {
        os << "value: " << c.expected << "\n";
      } else {
        os << "expected: " << c.expected << "  computed: " << c.computed << "\n";
        ++failed;
      }
    }
    os << (failed == 0 ? "all reference values reproduced\n"
                       : std::to_string(failed) + " reference value(s) differ\n");
    write_output(os.str(), output_file);
    return failed == 0 ? kOk : kVerifyFailed;
  });
}
