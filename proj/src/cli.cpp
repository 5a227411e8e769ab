#include "quadheis/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "quadheis/fock.hpp"
#include "quadheis/grouplaw.hpp"
#include "quadheis/verify.hpp"

namespace quadheis {

namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double positive(const Json& j, const char* key, double fallback) {
  if (!j.contains(key)) return fallback;
  const double v = number_field(j, key);
  if (!(v > 0)) throw InputError(std::string(key) + " must be positive");
  return v;
}

std::string read_input(const std::string& path, std::istream& in) {
  std::stringstream ss;
  if (path == "-") {
    ss << in.rdbuf();
  } else {
    std::ifstream f(path);
    if (!f) throw InputError("cannot open input file '" + path + "'");
    ss << f.rdbuf();
  }
  return ss.str();
}

void check_envelope(int modes, int cutoff) {
  if (modes < 1 || modes > 3) throw InputError("modes must be in 1..3");
  if (cutoff < 0 || cutoff > max_cutoff(modes))
    throw InputError("cutoff outside the envelope for " + std::to_string(modes) + " modes (max " +
                     std::to_string(max_cutoff(modes)) + ")");
}

Json stages_json(const ComposeTrace& trace) {
  Json arr = Json::array();
  for (const auto& s : trace) {
    Json j;
    j["stage"] = s.stage;
    j["s_condition"] = s.s_condition;
    arr.push_back(j);
  }
  return arr;
}

Json error_json(const char* code, const std::string& stage, const std::string& message) {
  Json j;
  j["error"] = code;
  j["stage"] = stage;
  j["message"] = message;
  return j;
}

std::vector<Kind> kinds_of(const std::string& name) {
  if (name == "all") return {Kind::Creator, Kind::Annihilator, Kind::Preservation};
  try {
    return {kind_from_string(name)};
  } catch (const DomainError&) {
    throw InputError("unknown kind '" + name + "'");
  }
}

CVector oracle_state(const Json& j, const FockSpace& space) {
  if (!j.contains("state") || j["state"] == "vacuum") return space.vacuum();
  const Json& s = j["state"];
  if (s.is_object()) {
    const Json& occ = field(s, "occupation");
    if (!occ.is_array() || static_cast<int>(occ.size()) != space.modes())
      throw InputError("occupation must list one count per mode");
    Occupation o;
    for (const auto& k : occ) {
      if (!k.is_number_integer() || k.get<int>() < 0) throw InputError("occupations are non-negative integers");
      o.push_back(k.get<int>());
    }
    if (space.index_of(o) < 0) throw InputError("occupation lies above the cutoff");
    return space.number_state(o);
  }
  const CVector v = vector_from_json(s);
  if (v.size() != space.dimension())
    throw InputError("state length " + std::to_string(v.size()) + " != dimension " +
                     std::to_string(space.dimension()));
  return v;
}

}  // namespace

int max_cutoff(int modes) { return modes == 1 ? 200 : modes == 2 ? 30 : 16; }

RunConfig config_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("config must be a JSON object");
  RunConfig c;
  c.tol.series = positive(j, "series_tol", c.tol.series);
  c.tol.singular_value = positive(j, "sv_tol", c.tol.singular_value);
  c.tol.branch = positive(j, "branch_tol", c.tol.branch);
  if (j.contains("modes")) c.modes = int_field(j, "modes");
  if (j.contains("cutoff")) c.cutoff = int_field(j, "cutoff");
  check_envelope(c.modes, c.cutoff);
  if (j.contains("format")) {
    if (!j["format"].is_string()) throw InputError("format must be a string");
    c.format = j["format"].get<std::string>();
    if (c.format != "json" && c.format != "csv") throw InputError("format must be json or csv");
  }
  if (j.contains("seed")) {
    if (!j["seed"].is_number_integer() || j["seed"].get<long long>() < 0)
      throw InputError("seed must be a non-negative integer");
    c.seed = j["seed"].get<std::uint64_t>();
  }
  return c;
}

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out) {
  CLI::App app{"Quadratic boson algebra toolkit"};
  app.name("quadheis");
  app.require_subcommand(1);

  std::string config_path, input = "-";
  app.add_option("--config", config_path, "RunConfig JSON file");

  auto with_input = [&](CLI::App* sub) {
    sub->add_option("-i,--input", input, "input JSON file, '-' for stdin");
    return sub;
  };
  auto* bracket_cmd = with_input(app.add_subcommand("bracket", "Lie bracket of {E1, E2}"));
  double t_param = 1.0;
  auto* split_cmd = with_input(app.add_subcommand("split", "first-kind to second-kind coordinates"));
  split_cmd->add_option("--t", t_param, "time parameter");
  auto* merge_cmd = with_input(app.add_subcommand("merge", "second-kind to first-kind coordinates"));
  std::string coords_kind = "second";
  auto* compose_cmd = with_input(app.add_subcommand("compose", "group product of {g1, g2}"));
  compose_cmd->add_option("--coords", coords_kind)->check(CLI::IsMember({"first", "second"}));
  std::string grid;
  auto* charfun_cmd = with_input(app.add_subcommand("charfun", "vacuum characteristic function"));
  charfun_cmd->add_option("--grid", grid, "lambda0:lambda1:steps, CSV output");
  std::string moments_kind;
  auto* moments_cmd = with_input(app.add_subcommand("moments", "n-particle moments"));
  moments_cmd->add_option("--kind", moments_kind)->required()->check(CLI::IsMember({"proj1", "proj2", "proj3"}));
  auto* oracle_cmd = with_input(app.add_subcommand("oracle", "truncated Fock-space pipeline"));
  bool verify_flag = false;
  auto* bounds_cmd = with_input(app.add_subcommand("bounds", "sector norm bounds"));
  bounds_cmd->add_flag("--verify", verify_flag, "measure against the oracle");
  long long dioph_max = 0;
  auto* dioph_cmd = app.add_subcommand("dioph", "solutions of N^2 = 2n^2 + 2");
  dioph_cmd->add_option("--max", dioph_max)->required();
  std::string suite = "all";
  std::uint64_t seed = 0;
  auto* verify_cmd = app.add_subcommand("verify", "acceptance suites");
  verify_cmd->add_option("--suite", suite);
  auto* seed_opt = verify_cmd->add_option("--seed", seed);

  std::vector<const char*> argv{"quadheis"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    out << dump(error_json("UsageError", "cli", e.what()), 2) << "\n";
    return 1;
  }

  try {
    RunConfig cfg;
    if (!config_path.empty()) {
      std::ifstream f(config_path);
      if (!f) throw InputError("cannot open config '" + config_path + "'");
      std::stringstream ss;
      ss << f.rdbuf();
      cfg = config_from_json(parse_json(ss.str()));
    }
    if (const char* env = std::getenv("QUADHEIS_TOL_SV")) {
      char* end = nullptr;
      const double v = std::strtod(env, &end);
      if (end == env || *end != '\0' || !(v > 0)) throw InputError("QUADHEIS_TOL_SV must be a positive number");
      cfg.tol.singular_value = v;
    }
    const Tolerances& tol = cfg.tol;
    auto input_json = [&] { return parse_json(read_input(input, in)); };
    auto emit = [&](const Json& j) { out << dump(j, 2) << "\n"; };

    if (app.got_subcommand(bracket_cmd)) {
      const Json j = input_json();
      emit(to_json(bracket(element_from_json(field(j, "E1")), element_from_json(field(j, "E2")))));
    } else if (app.got_subcommand(split_cmd)) {
      emit(to_json(split(first_from_json(input_json()), t_param, tol)));
    } else if (app.got_subcommand(merge_cmd)) {
      emit(to_json(merge(second_from_json(input_json()), tol)));
    } else if (app.got_subcommand(compose_cmd)) {
      const Json j = input_json();
      ComposeTrace trace;
      Json result;
      if (coords_kind == "first")
        result["result"] = to_json(compose_first(first_from_json(field(j, "g1")),
                                                 first_from_json(field(j, "g2")), tol, &trace));
      else
        result["result"] = to_json(compose_second(second_from_json(field(j, "g1")),
                                                  second_from_json(field(j, "g2")), tol, &trace));
      result["diagnostics"] = Json{{"coords", coords_kind}, {"stages", stages_json(trace)}};
      emit(result);
    } else if (app.got_subcommand(charfun_cmd)) {
      const Observable obs = observable_from_json(input_json());
      if (!grid.empty() || cfg.format == "csv") {
        std::vector<double> lambdas{obs.lambda};
        if (!grid.empty()) {
          double l0, l1;
          int steps;
          char c1, c2, extra;
          std::istringstream gs(grid);
          if (!(gs >> l0 >> c1 >> l1 >> c2 >> steps) || c1 != ':' || c2 != ':' || (gs >> extra) || steps < 1)
            throw InputError("grid must be lambda0:lambda1:steps with steps >= 1");
          lambdas.clear();
          for (int i = 0; i < steps; ++i)
            lambdas.push_back(steps == 1 ? l0 : l0 + (l1 - l0) * i / (steps - 1));
        }
        out << "lambda,re,im\n";
        for (double l : lambdas) {
          const cplx v = char_function({l, obs.A, obs.B}, tol);
          out << fmt17(l) << "," << fmt17(v.real()) << "," << fmt17(v.imag()) << "\n";
        }
      } else {
        emit(Json{{"lambda", obs.lambda}, {"value", to_json(char_function(obs, tol))}});
      }
    } else if (app.got_subcommand(moments_cmd)) {
      const Json j = input_json();
      Json r;
      r["kind"] = moments_kind;
      if (moments_kind == "proj1") {
        const int n = int_field(j, "n");
        r["n"] = n;
        r["value"] = projection_moment(matrix_from_json(field(j, "E")), n);
      } else if (moments_kind == "proj2") {
        const int n_max = int_field(j, "n_max");
        r["n_max"] = n_max;
        r["moments"] = moment_recursion(matrix_from_json(field(j, "M")), matrix_from_json(field(j, "N")), n_max);
      } else {
        const int n = int_field(j, "n"), m = int_field(j, "m");
        r["n"] = n;
        r["m"] = m;
        r["value"] = cross_moment(matrix_from_json(field(j, "M")), matrix_from_json(field(j, "N")), n, m);
      }
      emit(r);
    } else if (app.got_subcommand(oracle_cmd)) {
      const Json j = input_json();
      const Json& fs = field(j, "factors");
      if (!fs.is_array()) throw InputError("factors must be an array of elements");
      std::vector<QuadElement> factors;
      for (const auto& f : fs) factors.push_back(element_from_json(f));
      const int modes = j.contains("modes") ? int_field(j, "modes")
                        : factors.empty()   ? cfg.modes
                                            : static_cast<int>(factors.front().dim());
      const int cutoff = j.contains("cutoff") ? int_field(j, "cutoff") : cfg.cutoff;
      check_envelope(modes, cutoff);
      for (const auto& f : factors)
        if (f.dim() != modes) throw InputError("factor dimension does not match modes");
      const FockSpace space(modes, cutoff);
      const CVector state = oracle_state(j, space);
      std::vector<CMatrix> ops;
      for (const auto& f : factors) ops.push_back(space.materialize(f));
      const CVector result = apply_exponentials(ops, state);
      const std::string output = j.contains("output") ? j["output"].get<std::string>() : "expectation";
      Json r;
      r["modes"] = modes;
      r["cutoff"] = cutoff;
      r["dimension"] = space.dimension();
      if (output == "expectation") {
        r["expectation"] = to_json(state.dot(result));
      } else if (output == "state") {
        Json basis = Json::array();
        for (const auto& o : space.basis()) basis.push_back(o);
        r["basis"] = basis;
        r["state"] = to_json(result);
      } else {
        throw InputError("output must be 'expectation' or 'state'");
      }
      if (cutoff >= 4 && (transfer(FockSpace(modes, cutoff - 4), space,
                                   transfer(space, FockSpace(modes, cutoff - 4), state)) - state).norm() == 0.0)
        r["truncation_residual"] = truncation_residual(space, factors, state);
      emit(r);
    } else if (app.got_subcommand(bounds_cmd)) {
      const Json j = input_json();
      const std::string kind = j.contains("kind") ? j["kind"].get<std::string>() : "all";
      if (verify_flag) {
        const CMatrix A = matrix_from_json(field(j, "A"));
        const int cutoff = j.contains("cutoff") ? int_field(j, "cutoff") : cfg.cutoff;
        check_envelope(static_cast<int>(A.rows()), cutoff);
        const FockSpace space(static_cast<int>(A.rows()), cutoff);
        Json arr = Json::array();
        for (Kind k : kinds_of(kind))
          for (const auto& rep : verify_sector_bounds(space, A, k)) arr.push_back(to_json(rep));
        emit(arr);
      } else if (kind == "mixed") {
        const Json& norms = field(j, "norms");
        if (!norms.is_array()) throw InputError("norms must be an array");
        std::vector<double> ns;
        for (const auto& v : norms) ns.push_back(v.get<double>());
        emit(Json{{"kind", "mixed"}, {"n", int_field(j, "n")}, {"bound", mixed_product_bound(ns, int_field(j, "n"))}});
      } else {
        const CMatrix A = matrix_from_json(field(j, "A"));
        const int n = int_field(j, "n");
        const int m = j.contains("m") ? int_field(j, "m") : 1;
        Json arr = Json::array();
        for (Kind k : kinds_of(kind))
          arr.push_back(Json{{"kind", to_string(k)}, {"n", n}, {"m", m}, {"abs_norm", abs_norm(A)},
                             {"bound", power_bound(k, A, n, m)}});
        emit(arr);
      }
    } else if (app.got_subcommand(dioph_cmd)) {
      Json arr = Json::array();
      for (const auto& p : dioph_pairs(dioph_max)) arr.push_back(Json::array({p.n, p.N}));
      emit(arr);
    } else if (app.got_subcommand(verify_cmd)) {
      VerifyOptions opts;
      opts.seed = seed_opt->count() > 0 ? seed : cfg.seed;
      opts.suite = suite;
      opts.tol = tol;
      const auto& names = suite_names();
      bool known = suite == "all";
      for (std::size_t i = 0; i < names.size(); ++i)
        known = known || suite == names[i] || suite == std::to_string(i + 1);
      if (!known) throw InputError("unknown suite '" + suite + "'");
      const auto results = run_acceptance(opts);
      Json arr = Json::array();
      int passed = 0;
      for (const auto& r : results) {
        passed += r.passed ? 1 : 0;
        arr.push_back(Json{{"id", r.id},
                           {"name", r.name},
                           {"passed", r.passed},
                           {"checks", r.checks},
                           {"failures", r.failures},
                           {"worst_ratio", r.worst_ratio},
                           {"note", r.note}});
      }
      emit(Json{{"seed", opts.seed},
                {"suites", arr},
                {"passed", passed},
                {"total", results.size()},
                {"all_passed", passed == static_cast<int>(results.size())}});
    }
    return 0;
  } catch (const DomainError& e) {
    out << dump(error_json(to_string(e.code()), e.stage(), e.detail()), 2) << "\n";
    return 2;
  } catch (const InputError& e) {
    out << dump(error_json("MalformedInput", "input", e.what()), 2) << "\n";
    return 1;
  } catch (const nlohmann::json::exception& e) {
    out << dump(error_json("MalformedInput", "input", e.what()), 2) << "\n";
    return 1;
  } catch (const std::exception& e) {
    out << dump(error_json("InternalError", "cli", e.what()), 2) << "\n";
    return 1;
  }
}

}  // namespace quadheis
