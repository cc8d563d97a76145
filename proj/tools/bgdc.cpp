// bgdc — exact Berends-Giele currents, amplitudes, and identity verification.
//
//   bgdc gen      --n 4 --seed 7 -o kin.json     random exact kinematics
//   bgdc compute  currents  --theory cs --word 12 -i kin.json
//   bgdc compute  amplitude -i kin.json
//   bgdc verify   --suite all --nmax 5 --seeds 5 --mode exact
//
// Exit codes: 0 success, 1 usage/IO error, 2 generation failure,
// 3 kinematic degeneracy (vanishing s_P), 4 verification failure.
// The environment variable BGDC_MODE (exact|float) overrides --mode.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "bgdc/amplitudes.hpp"
#include "bgdc/currents.hpp"
#include "bgdc/json_io.hpp"
#include "bgdc/random_config.hpp"
#include "bgdc/verify.hpp"

namespace {

using bgdc::json;

void write_output(const json& j, const std::string& path) {
  const std::string text = j.dump(2) + "\n";
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file: " + path);
  out << text;
}

json read_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  json j;
  in >> j;
  return j;
}

std::string resolve_mode(std::string mode) {
  if (const char* env = std::getenv("BGDC_MODE"); env && *env) mode = env;
  if (mode != "exact" && mode != "float")
    throw std::invalid_argument("mode must be 'exact' or 'float', got '" + mode + "'");
  return mode;
}

template <class F>
bgdc::StructureConstants<F> default_algebra();

template <>
bgdc::StructureConstants<bgdc::ExactScalar> default_algebra<bgdc::ExactScalar>() {
  return bgdc::builtin_su2();
}

template <>
bgdc::StructureConstants<bgdc::FloatScalar> default_algebra<bgdc::FloatScalar>() {
  return bgdc::to_float_algebra(bgdc::builtin_su2());
}

int cmd_gen(int n, std::uint64_t seed, const std::string& out_path) {
  bgdc::KinConfig<bgdc::ExactScalar> cfg = bgdc::random_kinematics(n, seed);
  bgdc::ValidationReport rep = bgdc::validate(cfg);
  if (!rep.pass) throw std::runtime_error("generated configuration failed validation:\n" + rep.summary());
  write_output(bgdc::kinconfig_to_json(cfg), out_path);
  return 0;
}

template <class F>
json current_value_json(bgdc::CurrentEngine<F>& eng, bgdc::Theory theory, const bgdc::Word& W) {
  switch (theory) {
    case bgdc::Theory::cs:
      return bgdc::vec_to_json(eng.cs(W));
    case bgdc::Theory::cd: {
      json out = json::array();
      for (const auto& v : eng.cd(W)) out.push_back(bgdc::vec_to_json(v));
      return out;
    }
    case bgdc::Theory::dc: {
      json out = json::array();
      for (const auto& row : eng.dc(W)) {
        json r = json::array();
        for (const auto& x : row) r.push_back(bgdc::scalar_to_json(x));
        out.push_back(std::move(r));
      }
      return out;
    }
    case bgdc::Theory::zc: {
      json out = json::array();
      for (const auto& row : eng.zc(W)) {
        json r = json::array();
        for (const auto& x : row) r.push_back(bgdc::scalar_to_json(x));
        out.push_back(std::move(r));
      }
      return out;
    }
  }
  throw std::invalid_argument("unknown theory");
}

template <class F>
int compute_currents(const json& kin, const std::string& theory_name,
                     const std::vector<std::string>& words, const std::string& out_path) {
  bgdc::KinConfig<F> cfg = bgdc::kinconfig_from_json<F>(kin);
  bgdc::StructureConstants<F> sc = default_algebra<F>();
  bgdc::CurrentEngine<F> eng(cfg, sc);
  bgdc::Theory theory = bgdc::parse_theory(theory_name);
  json table = json::object();
  for (const std::string& ws : words) {
    bgdc::Word W = bgdc::Word::parse(ws);
    table[W.str()] = current_value_json(eng, theory, W);
  }
  write_output(table, out_path);
  return 0;
}

template <class F>
int compute_amplitude(const json& kin, const std::string& out_path) {
  bgdc::KinConfig<F> cfg = bgdc::kinconfig_from_json<F>(kin);
  bgdc::CurrentEngine<F> eng(cfg, default_algebra<F>());
  const int n = cfg.n();
  json orderings = json::object();
  for (const bgdc::Word& P : bgdc::permutations_of(bgdc::word_range(1, n - 1))) {
    bgdc::Word ordering = P.append(bgdc::Letter(n));
    orderings[ordering.str()] = bgdc::scalar_to_json(bgdc::partial_amplitude(eng, ordering));
  }
  json out = {
      {"n", n},
      {"orderings", std::move(orderings)},
      {"full", bgdc::scalar_to_json(bgdc::full_amplitude(eng))},
      {"tensor",
       {{"direct", bgdc::scalar_to_json(bgdc::tensor_amplitude(eng, bgdc::TensorMethod::direct))},
        {"master", bgdc::scalar_to_json(bgdc::tensor_amplitude(eng, bgdc::TensorMethod::master))},
        {"klt", bgdc::scalar_to_json(bgdc::tensor_amplitude(eng, bgdc::TensorMethod::klt))},
        {"sigma", bgdc::sigma_n(n)}}}};
  write_output(out, out_path);
  return 0;
}

template <class F>
int run_verify(const std::vector<std::string>& suites, const bgdc::VerifyOptions& opt,
               const std::string& mode, const std::string& out_path) {
  std::vector<bgdc::SuiteResult> results = bgdc::run_suites<F>(suites, opt);
  json jsuites = json::array();
  bool all_pass = true;
  for (const auto& res : results) {
    json items = json::array();
    for (const auto& item : res.report.items)
      items.push_back(json{{"constraint", item.constraint}, {"ok", item.ok}, {"detail", item.detail}});
    jsuites.push_back(json{{"name", res.name},
                           {"pass", res.pass()},
                           {"wall_ms", res.wall_ms},
                           {"items", std::move(items)}});
    all_pass = all_pass && res.pass();
    std::cerr << "suite " << res.name << ": " << (res.pass() ? "PASS" : "FAIL") << " ("
              << res.wall_ms << " ms)\n";
    for (const auto& item : res.report.items)
      if (!item.detail.empty() || !item.ok)
        std::cerr << "  " << (item.ok ? "ok " : "FAIL ") << item.constraint
                  << (item.detail.empty() ? "" : ": " + item.detail) << "\n";
  }
  json report = {{"mode", mode},
                 {"nmax", opt.nmax},
                 {"seeds", opt.seeds},
                 {"suites", std::move(jsuites)},
                 {"pass", all_pass}};
  write_output(report, out_path);
  return all_pass ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Berends-Giele currents and tree amplitudes in exact arithmetic"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate random exact kinematics");
  int gen_n = 0;
  std::uint64_t gen_seed = 1;
  std::string gen_out = "-";
  gen->add_option("--n", gen_n, "number of particles (>= 3)")->required();
  gen->add_option("--seed", gen_seed, "random seed");
  gen->add_option("-o,--output", gen_out, "output path ('-' for stdout)");

  // compute
  auto* compute = app.add_subcommand("compute", "evaluate currents or amplitudes");
  compute->require_subcommand(1);
  auto* currents = compute->add_subcommand("currents", "Berends-Giele current table");
  std::string cur_theory;
  std::vector<std::string> cur_words;
  std::string cur_in, cur_out = "-", cur_mode = "exact";
  currents->add_option("--theory", cur_theory, "cs | cd | dc | zc")->required();
  currents->add_option("--word", cur_words, "word(s), e.g. 123 (repeatable)")->required();
  currents->add_option("-i,--i,--input", cur_in, "kinematics JSON")->required();
  currents->add_option("-o,--output", cur_out, "output path");
  currents->add_option("--mode", cur_mode, "exact | float");

  auto* amplitude = compute->add_subcommand("amplitude", "partial, full, and tensor amplitudes");
  std::string amp_in, amp_out = "-", amp_mode = "exact";
  amplitude->add_option("-i,--i,--input", amp_in, "kinematics JSON")->required();
  amplitude->add_option("-o,--output", amp_out, "output path");
  amplitude->add_option("--mode", amp_mode, "exact | float");

  // verify
  auto* verify = app.add_subcommand("verify", "run identity verification suites");
  std::vector<std::string> ver_suites = {"all"};
  bgdc::VerifyOptions ver_opt;
  std::string ver_mode = "exact", ver_out = "-";
  verify->add_option("--suite", ver_suites, "suite names or 'all' (repeatable)");
  verify->add_option("--nmax", ver_opt.nmax, "largest particle count");
  verify->add_option("--seeds", ver_opt.seeds, "configurations per particle count");
  verify->add_option("--seed", ver_opt.base_seed, "base random seed");
  verify->add_option("--mode", ver_mode, "exact | float");
  verify->add_option("-o,--output", ver_out, "JSON report path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (gen->parsed()) return cmd_gen(gen_n, gen_seed, gen_out);

    if (currents->parsed()) {
      const std::string mode = resolve_mode(cur_mode);
      json kin = read_input(cur_in);
      return mode == "exact"
                 ? compute_currents<bgdc::ExactScalar>(kin, cur_theory, cur_words, cur_out)
                 : compute_currents<bgdc::FloatScalar>(kin, cur_theory, cur_words, cur_out);
    }

    if (amplitude->parsed()) {
      const std::string mode = resolve_mode(amp_mode);
      json kin = read_input(amp_in);
      return mode == "exact" ? compute_amplitude<bgdc::ExactScalar>(kin, amp_out)
                             : compute_amplitude<bgdc::FloatScalar>(kin, amp_out);
    }

    if (verify->parsed()) {
      const std::string mode = resolve_mode(ver_mode);
      std::vector<std::string> names;
      for (const auto& s : ver_suites) {
        if (s == "all") {
          names = bgdc::all_suite_names();
          break;
        }
        names.push_back(s);
      }
      for (const auto& name : names) {
        const auto& known = bgdc::all_suite_names();
        if (std::find(known.begin(), known.end(), name) == known.end())
          throw std::invalid_argument("unknown suite: " + name);
      }
      return mode == "exact" ? run_verify<bgdc::ExactScalar>(names, ver_opt, mode, ver_out)
                             : run_verify<bgdc::FloatScalar>(names, ver_opt, mode, ver_out);
    }
  } catch (const bgdc::SPoleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const bgdc::GenerationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const json::exception& e) {
    std::cerr << "error: malformed JSON: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
  return 1;
}
