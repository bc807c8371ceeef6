// cjlogic command line front end.
//
// Exit codes: 0 success / holds / confirmed, 1 refuted / rejected / failed,
// 2 usage, parse or input errors.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cjlogic/cjlogic.hpp"

namespace {

using namespace cjlogic;

constexpr int kOk = 0;
constexpr int kRefuted = 1;
constexpr int kUsage = 2;

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

Formula parse_arg(const std::string& text) {
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw std::invalid_argument("cannot parse '" + text + "': " + e.what());
  }
}

SystemVariant system_from(const std::string& s) {
  if (s == "cj") return SystemVariant::CJ;
  if (s == "cj-minus") return SystemVariant::CJMinus;
  throw std::invalid_argument("unknown system '" + s + "' (cj or cj-minus)");
}

int print_verdict3(const Verdict3& v, const std::vector<std::string>& order, const char* holds, const char* fails) {
  if (v.holds) {
    std::cout << holds << "\n";
    return kOk;
  }
  std::cout << fails << "\n" << to_ordered_json(*v.countervaluation, order).dump() << "\n";
  return kRefuted;
}

}  // namespace

int main(int argc, char** argv) {
  // `three entails A B -- C`: everything after "--" is the conclusion.
  std::vector<std::string> args(argv + 1, argv + argc);
  std::vector<std::string> after_dash;
  bool saw_dash = false;
  if (auto it = std::find(args.begin(), args.end(), "--"); it != args.end()) {
    saw_dash = true;
    after_dash.assign(it + 1, args.end());
    args.erase(it, args.end());
  }

  CLI::App app{"Kripke, three-valued and Hilbert-style tools for the combined classical/intuitionistic logic"};
  app.require_subcommand(1);

  std::string formula_text, path, system = "cj-minus";
  bool core = false, as_json = false;
  std::size_t world = 0, max_worlds = SearchBudget::from_env().max_worlds;
  std::uint64_t seed = 0;
  std::vector<std::string> gamma;

  auto* parse_cmd = app.add_subcommand("parse", "parse a formula and print it back");
  parse_cmd->add_option("formula", formula_text)->required();
  parse_cmd->add_flag("--core", core, "print without abbreviations");

  auto* kripke = app.add_subcommand("kripke", "Kripke semantics");
  kripke->require_subcommand(1);
  auto* keval = kripke->add_subcommand("eval", "evaluate a formula at a world of a model");
  keval->add_option("model", path)->required();
  keval->add_option("world", world)->required();
  keval->add_option("formula", formula_text)->required();
  auto* kcm = kripke->add_subcommand("countermodel", "search models for a world where the formula fails");
  kcm->add_option("formula", formula_text)->required();
  kcm->add_option("--max-worlds", max_worlds, "largest model size to enumerate");

  auto* three = app.add_subcommand("three", "three-valued semantics");
  three->require_subcommand(1);
  auto* teval = three->add_subcommand("eval", "evaluate a formula under a valuation");
  teval->add_option("valuation", path)->required();
  teval->add_option("formula", formula_text)->required();
  auto* tvalid = three->add_subcommand("valid", "decide 3-validity");
  tvalid->add_option("formula", formula_text)->required();
  auto* tentails = three->add_subcommand("entails", "decide 3-consequence: premises -- conclusion");
  tentails->add_option("premises", gamma);

  auto* proof = app.add_subcommand("proof", "Hilbert proofs");
  proof->require_subcommand(1);
  auto* pcheck = proof->add_subcommand("check", "check a proof file");
  pcheck->add_option("proof", path)->required();
  pcheck->add_option("--system", system, "cj or cj-minus")->check(CLI::IsMember({"cj", "cj-minus"}));

  auto* repro = app.add_subcommand("reproduce", "re-run every claim check");
  repro->add_option("--seed", seed);
  repro->add_flag("--json", as_json);

  std::vector<const char*> cargv{argv[0]};
  for (const auto& a : args) cargv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(cargv.size()), cargv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  if (saw_dash && !tentails->parsed()) {
    std::cerr << "'--' is only used by 'three entails'\n";
    return kUsage;
  }

  try {
    if (parse_cmd->parsed()) {
      std::cout << render(parse_arg(formula_text), core ? RenderMode::Core : RenderMode::Sugared) << "\n";
      return kOk;
    }
    if (keval->parsed()) {
      const KripkeModel m = model_from_json(read_json_file(path));
      const bool holds = satisfies(m, world, parse_arg(formula_text));
      std::cout << (holds ? "true" : "false") << "\n";
      return holds ? kOk : kRefuted;
    }
    if (kcm->parsed()) {
      const Formula f = parse_arg(formula_text);
      SearchBudget budget = SearchBudget::from_env();
      budget.max_worlds = std::max(budget.max_worlds, max_worlds);
      auto w = countermodel_search(f, max_worlds, budget);
      if (!w) {
        std::cout << "none found (all models with <= " << max_worlds << " worlds)\n";
        return kOk;
      }
      std::cout << to_json(*w).dump() << "\n";
      return kRefuted;
    }
    if (teval->parsed()) {
      const TruthValue3 x = eval3(valuation3_from_json(read_json_file(path)), parse_arg(formula_text));
      std::cout << x.symbol() << "\n";
      return x.designated() ? kOk : kRefuted;
    }
    if (tvalid->parsed()) {
      const Formula f = parse_arg(formula_text);
      return print_verdict3(is_3_valid(f), atoms(f), "3-valid", "not 3-valid");
    }
    if (tentails->parsed()) {
      if (!saw_dash || after_dash.size() != 1) {
        std::cerr << "usage: three entails <premise>... -- <conclusion>\n";
        return kUsage;
      }
      std::vector<Formula> premises;
      for (const auto& g : gamma) premises.push_back(parse_arg(g));
      const Formula c = parse_arg(after_dash.front());
      std::vector<Formula> all = premises;
      all.push_back(c);
      return print_verdict3(consequence3(premises, c), atoms(all), "entailed", "not entailed");
    }
    if (pcheck->parsed()) {
      const Proof p = proof_from_json(read_json_file(path));
      const ProofVerdict v = check_proof(p, system_from(system));
      std::cout << to_json(v).dump() << "\n";
      return v.accepted ? kOk : kRefuted;
    }
    if (repro->parsed()) {
      ReproduceOptions opt;
      opt.seed = seed;
      const ReproduceReport r = reproduce(opt);
      if (as_json)
        std::cout << r.json().dump(2) << "\n";
      else
        std::cout << r.text();
      return r.exit_code();
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::runtime_error& e) {
    // InvalidModel, BudgetExceeded, AtomCapExceeded
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
