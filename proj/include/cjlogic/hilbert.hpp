#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "cjlogic/formula.hpp"
#include "cjlogic/parser.hpp"
#include "cjlogic/three_valued.hpp"

namespace cjlogic {

/// CJMinus has rules MPI and RCN; CJ adds MPC.
enum class SystemVariant { CJMinus, CJ };

enum class Axiom { CL, CK, ID, CMP, PER };
enum class Rule { MPI, RCN, MPC };

inline std::string_view name_of(Axiom a) {
  switch (a) {
    case Axiom::CL: return "CL";
    case Axiom::CK: return "CK";
    case Axiom::ID: return "ID";
    case Axiom::CMP: return "CMP";
    case Axiom::PER: return "PER";
  }
  return "?";
}

inline std::string_view name_of(Rule r) {
  switch (r) {
    case Rule::MPI: return "MPI";
    case Rule::RCN: return "RCN";
    case Rule::MPC: return "MPC";
  }
  return "?";
}

inline std::string_view name_of(SystemVariant s) { return s == SystemVariant::CJ ? "cj" : "cj-minus"; }

inline std::optional<Axiom> axiom_from_name(std::string_view s) {
  for (Axiom a : {Axiom::CL, Axiom::CK, Axiom::ID, Axiom::CMP, Axiom::PER})
    if (name_of(a) == s) return a;
  return std::nullopt;
}

inline std::optional<Rule> rule_from_name(std::string_view s) {
  for (Rule r : {Rule::MPI, Rule::RCN, Rule::MPC})
    if (name_of(r) == s) return r;
  return std::nullopt;
}

inline bool admits(SystemVariant s, Rule r) { return r != Rule::MPC || s == SystemVariant::CJ; }

/// Why a step was rejected. The string forms are the machine-readable
/// reason codes in verdict JSON.
enum class Reason {
  Shape,                  // formula does not have the schema's shape
  MetavariableMismatch,   // one metavariable bound to two different formulas
  NotPersistent,          // PER antecedent outside the persistent class
  NonTautologousSkeleton, // CL: classical skeleton is not a tautology
  Arity,                  // wrong number of premises
  RuleNotInSystem,        // MPC in CJMinus
  BadPremiseIndex,        // premise not a strictly earlier step
  UnknownName,            // axiom or rule name not recognized
  EmptyProof,
  ClaimMismatch,          // last formula differs from the claim
};

inline std::string_view reason_code(Reason r) {
  switch (r) {
    case Reason::Shape: return "shape";
    case Reason::MetavariableMismatch: return "metavariable_mismatch";
    case Reason::NotPersistent: return "not_persistent";
    case Reason::NonTautologousSkeleton: return "non_tautologous_skeleton";
    case Reason::Arity: return "arity";
    case Reason::RuleNotInSystem: return "rule_not_in_system";
    case Reason::BadPremiseIndex: return "bad_premise_index";
    case Reason::UnknownName: return "unknown_name";
    case Reason::EmptyProof: return "empty_proof";
    case Reason::ClaimMismatch: return "claim_mismatch";
  }
  return "?";
}

struct Mismatch {
  Reason reason;
  std::string detail;
};

/// nullopt means the check passed.
using CheckResult = std::optional<Mismatch>;

namespace detail {

inline Formula meta(const char* n) { return Formula::atom(n); }

// Schemas use the metavariables A, B, C as atoms; user atoms are lowercase
// so they cannot collide.
inline const Formula& schema(Axiom a) {
  static const Formula A = meta("A"), B = meta("B"), C = meta("C");
  static const Formula ck = Formula::imp_c(Formula::imp_i(A, Formula::imp_c(B, C)),
                                           Formula::imp_c(Formula::imp_i(A, B), Formula::imp_i(A, C)));
  static const Formula id = Formula::imp_i(A, A);
  static const Formula cmp = Formula::imp_c(Formula::imp_i(A, B), Formula::imp_c(A, B));
  static const Formula per = Formula::imp_c(A, Formula::imp_i(B, A));
  switch (a) {
    case Axiom::CK: return ck;
    case Axiom::ID: return id;
    case Axiom::CMP: return cmp;
    case Axiom::PER: return per;
    case Axiom::CL: break;
  }
  throw std::logic_error("CL has no single schema");
}

// One-way match of f against pattern; pattern atoms are metavariables.
inline CheckResult match_schema(const Formula& pattern, const Formula& f, std::map<std::string, Formula>& binding,
                                const std::string& path) {
  if (pattern.is_atom()) {
    auto [it, fresh] = binding.emplace(pattern.name(), f);
    if (!fresh && !(it->second == f))
      return Mismatch{Reason::MetavariableMismatch, "metavariable " + pattern.name() + " bound to both '" +
                                                        render(it->second) + "' and '" + render(f) + "'"};
    return std::nullopt;
  }
  if (pattern.kind() != f.kind())
    return Mismatch{Reason::Shape, "expected " + std::string(pattern.kind() == Kind::ImpI ? "->i" : "->c") +
                                       " at " + (path.empty() ? "the root" : path) + ", found '" + render(f) + "'"};
  if (auto r = match_schema(pattern.left(), f.left(), binding, path + "L")) return r;
  return match_schema(pattern.right(), f.right(), binding, path + "R");
}

}  // namespace detail

/// Checks that f is an instance of the named axiom. CL accepts f iff its
/// classical skeleton is a two-valued tautology.
inline CheckResult match_axiom(Axiom a, const Formula& f) {
  if (a == Axiom::CL) {
    const Skeleton sk = classical_skeleton(f);
    if (is_two_valued_tautology(sk.formula)) return std::nullopt;
    return Mismatch{Reason::NonTautologousSkeleton,
                    "skeleton '" + render(sk.formula) + "' is not a classical tautology"};
  }
  std::map<std::string, Formula> binding;
  if (auto r = detail::match_schema(detail::schema(a), f, binding, "")) return r;
  if (a == Axiom::PER && !is_persistent(binding.at("A")))
    return Mismatch{Reason::NotPersistent, "antecedent '" + render(binding.at("A")) + "' is not persistent"};
  return std::nullopt;
}

inline CheckResult check_rule(Rule r, const std::vector<Formula>& premises, const Formula& conclusion,
                              SystemVariant system) {
  if (!admits(system, r))
    return Mismatch{Reason::RuleNotInSystem,
                    std::string(name_of(r)) + " is not a rule of " + std::string(name_of(system))};
  const std::size_t want = r == Rule::RCN ? 1 : 2;
  if (premises.size() != want)
    return Mismatch{Reason::Arity, std::string(name_of(r)) + " takes " + std::to_string(want) + " premise(s), got " +
                                       std::to_string(premises.size())};
  switch (r) {
    case Rule::MPI:
    case Rule::MPC: {
      const Formula expected = Formula::binary(r == Rule::MPI ? Kind::ImpI : Kind::ImpC, premises[0], conclusion);
      if (premises[1] == expected) return std::nullopt;
      return Mismatch{Reason::Shape,
                      "second premise must be '" + render(expected) + "', found '" + render(premises[1]) + "'"};
    }
    case Rule::RCN:
      if (conclusion.kind() == Kind::ImpI && conclusion.right() == premises[0]) return std::nullopt;
      return Mismatch{Reason::Shape, "conclusion must have the form B ->i " + render(premises[0])};
  }
  return std::nullopt;
}

struct AxiomStep {
  Axiom axiom;
  Formula formula;
};

struct RuleStep {
  Rule rule;
  std::vector<std::size_t> premises;  // indices of strictly earlier steps
  Formula formula;
};

/// A step whose axiom or rule name was not recognized when loading. Kept so
/// that the checker, not the loader, reports it with a step index.
struct UnknownStep {
  std::string name;
  Formula formula;
};

using ProofStep = std::variant<AxiomStep, RuleStep, UnknownStep>;

inline const Formula& formula_of(const ProofStep& s) {
  return std::visit([](const auto& x) -> const Formula& { return x.formula; }, s);
}

struct Proof {
  std::vector<ProofStep> steps;
  Formula claim = Formula::bottom();
};

struct ProofVerdict {
  bool accepted = true;
  std::optional<std::size_t> step;  // unset when the failure is not tied to a step
  std::optional<Reason> reason;
  std::string detail;

  explicit operator bool() const noexcept { return accepted; }
};

inline ProofVerdict check_proof(const Proof& p, SystemVariant system) {
  auto reject = [](std::optional<std::size_t> step, Reason r, std::string detail) {
    return ProofVerdict{false, step, r, std::move(detail)};
  };
  if (p.steps.empty()) return reject(std::nullopt, Reason::EmptyProof, "proof has no steps");
  for (std::size_t k = 0; k < p.steps.size(); ++k) {
    const ProofStep& s = p.steps[k];
    if (const auto* ax = std::get_if<AxiomStep>(&s)) {
      if (auto m = match_axiom(ax->axiom, ax->formula))
        return reject(k, m->reason, std::string(name_of(ax->axiom)) + ": " + m->detail);
    } else if (const auto* ru = std::get_if<RuleStep>(&s)) {
      std::vector<Formula> premises;
      for (std::size_t i : ru->premises) {
        if (i >= k)
          return reject(k, Reason::BadPremiseIndex,
                        "premise " + std::to_string(i) + " is not an earlier step");
        premises.push_back(formula_of(p.steps[i]));
      }
      if (auto m = check_rule(ru->rule, premises, ru->formula, system))
        return reject(k, m->reason, std::string(name_of(ru->rule)) + ": " + m->detail);
    } else {
      return reject(k, Reason::UnknownName, "unknown axiom or rule '" + std::get<UnknownStep>(s).name + "'");
    }
  }
  if (!(formula_of(p.steps.back()) == p.claim))
    return reject(p.steps.size() - 1, Reason::ClaimMismatch,
                  "last step proves '" + render(formula_of(p.steps.back())) + "', claim is '" + render(p.claim) + "'");
  return {};
}

/// The derivation showing MPI is redundant given CMP and MPC. From proofs
/// of A (ending at step a) and A ->i B (ending at step ab), appends
///   (A ->i B) ->c (A ->c B)    CMP
///   A ->c B                    MPC
///   B                          MPC
/// and returns the index of the final step.
inline std::size_t append_mpi_via_mpc(std::vector<ProofStep>& steps, std::size_t a, std::size_t ab) {
  const Formula& fa = formula_of(steps.at(a));
  const Formula& fab = formula_of(steps.at(ab));
  if (fab.kind() != Kind::ImpI || !(fab.left() == fa))
    throw std::invalid_argument("append_mpi_via_mpc: step ab is not A ->i B for step a");
  const Formula b = fab.right();
  const Formula ac = Formula::imp_c(fa, b);
  steps.push_back(AxiomStep{Axiom::CMP, Formula::imp_c(fab, ac)});
  const std::size_t cmp = steps.size() - 1;
  steps.push_back(RuleStep{Rule::MPC, {ab, cmp}, ac});
  const std::size_t c = steps.size() - 1;
  steps.push_back(RuleStep{Rule::MPC, {a, c}, b});
  return steps.size() - 1;
}

/// A concrete proof of B = q ->i (p ->i p) that uses MPC in place of MPI,
/// with A = p ->i p. Accepted in CJ, rejected in CJMinus at step 4.
inline Proof mpi_redundancy_proof() {
  const Formula a = parse("p ->i p");
  const Formula b = Formula::imp_i(parse("q"), a);
  Proof p;
  p.steps.push_back(AxiomStep{Axiom::ID, a});                           // 0: A
  p.steps.push_back(RuleStep{Rule::RCN, {0}, b});                        // 1: B
  p.steps.push_back(RuleStep{Rule::RCN, {1}, Formula::imp_i(a, b)});    // 2: A ->i B
  append_mpi_via_mpc(p.steps, 0, 2);                                     // 3..5
  p.claim = b;
  return p;
}

// ---------------------------------------------------------------------------
// JSON
//   {"claim": "p ->i p", "steps": [{"axiom": "ID", "formula": "p ->i p"},
//                                  {"rule": "MPI", "premises": [0, 1], "formula": "..."}]}

inline Proof proof_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("proof must be a JSON object");
  if (!j.contains("claim") || !j["claim"].is_string()) throw std::invalid_argument("proof needs a string \"claim\"");
  if (!j.contains("steps") || !j["steps"].is_array()) throw std::invalid_argument("proof needs a \"steps\" array");
  Proof p;
  p.claim = parse(j["claim"].get<std::string>());
  for (const auto& s : j["steps"]) {
    if (!s.is_object() || !s.contains("formula") || !s["formula"].is_string())
      throw std::invalid_argument("every step needs a string \"formula\"");
    Formula f = parse(s["formula"].get<std::string>());
    if (s.contains("axiom")) {
      const auto name = s["axiom"].get<std::string>();
      if (auto a = axiom_from_name(name))
        p.steps.emplace_back(AxiomStep{*a, f});
      else
        p.steps.emplace_back(UnknownStep{name, f});
    } else if (s.contains("rule")) {
      const auto name = s["rule"].get<std::string>();
      std::vector<std::size_t> premises;
      if (s.contains("premises")) {
        if (!s["premises"].is_array()) throw std::invalid_argument("\"premises\" must be an array");
        for (const auto& i : s["premises"]) {
          if (!i.is_number_unsigned()) throw std::invalid_argument("premise indices must be non-negative integers");
          premises.push_back(i.get<std::size_t>());
        }
      }
      if (auto r = rule_from_name(name))
        p.steps.emplace_back(RuleStep{*r, std::move(premises), f});
      else
        p.steps.emplace_back(UnknownStep{name, f});
    } else {
      throw std::invalid_argument("step needs \"axiom\" or \"rule\"");
    }
  }
  return p;
}

inline nlohmann::ordered_json to_json(const Proof& p) {
  nlohmann::ordered_json j;
  j["claim"] = render(p.claim);
  auto steps = nlohmann::ordered_json::array();
  for (const auto& s : p.steps) {
    nlohmann::ordered_json js;
    if (const auto* ax = std::get_if<AxiomStep>(&s)) {
      js["axiom"] = std::string(name_of(ax->axiom));
    } else if (const auto* ru = std::get_if<RuleStep>(&s)) {
      js["rule"] = std::string(name_of(ru->rule));
      js["premises"] = ru->premises;
    } else {
      js["axiom"] = std::get<UnknownStep>(s).name;
    }
    js["formula"] = render(formula_of(s));
    steps.push_back(js);
  }
  j["steps"] = steps;
  return j;
}

inline nlohmann::ordered_json to_json(const ProofVerdict& v) {
  nlohmann::ordered_json j;
  j["accepted"] = v.accepted;
  if (!v.accepted) {
    j["step"] = v.step ? nlohmann::ordered_json(*v.step) : nlohmann::ordered_json(nullptr);
    j["reason"] = std::string(reason_code(*v.reason));
    j["detail"] = v.detail;
  }
  return j;
}

}  // namespace cjlogic
