#pragma once

// Mechanical checks behind each entry of the reproduce report. Every check
// returns a ClaimRecord; the reproduce pipeline runs them in registry order.

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cjlogic/formula.hpp"
#include "cjlogic/generate.hpp"
#include "cjlogic/hilbert.hpp"
#include "cjlogic/kripke.hpp"
#include "cjlogic/parser.hpp"
#include "cjlogic/soundness.hpp"
#include "cjlogic/three_valued.hpp"

namespace cjlogic {

/// confirmed: established exhaustively (or analytically) at the stated
/// bound. bounded-evidence: the claim quantifies over all models and only a
/// bounded search backs it. expected-exhibit: a documented negative result
/// that is supposed to show up.
enum class ClaimStatus { Confirmed, BoundedEvidence, ExpectedExhibit, Failed };

inline std::string_view status_name(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::Confirmed: return "confirmed";
    case ClaimStatus::BoundedEvidence: return "bounded-evidence";
    case ClaimStatus::ExpectedExhibit: return "expected-exhibit";
    case ClaimStatus::Failed: return "failed";
  }
  return "?";
}

struct ClaimRecord {
  std::string id;
  ClaimStatus status = ClaimStatus::Failed;
  std::string summary;
  nlohmann::ordered_json witness;

  bool passed() const noexcept { return status != ClaimStatus::Failed; }
};

/// Formula valid on every Kripke model but not 3-valid.
inline Formula incompleteness_witness() { return parse("(p & (p ->c q)) ->i q"); }

using Evaluator3 = std::function<TruthValue3(const Valuation3&, const Formula&)>;

namespace golden {

// Rows are the left operand, columns the right, both in order t, b, f.
struct BinaryTable {
  const char* op;
  Kind kind;
  std::array<const char*, 3> rows;
};

inline const std::array<BinaryTable, 4>& binary_tables() {
  static const std::array<BinaryTable, 4> t{{
      {"&", Kind::And, {"tbf", "bbf", "fff"}},
      {"|", Kind::Or, {"ttt", "tbb", "tbf"}},
      {"->c", Kind::ImpC, {"tbf", "tbb", "ttt"}},
      {"->i", Kind::ImpI, {"tbf", "tbf", "ttt"}},
  }};
  return t;
}

// Bottom is f whatever the atoms are: one entry per row value.
inline constexpr const char* kBottomColumn = "fff";
inline constexpr const char* kNegC = "fbt";
inline constexpr const char* kNegI = "fft";
inline constexpr const char* kOrder = "tbf";

}  // namespace golden

/// Compares `eval` with the three-valued truth tables: 36 binary cells, the
/// 3-entry bottom column and the 6 negation entries.
inline ClaimRecord check_truth_tables(const Evaluator3& eval = eval3) {
  ClaimRecord r{"truth-tables", ClaimStatus::Confirmed, "", nlohmann::ordered_json::array()};
  const Formula p = Formula::atom("p"), q = Formula::atom("q");
  std::size_t cells = 0;
  auto expect = [&](const std::string& table, const Formula& f, const Valuation3& v, char want) {
    ++cells;
    const char got = eval(v, f).symbol();
    if (got != want) {
      r.status = ClaimStatus::Failed;
      r.witness.push_back({{"table", table}, {"formula", render(f)}, {"valuation", to_ordered_json(v, {"p", "q"})},
                           {"expected", std::string(1, want)}, {"got", std::string(1, got)}});
    }
  };
  for (const auto& t : golden::binary_tables())
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        Valuation3 v{{"p", *TruthValue3::from_symbol(golden::kOrder[i])},
                     {"q", *TruthValue3::from_symbol(golden::kOrder[j])}};
        expect(t.op, Formula::binary(t.kind, p, q), v, t.rows[i][j]);
      }
  for (int i = 0; i < 3; ++i) {
    Valuation3 v{{"p", *TruthValue3::from_symbol(golden::kOrder[i])}};
    expect("F", Formula::bottom(), v, golden::kBottomColumn[i]);
    expect("~c", Formula::neg_c(p), v, golden::kNegC[i]);
    expect("~i", Formula::neg_i(p), v, golden::kNegI[i]);
  }
  r.summary = std::to_string(cells) + " table entries checked, " + std::to_string(r.witness.size()) + " mismatches";
  return r;
}

/// Searches models over {p} with up to max_worlds worlds for one where ~c p
/// is true at w and false at a successor of w.
inline ClaimRecord check_negc_heredity_failure(std::size_t max_worlds = 2) {
  ClaimRecord r{"negc-heredity-failure", ClaimStatus::Failed, "", nullptr};
  const Formula f = parse("~c p");
  for_each_model(max_worlds, {"p"}, [&](const KripkeModel& m) {
    auto fail = heredity_failure(m, f);
    if (!fail) return true;
    r.status = ClaimStatus::Confirmed;
    r.summary = "~c p holds at world " + std::to_string(fail->first) + " but not at its successor " +
                std::to_string(fail->second);
    r.witness = {{"model", to_json(m)}, {"pair", {fail->first, fail->second}}};
    return false;
  });
  if (!r.passed()) r.summary = "no heredity failure of ~c p found";
  return r;
}

/// Countermodels for both ~c p ->c (q ->i ~c p) and ~c p ->i (q ->i ~c p).
inline ClaimRecord check_negc_per_counterexamples(std::size_t max_worlds = 2) {
  ClaimRecord r{"negc-weakening-invalid", ClaimStatus::Confirmed, "", nlohmann::ordered_json::array()};
  const SearchBudget budget{std::max<std::size_t>(max_worlds, 1), 3};
  std::size_t found = 0;
  for (const char* text : {"~c p ->c (q ->i ~c p)", "~c p ->i (q ->i ~c p)"}) {
    const Formula f = parse(text);
    auto w = countermodel_search(f, max_worlds, budget);
    if (!w) {
      r.status = ClaimStatus::Failed;
      r.witness.push_back({{"formula", text}, {"countermodel", nullptr}});
      continue;
    }
    ++found;
    r.witness.push_back({{"formula", text}, {"countermodel", to_json(*w)}});
  }
  r.summary = std::to_string(found) + " of 2 formulas refuted on models with at most " + std::to_string(max_worlds) +
              " worlds";
  return r;
}

namespace detail {

// Truth sets of all persistent formulas of depth <= depth in m, keyed by
// truth set, each with one representative. `full` holds the truth sets of
// arbitrary formulas at each depth, used for the A ->i A clause.
inline std::map<WorldSet, ClosureClass> persistent_closure(const KripkeModel& m, const Signature& any, int depth) {
  auto key = [&m](const Formula& f) { return truth_set(m, f); };
  std::map<WorldSet, ClosureClass> pers;
  for (const auto& leaf : any.leaves) {
    auto& c = pers.try_emplace(key(leaf), ClosureClass{leaf, 0}).first->second;
    c.count += 1;
  }
  for (int d = 1; d <= depth; ++d) {
    const auto full = semantic_closure<WorldSet>(any, d - 1, key);
    std::map<WorldSet, ClosureClass> next;
    auto add = [&](const Formula& f, std::uint64_t n) {
      next.try_emplace(key(f), ClosureClass{f, 0}).first->second.count += n;
    };
    for (const auto& leaf : any.leaves) add(leaf, 1);
    for (const auto& [ka, ca] : full)
      for (const auto& [kb, cb] : full) add(Formula::imp_i(ca.representative, cb.representative), ca.count * cb.count);
    for (const auto& [ka, ca] : pers)
      for (const auto& [kb, cb] : pers) {
        add(Formula::conj(ca.representative, cb.representative), ca.count * cb.count);
        add(Formula::disj(ca.representative, cb.representative), ca.count * cb.count);
      }
    pers = std::move(next);
  }
  return pers;
}

}  // namespace detail

/// Heredity of every intuitionistic formula and every persistent formula of
/// depth <= depth over {p, q} on every model with at most max_worlds worlds.
/// Formulas are grouped per model by truth set, which is compositional, so
/// the check covers each formula without building it; each group's
/// representative is checked with heredity_holds.
inline ClaimRecord check_heredity_sweep(std::size_t max_worlds = 3, int depth = 3) {
  ClaimRecord r{"heredity-intuitionistic-and-persistent", ClaimStatus::Confirmed, "", nullptr};
  const Signature lj = Signature::over({"p", "q"}, true, {Ctor::And, Ctor::Or, Ctor::ImpI});
  const Signature any = Signature::over({"p", "q"}, true, all_binary_ctors());
  std::size_t models = 0;
  std::uint64_t lj_formulas = 0, per_formulas = 0;
  for_each_model(max_worlds, {"p", "q"}, [&](const KripkeModel& m) {
    ++models;
    auto key = [&m](const Formula& f) { return truth_set(m, f); };
    std::uint64_t lj_total = 0, per_total = 0;
    for (const auto& [set, cls] : semantic_closure<WorldSet>(lj, depth, key)) {
      lj_total += cls.count;
      if (!is_intuitionistic(cls.representative) || !heredity_holds(m, cls.representative)) {
        r.status = ClaimStatus::Failed;
        r.witness = {{"model", to_json(m)}, {"formula", render(cls.representative)}, {"class", "intuitionistic"}};
        return false;
      }
    }
    for (const auto& [set, cls] : detail::persistent_closure(m, any, depth)) {
      per_total += cls.count;
      if (!is_persistent(cls.representative) || !heredity_holds(m, cls.representative)) {
        r.status = ClaimStatus::Failed;
        r.witness = {{"model", to_json(m)}, {"formula", render(cls.representative)}, {"class", "persistent"}};
        return false;
      }
    }
    lj_formulas = lj_total;
    per_formulas = per_total;
    return true;
  });
  r.summary = std::to_string(lj_formulas) + " intuitionistic and " + std::to_string(per_formulas) +
              " persistent formulas of depth <= " + std::to_string(depth) + " are hereditary on all " +
              std::to_string(models) + " models with <= " + std::to_string(max_worlds) + " worlds";
  if (!r.passed()) r.summary = "heredity failure found";
  return r;
}

/// The stored MPC-for-MPI derivation: accepted in CJ, rejected in CJMinus
/// exactly at its first MPC step.
inline ClaimRecord check_mpi_redundancy() {
  ClaimRecord r{"mpi-derivable-with-mpc", ClaimStatus::Failed, "", nullptr};
  const Proof p = mpi_redundancy_proof();
  const ProofVerdict cj = check_proof(p, SystemVariant::CJ);
  const ProofVerdict minus = check_proof(p, SystemVariant::CJMinus);
  std::optional<std::size_t> first_mpc;
  for (std::size_t k = 0; k < p.steps.size() && !first_mpc; ++k)
    if (const auto* s = std::get_if<RuleStep>(&p.steps[k]); s && s->rule == Rule::MPC) first_mpc = k;
  const bool ok = cj.accepted && !minus.accepted && minus.step == first_mpc &&
                  minus.reason == Reason::RuleNotInSystem;
  r.status = ok ? ClaimStatus::Confirmed : ClaimStatus::Failed;
  r.summary = ok ? "derivation accepted in cj, rejected in cj-minus at step " + std::to_string(*first_mpc) + " (MPC)"
                 : "derivation verdicts differ from expectation";
  r.witness = {{"proof", to_json(p)}, {"cj", to_json(cj)}, {"cj-minus", to_json(minus)}};
  return r;
}

/// Bounded evidence that the witness formula is Kripke-valid: exhaustive
/// search up to max_worlds worlds, then random models up to random_max_worlds.
inline ClaimRecord check_witness_kripke_valid(std::uint64_t seed, std::size_t max_worlds = 4,
                                              std::size_t random_models = 10000, std::size_t random_max_worlds = 8) {
  ClaimRecord r{"witness-kripke-valid", ClaimStatus::BoundedEvidence, "", nullptr};
  const Formula f = incompleteness_witness();
  const auto names = atoms(f);
  if (auto w = countermodel_search(f, max_worlds, SearchBudget{max_worlds, names.size()})) {
    r.status = ClaimStatus::Failed;
    r.summary = "countermodel found";
    r.witness = to_json(*w);
    return r;
  }
  std::size_t enumerated = 0;
  for_each_model(max_worlds, names, [&](const KripkeModel&) { return ++enumerated, true; });
  Random rng(seed ^ 0x6b72697070656bULL);
  for (std::size_t i = 0; i < random_models; ++i) {
    KripkeModel m = random_model(rng, random_max_worlds, names);
    if (!valid_in_model(m, f)) {
      r.status = ClaimStatus::Failed;
      r.summary = "random countermodel found";
      r.witness = to_json(m);
      return r;
    }
  }
  r.summary = render(f) + " holds on all " + std::to_string(enumerated) + " models with <= " +
              std::to_string(max_worlds) + " worlds and on " + std::to_string(random_models) +
              " random models with <= " + std::to_string(random_max_worlds) + " worlds";
  r.witness = {{"formula", render(f)}, {"exhaustive_models", enumerated}, {"random_models", random_models}};
  return r;
}

namespace detail {

inline std::vector<Valuation3> all_valuations(const std::vector<std::string>& names) {
  std::vector<Valuation3> out;
  for_each_valuation3(names, [&out](const Valuation3& v) { return out.push_back(v), true; });
  return out;
}

// Per valuation, formulas grouped by value; the property is checked on one
// representative per value and the total formula count is accumulated.
template <class Check>
std::pair<std::uint64_t, std::optional<std::pair<Valuation3, Formula>>> sweep_by_value(
    const Signature& sig, int depth, const std::vector<Valuation3>& vals, Check&& check) {
  std::uint64_t covered = 0;
  for (const auto& v : vals) {
    auto key = [&v](const Formula& f) { return eval3(v, f).symbol(); };
    for (const auto& [value, cls] : semantic_closure<char>(sig, depth, key)) {
      covered += cls.count;
      if (!check(v, cls.representative)) return {covered, std::pair{v, cls.representative}};
    }
  }
  return {covered, std::nullopt};
}

}  // namespace detail

/// Every formula takes a nonempty value (1 or 0 is a member).
inline ClaimRecord check_totality(int depth = 3) {
  ClaimRecord r{"truth-value-totality", ClaimStatus::Confirmed, "", nullptr};
  const Signature sig = Signature::over({"p", "q"}, true, all_binary_ctors());
  auto [covered, bad] = detail::sweep_by_value(sig, depth, detail::all_valuations({"p", "q"}),
                                               [](const Valuation3& v, const Formula& f) {
                                                 const TruthValue3 x = eval3(v, f);
                                                 return x.has_one() || x.has_zero();
                                               });
  if (bad) {
    r.status = ClaimStatus::Failed;
    r.witness = {{"formula", render(bad->second)}, {"valuation", to_ordered_json(bad->first, {"p", "q"})}};
  }
  r.summary = std::to_string(covered) + " (formula, valuation) pairs of depth <= " + std::to_string(depth) +
              " over {p, q} take a nonempty value";
  return r;
}

/// ~c ~c A has the value of A, for all formulas of bounded depth over {p, q}
/// and all 9 valuations.
inline ClaimRecord check_de_morgan(int depth = 3) {
  ClaimRecord r{"negc-involution", ClaimStatus::Confirmed, "", nullptr};
  const Signature sig = Signature::over({"p", "q"}, true, all_binary_ctors());
  auto [covered, bad] = detail::sweep_by_value(sig, depth, detail::all_valuations({"p", "q"}),
                                               [](const Valuation3& v, const Formula& f) {
                                                 return eval3(v, Formula::neg_c(Formula::neg_c(f))) == eval3(v, f);
                                               });
  if (bad) {
    r.status = ClaimStatus::Failed;
    r.witness = {{"formula", render(bad->second)}, {"valuation", to_ordered_json(bad->first, {"p", "q"})}};
  }
  r.summary = "~c ~c A = A on " + std::to_string(covered) + " (formula, valuation) pairs of depth <= " +
              std::to_string(depth) + " over {p, q}";
  return r;
}

/// Under the valuation sending every atom to b, every formula built from
/// &, | and ~c is b, so none of them is equivalent to F.
inline ClaimRecord check_bottom_undefinable(int depth = 4) {
  ClaimRecord r{"bottom-not-definable", ClaimStatus::Confirmed, "", nullptr};
  const Signature sig = Signature::over({"p", "q"}, false, {Ctor::And, Ctor::Or, Ctor::NegC});
  const Valuation3 all_b{{"p", TruthValue3::b()}, {"q", TruthValue3::b()}};
  auto [covered, bad] = detail::sweep_by_value(sig, depth, {all_b}, [](const Valuation3& v, const Formula& f) {
    return eval3(v, f) == TruthValue3::b();
  });
  if (bad || eval3(all_b, Formula::bottom()) != TruthValue3::f()) {
    r.status = ClaimStatus::Failed;
    if (bad) r.witness = {{"formula", render(bad->second)}};
  }
  r.summary = std::to_string(covered) + " {&, |, ~c} formulas of depth <= " + std::to_string(depth) +
              " over {p, q} are b under the all-b valuation; F is f";
  return r;
}

/// Classical tautologies are exactly the 3-valid classical formulas, over
/// every formula of bounded depth over {p, q} built with &, |, ->c and F.
/// Formulas are grouped by their complete three-valued and two-valued
/// tables; both checks are functions of those tables.
inline ClaimRecord check_classical_iff_3_valid(int depth = 3) {
  ClaimRecord r{"classical-tautology-iff-3-valid", ClaimStatus::Confirmed, "", nullptr};
  const Signature sig = Signature::over({"p", "q"}, true, {Ctor::And, Ctor::Or, Ctor::ImpC});
  const auto vals3 = detail::all_valuations({"p", "q"});
  std::vector<std::map<std::string, bool>> vals2;
  for (int row = 0; row < 4; ++row) vals2.push_back({{"p", (row >> 1) & 1}, {"q", row & 1}});
  auto key = [&](const Formula& f) {
    std::string k;
    for (const auto& v : vals3) k += eval3(v, f).symbol();
    k += ':';
    for (const auto& v : vals2) k += eval2(v, f) ? '1' : '0';
    return k;
  };
  std::uint64_t covered = 0, tautologies = 0;
  std::size_t classes = 0;
  for (const auto& [k, cls] : semantic_closure<std::string>(sig, depth, key)) {
    ++classes;
    covered += cls.count;
    const bool two = is_two_valued_tautology(cls.representative);
    const bool three = is_3_valid(cls.representative).holds;
    if (two) tautologies += cls.count;
    if (two != three) {
      r.status = ClaimStatus::Failed;
      r.witness = {{"formula", render(cls.representative)}, {"two_valued_tautology", two}, {"three_valid", three}};
      break;
    }
  }
  r.summary = std::to_string(covered) + " classical formulas of depth <= " + std::to_string(depth) + " (" +
              std::to_string(classes) + " value classes, " + std::to_string(tautologies) +
              " tautologies): two-valued tautology iff 3-valid";
  return r;
}

/// p, p ->c q does not 3-entail q; the first countervaluation is p=b, q=f.
inline ClaimRecord check_mpc_consequence_failure() {
  ClaimRecord r{"mpc-consequence-fails-3", ClaimStatus::Failed, "", nullptr};
  const Verdict3 v = consequence3({parse("p"), parse("p ->c q")}, parse("q"));
  const Valuation3 expected{{"p", TruthValue3::b()}, {"q", TruthValue3::f()}};
  if (!v.holds && v.countervaluation == expected) r.status = ClaimStatus::Confirmed;
  r.summary = v.holds ? "p, p ->c q 3-entails q" : "p, p ->c q does not 3-entail q";
  if (v.countervaluation) r.witness = to_ordered_json(*v.countervaluation, {"p", "q"});
  return r;
}

/// With v'(p) = v(sigma(p)), v'(B) = v(sigma(B)) for random sigma, B, v.
inline ClaimRecord check_substitution_lemma(std::uint64_t seed, std::size_t pairs = 500,
                                            std::size_t valuations_per_pair = 10) {
  ClaimRecord r{"substitution-lemma", ClaimStatus::Confirmed, "", nullptr};
  Random rng(seed ^ 0x7375627374ULL);
  const Signature sig = Signature::over({"p", "q", "r"}, true, all_binary_ctors());
  std::size_t checks = 0;
  for (std::size_t i = 0; i < pairs && r.passed(); ++i) {
    const Formula b = random_formula(rng, sig, 4);
    Substitution sigma;
    for (const auto& a : std::vector<std::string>{"p", "q", "r"})
      if (rng.chance(3, 4)) sigma.set(a, random_formula(rng, sig, 3));
    const Formula sb = substitute(sigma, b);
    for (std::size_t j = 0; j < valuations_per_pair; ++j) {
      Valuation3 v;
      for (const auto& a : std::vector<std::string>{"p", "q", "r"}) v.set(a, kTruthValues[rng.below(3)]);
      Valuation3 vp;
      for (const auto& a : std::vector<std::string>{"p", "q", "r"}) vp.set(a, eval3(v, sigma(a)));
      ++checks;
      if (eval3(vp, b) != eval3(v, sb)) {
        r.status = ClaimStatus::Failed;
        r.witness = {{"formula", render(b)}, {"substituted", render(sb)}, {"valuation", to_json(v)}};
        break;
      }
    }
  }
  r.summary = std::to_string(checks) + " (substitution, formula, valuation) triples agree";
  return r;
}

inline ClaimRecord check_three_soundness(const FuzzReport& fuzz) {
  ClaimRecord r{"cj-minus-3-sound", ClaimStatus::Confirmed, "", to_json(fuzz)};
  std::size_t checked = 0;
  for (const auto& f : fuzz.families) {
    checked += f.checked;
    if (f.checked < fuzz.iterations) r.status = ClaimStatus::Failed;
  }
  if (!fuzz.ok()) r.status = ClaimStatus::Failed;
  r.summary = std::to_string(checked) + " axiom instances and rule applications checked, " +
              std::to_string(fuzz.failures.size()) + " not 3-valid";
  return r;
}

inline ClaimRecord check_mpc_exhibit(const MpcExhibit& e) {
  ClaimRecord r{"mpc-breaks-3-validity", e.shown() ? ClaimStatus::ExpectedExhibit : ClaimStatus::Failed, "", nullptr};
  r.summary = "MPC from 3-valid '" + render(e.minor) + "' and '" + render(e.major) + "' yields '" +
              render(e.conclusion) + "', which is " + (e.countervaluation ? "not " : "") + "3-valid";
  r.witness = {{"conclusion", render(e.conclusion)}};
  if (e.countervaluation) r.witness["countervaluation"] = to_ordered_json(*e.countervaluation, atoms(e.conclusion));
  return r;
}

/// |=3 A ->i B iff A |=3 B, with the same first countervaluation: on the
/// witness formula and on random pairs.
inline ClaimRecord check_deduction_bridge(std::uint64_t seed, std::size_t pairs = 500) {
  ClaimRecord r{"deduction-bridge", ClaimStatus::Confirmed, "", nullptr};
  auto agree = [](const Formula& a, const Formula& b) {
    const Verdict3 lhs = is_3_valid(Formula::imp_i(a, b));
    const Verdict3 rhs = consequence3({a}, b);
    return lhs.holds == rhs.holds && lhs.countervaluation == rhs.countervaluation;
  };
  const Formula w = incompleteness_witness();
  const Verdict3 wv = is_3_valid(w);
  const Verdict3 mpc = consequence3({parse("p"), parse("p ->c q")}, parse("q"));
  if (!agree(w.left(), w.right()) || wv.holds != mpc.holds || wv.countervaluation != mpc.countervaluation) {
    r.status = ClaimStatus::Failed;
    r.witness = {{"formula", render(w)}};
  }
  Random rng(seed ^ 0x646564756374ULL);
  const Signature sig = Signature::over({"p", "q", "r"}, true, all_binary_ctors());
  std::size_t checked = 0;
  for (std::size_t i = 0; i < pairs && r.passed(); ++i) {
    const Formula a = random_formula(rng, sig, 3);
    const Formula b = random_formula(rng, sig, 3);
    ++checked;
    if (!agree(a, b)) {
      r.status = ClaimStatus::Failed;
      r.witness = {{"antecedent", render(a)}, {"consequent", render(b)}};
    }
  }
  r.summary = "witness: both sides fail with the same countervaluation; " + std::to_string(checked) +
              " random pairs agree";
  if (wv.countervaluation) r.witness = {{"countervaluation", to_ordered_json(*wv.countervaluation, {"p", "q"})}};
  return r;
}

/// The witness is not 3-valid, and every theorem of CJMinus is (soundness
/// leg), so the witness is not a theorem of CJMinus.
inline ClaimRecord check_witness_underivable(const ClaimRecord& soundness) {
  ClaimRecord r{"witness-underivable-cj-minus", ClaimStatus::Failed, "", nullptr};
  const Verdict3 v = is_3_valid(incompleteness_witness());
  const Valuation3 expected{{"p", TruthValue3::b()}, {"q", TruthValue3::f()}};
  const bool invalid = !v.holds && v.countervaluation == expected;
  if (invalid && soundness.passed()) r.status = ClaimStatus::Confirmed;
  r.summary = render(incompleteness_witness()) + (invalid ? " is not 3-valid" : " is 3-valid") +
              "; 3-soundness of cj-minus " + (soundness.passed() ? "holds" : "FAILED");
  if (v.countervaluation) r.witness = {{"countervaluation", to_ordered_json(*v.countervaluation, {"p", "q"})}};
  return r;
}

/// Kripke-valid (up to the search bound) but underivable in CJMinus.
inline ClaimRecord check_incompleteness(const ClaimRecord& kripke_valid, const ClaimRecord& underivable) {
  ClaimRecord r{"cj-minus-incomplete", ClaimStatus::Failed, "", nullptr};
  if (kripke_valid.passed() && underivable.passed()) r.status = ClaimStatus::BoundedEvidence;
  r.summary = "witness formula is Kripke-valid up to the search bound, 3-invalid, hence underivable in cj-minus "
              "by 3-soundness";
  if (!r.passed()) r.summary = "a supporting claim failed";
  r.witness = {{"formula", render(incompleteness_witness())},
               {"kripke", std::string(status_name(kripke_valid.status))},
               {"underivable", std::string(status_name(underivable.status))}};
  return r;
}

}  // namespace cjlogic
