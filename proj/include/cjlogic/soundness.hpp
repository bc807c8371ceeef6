#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cjlogic/formula.hpp"
#include "cjlogic/generate.hpp"
#include "cjlogic/hilbert.hpp"
#include "cjlogic/parser.hpp"
#include "cjlogic/three_valued.hpp"

namespace cjlogic {

/// Counts for one family of generated axiom instances or rule applications.
struct FuzzFamily {
  std::string name;
  std::size_t checked = 0;
  std::size_t failed = 0;
};

struct FuzzFailure {
  std::string family;
  Formula formula;
  std::string problem;
  std::optional<Valuation3> countervaluation;
};

/// MPC applied to two 3-valid premises whose conclusion is not 3-valid.
/// Reported separately: it is expected, not a failure.
struct MpcExhibit {
  Formula minor = Formula::bottom();
  Formula major = Formula::bottom();
  Formula conclusion = Formula::bottom();
  bool premises_valid = false;
  bool rule_accepted_in_cj = false;
  std::optional<Valuation3> countervaluation;  // set iff the conclusion is 3-invalid

  bool shown() const noexcept { return premises_valid && rule_accepted_in_cj && countervaluation.has_value(); }
};

struct FuzzReport {
  std::uint64_t seed = 0;
  std::size_t iterations = 0;
  std::vector<FuzzFamily> families;
  std::vector<FuzzFailure> failures;
  MpcExhibit mpc;

  bool ok() const noexcept { return failures.empty(); }
};

namespace detail {

inline Formula instantiate(Axiom a, const Formula& A, const Formula& B, const Formula& C) {
  Substitution s{{"A", A}, {"B", B}, {"C", C}};
  return s.apply(schema(a));
}

inline const Signature& fuzz_signature() {
  static const Signature s = Signature::over({"p", "q", "r"}, true, all_binary_ctors());
  return s;
}

inline const Signature& classical_signature() {
  static const Signature s = Signature::over({"p", "q", "r"}, true, {Ctor::And, Ctor::Or, Ctor::ImpC});
  return s;
}

// Classical tautology over p, q, r by rejection sampling.
inline Formula random_tautology(Random& rng) {
  for (int attempt = 0; attempt < 500; ++attempt) {
    Formula f = random_formula(rng, classical_signature(), 3);
    if (is_two_valued_tautology(f)) return f;
  }
  // Excluded middle over a random formula; reached only on a very unlucky stream.
  Formula g = random_formula(rng, classical_signature(), 2);
  return Formula::disj(g, Formula::neg_c(g));
}

inline Substitution random_substitution(Random& rng, const std::vector<std::string>& names, int depth) {
  Substitution s;
  for (const auto& n : names) s.set(n, random_formula(rng, fuzz_signature(), depth));
  return s;
}

}  // namespace detail

inline MpcExhibit mpc_non_preservation_exhibit() {
  MpcExhibit e;
  e.minor = parse("p | ~c p");
  e.conclusion = parse("(p & (p ->c q)) ->i q");
  e.major = Formula::imp_c(e.minor, e.conclusion);
  e.premises_valid = is_3_valid(e.minor).holds && is_3_valid(e.major).holds;
  e.rule_accepted_in_cj = !check_rule(Rule::MPC, {e.minor, e.major}, e.conclusion, SystemVariant::CJ);
  e.countervaluation = is_3_valid(e.conclusion).countervaluation;
  return e;
}

/// Random 3-validity checks for every axiom schema and for MPI and RCN.
///
/// Each iteration generates one instance per axiom family (CL from a random
/// classical tautology under a random substitution; PER once with a
/// persistent antecedent and once with an arbitrary one) and one RCN and one
/// MPI application whose premises are 3-valid. Every generated axiom
/// instance and rule conclusion must be 3-valid. Deterministic in the seed.
inline FuzzReport soundness_fuzz(std::uint64_t seed, std::size_t iterations) {
  FuzzReport rep;
  rep.seed = seed;
  rep.iterations = iterations;
  rep.families = {{"CL", 0, 0},  {"CK", 0, 0},  {"ID", 0, 0},  {"CMP", 0, 0},
                  {"PER", 0, 0}, {"PER-unrestricted", 0, 0}, {"MPI", 0, 0}, {"RCN", 0, 0}};
  enum { kCL, kCK, kID, kCMP, kPER, kPERAny, kMPI, kRCN };

  Random rng(seed);
  const Signature& sig = detail::fuzz_signature();
  std::vector<Formula> pool{parse("p ->i p")};  // 3-valid formulas usable as premises

  auto record = [&](int family, const Formula& f, bool must_match, std::optional<Axiom> axiom) {
    FuzzFamily& fam = rep.families[family];
    ++fam.checked;
    if (must_match && axiom) {
      if (auto m = match_axiom(*axiom, f)) {
        ++fam.failed;
        rep.failures.push_back({fam.name, f, "generated instance rejected: " + m->detail, std::nullopt});
        return;
      }
    }
    Verdict3 v = is_3_valid(f);
    if (!v.holds) {
      ++fam.failed;
      rep.failures.push_back({fam.name, f, "not 3-valid", v.countervaluation});
      return;
    }
    if (f.depth() <= 6) pool.push_back(f);
  };

  for (std::size_t it = 0; it < iterations; ++it) {
    {
      Formula taut = detail::random_tautology(rng);
      Substitution s = detail::random_substitution(rng, atoms(taut), 2);
      record(kCL, s.apply(taut), true, Axiom::CL);
    }
    {
      Formula a = random_formula(rng, sig, 2);
      Formula b = random_formula(rng, sig, 2);
      Formula c = random_formula(rng, sig, 2);
      record(kCK, detail::instantiate(Axiom::CK, a, b, c), true, Axiom::CK);
    }
    {
      Formula a = random_formula(rng, sig, 3);
      record(kID, detail::instantiate(Axiom::ID, a, a, a), true, Axiom::ID);
    }
    {
      Formula a = random_formula(rng, sig, 2);
      Formula b = random_formula(rng, sig, 2);
      record(kCMP, detail::instantiate(Axiom::CMP, a, b, b), true, Axiom::CMP);
    }
    {
      Formula a = random_persistent(rng, sig, 3);
      Formula b = random_formula(rng, sig, 2);
      record(kPER, detail::instantiate(Axiom::PER, a, b, b), true, Axiom::PER);
    }
    {
      // No persistence restriction: may not be an axiom, must still be 3-valid.
      Formula a = random_formula(rng, sig, 3);
      Formula b = random_formula(rng, sig, 2);
      record(kPERAny, detail::instantiate(Axiom::PER, a, b, b), false, std::nullopt);
    }
    {
      const Formula a = rng.pick(pool);
      const Formula b = random_formula(rng, sig, 2);
      const Formula concl = Formula::imp_i(b, a);
      if (auto m = check_rule(Rule::RCN, {a}, concl, SystemVariant::CJMinus)) {
        ++rep.families[kRCN].checked;
        ++rep.families[kRCN].failed;
        rep.failures.push_back({"RCN", concl, "rule check rejected: " + m->detail, std::nullopt});
      } else {
        record(kRCN, concl, false, std::nullopt);
      }
    }
    {
      // Premises A and A ->i B, both 3-valid. B is random when that happens
      // to work, otherwise taken from the pool.
      const Formula a = rng.pick(pool);
      std::optional<Formula> b;
      for (int attempt = 0; attempt < 16 && !b; ++attempt) {
        Formula cand = random_formula(rng, sig, 2);
        if (is_3_valid(Formula::imp_i(a, cand)).holds) b = cand;
      }
      if (!b) b = rng.pick(pool);
      const Formula major = Formula::imp_i(a, *b);
      if (!is_3_valid(major).holds) {
        // A ->i B with 3-valid B is always 3-valid; reaching here is a bug.
        ++rep.families[kMPI].checked;
        ++rep.families[kMPI].failed;
        rep.failures.push_back({"MPI", major, "major premise not 3-valid", is_3_valid(major).countervaluation});
      } else if (auto m = check_rule(Rule::MPI, {a, major}, *b, SystemVariant::CJMinus)) {
        ++rep.families[kMPI].checked;
        ++rep.families[kMPI].failed;
        rep.failures.push_back({"MPI", *b, "rule check rejected: " + m->detail, std::nullopt});
      } else {
        record(kMPI, *b, false, std::nullopt);
      }
    }
  }
  rep.mpc = mpc_non_preservation_exhibit();
  return rep;
}

inline nlohmann::ordered_json to_json(const FuzzReport& r) {
  nlohmann::ordered_json j;
  j["seed"] = r.seed;
  j["iterations"] = r.iterations;
  auto fams = nlohmann::ordered_json::object();
  for (const auto& f : r.families) fams[f.name] = {{"checked", f.checked}, {"failed", f.failed}};
  j["families"] = fams;
  auto fails = nlohmann::ordered_json::array();
  for (const auto& f : r.failures) {
    nlohmann::ordered_json x;
    x["family"] = f.family;
    x["formula"] = render(f.formula);
    x["problem"] = f.problem;
    if (f.countervaluation) x["countervaluation"] = to_ordered_json(*f.countervaluation, atoms(f.formula));
    fails.push_back(x);
  }
  j["failures"] = fails;
  nlohmann::ordered_json mpc;
  mpc["premises"] = {render(r.mpc.minor), render(r.mpc.major)};
  mpc["conclusion"] = render(r.mpc.conclusion);
  if (r.mpc.countervaluation) mpc["countervaluation"] = to_ordered_json(*r.mpc.countervaluation, atoms(r.mpc.conclusion));
  j["mpc_exhibit"] = mpc;
  return j;
}

}  // namespace cjlogic
