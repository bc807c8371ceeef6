#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cjlogic/claims.hpp"
#include "cjlogic/soundness.hpp"

namespace cjlogic {

struct ReproduceOptions {
  std::uint64_t seed = 0;
  Evaluator3 evaluator = eval3;  // only the truth-table leg uses it; swap in a broken one to test that leg
  std::size_t fuzz_iterations = 1000;
  std::size_t kripke_max_worlds = 4;
  std::size_t random_models = 10000;
  std::size_t random_max_worlds = 8;
};

/// Claim ids in report order.
inline const std::vector<std::string>& claim_registry() {
  static const std::vector<std::string> ids{
      "negc-heredity-failure",
      "negc-weakening-invalid",
      "heredity-intuitionistic-and-persistent",
      "mpi-derivable-with-mpc",
      "witness-kripke-valid",
      "truth-tables",
      "truth-value-totality",
      "negc-involution",
      "bottom-not-definable",
      "classical-tautology-iff-3-valid",
      "substitution-lemma",
      "cj-minus-3-sound",
      "mpc-breaks-3-validity",
      "mpc-consequence-fails-3",
      "deduction-bridge",
      "witness-underivable-cj-minus",
      "cj-minus-incomplete",
  };
  return ids;
}

class ReproduceReport {
 public:
  ReproduceReport(std::uint64_t seed, std::vector<ClaimRecord> claims) : seed_(seed), claims_(std::move(claims)) {}

  const std::vector<ClaimRecord>& claims() const noexcept { return claims_; }
  std::uint64_t seed() const noexcept { return seed_; }

  bool passed() const {
    for (const auto& c : claims_)
      if (!c.passed()) return false;
    return true;
  }
  int exit_code() const { return passed() ? 0 : 1; }

  const ClaimRecord* find(const std::string& id) const {
    for (const auto& c : claims_)
      if (c.id == id) return &c;
    return nullptr;
  }

  std::string text() const {
    std::ostringstream out;
    out << "reproduce seed=" << seed_ << "\n";
    for (const auto& c : claims_) {
      std::string tag = "[" + std::string(status_name(c.status)) + "]";
      tag.resize(20, ' ');
      out << tag << c.id << "\n    " << c.summary << "\n";
    }
    std::size_t failed = 0;
    for (const auto& c : claims_) failed += c.passed() ? 0 : 1;
    out << (failed ? "FAILED: " + std::to_string(failed) + " of " : std::string("OK: ")) << claims_.size()
        << " claims\n";
    return out.str();
  }

  nlohmann::ordered_json json() const {
    nlohmann::ordered_json j;
    j["seed"] = seed_;
    j["passed"] = passed();
    auto arr = nlohmann::ordered_json::array();
    for (const auto& c : claims_) {
      nlohmann::ordered_json x;
      x["id"] = c.id;
      x["status"] = std::string(status_name(c.status));
      x["summary"] = c.summary;
      x["witness"] = c.witness;
      arr.push_back(std::move(x));
    }
    j["claims"] = std::move(arr);
    return j;
  }

 private:
  std::uint64_t seed_;
  std::vector<ClaimRecord> claims_;
};

inline ReproduceReport reproduce(const ReproduceOptions& opt = {}) {
  std::vector<ClaimRecord> c;
  c.push_back(check_negc_heredity_failure(2));
  c.push_back(check_negc_per_counterexamples(2));
  c.push_back(check_heredity_sweep(3, 3));
  c.push_back(check_mpi_redundancy());
  c.push_back(check_witness_kripke_valid(opt.seed, opt.kripke_max_worlds, opt.random_models, opt.random_max_worlds));
  const std::size_t kripke_leg = c.size() - 1;
  c.push_back(check_truth_tables(opt.evaluator));
  c.push_back(check_totality(3));
  c.push_back(check_de_morgan(3));
  c.push_back(check_bottom_undefinable(4));
  c.push_back(check_classical_iff_3_valid(3));
  c.push_back(check_substitution_lemma(opt.seed));
  const FuzzReport fuzz = soundness_fuzz(opt.seed, opt.fuzz_iterations);
  c.push_back(check_three_soundness(fuzz));
  const std::size_t soundness_leg = c.size() - 1;
  c.push_back(check_mpc_exhibit(fuzz.mpc));
  c.push_back(check_mpc_consequence_failure());
  c.push_back(check_deduction_bridge(opt.seed));
  c.push_back(check_witness_underivable(c[soundness_leg]));
  const ClaimRecord underivable = c.back();
  c.push_back(check_incompleteness(c[kripke_leg], underivable));
  return ReproduceReport(opt.seed, std::move(c));
}

}  // namespace cjlogic
