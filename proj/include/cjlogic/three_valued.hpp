#pragma once

#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "cjlogic/formula.hpp"

namespace cjlogic {

/// A nonempty subset of {0, 1}: t = {1}, b = {0, 1}, f = {0}.
class TruthValue3 {
 public:
  static constexpr TruthValue3 t() { return TruthValue3(false, true); }
  static constexpr TruthValue3 b() { return TruthValue3(true, true); }
  static constexpr TruthValue3 f() { return TruthValue3(true, false); }

  /// Builds the value with the given memberships. Throws on the empty set,
  /// which no formula can take.
  static TruthValue3 from_membership(bool has_zero, bool has_one) {
    if (!has_zero && !has_one) throw std::logic_error("empty truth value");
    return TruthValue3(has_zero, has_one);
  }

  constexpr bool has_zero() const noexcept { return zero_; }
  constexpr bool has_one() const noexcept { return one_; }
  /// t and b are designated.
  constexpr bool designated() const noexcept { return one_; }

  char symbol() const noexcept { return zero_ ? (one_ ? 'b' : 'f') : 't'; }

  static std::optional<TruthValue3> from_symbol(char c) noexcept {
    switch (c) {
      case 't':
        return t();
      case 'b':
        return b();
      case 'f':
        return f();
      default:
        return std::nullopt;
    }
  }

  friend constexpr bool operator==(TruthValue3, TruthValue3) = default;

  /// Subset order on the underlying sets.
  constexpr bool subset_of(TruthValue3 o) const noexcept {
    return (!zero_ || o.zero_) && (!one_ || o.one_);
  }

 private:
  constexpr TruthValue3(bool zero, bool one) : zero_(zero), one_(one) {}
  bool zero_;
  bool one_;
};

/// The three values in canonical enumeration order f < b < t.
inline constexpr TruthValue3 kTruthValues[3] = {TruthValue3::f(), TruthValue3::b(), TruthValue3::t()};

/// Three-valued connectives, read off the membership clauses for 1 and 0.
inline TruthValue3 apply3(Kind k, TruthValue3 a, TruthValue3 c) {
  switch (k) {
    case Kind::And:
      return TruthValue3::from_membership(a.has_zero() || c.has_zero(), a.has_one() && c.has_one());
    case Kind::Or:
      return TruthValue3::from_membership(a.has_zero() && c.has_zero(), a.has_one() || c.has_one());
    case Kind::ImpC:
      return TruthValue3::from_membership(a.has_one() && c.has_zero(), a.has_zero() || c.has_one());
    case Kind::ImpI:
      return TruthValue3::from_membership(a.has_one() && c.has_zero(), !a.has_one() || c.has_one());
    default:
      throw std::logic_error("apply3: not a binary connective");
  }
}

/// Assignment of truth values to atoms; unmentioned atoms are f.
class Valuation3 {
 public:
  Valuation3() = default;
  Valuation3(std::initializer_list<std::pair<const std::string, TruthValue3>> init) : map_(init) {}

  void set(std::string atom, TruthValue3 v) { map_.insert_or_assign(std::move(atom), v); }

  TruthValue3 operator()(const std::string& atom) const {
    auto it = map_.find(atom);
    return it == map_.end() ? TruthValue3::f() : it->second;
  }

  const std::map<std::string, TruthValue3>& entries() const noexcept { return map_; }

  friend bool operator==(const Valuation3&, const Valuation3&) = default;

 private:
  std::map<std::string, TruthValue3> map_;
};

inline TruthValue3 eval3(const Valuation3& v, const Formula& f) {
  switch (f.kind()) {
    case Kind::Atom:
      return v(f.name());
    case Kind::Bottom:
      return TruthValue3::f();
    default:
      return apply3(f.kind(), eval3(v, f.left()), eval3(v, f.right()));
  }
}

class AtomCapExceeded : public std::runtime_error {
 public:
  AtomCapExceeded(std::size_t atoms, std::size_t cap)
      : std::runtime_error(std::to_string(atoms) + " atoms exceed the valuation enumeration cap of " +
                           std::to_string(cap)) {}
};

/// Upper bound on the number of atoms enumerated exhaustively (3^n
/// valuations). The environment variable CJLOGIC_ATOM_CAP overrides the
/// default of 12.
inline std::size_t default_atom_cap() {
  if (const char* env = std::getenv("CJLOGIC_ATOM_CAP")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 12;
}

/// Calls visit(v) for every valuation of `names` in canonical order: values
/// f < b < t, the last atom varying fastest. Stops early when visit returns
/// false. Returns false iff stopped early.
template <class Visit>
bool for_each_valuation3(const std::vector<std::string>& names, Visit&& visit) {
  std::vector<int> digit(names.size(), 0);
  Valuation3 v;
  for (const auto& n : names) v.set(n, kTruthValues[0]);
  while (true) {
    if (!visit(static_cast<const Valuation3&>(v))) return false;
    std::size_t i = names.size();
    while (i > 0) {
      --i;
      if (++digit[i] < 3) {
        v.set(names[i], kTruthValues[digit[i]]);
        break;
      }
      digit[i] = 0;
      v.set(names[i], kTruthValues[0]);
      if (i == 0) return true;
    }
    if (names.empty()) return true;
  }
}

/// Result of a validity or consequence check: holds, or the canonical-order
/// first valuation that refutes it.
struct Verdict3 {
  bool holds = true;
  std::optional<Valuation3> countervaluation;

  explicit operator bool() const noexcept { return holds; }
};

/// gamma |=3 f: every valuation designating all of gamma designates f.
inline Verdict3 consequence3(const std::vector<Formula>& gamma, const Formula& f,
                             std::size_t cap = default_atom_cap()) {
  std::vector<Formula> all = gamma;
  all.push_back(f);
  const auto names = atoms(all);
  if (names.size() > cap) throw AtomCapExceeded(names.size(), cap);
  Verdict3 out;
  for_each_valuation3(names, [&](const Valuation3& v) {
    for (const auto& g : gamma)
      if (!eval3(v, g).designated()) return true;
    if (eval3(v, f).designated()) return true;
    out.holds = false;
    out.countervaluation = v;
    return false;
  });
  return out;
}

inline Verdict3 is_3_valid(const Formula& f, std::size_t cap = default_atom_cap()) { return consequence3({}, f, cap); }

/// Two-valued evaluation with ->c as material implication. Unmentioned
/// atoms are false. Only defined on the classical fragment.
inline bool eval2(const std::map<std::string, bool>& v, const Formula& f) {
  switch (f.kind()) {
    case Kind::Atom: {
      auto it = v.find(f.name());
      return it != v.end() && it->second;
    }
    case Kind::Bottom:
      return false;
    case Kind::And:
      return eval2(v, f.left()) && eval2(v, f.right());
    case Kind::Or:
      return eval2(v, f.left()) || eval2(v, f.right());
    case Kind::ImpC:
      return !eval2(v, f.left()) || eval2(v, f.right());
    case Kind::ImpI:
      break;
  }
  throw std::invalid_argument("two-valued evaluation is undefined for ->i");
}

/// Classical truth-table check. Throws std::invalid_argument on formulas
/// containing ->i.
inline bool is_two_valued_tautology(const Formula& f, std::size_t cap = default_atom_cap()) {
  if (!is_classical(f)) throw std::invalid_argument("is_two_valued_tautology: formula contains ->i");
  const auto names = atoms(f);
  if (names.size() > cap) throw AtomCapExceeded(names.size(), cap);
  std::map<std::string, bool> v;
  const std::uint64_t rows = std::uint64_t{1} << names.size();
  for (std::uint64_t row = 0; row < rows; ++row) {
    for (std::size_t i = 0; i < names.size(); ++i) v[names[i]] = (row >> (names.size() - 1 - i)) & 1U;
    if (!eval2(v, f)) return false;
  }
  return true;
}

/// For classical f, whether two-valued tautologyhood and 3-validity agree.
/// They always should; this is a cross-check.
inline bool deformation_check(const Formula& f, std::size_t cap = default_atom_cap()) {
  return is_two_valued_tautology(f, cap) == is_3_valid(f, cap).holds;
}

// JSON: {"p": "b", "q": "f"}

inline nlohmann::json to_json(const Valuation3& v) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [name, value] : v.entries()) j[name] = std::string(1, value.symbol());
  return j;
}

/// Same, but keys in the given order (for witnesses in atom order).
inline nlohmann::ordered_json to_ordered_json(const Valuation3& v, const std::vector<std::string>& order) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& name : order) j[name] = std::string(1, v(name).symbol());
  return j;
}

inline Valuation3 valuation3_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("valuation must be a JSON object");
  Valuation3 v;
  for (const auto& [name, value] : j.items()) {
    if (!value.is_string() || value.get<std::string>().size() != 1)
      throw std::invalid_argument("valuation value for '" + name + "' must be \"t\", \"b\" or \"f\"");
    auto tv = TruthValue3::from_symbol(value.get<std::string>()[0]);
    if (!tv) throw std::invalid_argument("valuation value for '" + name + "' must be \"t\", \"b\" or \"f\"");
    v.set(name, *tv);
  }
  return v;
}

}  // namespace cjlogic
