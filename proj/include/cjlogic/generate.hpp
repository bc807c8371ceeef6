#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "cjlogic/formula.hpp"

namespace cjlogic {

/// Formula constructors used by generators. NegC and NegI are the unary
/// abbreviations; each application adds one to the depth like the binary
/// connectives do.
enum class Ctor : std::uint8_t { And, Or, ImpI, ImpC, NegC, NegI };

inline bool is_unary(Ctor c) noexcept { return c == Ctor::NegC || c == Ctor::NegI; }

inline Formula build(Ctor c, const Formula& a, const Formula& b) {
  switch (c) {
    case Ctor::And: return Formula::conj(a, b);
    case Ctor::Or: return Formula::disj(a, b);
    case Ctor::ImpI: return Formula::imp_i(a, b);
    case Ctor::ImpC: return Formula::imp_c(a, b);
    case Ctor::NegC: return Formula::neg_c(a);
    case Ctor::NegI: return Formula::neg_i(a);
  }
  throw std::logic_error("build: bad constructor");
}

/// A signature for exhaustive enumeration: leaves plus constructors.
struct Signature {
  std::vector<Formula> leaves;
  std::vector<Ctor> ctors;

  static Signature over(const std::vector<std::string>& names, bool with_bottom, std::vector<Ctor> ctors) {
    Signature s;
    for (const auto& n : names) s.leaves.push_back(Formula::atom(n));
    if (with_bottom) s.leaves.push_back(Formula::bottom());
    s.ctors = std::move(ctors);
    return s;
  }
};

/// Every formula of depth <= max_depth over the signature, in a fixed order
/// (by depth level, then constructor, then operands). Only usable for small
/// bounds; see semantic_closure for the large ones.
inline std::vector<Formula> enumerate_formulas(const Signature& sig, int max_depth) {
  std::vector<Formula> all = sig.leaves;  // depth <= current level
  for (int d = 1; d <= max_depth; ++d) {
    std::vector<Formula> next = sig.leaves;
    for (Ctor c : sig.ctors) {
      for (const auto& a : all) {
        if (is_unary(c)) {
          next.push_back(build(c, a, a));
          continue;
        }
        for (const auto& b : all) next.push_back(build(c, a, b));
      }
    }
    all = std::move(next);
  }
  return all;
}

/// Number of formulas of depth <= max_depth over the signature.
inline std::uint64_t count_formulas(const Signature& sig, int max_depth) {
  std::uint64_t n = sig.leaves.size();
  for (int d = 1; d <= max_depth; ++d) {
    std::uint64_t next = sig.leaves.size();
    for (Ctor c : sig.ctors) next += is_unary(c) ? n : n * n;
    n = next;
  }
  return n;
}

/// One equivalence class of formulas under a compositional key.
struct ClosureClass {
  Formula representative;
  std::uint64_t count = 0;  // formulas of the bounded depth in this class
};

/// Classes of all formulas of depth <= max_depth over `sig`, grouped by
/// key(formula).
///
/// The key must be compositional: key(c(A, B)) depends only on c, key(A) and
/// key(B). Then every formula of depth d+1 has the key of c applied to class
/// representatives of depth <= d, so the map covers every formula without
/// building each one. Counts are exact.
template <class Key, class KeyFn>
std::map<Key, ClosureClass> semantic_closure(const Signature& sig, int max_depth, KeyFn&& key) {
  using Map = std::map<Key, ClosureClass>;
  auto add = [](Map& m, const Key& k, const Formula& f, std::uint64_t n) {
    auto it = m.try_emplace(k, ClosureClass{f, 0}).first;
    if (it->second.count > std::numeric_limits<std::uint64_t>::max() - n)
      throw std::overflow_error("semantic_closure: formula count overflow");
    it->second.count += n;
  };
  Map level;
  for (const auto& leaf : sig.leaves) add(level, key(leaf), leaf, 1);
  for (int d = 1; d <= max_depth; ++d) {
    Map next;
    for (const auto& leaf : sig.leaves) add(next, key(leaf), leaf, 1);
    for (Ctor c : sig.ctors) {
      for (const auto& [ka, ca] : level) {
        if (is_unary(c)) {
          const Formula f = build(c, ca.representative, ca.representative);
          add(next, key(f), f, ca.count);
          continue;
        }
        for (const auto& [kb, cb] : level) {
          if (ca.count != 0 && cb.count > std::numeric_limits<std::uint64_t>::max() / ca.count)
            throw std::overflow_error("semantic_closure: formula count overflow");
          const Formula f = build(c, ca.representative, cb.representative);
          add(next, key(f), f, ca.count * cb.count);
        }
      }
    }
    level = std::move(next);
  }
  return level;
}

/// Seeded pseudo-random source. Uses mt19937_64 and plain modular reduction
/// so that a seed gives the same stream on every standard library.
class Random {
 public:
  explicit Random(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t operator()() { return engine_(); }
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }
  bool chance(unsigned num, unsigned den) { return engine_() % den < num; }

  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v.at(below(v.size()));
  }

  std::mt19937_64& engine() noexcept { return engine_; }

 private:
  std::mt19937_64 engine_;
};

/// Random formula of depth at most max_depth. Leaves are chosen with
/// probability 1/3 before the depth bound forces one.
inline Formula random_formula(Random& rng, const Signature& sig, int max_depth) {
  if (max_depth <= 0 || sig.ctors.empty() || rng.chance(1, 3)) return rng.pick(sig.leaves);
  const Ctor c = rng.pick(sig.ctors);
  Formula a = random_formula(rng, sig, max_depth - 1);
  if (is_unary(c)) return build(c, a, a);
  Formula b = random_formula(rng, sig, max_depth - 1);
  return build(c, a, b);
}

/// Random persistent formula: E ::= bottom | p | A ->i A | E & E | E | E,
/// with the A's drawn from `any`.
inline Formula random_persistent(Random& rng, const Signature& any, int max_depth) {
  const std::size_t choice = max_depth <= 0 ? rng.below(2) : rng.below(5);
  switch (choice) {
    case 0: {
      std::vector<Formula> atoms_only;
      for (const auto& l : any.leaves)
        if (l.is_atom()) atoms_only.push_back(l);
      return atoms_only.empty() ? Formula::bottom() : rng.pick(atoms_only);
    }
    case 1:
      return Formula::bottom();
    case 2: {
      Formula a = random_formula(rng, any, max_depth - 1);
      Formula b = random_formula(rng, any, max_depth - 1);
      return Formula::imp_i(a, b);
    }
    default: {
      Formula a = random_persistent(rng, any, max_depth - 1);
      Formula b = random_persistent(rng, any, max_depth - 1);
      return choice == 3 ? Formula::conj(a, b) : Formula::disj(a, b);
    }
  }
}

inline const std::vector<Ctor>& all_binary_ctors() {
  static const std::vector<Ctor> v{Ctor::And, Ctor::Or, Ctor::ImpI, Ctor::ImpC};
  return v;
}

}  // namespace cjlogic
