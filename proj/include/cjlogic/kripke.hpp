#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "cjlogic/formula.hpp"
#include "cjlogic/parser.hpp"

namespace cjlogic {

using World = std::size_t;
/// Set of worlds as a bit mask; bit w is world w.
using WorldSet = std::uint64_t;

inline constexpr std::size_t kMaxWorlds = 64;

/// Finite Kripke model. Worlds are 0..size()-1. The accessibility relation
/// is stored as one successor mask per world and the valuation as one world
/// mask per atom. Nothing here enforces the model conditions; call
/// validate_model (loaders and enumerators do).
class KripkeModel {
 public:
  KripkeModel() = default;

  /// A model with n worlds, the identity relation and an empty valuation.
  explicit KripkeModel(std::size_t n) : succ_(n) {
    if (n == 0 || n > kMaxWorlds) throw std::invalid_argument("model needs between 1 and 64 worlds");
    for (World w = 0; w < n; ++w) succ_[w] = bit(w);
  }

  std::size_t size() const noexcept { return succ_.size(); }
  WorldSet all() const noexcept { return size() == 64 ? ~WorldSet{0} : (WorldSet{1} << size()) - 1; }

  bool related(World w, World v) const { return (succ_.at(w) >> v) & 1U; }
  WorldSet successors(World w) const { return succ_.at(w); }

  void relate(World w, World v) {
    check(w);
    check(v);
    succ_[w] |= bit(v);
  }
  void unrelate(World w, World v) {
    check(w);
    check(v);
    succ_[w] &= ~bit(v);
  }
  void set_successors(World w, WorldSet s) {
    check(w);
    succ_[w] = s & all();
  }

  /// V(p); unmentioned atoms are true nowhere.
  WorldSet truth_set(const std::string& atom) const {
    auto it = val_.find(atom);
    return it == val_.end() ? 0 : it->second;
  }
  void set_truth_set(const std::string& atom, WorldSet s) { val_[atom] = s & all(); }
  const std::map<std::string, WorldSet>& valuation() const noexcept { return val_; }

  friend bool operator==(const KripkeModel&, const KripkeModel&) = default;

  static constexpr WorldSet bit(World w) noexcept { return WorldSet{1} << w; }

 private:
  void check(World w) const {
    if (w >= size()) throw std::out_of_range("world " + std::to_string(w) + " out of range");
  }

  std::vector<WorldSet> succ_;
  std::map<std::string, WorldSet> val_;
};

struct MissingReflexive {
  World world;
};
/// (a,b) and (b,c) are related but (a,c) is not.
struct TransitivityFailure {
  World a, b, c;
};
/// atom holds at `from`, from R to, but atom fails at `to`.
struct HeredityViolation {
  std::string atom;
  World from, to;
};

using ModelViolation = std::variant<MissingReflexive, TransitivityFailure, HeredityViolation>;

inline std::string describe(const ModelViolation& v) {
  std::ostringstream os;
  std::visit(
      [&os](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, MissingReflexive>)
          os << "missing reflexive pair (" << x.world << "," << x.world << ")";
        else if constexpr (std::is_same_v<T, TransitivityFailure>)
          os << "transitivity: (" << x.a << "," << x.b << ") and (" << x.b << "," << x.c << ") but not (" << x.a
             << "," << x.c << ")";
        else
          os << "heredity: " << x.atom << " holds at " << x.from << " but not at successor " << x.to;
      },
      v);
  return os.str();
}

/// Every violation of reflexivity, transitivity and heredity of V. Empty
/// iff the model is a model.
inline std::vector<ModelViolation> validate_model(const KripkeModel& m) {
  std::vector<ModelViolation> out;
  const std::size_t n = m.size();
  for (World w = 0; w < n; ++w)
    if (!m.related(w, w)) out.emplace_back(MissingReflexive{w});
  for (World a = 0; a < n; ++a)
    for (World b = 0; b < n; ++b) {
      if (!m.related(a, b)) continue;
      for (World c = 0; c < n; ++c)
        if (m.related(b, c) && !m.related(a, c)) out.emplace_back(TransitivityFailure{a, b, c});
    }
  for (const auto& [atom, set] : m.valuation())
    for (World w = 0; w < n; ++w) {
      if (!((set >> w) & 1U)) continue;
      for (World v = 0; v < n; ++v)
        if (m.related(w, v) && !((set >> v) & 1U)) out.emplace_back(HeredityViolation{atom, w, v});
    }
  return out;
}

/// Truth set of a compound from the truth sets of its parts.
inline WorldSet apply_kripke(const KripkeModel& m, Kind k, WorldSet a, WorldSet c) {
  switch (k) {
    case Kind::And:
      return a & c;
    case Kind::Or:
      return a | c;
    case Kind::ImpC:
      return (~a | c) & m.all();
    case Kind::ImpI: {
      // w forces A ->i B iff no successor of w forces A without forcing B.
      const WorldSet bad = a & ~c;
      WorldSet out = 0;
      for (World w = 0; w < m.size(); ++w)
        if ((m.successors(w) & bad) == 0) out |= KripkeModel::bit(w);
      return out;
    }
    default:
      throw std::logic_error("apply_kripke: not a binary connective");
  }
}

/// The set of worlds satisfying f.
inline WorldSet truth_set(const KripkeModel& m, const Formula& f) {
  switch (f.kind()) {
    case Kind::Atom:
      return m.truth_set(f.name());
    case Kind::Bottom:
      return 0;
    default:
      return apply_kripke(m, f.kind(), truth_set(m, f.left()), truth_set(m, f.right()));
  }
}

inline bool satisfies(const KripkeModel& m, World w, const Formula& f) {
  if (w >= m.size()) throw std::out_of_range("world " + std::to_string(w) + " out of range");
  return (truth_set(m, f) >> w) & 1U;
}

/// Truth is preserved along R for the given truth set: the set is R-upward closed.
inline std::optional<std::pair<World, World>> upward_failure(const KripkeModel& m, WorldSet s) {
  for (World w = 0; w < m.size(); ++w) {
    if (!((s >> w) & 1U)) continue;
    const WorldSet escaped = m.successors(w) & ~s;
    if (escaped) return std::pair{w, static_cast<World>(std::countr_zero(escaped))};
  }
  return std::nullopt;
}

/// nullopt iff f satisfies heredity in m; otherwise the first failing pair
/// (w, v): w R v, f true at w, false at v.
inline std::optional<std::pair<World, World>> heredity_failure(const KripkeModel& m, const Formula& f) {
  return upward_failure(m, truth_set(m, f));
}

inline bool heredity_holds(const KripkeModel& m, const Formula& f) { return !heredity_failure(m, f); }

inline bool valid_in_model(const KripkeModel& m, const Formula& f) { return truth_set(m, f) == m.all(); }

/// Every world satisfying all of gamma satisfies f.
inline bool consequence_in_model(const KripkeModel& m, const std::vector<Formula>& gamma, const Formula& f) {
  WorldSet premises = m.all();
  for (const auto& g : gamma) premises &= truth_set(m, g);
  return (premises & ~truth_set(m, f)) == 0;
}

// ---------------------------------------------------------------------------
// Enumeration

/// Limits for exhaustive model enumeration. CJLOGIC_MAX_WORLDS and
/// CJLOGIC_MAX_ATOMS override the defaults.
struct SearchBudget {
  std::size_t max_worlds = 4;
  std::size_t max_atoms = 3;

  static SearchBudget from_env() {
    SearchBudget b;
    auto read = [](const char* name, std::size_t& slot) {
      if (const char* env = std::getenv(name)) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) slot = static_cast<std::size_t>(v);
      }
    };
    read("CJLOGIC_MAX_WORLDS", b.max_worlds);
    read("CJLOGIC_MAX_ATOMS", b.max_atoms);
    return b;
  }
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// All preorders on n worlds, as successor masks. Off-diagonal pairs (i,j)
/// are numbered row-major, pair k being bit k of a candidate mask, and
/// candidates are visited in ascending mask order; reflexive pairs are always present and
/// non-transitive candidates are skipped.
inline std::vector<std::vector<WorldSet>> enumerate_preorders(std::size_t n) {
  if (n == 0 || n > 6) throw std::invalid_argument("enumerate_preorders: n must be in 1..6");
  std::vector<std::pair<World, World>> pairs;
  for (World i = 0; i < n; ++i)
    for (World j = 0; j < n; ++j)
      if (i != j) pairs.emplace_back(i, j);
  std::vector<std::vector<WorldSet>> out;
  const std::uint64_t candidates = std::uint64_t{1} << pairs.size();
  std::vector<WorldSet> succ(n);
  for (std::uint64_t mask = 0; mask < candidates; ++mask) {
    for (World i = 0; i < n; ++i) succ[i] = KripkeModel::bit(i);
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if ((mask >> k) & 1U) succ[pairs[k].first] |= KripkeModel::bit(pairs[k].second);
    bool transitive = true;
    for (World i = 0; i < n && transitive; ++i)
      for (World j = 0; j < n && transitive; ++j)
        if ((succ[i] >> j) & 1U) transitive = (succ[j] & ~succ[i]) == 0;
    if (transitive) out.push_back(succ);
  }
  return out;
}

/// The R-upward-closed subsets of the worlds, in ascending mask order.
inline std::vector<WorldSet> upsets(const std::vector<WorldSet>& succ) {
  const std::size_t n = succ.size();
  std::vector<WorldSet> out;
  for (WorldSet s = 0; s < (WorldSet{1} << n); ++s) {
    bool closed = true;
    for (World w = 0; w < n && closed; ++w)
      if ((s >> w) & 1U) closed = (succ[w] & ~s) == 0;
    if (closed) out.push_back(s);
  }
  return out;
}

/// Visits every model with 1..max_worlds worlds over `names`, in canonical
/// order: world count, then preorder, then valuation (one upset per atom,
/// first atom varying slowest). Stops when visit returns false.
template <class Visit>
bool for_each_model(std::size_t max_worlds, const std::vector<std::string>& names, Visit&& visit) {
  for (std::size_t n = 1; n <= max_worlds; ++n) {
    for (const auto& succ : enumerate_preorders(n)) {
      KripkeModel m(n);
      for (World w = 0; w < n; ++w) m.set_successors(w, succ[w]);
      const auto ups = upsets(succ);
      std::vector<std::size_t> digit(names.size(), 0);
      for (const auto& a : names) m.set_truth_set(a, ups[0]);
      while (true) {
        if (!visit(static_cast<const KripkeModel&>(m))) return false;
        std::size_t i = names.size();
        bool done = names.empty();
        while (i > 0) {
          --i;
          if (++digit[i] < ups.size()) {
            m.set_truth_set(names[i], ups[digit[i]]);
            break;
          }
          digit[i] = 0;
          m.set_truth_set(names[i], ups[0]);
          if (i == 0) done = true;
        }
        if (done) break;
      }
    }
  }
  return true;
}

struct KripkeWitness {
  KripkeModel model;
  World world = 0;
  std::string annotation;
};

/// The first model (in canonical order) with at most max_worlds worlds and a
/// world where f fails, or nullopt if there is none. Throws BudgetExceeded
/// when max_worlds or the atom count is over budget.
inline std::optional<KripkeWitness> countermodel_search(const Formula& f, std::size_t max_worlds,
                                                        const SearchBudget& budget = SearchBudget::from_env()) {
  if (max_worlds == 0) throw std::invalid_argument("max_worlds must be at least 1");
  const auto names = atoms(f);
  if (max_worlds > budget.max_worlds)
    throw BudgetExceeded("max_worlds " + std::to_string(max_worlds) + " exceeds the budget of " +
                         std::to_string(budget.max_worlds));
  if (names.size() > budget.max_atoms)
    throw BudgetExceeded(std::to_string(names.size()) + " atoms exceed the budget of " +
                         std::to_string(budget.max_atoms));
  std::optional<KripkeWitness> out;
  for_each_model(max_worlds, names, [&](const KripkeModel& m) {
    const WorldSet failing = m.all() & ~truth_set(m, f);
    if (!failing) return true;
    World w = static_cast<World>(std::countr_zero(failing));
    out = KripkeWitness{m, w, render(f) + " fails at world " + std::to_string(w)};
    return false;
  });
  return out;
}

/// Random model with 1..max_worlds worlds: a random relation closed to a
/// preorder, then each atom a random set closed upward.
template <class Rng>
KripkeModel random_model(Rng& rng, std::size_t max_worlds, const std::vector<std::string>& names) {
  const std::size_t n = 1 + static_cast<std::size_t>(rng() % max_worlds);
  KripkeModel m(n);
  const std::uint64_t density = rng() % 4;  // edge probability density/8
  for (World i = 0; i < n; ++i)
    for (World j = 0; j < n; ++j)
      if (i != j && rng() % 8 < density) m.relate(i, j);
  // Transitive closure.
  for (World k = 0; k < n; ++k)
    for (World i = 0; i < n; ++i)
      if (m.related(i, k)) m.set_successors(i, m.successors(i) | m.successors(k));
  for (const auto& a : names) {
    WorldSet s = rng() & m.all();
    WorldSet up = s;
    for (World w = 0; w < n; ++w)
      if ((s >> w) & 1U) up |= m.successors(w);
    m.set_truth_set(a, up);
  }
  return m;
}

// ---------------------------------------------------------------------------
// JSON: {"worlds": 2, "rel": [[0,0],[0,1],[1,1]], "val": {"p": [1]}}

class InvalidModel : public std::runtime_error {
 public:
  explicit InvalidModel(std::vector<ModelViolation> v)
      : std::runtime_error(summary(v)), violations_(std::move(v)) {}
  const std::vector<ModelViolation>& violations() const noexcept { return violations_; }

 private:
  static std::string summary(const std::vector<ModelViolation>& v) {
    std::string s = "invalid model:";
    for (const auto& x : v) s += "\n  " + describe(x);
    return s;
  }
  std::vector<ModelViolation> violations_;
};

/// Parses and validates a model. Malformed JSON structure throws
/// std::invalid_argument; a well-formed but invalid model throws InvalidModel.
inline KripkeModel model_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("worlds") || !j["worlds"].is_number_unsigned())
    throw std::invalid_argument("model needs a non-negative integer \"worlds\"");
  const auto n = j["worlds"].get<std::size_t>();
  if (n == 0 || n > kMaxWorlds) throw std::invalid_argument("\"worlds\" must be between 1 and 64");
  KripkeModel m(n);
  for (World w = 0; w < n; ++w) m.unrelate(w, w);
  auto world = [n](const nlohmann::json& x) {
    if (!x.is_number_unsigned() || x.get<std::size_t>() >= n)
      throw std::invalid_argument("world index out of range: " + x.dump());
    return x.get<World>();
  };
  if (j.contains("rel")) {
    if (!j["rel"].is_array()) throw std::invalid_argument("\"rel\" must be an array of pairs");
    for (const auto& pr : j["rel"]) {
      if (!pr.is_array() || pr.size() != 2) throw std::invalid_argument("\"rel\" entries must be pairs");
      m.relate(world(pr[0]), world(pr[1]));
    }
  }
  if (j.contains("val")) {
    if (!j["val"].is_object()) throw std::invalid_argument("\"val\" must be an object");
    for (const auto& [atom, ws] : j["val"].items()) {
      if (!ws.is_array()) throw std::invalid_argument("\"val\" entries must be arrays of worlds");
      WorldSet s = 0;
      for (const auto& w : ws) s |= KripkeModel::bit(world(w));
      m.set_truth_set(atom, s);
    }
  }
  if (auto v = validate_model(m); !v.empty()) throw InvalidModel(std::move(v));
  return m;
}

inline nlohmann::ordered_json to_json(const KripkeModel& m) {
  nlohmann::ordered_json j;
  j["worlds"] = m.size();
  auto rel = nlohmann::ordered_json::array();
  for (World w = 0; w < m.size(); ++w)
    for (World v = 0; v < m.size(); ++v)
      if (m.related(w, v)) rel.push_back({w, v});
  j["rel"] = rel;
  auto val = nlohmann::ordered_json::object();
  for (const auto& [atom, s] : m.valuation()) {
    auto ws = nlohmann::ordered_json::array();
    for (World w = 0; w < m.size(); ++w)
      if ((s >> w) & 1U) ws.push_back(w);
    val[atom] = ws;
  }
  j["val"] = val;
  return j;
}

inline nlohmann::ordered_json to_json(const KripkeWitness& w) {
  nlohmann::ordered_json j;
  j["model"] = to_json(w.model);
  j["world"] = w.world;
  j["annotation"] = w.annotation;
  return j;
}

}  // namespace cjlogic
