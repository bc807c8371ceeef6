#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace cjlogic {

/// Main connective of a formula node. The defined connectives (top and the
/// two negations) are abbreviations and have no kind of their own.
enum class Kind : std::uint8_t { Atom, Bottom, And, Or, ImpI, ImpC };

inline bool is_binary(Kind k) noexcept { return k != Kind::Atom && k != Kind::Bottom; }

/// Immutable formula tree over {atom, bottom, and, or, ->i, ->c}.
///
/// Nodes are shared, so copying a Formula is cheap and subformulas may be
/// reused freely. Equality is syntactic identity; there is no normalization.
class Formula {
  struct Node {
    Kind kind;
    std::string name;
    std::shared_ptr<const Node> left;
    std::shared_ptr<const Node> right;
    std::size_t hash = 0;
    int depth = 0;
    std::size_t size = 1;
  };

 public:
  static Formula atom(std::string name) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Atom;
    n->hash = std::hash<std::string>{}(name) * 0x9e3779b97f4a7c15ULL + 1;
    n->name = std::move(name);
    return Formula(std::move(n));
  }

  static Formula bottom() {
    static const Formula b = [] {
      auto n = std::make_shared<Node>();
      n->kind = Kind::Bottom;
      n->hash = 0x51ed270b27f3c5a1ULL;
      return Formula(std::move(n));
    }();
    return b;
  }

  static Formula binary(Kind kind, const Formula& l, const Formula& r) {
    auto n = std::make_shared<Node>();
    n->kind = kind;
    n->left = l.node_;
    n->right = r.node_;
    std::size_t h = static_cast<std::size_t>(kind) + 0x2545f4914f6cdd1dULL;
    h ^= l.node_->hash + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= r.node_->hash + 0x7f4a7c159e3779b9ULL + (h << 6) + (h >> 2);
    n->hash = h;
    n->depth = 1 + std::max(l.node_->depth, r.node_->depth);
    n->size = 1 + l.node_->size + r.node_->size;
    return Formula(std::move(n));
  }

  static Formula conj(const Formula& l, const Formula& r) { return binary(Kind::And, l, r); }
  static Formula disj(const Formula& l, const Formula& r) { return binary(Kind::Or, l, r); }
  static Formula imp_i(const Formula& l, const Formula& r) { return binary(Kind::ImpI, l, r); }
  static Formula imp_c(const Formula& l, const Formula& r) { return binary(Kind::ImpC, l, r); }

  // Abbreviations.
  static Formula top() { return imp_i(bottom(), bottom()); }
  static Formula neg_c(const Formula& f) { return imp_c(f, bottom()); }
  static Formula neg_i(const Formula& f) { return imp_i(f, bottom()); }

  Kind kind() const noexcept { return node_->kind; }
  bool is_atom() const noexcept { return node_->kind == Kind::Atom; }
  bool is_bottom() const noexcept { return node_->kind == Kind::Bottom; }

  /// Atom name; empty for every other kind.
  const std::string& name() const noexcept { return node_->name; }

  /// Children of a binary node. Undefined for atoms and bottom.
  Formula left() const { return Formula(node_->left); }
  Formula right() const { return Formula(node_->right); }

  /// Atoms and bottom have depth 0.
  int depth() const noexcept { return node_->depth; }
  std::size_t size() const noexcept { return node_->size; }
  std::size_t hash() const noexcept { return node_->hash; }

  /// Same node object, not merely equal.
  bool shares_node(const Formula& o) const noexcept { return node_ == o.node_; }

  friend bool operator==(const Formula& a, const Formula& b) noexcept {
    return same(a.node_.get(), b.node_.get());
  }

  /// Total order: by kind, then atom name, then children left to right.
  friend bool operator<(const Formula& a, const Formula& b) noexcept {
    return compare(a.node_.get(), b.node_.get()) < 0;
  }

 private:
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  static bool same(const Node* a, const Node* b) noexcept {
    while (true) {
      if (a == b) return true;
      if (a->kind != b->kind || a->hash != b->hash || a->size != b->size) return false;
      if (a->kind == Kind::Atom) return a->name == b->name;
      if (a->kind == Kind::Bottom) return true;
      if (!same(a->left.get(), b->left.get())) return false;
      a = a->right.get();
      b = b->right.get();
    }
  }

  static int compare(const Node* a, const Node* b) noexcept {
    if (a == b) return 0;
    if (a->kind != b->kind) return a->kind < b->kind ? -1 : 1;
    if (a->kind == Kind::Atom) return a->name.compare(b->name);
    if (a->kind == Kind::Bottom) return 0;
    if (int c = compare(a->left.get(), b->left.get()); c != 0) return c;
    return compare(a->right.get(), b->right.get());
  }

  std::shared_ptr<const Node> node_;
};

struct FormulaHash {
  std::size_t operator()(const Formula& f) const noexcept { return f.hash(); }
};

/// Atom names of f in first-occurrence (left-to-right) order.
inline std::vector<std::string> atoms(const Formula& f) {
  std::vector<std::string> out;
  auto visit = [&out](const auto& self, const Formula& g) -> void {
    switch (g.kind()) {
      case Kind::Atom:
        for (const auto& a : out)
          if (a == g.name()) return;
        out.push_back(g.name());
        return;
      case Kind::Bottom:
        return;
      default:
        self(self, g.left());
        self(self, g.right());
    }
  };
  visit(visit, f);
  return out;
}

/// Atoms of a list of formulas, first-occurrence order across the list.
inline std::vector<std::string> atoms(const std::vector<Formula>& fs) {
  std::vector<std::string> out;
  for (const auto& f : fs)
    for (auto& a : atoms(f)) {
      bool seen = false;
      for (const auto& b : out) seen = seen || (a == b);
      if (!seen) out.push_back(std::move(a));
    }
  return out;
}

/// Uniform substitution: a finite map from atom names to formulas. Atoms not
/// in the map are left unchanged.
class Substitution {
 public:
  Substitution() = default;
  Substitution(std::initializer_list<std::pair<const std::string, Formula>> init) : map_(init) {}

  void set(std::string atom, Formula f) { map_.insert_or_assign(std::move(atom), std::move(f)); }

  Formula operator()(const std::string& atom) const {
    auto it = map_.find(atom);
    return it == map_.end() ? Formula::atom(atom) : it->second;
  }

  bool contains(const std::string& atom) const { return map_.count(atom) != 0; }
  bool empty() const noexcept { return map_.empty(); }
  const std::map<std::string, Formula>& entries() const noexcept { return map_; }

  Formula apply(const Formula& f) const {
    if (map_.empty()) return f;
    switch (f.kind()) {
      case Kind::Atom: {
        auto it = map_.find(f.name());
        return it == map_.end() ? f : it->second;
      }
      case Kind::Bottom:
        return f;
      default: {
        Formula l = apply(f.left());
        Formula r = apply(f.right());
        if (l.shares_node(f.left()) && r.shares_node(f.right())) return f;
        return Formula::binary(f.kind(), l, r);
      }
    }
  }

  /// The substitution `outer after inner`: applying it equals applying inner
  /// and then outer.
  static Substitution compose(const Substitution& outer, const Substitution& inner) {
    Substitution out;
    for (const auto& [a, f] : inner.map_) out.map_.emplace(a, outer.apply(f));
    for (const auto& [a, f] : outer.map_) out.map_.emplace(a, f);  // no-op if already set
    return out;
  }

  friend bool operator==(const Substitution&, const Substitution&) = default;

 private:
  std::map<std::string, Formula> map_;
};

inline Formula substitute(const Substitution& sigma, const Formula& f) { return sigma.apply(f); }

/// True iff f contains no ->i (the classical fragment).
inline bool is_classical(const Formula& f) {
  if (f.kind() == Kind::ImpI) return false;
  if (!is_binary(f.kind())) return true;
  return is_classical(f.left()) && is_classical(f.right());
}

/// True iff f contains no ->c (the intuitionistic fragment).
inline bool is_intuitionistic(const Formula& f) {
  if (f.kind() == Kind::ImpC) return false;
  if (!is_binary(f.kind())) return true;
  return is_intuitionistic(f.left()) && is_intuitionistic(f.right());
}

/// Persistent formulas: E ::= bottom | p | A ->i A | E & E | E | E, with
/// arbitrary A under the ->i. Bottom counts as persistent.
inline bool is_persistent(const Formula& f) {
  switch (f.kind()) {
    case Kind::Atom:
    case Kind::Bottom:
    case Kind::ImpI:
      return true;
    case Kind::And:
    case Kind::Or:
      return is_persistent(f.left()) && is_persistent(f.right());
    case Kind::ImpC:
      return false;
  }
  return false;
}

/// Reserved atom names X0, X1, ... used for skeleton abstraction. The parser
/// rejects them in user input.
inline bool is_reserved_name(std::string_view name) noexcept {
  if (name.size() < 2 || name[0] != 'X') return false;
  for (std::size_t i = 1; i < name.size(); ++i)
    if (name[i] < '0' || name[i] > '9') return false;
  return true;
}

inline std::string reserved_name(std::size_t index) { return "X" + std::to_string(index); }

struct Skeleton {
  Formula formula;     // classical: no ->i
  Substitution back;   // maps the fresh atoms to the abstracted subformulas
};

/// Replaces every maximal ->i-rooted subformula by a fresh reserved atom.
/// Syntactically equal subformulas share one atom; atoms are numbered in
/// left-to-right order of first occurrence.
inline Skeleton classical_skeleton(const Formula& f) {
  std::unordered_map<Formula, std::string, FormulaHash> fresh;
  Substitution back;
  auto walk = [&](const auto& self, const Formula& g) -> Formula {
    switch (g.kind()) {
      case Kind::Atom:
      case Kind::Bottom:
        return g;
      case Kind::ImpI: {
        auto it = fresh.find(g);
        if (it == fresh.end()) {
          it = fresh.emplace(g, reserved_name(fresh.size())).first;
          back.set(it->second, g);
        }
        return Formula::atom(it->second);
      }
      default: {
        Formula l = self(self, g.left());
        Formula r = self(self, g.right());
        return Formula::binary(g.kind(), l, r);
      }
    }
  };
  Formula s = walk(walk, f);
  return {std::move(s), std::move(back)};
}

}  // namespace cjlogic
