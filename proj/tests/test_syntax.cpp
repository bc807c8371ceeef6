#include <gtest/gtest.h>

#include <set>

#include "cjlogic/formula.hpp"
#include "cjlogic/generate.hpp"
#include "cjlogic/parser.hpp"

using namespace cjlogic;

namespace {

Formula p() { return Formula::atom("p"); }
Formula q() { return Formula::atom("q"); }

}  // namespace

TEST(Parse, ConstructorReading) {
  EXPECT_EQ(parse("p ->i q"), Formula::imp_i(p(), q()));
  EXPECT_EQ(parse("p ->c q"), Formula::imp_c(p(), q()));
  EXPECT_EQ(parse("F"), Formula::bottom());
}

TEST(Parse, SugarExpands) {
  const Formula negp = Formula::imp_c(p(), Formula::bottom());
  EXPECT_EQ(parse("~c p ->c (q ->i ~c p)"), Formula::imp_c(negp, Formula::imp_i(q(), negp)));
  EXPECT_EQ(parse("T"), Formula::imp_i(Formula::bottom(), Formula::bottom()));
  EXPECT_EQ(parse("~i p"), Formula::imp_i(p(), Formula::bottom()));
}

TEST(Parse, PrecedenceAndAssociativity) {
  const Formula r = Formula::atom("r");
  EXPECT_EQ(parse("p & q | r"), Formula::disj(Formula::conj(p(), q()), r));
  EXPECT_EQ(parse("p | q & r"), Formula::disj(p(), Formula::conj(q(), r)));
  EXPECT_EQ(parse("p & q & r"), Formula::conj(Formula::conj(p(), q()), r));
  EXPECT_EQ(parse("p | q | r"), Formula::disj(Formula::disj(p(), q()), r));
  EXPECT_EQ(parse("p ->i q ->i r"), Formula::imp_i(p(), Formula::imp_i(q(), r)));
  EXPECT_EQ(parse("p ->c q ->c r"), Formula::imp_c(p(), Formula::imp_c(q(), r)));
  EXPECT_EQ(parse("~c p & q"), Formula::conj(Formula::neg_c(p()), q()));
  EXPECT_EQ(parse("~c ~i p"), Formula::neg_c(Formula::neg_i(p())));
  EXPECT_EQ(parse("p | q ->i r"), Formula::imp_i(Formula::disj(p(), q()), r));
}

TEST(Parse, IdentifiersAndWhitespace) {
  EXPECT_EQ(parse("  abc_1Z->i  x9 "), Formula::imp_i(Formula::atom("abc_1Z"), Formula::atom("x9")));
  EXPECT_EQ(parse("((p))"), p());
}

TEST(Parse, MixedImplicationChainIsRejected) {
  try {
    parse("p ->i q ->c r");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.code(), ParseError::Code::MixedImplications);
  }
  EXPECT_NO_THROW(parse("p ->i (q ->c r)"));
  EXPECT_NO_THROW(parse("(p ->i q) ->c r"));
}

TEST(Parse, SyntaxErrorsCarryPosition) {
  struct Case {
    const char* text;
    std::size_t pos;
  };
  for (const Case& c : {Case{"p &", 3}, Case{"p q", 2}, Case{"(p", 2}, Case{"P", 0}, Case{"p ->x q", 2},
                        Case{"", 0}, Case{"~ p", 0}, Case{"p & )", 4}}) {
    try {
      parse(c.text);
      ADD_FAILURE() << "accepted: " << c.text;
    } catch (const ParseError& e) {
      EXPECT_EQ(e.code(), ParseError::Code::Syntax) << c.text;
      EXPECT_EQ(e.position(), c.pos) << c.text << ": " << e.what();
    }
  }
}

TEST(Parse, ReservedNamesRejectedUnlessAllowed) {
  try {
    parse("X0 | p");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.code(), ParseError::Code::ReservedName);
  }
  EXPECT_EQ(parse("X0 | p", {.allow_reserved = true}), Formula::disj(Formula::atom("X0"), p()));
}

TEST(Render, Examples) {
  EXPECT_EQ(render(Formula::imp_i(p(), q())), "p ->i q");
  EXPECT_EQ(render(Formula::conj(p(), Formula::imp_c(p(), q()))), "p & (p ->c q)");
  EXPECT_EQ(render(Formula::neg_c(p())), "~c p");
  EXPECT_EQ(render(Formula::neg_c(p()), RenderMode::Core), "p ->c F");
  EXPECT_EQ(render(Formula::top()), "T");
  EXPECT_EQ(render(Formula::top(), RenderMode::Core), "F ->i F");
  EXPECT_EQ(render(parse("(p ->i q) ->i r")), "(p ->i q) ->i r");
  EXPECT_EQ(render(parse("p ->i (q ->c r)")), "p ->i (q ->c r)");
  EXPECT_EQ(render(parse("p & (q & r)")), "p & (q & r)");
}

TEST(Atoms, FirstOccurrenceOrder) {
  EXPECT_EQ(atoms(parse("p & (p ->c q)")), (std::vector<std::string>{"p", "q"}));
  EXPECT_TRUE(atoms(parse("F")).empty());
  EXPECT_EQ(atoms(parse("(p ->i q) ->c p")), (std::vector<std::string>{"p", "q"}));
  EXPECT_EQ(atoms(parse("r | q & p")), (std::vector<std::string>{"r", "q", "p"}));
}

TEST(Substitute, Examples) {
  Substitution s{{"r", parse("p ->i q")}};
  EXPECT_EQ(substitute(s, parse("~c r | r")), parse("~c (p ->i q) | (p ->i q)"));
  const Formula f = parse("(p ->c q) & ~i r");
  EXPECT_EQ(substitute(Substitution{}, f), f);
  EXPECT_EQ(substitute(Substitution{{"p", Formula::bottom()}}, parse("p ->i p")), parse("F ->i F"));
}

TEST(Classifiers, Examples) {
  EXPECT_TRUE(is_classical(parse("p ->c (q | F)")));
  EXPECT_FALSE(is_classical(parse("p ->i p")));
  EXPECT_FALSE(is_classical(parse("~i p")));
  EXPECT_TRUE(is_intuitionistic(parse("p ->i (q & r)")));
  EXPECT_FALSE(is_intuitionistic(parse("~c p")));
  EXPECT_TRUE(is_intuitionistic(parse("F")));
  EXPECT_TRUE(is_persistent(parse("p | (q ->i (r ->c s))")));
  EXPECT_FALSE(is_persistent(parse("~c p")));
  EXPECT_TRUE(is_persistent(parse("F")));
  EXPECT_FALSE(is_persistent(parse("p & ~c q")));
}

TEST(Skeleton, Examples) {
  auto s1 = classical_skeleton(parse("~c (p ->i q) | (p ->i q)"));
  EXPECT_EQ(s1.formula, parse("~c X0 | X0", {.allow_reserved = true}));
  EXPECT_EQ(s1.back, (Substitution{{"X0", parse("p ->i q")}}));
  EXPECT_EQ(substitute(s1.back, s1.formula), parse("~c (p ->i q) | (p ->i q)"));

  auto s2 = classical_skeleton(parse("p ->c q"));
  EXPECT_EQ(s2.formula, parse("p ->c q"));
  EXPECT_TRUE(s2.back.empty());

  auto s3 = classical_skeleton(parse("(p ->i q) ->c (p ->i q)"));
  EXPECT_EQ(render(s3.formula), "X0 ->c X0");

  auto s4 = classical_skeleton(parse("(p ->i q) & ((q ->i p) | (p ->i q))"));
  EXPECT_EQ(render(s4.formula), "X0 & (X1 | X0)");
  auto s5 = classical_skeleton(parse("p ->i p"));
  EXPECT_EQ(render(s5.formula), "X0");
}

// ---------------------------------------------------------------------------
// Properties over generated formulas.

namespace {

const Signature& everything() {
  static const Signature s = Signature::over({"p", "q", "r"}, true, all_binary_ctors());
  return s;
}

// Independent printer: fully parenthesized core syntax.
std::string full_parens(const Formula& f) {
  switch (f.kind()) {
    case Kind::Atom: return f.name();
    case Kind::Bottom: return "F";
    case Kind::And: return "(" + full_parens(f.left()) + " & " + full_parens(f.right()) + ")";
    case Kind::Or: return "(" + full_parens(f.left()) + " | " + full_parens(f.right()) + ")";
    case Kind::ImpI: return "(" + full_parens(f.left()) + " ->i " + full_parens(f.right()) + ")";
    case Kind::ImpC: return "(" + full_parens(f.left()) + " ->c " + full_parens(f.right()) + ")";
  }
  return "?";
}

}  // namespace

TEST(SyntaxProperty, RoundTripExhaustiveDepth2) {
  const Signature sig = Signature::over({"p", "q"}, true, {Ctor::And, Ctor::Or, Ctor::ImpI, Ctor::ImpC, Ctor::NegC,
                                                           Ctor::NegI});
  std::size_t n = 0;
  for (const auto& f : enumerate_formulas(sig, 2)) {
    ASSERT_EQ(parse(render(f)), f) << render(f);
    ASSERT_EQ(parse(render(f, RenderMode::Core)), f) << render(f, RenderMode::Core);
    ASSERT_EQ(parse(full_parens(f)), f) << full_parens(f);
    ++n;
  }
  EXPECT_EQ(n, count_formulas(sig, 2));
}

TEST(SyntaxProperty, RoundTripRandomDeep) {
  Random rng(11);
  for (int i = 0; i < 3000; ++i) {
    const Formula f = random_formula(rng, everything(), 7);
    ASSERT_EQ(parse(render(f)), f) << render(f);
    ASSERT_EQ(parse(full_parens(f)), f);
  }
}

TEST(SyntaxProperty, SubstitutionComposition) {
  Random rng(12);
  for (int i = 0; i < 1000; ++i) {
    const Formula f = random_formula(rng, everything(), 4);
    Substitution sigma, tau;
    for (const char* a : {"p", "q", "r"}) {
      if (rng.chance(2, 3)) sigma.set(a, random_formula(rng, everything(), 2));
      if (rng.chance(2, 3)) tau.set(a, random_formula(rng, everything(), 2));
    }
    ASSERT_EQ(substitute(sigma, substitute(tau, f)), substitute(Substitution::compose(sigma, tau), f));
  }
}

TEST(SyntaxProperty, IntuitionisticImpliesPersistentExhaustive) {
  const Signature lj = Signature::over({"p", "q"}, true, {Ctor::And, Ctor::Or, Ctor::ImpI});
  // Depth 3 (21918630 formulas) is built on the fly instead of stored.
  const auto d2 = enumerate_formulas(lj, 2);
  std::size_t checked = 0;
  for (const auto& f : d2) {
    ASSERT_TRUE(is_intuitionistic(f));
    ASSERT_TRUE(is_persistent(f)) << render(f);
    ++checked;
  }
  for (Ctor c : lj.ctors)
    for (const auto& a : d2)
      for (const auto& b : d2) {
        const Formula f = build(c, a, b);
        ASSERT_TRUE(is_persistent(f)) << render(f);
        ++checked;
      }
  EXPECT_EQ(checked, d2.size() + count_formulas(lj, 3) - lj.leaves.size());
}

TEST(SyntaxProperty, SkeletonSoundAndMaximal) {
  Random rng(13);
  for (int i = 0; i < 2000; ++i) {
    const Formula f = random_formula(rng, everything(), 5);
    const Skeleton s = classical_skeleton(f);
    ASSERT_TRUE(is_classical(s.formula));
    ASSERT_EQ(substitute(s.back, s.formula), f);
    std::set<std::string> images;
    for (const auto& [atom, g] : s.back.entries()) {
      ASSERT_TRUE(is_reserved_name(atom));
      ASSERT_EQ(g.kind(), Kind::ImpI);
      ASSERT_TRUE(images.insert(render(g)).second) << "two fresh atoms for one subformula";
    }
    for (const auto& a : atoms(s.formula)) ASSERT_TRUE(is_reserved_name(a) || !s.back.contains(a));
  }
}
