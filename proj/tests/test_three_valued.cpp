#include <gtest/gtest.h>

#include <cstdlib>

#include "cjlogic/claims.hpp"
#include "cjlogic/generate.hpp"
#include "cjlogic/parser.hpp"
#include "cjlogic/three_valued.hpp"
#include "oracles.hpp"

using namespace cjlogic;

namespace {

TruthValue3 tv(char c) { return *TruthValue3::from_symbol(c); }

Valuation3 val(std::initializer_list<std::pair<const char*, char>> xs) {
  Valuation3 v;
  for (const auto& [a, c] : xs) v.set(a, tv(c));
  return v;
}

Valuation3 from_oracle(const std::map<std::string, int>& o) {
  Valuation3 v;
  for (const auto& [a, x] : o) v.set(a, tv(oracle::sym(x)));
  return v;
}

// The tables as printed, rows and columns in order t, b, f. Written out here
// independently of the library's copy.
struct Row {
  const char* op;
  const char* cells[3];
};
const Row kTable[] = {
    {"&", {"tbf", "bbf", "fff"}},
    {"|", {"ttt", "tbb", "tbf"}},
    {"->c", {"tbf", "tbb", "ttt"}},
    {"->i", {"tbf", "tbf", "ttt"}},
};

}  // namespace

namespace cjlogic {
void PrintTo(const TruthValue3& v, std::ostream* os) { *os << v.symbol(); }
void PrintTo(const Valuation3& v, std::ostream* os) { *os << to_json(v).dump(); }
}  // namespace cjlogic

TEST(TruthValue, Encoding) {
  EXPECT_TRUE(TruthValue3::t().has_one());
  EXPECT_FALSE(TruthValue3::t().has_zero());
  EXPECT_TRUE(TruthValue3::b().has_one() && TruthValue3::b().has_zero());
  EXPECT_TRUE(TruthValue3::f().has_zero());
  EXPECT_FALSE(TruthValue3::f().has_one());
  EXPECT_TRUE(TruthValue3::t().designated());
  EXPECT_TRUE(TruthValue3::b().designated());
  EXPECT_FALSE(TruthValue3::f().designated());
  EXPECT_THROW(TruthValue3::from_membership(false, false), std::logic_error);
  EXPECT_FALSE(TruthValue3::from_symbol('x'));
}

TEST(Tables, BinaryConnectivesAgainstPrintedTable) {
  const std::string order = "tbf";
  for (const Row& row : kTable) {
    const Formula f = parse(std::string("p ") + row.op + " q");
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        const Valuation3 v = val({{"p", order[i]}, {"q", order[j]}});
        EXPECT_EQ(eval3(v, f).symbol(), row.cells[i][j]) << row.op << " " << order[i] << order[j];
      }
  }
  for (char c : order) EXPECT_EQ(eval3(val({{"p", c}}), parse("F")), TruthValue3::f());
}

TEST(Tables, Negations) {
  EXPECT_EQ(eval3(val({{"p", 't'}}), parse("~c p")).symbol(), 'f');
  EXPECT_EQ(eval3(val({{"p", 'b'}}), parse("~c p")).symbol(), 'b');
  EXPECT_EQ(eval3(val({{"p", 'f'}}), parse("~c p")).symbol(), 't');
  EXPECT_EQ(eval3(val({{"p", 't'}}), parse("~i p")).symbol(), 'f');
  EXPECT_EQ(eval3(val({{"p", 'b'}}), parse("~i p")).symbol(), 'f');
  EXPECT_EQ(eval3(val({{"p", 'f'}}), parse("~i p")).symbol(), 't');
}

TEST(Tables, GoldenCheckPassesAndCatchesCorruption) {
  const ClaimRecord ok = check_truth_tables();
  EXPECT_TRUE(ok.passed()) << ok.witness.dump();
  EXPECT_NE(ok.summary.find("45 table entries"), std::string::npos);

  // One wrong cell: b ->c f answered as f.
  const Evaluator3 corrupted = [](const Valuation3& v, const Formula& f) {
    if (f.kind() == Kind::ImpC && eval3(v, f.left()) == TruthValue3::b() && eval3(v, f.right()) == TruthValue3::f())
      return TruthValue3::f();
    return eval3(v, f);
  };
  const ClaimRecord bad = check_truth_tables(corrupted);
  EXPECT_FALSE(bad.passed());
  EXPECT_EQ(bad.witness.size(), 2U);  // the ->c cell and ~c b
}

TEST(Eval, Examples) {
  const Valuation3 v = val({{"p", 'b'}, {"q", 'f'}});
  EXPECT_EQ(eval3(v, parse("p ->c q")), TruthValue3::b());
  EXPECT_EQ(eval3(v, parse("p ->i q")), TruthValue3::f());
  EXPECT_EQ(eval3(v, parse("F")), TruthValue3::f());
  EXPECT_EQ(eval3(v, parse("(p & (p ->c q)) ->i q")), TruthValue3::f());
  EXPECT_EQ(eval3(Valuation3{}, parse("p")), TruthValue3::f());  // unmentioned atoms are f
}

TEST(Validity, Examples) {
  EXPECT_TRUE(is_3_valid(parse("p | ~c p")).holds);
  EXPECT_TRUE(is_3_valid(parse("p ->i p")).holds);
  const Verdict3 w = is_3_valid(parse("(p & (p ->c q)) ->i q"));
  EXPECT_FALSE(w.holds);
  ASSERT_TRUE(w.countervaluation);
  EXPECT_EQ(*w.countervaluation, val({{"p", 'b'}, {"q", 'f'}}));
}

TEST(Consequence, Examples) {
  const Verdict3 mpc = consequence3({parse("p"), parse("p ->c q")}, parse("q"));
  EXPECT_FALSE(mpc.holds);
  EXPECT_EQ(*mpc.countervaluation, val({{"p", 'b'}, {"q", 'f'}}));
  EXPECT_TRUE(consequence3({parse("p"), parse("p ->i q")}, parse("q")).holds);
  EXPECT_EQ(to_ordered_json(*mpc.countervaluation, {"p", "q"}).dump(), R"({"p":"b","q":"f"})");
}

TEST(TwoValued, Examples) {
  EXPECT_TRUE(is_two_valued_tautology(parse("p | ~c p")));
  EXPECT_FALSE(is_two_valued_tautology(parse("p ->c q")));
  EXPECT_TRUE(is_two_valued_tautology(parse("((p ->c q) ->c p) ->c p")));
  EXPECT_THROW(is_two_valued_tautology(parse("p ->i p")), std::invalid_argument);
  EXPECT_TRUE(deformation_check(parse("p | ~c p")));
  EXPECT_TRUE(deformation_check(parse("~c (p & ~c p)")));
  EXPECT_TRUE(deformation_check(parse("p ->c p")));
  EXPECT_TRUE(is_3_valid(parse("~c (p & ~c p)")).holds);
}

TEST(AtomCap, Enforced) {
  EXPECT_THROW(is_3_valid(parse("p & q & r"), 2), AtomCapExceeded);
  EXPECT_NO_THROW(is_3_valid(parse("p & q"), 2));
}

TEST(Json, Valuation) {
  const Valuation3 v = valuation3_from_json(nlohmann::json::parse(R"({"p":"b","q":"f"})"));
  EXPECT_EQ(v, val({{"p", 'b'}, {"q", 'f'}}));
  EXPECT_THROW(valuation3_from_json(nlohmann::json::parse(R"({"p":"x"})")), std::invalid_argument);
  EXPECT_THROW(valuation3_from_json(nlohmann::json::parse(R"(["p"])")), std::invalid_argument);
}

// ---------------------------------------------------------------------------
// Properties.

namespace {

const Signature& sig3() {
  static const Signature s = Signature::over({"p", "q", "r"}, true, all_binary_ctors());
  return s;
}

}  // namespace

TEST(ThreeProperty, AgreesWithOrderOracle) {
  Random rng(31);
  const auto vals = oracle::valuations({"p", "q", "r"});
  for (int i = 0; i < 2000; ++i) {
    const Formula f = random_formula(rng, sig3(), 5);
    for (const auto& o : vals) ASSERT_EQ(eval3(from_oracle(o), f).symbol(), oracle::sym(oracle::eval(o, f))) << render(f);
  }
}

TEST(ThreeProperty, ValidityAndFirstWitnessAgreeWithOracle) {
  Random rng(32);
  for (int i = 0; i < 2000; ++i) {
    const Formula a = random_formula(rng, sig3(), 3);
    const Formula b = random_formula(rng, sig3(), 3);
    const Verdict3 v = consequence3({a}, b);
    const auto o = oracle::counter3({a}, b);
    ASSERT_EQ(v.holds, !o.has_value());
    if (o) {
      ASSERT_EQ(*v.countervaluation, from_oracle(*o));
    }
  }
}

TEST(ThreeProperty, TotalityDeMorganExhaustive) {
  EXPECT_TRUE(check_totality(3).passed());
  EXPECT_TRUE(check_de_morgan(3).passed());
}

TEST(ThreeProperty, BottomUndefinable) {
  const ClaimRecord r = check_bottom_undefinable(4);
  EXPECT_TRUE(r.passed());
  // Small-depth cross-check with explicitly built formulas.
  const Signature s = Signature::over({"p", "q"}, false, {Ctor::And, Ctor::Or, Ctor::NegC});
  const Valuation3 all_b = val({{"p", 'b'}, {"q", 'b'}});
  for (const auto& f : enumerate_formulas(s, 3)) ASSERT_EQ(eval3(all_b, f), TruthValue3::b()) << render(f);
}

TEST(ThreeProperty, MonotoneOnClassicalFragment) {
  // v1 <= v pointwise (as sets) implies v1(B) <= v(B) for classical B.
  const Signature cls = Signature::over({"p", "q"}, true, {Ctor::And, Ctor::Or, Ctor::ImpC});
  const auto formulas = enumerate_formulas(cls, 2);
  const auto vals = oracle::valuations({"p", "q"});
  std::size_t pairs = 0;
  for (const auto& o1 : vals)
    for (const auto& o : vals) {
      const Valuation3 v1 = from_oracle(o1), v = from_oracle(o);
      if (!v1("p").subset_of(v("p")) || !v1("q").subset_of(v("q"))) continue;
      ++pairs;
      for (const auto& f : formulas) ASSERT_TRUE(eval3(v1, f).subset_of(eval3(v, f))) << render(f);
    }
  EXPECT_EQ(pairs, 25U);  // 5 comparable ordered pairs per atom

  // Depth 3 with one atom, built on the fly.
  const Signature one = Signature::over({"p"}, true, {Ctor::And, Ctor::Or, Ctor::ImpC});
  const auto d2 = enumerate_formulas(one, 2);
  for (Ctor c : one.ctors)
    for (const auto& a : d2)
      for (const auto& b : d2) {
        const Formula f = build(c, a, b);
        for (char lo : {'t', 'f'}) {
          ASSERT_TRUE(eval3(val({{"p", lo}}), f).subset_of(eval3(val({{"p", 'b'}}), f)));
        }
      }
}

TEST(ThreeProperty, ClassicalTautologyIffThreeValid) {
  const ClaimRecord r = check_classical_iff_3_valid(3);
  EXPECT_TRUE(r.passed()) << r.witness.dump();
  // Direct check on every depth-2 formula.
  const Signature cls = Signature::over({"p", "q"}, true, {Ctor::And, Ctor::Or, Ctor::ImpC});
  for (const auto& f : enumerate_formulas(cls, 2)) ASSERT_TRUE(deformation_check(f)) << render(f);
}

TEST(ThreeProperty, SubstitutionLemma) {
  EXPECT_TRUE(check_substitution_lemma(0).passed());
  EXPECT_TRUE(check_substitution_lemma(99).passed());
}

TEST(ThreeProperty, DeductionBridge) {
  const ClaimRecord r = check_deduction_bridge(0);
  EXPECT_TRUE(r.passed()) << r.witness.dump();
}
