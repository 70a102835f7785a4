#include <set>

#include "doctest.h"
#include "gen.hpp"
#include "lgfocus/focused.hpp"
#include "lgfocus/syntax.hpp"

using namespace lgfocus;

namespace {

PolFormula PF(const char* s) { return parse_pol_formula(s); }
FStructure FS(const char* s) { return parse_fstructure(s); }
FPresentation FW(const char* s) { return parse_fpresentation(s); }
Presentation W(const char* s) { return parse_presentation(s); }

constexpr const char* kExample1 = "(((p / q) . q) . (p \\ r)) ; ~r";
constexpr const char* kExample2 = "((p / (q \\ p)) . ((p / (q \\ p)) \\ p)) ; ~p";

constexpr LogicVariant kVariants[] = {LogicVariant::LG0, LogicVariant::LGI, LogicVariant::CNL};

std::set<std::string> names(const std::set<PolFormula>& s) {
  std::set<std::string> out;
  for (const auto& f : s) out.insert(print_pol_formula(f));
  return out;
}

// Negative atoms replaced by their positive duals.
std::set<PolFormula> atoms_identified(const std::set<PolFormula>& s) {
  std::set<PolFormula> out;
  for (const auto& f : s) out.insert(f.conn() == PConn::NegAtom ? pol_negate(f) : f);
  return out;
}

// X for a bare focused goal: every negative leaf, and ↑p for an atom leaf p.
Universe universe_for(const FPresentation& w) {
  std::vector<PolFormula> leaves, x;
  leaves_of(w.left, leaves);
  leaves_of(w.right, leaves);
  for (const auto& f : leaves) x.push_back(f.positive() ? PolFormula::up(f) : f);
  return build_universe(x);
}

std::size_t count(const FProofNode& n) {
  std::size_t c = 1;
  for (const auto& p : n.premises) c += count(*p);
  return c;
}

// Canonical text of a proof, for duplicate and stability checks.
std::string show(const FProofNode& n) {
  std::string out = n.rule + "[" + print_fjudgment(n.conclusion);
  if (n.focus) out += " @" + print_occurrence(*n.focus) + "#" + std::to_string(n.invp_index);
  for (const auto& p : n.premises) out += " " + show(*p);
  return out + "]";
}

Enumeration enumerate_example(const char* s, LogicVariant v = LogicVariant::LG0) {
  auto g = focus_goals(W(s), v);
  REQUIRE(g.goals.size() == 1);
  return focused_enumerate(g.goals.front(), g.universe, v, 100);
}

struct Sample {
  FPresentation goal;
  Universe u;
};

// Focused goals drawn from the goal sets of random presentations.
std::vector<Sample> samples(std::uint64_t seed, int n, int budget) {
  lgtest::Gen g(seed);
  std::vector<Sample> out;
  while (static_cast<int>(out.size()) < n) {
    auto fg = focus_goals(g.mixed(budget, 2, false), LogicVariant::LG0);
    for (const auto& goal : fg.goals) out.push_back({goal, fg.universe});
  }
  return out;
}

}  // namespace

TEST_CASE("sigma and tau") {
  CHECK(names(tau(PF("p"))) == std::set<std::string>{"p"});
  CHECK(names(sigma(PF("^p"))) == std::set<std::string>{"~p", "p"});
  CHECK(names(sigma(PF("~p"))) == std::set<std::string>{"~p"});
  CHECK(names(tau(PF("_~p"))) == std::set<std::string>{"~p"});
  CHECK(names(tau(PF("p * _(q \\ ^r)"))) == std::set<std::string>{"p", "q \\ ^r", "q", "~r", "r"});
  CHECK_THROWS_AS(sigma(PF("p")), std::invalid_argument);

  // σ(N) and τ(N⊥) coincide only once atoms are identified up to polarity.
  CHECK(sigma(PF("~p")) != tau(PF("p")));
  CHECK(sigma(PF("^p")) != tau(PF("_~p")));
  lgtest::Gen g(11);
  for (int i = 0; i < 400; ++i) {
    auto n = g.pol(4, 3, Polarity::Negative);
    CHECK(atoms_identified(sigma(n)) == atoms_identified(tau(pol_negate(n))));
    auto p = g.pol(4, 3, Polarity::Positive);
    CHECK(atoms_identified(tau(p)) == atoms_identified(sigma(pol_negate(p))));
  }
}

TEST_CASE("universe closure") {
  CHECK(names(build_universe({PF("~p")}).closure) == std::set<std::string>{"~p"});
  // τ(↓↑p) = {↑p} ∪ σ(↑p) = {↑p, p̄, p}
  CHECK(names(build_universe({PF("^p")}).closure) == std::set<std::string>{"^p", "~p", "p"});
  CHECK_THROWS_AS(build_universe({PF("p")}), std::invalid_argument);

  lgtest::Gen g(12);
  for (int i = 0; i < 200; ++i) {
    std::vector<PolFormula> x{g.pol(4, 3, Polarity::Negative), g.pol(3, 3, Polarity::Negative)};
    auto u = build_universe(x);
    for (const auto& n : x) CHECK(u.contains(n));
    for (auto f : u.closure) {
      if (f.conn() == PConn::PosAtom) f = pol_negate(f);
      if (f.positive()) continue;
      for (const auto& t : tau(PolFormula::down(f))) CHECK(u.contains(t));
    }
  }
}

TEST_CASE("invp") {
  auto one = [](const char* s) {
    std::vector<std::string> out;
    for (const auto& x : invp(PF(s))) out.push_back(print_fstructure(x));
    return out;
  };
  CHECK(one("p") == std::vector<std::string>{"p"});
  CHECK(one("_(q \\ ^r)") == std::vector<std::string>{"q \\ ^r"});
  CHECK(one("(p | _~s) * q") == std::vector<std::string>{"(p . q)", "(~s . q)"});
  CHECK(one("(p | q) * (r | s)") == std::vector<std::string>{"(p . r)", "(p . s)", "(q . r)", "(q . s)"});
  // The negative operand of a coimplication decomposes through its negation.
  // (q̄ ∧ r̄)⊥ = r ∨ q, so r comes first.
  CHECK(one("p </ (~q & ~r)") == std::vector<std::string>{"(p </ r)", "(p </ q)"});
  CHECK(one("~q \\> p") == std::vector<std::string>{"(q \\> p)"});

  auto u = build_universe({PF("~p")});
  CHECK_THROWS_AS(invp(PF("_~q"), &u), UniverseError);
  CHECK_NOTHROW(invp(PF("_~p"), &u));
}

TEST_CASE("displacement agrees with the display class") {
  auto s = parse_structure("p . q");
  auto ctx = BasicContext<Formula>::along(s, {Dir::L});
  auto r = Structure::leaf(parse_formula("r"));
  CHECK(print_structure(displace(ctx, r)) == "(q \\> r)");
  CHECK(display_class(Presentation{s, r}).count(Presentation{Structure::leaf(parse_formula("p")), displace(ctx, r)}));
  CHECK(print_structure(displace(BasicContext<Formula>{}, r)) == "r");

  lgtest::Gen g(13);
  for (int i = 0; i < 200; ++i) {
    auto w = g.mixed(4, 3, false);
    auto cls = display_class(w);
    for (const auto& o : occurrences(w, false)) CHECK(cls.count(display(w, o)));
  }
}

TEST_CASE("atomic goals") {
  auto w = FW("p ; ~p");
  auto u = universe_for(w);
  auto r = focused_prove(w, u, LogicVariant::LG0);
  REQUIRE(r.verdict == Verdict::Provable);
  CHECK(r.proof->rule == "D");
  CHECK(r.proof->premises.front()->rule == "I");
  CHECK(count(*r.proof) == 2);
  CHECK(focused_enumerate(w, u, LogicVariant::LG0, 10).proofs.size() == 1);

  auto miss = FW("p ; ~q");
  CHECK(focused_prove(miss, universe_for(miss), LogicVariant::LG0).verdict == Verdict::Unprovable);
  CHECK_THROWS_AS(focused_prove(FW("p ; ~q"), u, LogicVariant::LG0), UniverseError);
}

TEST_CASE("worked examples") {
  auto g = focus_goals(W(kExample1), LogicVariant::LG0);
  CHECK(print_pol_presentation(g.decorated) == "((_(^p / q) . q) . _(p \\ ^r)) ; _~r");
  REQUIRE(g.goals.size() == 1);

  auto e1 = enumerate_example(kExample1);
  CHECK(e1.proofs.size() == 1);
  CHECK_FALSE(e1.truncated);
  auto e2 = enumerate_example(kExample2);
  CHECK(e2.proofs.size() == 2);
  CHECK_FALSE(e2.truncated);

  // The one proof of the first example focuses on ↑p/q first.
  const auto& d = *e1.proofs.front();
  REQUIRE(d.rule == "D");
  const auto& j = std::get<FocusJudgment>(d.premises.front()->conclusion);
  CHECK(print_fstructure(j.pattern) == "(q \\> ~p)");
  CHECK(print_fstructure(j.left) == "(q \\> ((p \\ ^r) \\> ~r))");

  for (const char* s : {kExample1, kExample2}) {
    auto r = prove_presentation(W(s), LogicVariant::LG0);
    CHECK(r.verdict == Verdict::Provable);
  }

  auto small = focused_enumerate(focus_goals(W(kExample2), LogicVariant::LG0).goals.front(),
                                 focus_goals(W(kExample2), LogicVariant::LG0).universe, LogicVariant::LG0, 1);
  CHECK(small.proofs.size() == 1);
  CHECK(small.truncated);
}

TEST_CASE("enumeration is checked, duplicate free and stable") {
  lgtest::Gen g(14);
  int with_proofs = 0;
  for (int i = 0; i < 150; ++i) {
    auto w = g.mixed(4, 2, false);
    for (auto v : kVariants) {
      auto fg = focus_goals(w, v);
      for (const auto& goal : fg.goals) {
        auto a = focused_enumerate(goal, fg.universe, v, 50);
        auto b = focused_enumerate(goal, fg.universe, v, 50);
        REQUIRE(a.proofs.size() == b.proofs.size());
        std::set<std::string> seen;
        for (std::size_t k = 0; k < a.proofs.size(); ++k) {
          auto r = check_focused(*a.proofs[k], fg.universe, v);
          CHECK_MESSAGE(r.ok, r.diagnostic);
          CHECK(show(*a.proofs[k]) == show(*b.proofs[k]));
          seen.insert(show(*a.proofs[k]));
        }
        CHECK(seen.size() == a.proofs.size());
        with_proofs += !a.proofs.empty();
        CHECK(a.proofs.empty() == !focused_provable(goal, fg.universe, v));
      }
    }
  }
  CHECK(with_proofs > 50);
}

TEST_CASE("checker rejects broken proofs") {
  auto fg = focus_goals(W(kExample1), LogicVariant::LG0);
  auto p = focused_prove(fg.goals.front(), fg.universe, LogicVariant::LG0).proof;
  REQUIRE(p);
  CHECK(check_focused(*p, fg.universe, LogicVariant::LG0));

  auto bad_index = std::make_shared<FProofNode>(*p);
  bad_index->invp_index = 3;
  CHECK_FALSE(check_focused(*bad_index, fg.universe, LogicVariant::LG0));

  auto bad_focus = std::make_shared<FProofNode>(*p);
  bad_focus->focus = Occurrence{Side::Left, {Dir::L, Dir::R}};  // the atom q
  CHECK_FALSE(check_focused(*bad_focus, fg.universe, LogicVariant::LG0));

  auto pruned = std::make_shared<FProofNode>(*p);
  pruned->premises.clear();
  auto r = check_focused(*pruned, fg.universe, LogicVariant::LG0);
  CHECK_FALSE(r);
  CHECK(r.diagnostic.rfind("node root:", 0) == 0);

  // I on different atoms.
  auto i = std::make_shared<FProofNode>(FProofNode{"I", FocusJudgment{FS("p"), FS("q")}, {}, 0, {}});
  CHECK_FALSE(check_focused(*i, build_universe({PF("^p"), PF("^q")}), LogicVariant::LG0));
}

TEST_CASE("linear distributivity rewrites are sound for lgi") {
  // Each rewrite A ↦ B read as a rule with premise B and conclusion A: the
  // unfocused calculus under lgi derives ⟨A;(B+)⊥⟩ from the axiom ⟨B;(B+)⊥⟩.
  auto s1 = FS("(p . q) </ r");
  auto s2 = FS("p \\> (q . r)");
  std::set<std::string> rules;
  for (const auto& s : {s1, s2}) {
    auto rs = grishin_rewrites(s);
    CHECK(rs.size() == 4);
    for (const auto& r : rs) {
      rules.insert(r.rule);
      Structure a = forget_structure(s), b = forget_structure(r.result);
      Presentation w{a, Structure::leaf(negate(interp_plus(b)))};
      CHECK_MESSAGE(prove(w, LogicVariant::LGI).verdict == Verdict::Provable, r.rule);
      CHECK_MESSAGE(prove(w, LogicVariant::LG0).verdict == Verdict::Unprovable, r.rule);
    }
  }
  CHECK(rules.size() == 8);

  // Rewrites reach below the root.
  auto deep = grishin_rewrites(FS("s . ((p . q) </ r)"));
  REQUIRE(deep.size() == 4);
  CHECK(print_fstructure(deep.front().result) == "(s . (p . (q </ r)))");
  CHECK(grishin_rewrites(FS("(p . q) . r")).empty());
}

TEST_CASE("displacement law and display closure") {
  lgtest::Gen g(15);
  int provable = 0;
  for (const auto& [goal, u] : samples(16, 150, 4)) {
    bool base = focused_provable(goal, u, LogicVariant::LG0);
    provable += base;
    for (const auto& o : occurrences(goal, false)) {
      if (o.path.empty()) continue;
      CHECK(focused_provable(display(goal, o), u, LogicVariant::LG0) == base);
    }
    if (!base) continue;
    CHECK(focused_provable(goal.swapped(), u, LogicVariant::LG0));
    if (goal.left.op() == SOp::Times)
      CHECK(focused_provable({goal.left.left(), FStructure::obslash(goal.left.right(), goal.right)}, u,
                             LogicVariant::LG0));
    if (goal.right.op() == SOp::Times)
      CHECK(focused_provable({FStructure::oslash(goal.left, goal.right.left()), goal.right.right()}, u,
                             LogicVariant::LG0));
  }
  CHECK(provable > 30);

  // Item (b) on the first worked example: ⟨⟨Π⊗Σ⟩;Υ⟩ ⇒ ⟨Π;⟨Σ⃠Υ⟩⟩.
  auto fg = focus_goals(W(kExample1), LogicVariant::LG0);
  const auto& w = fg.goals.front();
  REQUIRE(w.left.op() == SOp::Times);
  CHECK(focused_provable({w.left.left(), FStructure::obslash(w.left.right(), w.right)}, fg.universe,
                         LogicVariant::LG0));
}

TEST_CASE("grishin closure under lgi") {
  // Premise-shaped members of provable display classes give provable
  // premises; the matching conclusion must then be provable under lgi.
  int instances = 0;
  for (const auto& [goal, u] : samples(20, 200, 5)) {
    if (!focused_provable(goal, u, LogicVariant::LG0)) continue;
    for (const auto& m : display_members(goal)) {
      const auto &a = m.left, &b = m.right;
      if (a.is_leaf() || b.is_leaf()) continue;
      std::optional<FPresentation> concl;
      std::size_t k = 0;
      auto build = [&](FStructure g1, FStructure g2, FStructure d2, FStructure d1) {
        return FPresentation{FStructure::times(g1, g2), FStructure::times(d2, d1)};
      };
      if (a.op() == SOp::Oslash && b.op() == SOp::Oslash)
        concl = build(b.right(), a.left(), a.right(), b.left());
      else if (a.op() == SOp::Obslash && b.op() == SOp::Obslash)
        concl = build(a.right(), b.left(), b.right(), a.left()), k = 1;
      else if (a.op() == SOp::Oslash && b.op() == SOp::Obslash)
        concl = build(a.right(), b.right(), a.left(), b.left()), k = 2;
      if (!concl) continue;
      REQUIRE(linear_distributivity_premises(*concl)[k] == m);
      ++instances;
      CHECK_MESSAGE(focused_provable(*concl, u, LogicVariant::LGI), print_fjudgment(m));
    }
  }
  CHECK(instances > 20);
}

TEST_CASE("agreement with the unfocused prover") {
  lgtest::Gen g(18);
  std::vector<Presentation> corpus{W(kExample1), W(kExample2)};
  for (const char* s : {"p * (q + r) => (p * q) + r", "(p + q) * r => p + (q * r)", "p * (q + r) => q + (p * r)",
                        "(p + q) * r => (p * r) + q", "(q \\ p) ; (~p * q)", "(q + ~p) ; {p </ q}",
                        "(p / q) ; (q * ~p)", "(~p + q) ; {q \\> p}"})
    corpus.push_back(W(s));
  for (int i = 0; i < 1000; ++i) corpus.push_back(g.mixed(6, 2, false));
  for (int i = 0; i < 100; ++i) {
    Formula a = g.formula(3, 3);
    corpus.push_back({Structure::leaf(a), Structure::leaf(negate(a))});
  }
  for (auto v : kVariants) {
    int agree = 0;
    for (const auto& w : corpus) {
      auto u = prove(w, v);
      auto f = prove_presentation(w, v);
      REQUIRE(u.verdict != Verdict::Indeterminate);
      CHECK_MESSAGE(f.verdict == u.verdict, variant_name(v), ": ", print_presentation(w));
      agree += f.verdict == u.verdict;
      if (f.verdict == Verdict::Provable)
        for (const auto& p : f.proofs) CHECK(check_focused(*p, f.goals.universe, v));
    }
    CHECK(agree == static_cast<int>(corpus.size()));
  }
  CHECK(prove_presentation(W("p ; q"), LogicVariant::LG0).verdict == Verdict::Unprovable);
}

TEST_CASE("cnl compact") {
  lgtest::Gen g(19);
  for (int i = 0; i < 200; ++i) {
    auto w = g.mixed(5, 2, true);
    CHECK(prove_presentation(w, LogicVariant::CNLCompact).verdict == prove(w, LogicVariant::CNLCompact).verdict);
  }
  CHECK_THROWS_AS(prove_presentation(W("(q + ~p) ; {p </ q}"), LogicVariant::CNLCompact), std::invalid_argument);
}

TEST_CASE("limits") {
  auto r = prove_presentation(W(kExample2), LogicVariant::LG0, SearchLimits{2});
  CHECK(r.verdict == Verdict::Indeterminate);
  CHECK_THROWS_AS(focused_enumerate(FW("p ; ~p"), universe_for(FW("p ; ~p")), LogicVariant::LG0, 0),
                  std::invalid_argument);
}

TEST_CASE("parsing focused structures") {
  CHECK(FS("_(q \\ ^r)") == FS("q \\ ^r"));
  CHECK_THROWS_AS(FS("p * q"), UniverseError);
  CHECK(print_fjudgment(FocusJudgment{FS("p"), FS("p")}) == "p |-f p");
}
