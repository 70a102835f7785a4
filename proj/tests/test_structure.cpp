#include <map>

#include "doctest.h"
#include "gen.hpp"
#include "lgfocus/structure.hpp"

using namespace lgfocus;

namespace {

Structure L(const char* n) { return Structure::leaf(Formula::pos(n)); }
Presentation W(const char* s) { return parse_presentation(s); }

// Replace every leaf by a fresh positive atom so that structural equality
// tracks occurrences rather than formula values.
Structure relabel(const Structure& s, int& next) {
  if (s.is_leaf()) return Structure::leaf(Formula::pos("x" + std::to_string(next++)));
  auto l = relabel(s.left(), next);
  auto r = relabel(s.right(), next);
  return Structure::make(s.op(), l, r);
}

std::multiset<std::string> leaf_multiset(const Presentation& w) {
  std::vector<Formula> ls;
  leaves_of(w.left, ls);
  leaves_of(w.right, ls);
  std::multiset<std::string> out;
  for (auto& f : ls) out.insert(print_formula(f));
  return out;
}

Presentation random_presentation(lgtest::Gen& g, int max_leaves) {
  int n = g.uniform(2, max_leaves);
  std::vector<Formula> leaves;
  for (int i = 0; i < n; ++i) leaves.push_back(g.formula(2, 3));
  int cut = g.uniform(1, n - 1);
  return {g.shape(leaves, 0, cut), g.shape(leaves, cut, n)};
}

}  // namespace

TEST_CASE("interpretations") {
  auto pq = Structure::times(L("p"), L("q"));
  CHECK(interp_plus(L("p")) == Formula::pos("p"));
  CHECK(interp_minus(L("p")) == Formula::neg("p"));
  CHECK(interp_plus(pq) == parse_formula("p * q"));
  CHECK(interp_minus(pq) == parse_formula("~q + ~p"));
  // ⟨Γ⊘Δ⟩− = Δ+\Γ−
  CHECK(interp_minus(Structure::oslash(L("a"), L("b"))) == parse_formula("b \\ ~a"));
  CHECK(interp_plus(Structure::obslash(L("d"), L("g"))) == parse_formula("~d \\> g"));
  CHECK(interp_minus(Structure::obslash(L("d"), L("g"))) == parse_formula("~g / d"));

  lgtest::Gen g(7);
  for (int i = 0; i < 300; ++i) {
    auto w = random_presentation(g, 6);
    CHECK(interp_plus(w.left) == negate(interp_minus(w.left)));
    CHECK(interp_minus(w.left) == negate(interp_plus(w.left)));
  }
}

TEST_CASE("display class of <<p.q>;r>") {
  auto cls = display_class(W("(p . q) ; r"));
  std::set<Presentation> expected{W("(p . q) ; r"),   W("r ; (p . q)"),   W("p ; (q \\> r)"),
                                  W("(q \\> r) ; p"), W("(r </ p) ; q"), W("q ; (r </ p)")};
  CHECK(cls == expected);
  CHECK(display_class(W("p ; q")) == std::set<Presentation>{W("p ; q"), W("q ; p")});
}

TEST_CASE("display examples") {
  auto w = W("(p . q) ; r");
  CHECK(display(w, Occurrence{Side::Left, {Dir::L}}) == W("(q \\> r) ; p"));
  CHECK(display(w, Occurrence{Side::Left, {Dir::R}}) == W("(r </ p) ; q"));
  CHECK(display(w, Occurrence{Side::Right, {}}) == w);
  CHECK_THROWS(display(w, Occurrence{Side::Right, {Dir::L}}));

  // hole at p in ⟨p⊗q⟩, opposite r: displacement gives ⟨q⃠r⟩
  auto ctx = BasicContext<Formula>::along(Structure::times(L("p"), L("q")), {Dir::L});
  CHECK(displace(ctx, L("r")) == parse_structure("q \\> r"));
  CHECK(display_class(w).count(Presentation{L("p"), parse_structure("q \\> r")}) == 1);
}

TEST_CASE("display classes on random presentations") {
  lgtest::Gen g(11);
  for (int i = 0; i < 150; ++i) {
    auto w = random_presentation(g, 6);
    auto cls = display_class(w);
    // Every class is one oriented member per edge of the underlying tree.
    CHECK(cls.size() == 2 * (w.node_count() - 1));

    auto members = display_members(w);
    CHECK(std::set<Presentation>(members.begin(), members.end()) == cls);

    auto leaves = leaf_multiset(w);
    auto canon = canonical_member(w);
    CHECK(canon == *cls.begin());
    for (const auto& m : cls) {
      CHECK(leaf_multiset(m) == leaves);
      CHECK(canonical_member(m) == canon);
    }
    // membership is an equivalence
    const auto& other = *std::next(cls.begin(), g.uniform(0, static_cast<int>(cls.size()) - 1));
    CHECK(display_class(other) == cls);
  }
}

TEST_CASE("display is unique per occurrence") {
  lgtest::Gen g(12);
  for (int i = 0; i < 100; ++i) {
    auto w0 = random_presentation(g, 6);
    int next = 0;
    Presentation w{relabel(w0.left, next), relabel(w0.right, next)};
    auto cls = display_class(w);
    for (const auto& o : occurrences(w, false)) {
      auto d = display(w, o);
      CHECK(cls.count(d) == 1);
      auto sub = *subterm(w, o);
      int hits = 0;
      for (const auto& m : cls) hits += m.right == sub;
      CHECK(hits == 1);
    }
  }
}

TEST_CASE("presentation syntax") {
  auto w = W("((p/q * q) * (p \\ r)) ; ~r");
  CHECK(w.left.is_leaf());
  CHECK(w.left.formula() == parse_formula("((p / q) * q) * (p \\ r)"));
  CHECK(W("p => q") == Presentation{L("p"), Structure::leaf(Formula::neg("q"))});
  CHECK(W("(a </ b) ; c").left.op() == SOp::Oslash);
  CHECK(W("{a </ b} ; c").left.formula() == parse_formula("a </ b"));
  CHECK(W("((a </ b) * c) ; d").left.formula().conn() == Conn::Tensor);
  CHECK_THROWS(W("p"));
  CHECK_THROWS(W("(p ; q) ; r"));
  CHECK_THROWS(W("(p . q) => r"));

  lgtest::Gen g(3);
  for (int i = 0; i < 300; ++i) {
    auto v = random_presentation(g, 6);
    CHECK(parse_presentation(print_presentation(v)) == v);
  }
}
