// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "gen.hpp"
#include "lgfocus/focused.hpp"
#include "lgfocus/phase.hpp"
#include "lgfocus/syntax.hpp"

using namespace lgfocus;

namespace {

// Pinned sizes and tolerances.
constexpr int kFormulas = 500;            // criteria 1, 2
constexpr int kFormulaDepth = 6;
constexpr int kAtoms = 4;
constexpr int kPolFormulas = 200;         // criterion 3
constexpr double kEnumerateSeconds = 5;   // criterion 5, per example
constexpr int kPresentations = 200;       // criterion 8, per variant
constexpr std::size_t kMaxConnectives = 10;
constexpr std::size_t kModels = 50;       // criterion 9, per variant
constexpr int kModelSize = 3;
constexpr int kCountermodelSize = 2;      // criterion 10, for <p;q>
constexpr int kGoldenSearchSize = 3;      // criterion 10, for provable golden sequents
constexpr int kClosureInstances = 100;    // criterion 11, per implication

constexpr const char* kExample1 = "(((p / q) . q) . (p \\ r)) ; ~r";
constexpr const char* kExample2 = "((p / (q \\ p)) . ((p / (q \\ p)) \\ p)) ; ~p";
constexpr const char* kCnlLemma[] = {"(q \\ p) ; (~p * q)", "(q + ~p) ; {p </ q}", "(p / q) ; (q * ~p)",
                                     "(~p + q) ; {q \\> p}"};
constexpr const char* kGrishin[] = {"p * (q + r) => (p * q) + r", "(p + q) * r => p + (q * r)",
                                    "p * (q + r) => q + (p * r)", "(p + q) * r => (p * r) + q"};
constexpr LogicVariant kAll[] = {LogicVariant::LG0, LogicVariant::LGI, LogicVariant::CNL, LogicVariant::CNLCompact};

Presentation W(const char* s) { return parse_presentation(s); }

// Every presentation found provable during the run; criterion 10 searches
// each of them for a countermodel.
std::vector<std::pair<Presentation, LogicVariant>> g_provable;
std::size_t g_golden = 0;  // leading entries of g_provable from fixed sequents

bool provable(const Presentation& w, LogicVariant v) {
  bool p = prove_presentation(w, v).verdict == Verdict::Provable;
  if (p) g_provable.emplace_back(w, v);
  return p;
}

struct Outcome {
  bool ok = true;
  std::ostringstream detail;
  void require(bool c, const std::string& what) {
    if (!c && ok) detail << "first failure: " << what << "; ";
    ok = ok && c;
  }
};

int run(int id, const char* title, const std::function<void(Outcome&)>& body) {
  Outcome o;
  try {
    body(o);
  } catch (const std::exception& e) {
    o.ok = false;
    o.detail << "exception: " << e.what();
  }
  std::cout << (o.ok ? "PASS" : "FAIL") << "  " << id << ". " << title << ": " << o.detail.str() << "\n";
  std::cout.flush();
  return o.ok ? 0 : 1;
}

std::set<PolFormula> atoms_identified(const std::set<PolFormula>& s) {
  std::set<PolFormula> out;
  for (const auto& f : s) out.insert(f.conn() == PConn::NegAtom ? pol_negate(f) : f);
  return out;
}

// The presentation corpus of criterion 8, shared with criterion 9.
std::vector<Presentation> corpus(LogicVariant v) {
  lgtest::Gen g(800 + static_cast<int>(v));
  bool compact = v == LogicVariant::CNLCompact;
  std::vector<Presentation> out;
  while (static_cast<int>(out.size()) < kPresentations) {
    auto w = g.mixed(g.uniform(1, 6), 3, compact);
    if (lgtest::connectives(w) <= kMaxConnectives) out.push_back(w);
  }
  return out;
}

void atom_names(const Formula& f, std::set<std::string>& out) {
  if (f.is_atom()) {
    out.insert(f.name());
    return;
  }
  atom_names(f.left(), out);
  atom_names(f.right(), out);
}

Model random_model(const PhaseSpace& s, const std::set<std::string>& atoms, std::mt19937_64& rng) {
  auto fs = facts(s);
  std::uniform_int_distribution<std::size_t> pick(0, fs.size() - 1);
  Model m{s, {}};
  for (const auto& a : atoms) m.valuation[a] = fs[pick(rng)];
  return m;
}

}  // namespace

int main() {
  int failed = 0;

  failed += run(1, "involution and polarity", [](Outcome& o) {
    lgtest::Gen g(1);
    for (int i = 0; i < kFormulas; ++i) {
      auto a = g.formula(kFormulaDepth, kAtoms);
      auto s = print_formula(a);
      o.require(negate(negate(a)) == a, "negate twice: " + s);
      o.require(polarity(negate(a)) != polarity(a), "polarity flip: " + s);
      o.require(parse_formula(s) == a, "round trip: " + s);
    }
    o.detail << kFormulas << " formulas, depth <= " << kFormulaDepth << ", " << kAtoms << " atoms";
  });

  failed += run(2, "decoration laws", [](Outcome& o) {
    lgtest::Gen g(2);
    for (int i = 0; i < kFormulas; ++i) {
      auto a = g.formula(kFormulaDepth, kAtoms);
      auto s = print_formula(a);
      o.require(decorate(negate(a)) == pol_negate(decorate(a)), "commutes with negation: " + s);
      o.require(shift_free_adjacency(decorate(a)), "shift adjacency: " + s);
      o.require(forget(decorate(a)) == a, "forget after decorate: " + s);
    }
    o.detail << kFormulas << " formulas";
  });

  failed += run(3, "sigma/tau duality", [](Outcome& o) {
    // Literal set equality fails at atoms: σ(p̄) = {p̄}, τ(p) = {p}. The
    // duality is checked with each negative atom identified with its dual.
    auto pf = [](const char* s) { return parse_pol_formula(s); };
    o.require(sigma(pf("~p")) != tau(pf("p")), "literal atom counterexample");
    lgtest::Gen g(3);
    for (int i = 0; i < kPolFormulas; ++i) {
      auto n = g.pol(4, 3, Polarity::Negative);
      auto s = print_pol_formula(n);
      o.require(atoms_identified(sigma(n)) == atoms_identified(tau(pol_negate(n))), "duality: " + s);
      auto p = g.pol(4, 3, Polarity::Positive);
      o.require(atoms_identified(tau(p)) == atoms_identified(sigma(pol_negate(p))), "duality: " + print_pol_formula(p));
      auto u = build_universe({n});
      o.require(u.contains(n), "X in X^tau: " + s);
      for (auto f : u.closure) {
        if (f.conn() == PConn::PosAtom) f = pol_negate(f);
        if (f.positive()) continue;
        for (const auto& t : tau(PolFormula::down(f))) o.require(u.contains(t), "closure: " + s);
      }
    }
    o.detail << kPolFormulas << " formulas of each polarity, atoms identified up to polarity"
             << " (literal equality fails at atoms)";
  });

  failed += run(4, "golden proofs", [](Outcome& o) {
    for (const char* s : {kExample1, kExample2}) {
      auto w = W(s);
      auto u = prove(w, LogicVariant::LG0);
      o.require(u.verdict == Verdict::Provable && u.proof && check(*u.proof, LogicVariant::LG0), "unfocused: " + std::string(s));
      auto f = prove_presentation(w, LogicVariant::LG0);
      o.require(provable(w, LogicVariant::LG0), "focused: " + std::string(s));
      for (const auto& p : f.proofs) o.require(bool(check_focused(*p, f.goals.universe, LogicVariant::LG0)), "checked");
    }
    o.detail << "both examples provable under lg0 by both engines";
  });

  failed += run(5, "golden focused counts", [](Outcome& o) {
    std::size_t expected[] = {1, 2};
    const char* ex[] = {kExample1, kExample2};
    for (int i = 0; i < 2; ++i) {
      auto t0 = std::chrono::steady_clock::now();
      auto g = focus_goals(W(ex[i]), LogicVariant::LG0);
      o.require(g.goals.size() == 1, "one goal");
      auto e = focused_enumerate(g.goals.front(), g.universe, LogicVariant::LG0, 1000);
      double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      o.require(e.proofs.size() == expected[i] && !e.truncated, "count for example " + std::to_string(i + 1));
      o.require(secs < kEnumerateSeconds, "runtime");
      o.detail << "example " << i + 1 << ": " << e.proofs.size() << " (want " << expected[i] << ")"
               << (secs < kEnumerateSeconds ? " under " : " over ") << kEnumerateSeconds << " s; ";
    }
  });

  failed += run(6, "CNL lemma", [](Outcome& o) {
    for (const char* s : kCnlLemma) {
      auto w = W(s);
      o.require(provable(w, LogicVariant::CNL), std::string("cnl: ") + s);
      o.require(provable(to_compact(w), LogicVariant::CNLCompact), std::string("cnl-compact: ") + s);
    }
    o.require(!provable(W(kCnlLemma[0]), LogicVariant::LG0), "first unprovable under lg0");
    o.detail << "4 sequents provable under cnl and cnl-compact (rewritten to compact vocabulary); first unprovable under lg0";
  });

  failed += run(7, "Grishin differential", [](Outcome& o) {
    for (const char* s : kGrishin) {
      o.require(provable(W(s), LogicVariant::LGI), std::string("lgi: ") + s);
      o.require(!provable(W(s), LogicVariant::LG0), std::string("lg0: ") + s);
    }
    o.detail << "4 inequalities provable under lgi, unprovable under lg0";
  });

  g_golden = g_provable.size();
  failed += run(8, "engine equivalence", [](Outcome& o) {
    for (auto v : kAll) {
      int agree = 0, prov = 0;
      for (const auto& w : corpus(v)) {
        auto u = prove(w, v).verdict;
        bool f = provable(w, v);
        bool same = u != Verdict::Indeterminate && (u == Verdict::Provable) == f;
        o.require(same, std::string(variant_name(v)) + ": " + print_presentation(w));
        agree += same;
        prov += f;
      }
      o.detail << variant_name(v) << " " << agree << "/" << kPresentations << " agree (" << prov << " provable); ";
    }
  });

  failed += run(9, "phase soundness", [](Outcome& o) {
    std::mt19937_64 rng(9);
    std::size_t checks = 0;
    for (auto v : kAll) {
      auto spaces = sample_spaces(kModelSize, v, kModels, 90 + static_cast<std::uint64_t>(v));
      o.require(spaces.size() == kModels, "sampled spaces");
      for (const auto& [w, wv] : g_provable) {
        if (wv != v) continue;
        auto d = decorate(w);
        std::set<std::string> atoms;
        for (const auto& side : {w.left, w.right}) {
          std::vector<Formula> leaves;
          leaves_of(side, leaves);
          for (const auto& f : leaves) atom_names(f, atoms);
        }
        for (const auto& s : spaces) {
          auto m = random_model(s, atoms, rng);
          auto inc = four_inclusions(m, d);
          o.require(inc[0] && inc[1] && inc[2] && inc[3], std::string(variant_name(v)) + ": " + print_presentation(w));
          ++checks;
        }
      }
    }
    o.detail << checks << " checks over " << kModels << " models per variant, n <= " << kModelSize;
  });

  failed += run(10, "countermodel certification", [](Outcome& o) {
    auto r = countermodel_search(W("p ; q"), LogicVariant::LG0, {kCountermodelSize, 1});
    o.require(r.model && !soundness_check(*r.model, decorate(W("p ; q"))), "<p;q> countermodel");
    for (std::size_t i = 0; i < g_provable.size(); ++i) {
      const auto& [w, v] = g_provable[i];
      int n = i < g_golden ? kGoldenSearchSize : kCountermodelSize;
      o.require(!countermodel_search(w, v, {n, 1}).model,
                std::string("countermodel for provable ") + variant_name(v) + ": " + print_presentation(w));
    }
    o.detail << "<p;q> refuted at n = " << (r.model ? r.model->space.n : 0) << "; none for " << g_provable.size()
             << " provable presentations (" << g_golden << " golden at n <= " << kGoldenSearchSize << ", the rest at n <= "
             << kCountermodelSize << ")";
  });

  failed += run(11, "closure lemmas", [](Outcome& o) {
    // Hypotheses come from provable goals and their display members, so each
    // instance is non-vacuous.
    lgtest::Gen g(11);
    int display[3] = {0, 0, 0}, grishin[3] = {0, 0, 0};
    auto done = [&] {
      for (int i = 0; i < 3; ++i)
        if (display[i] < kClosureInstances || grishin[i] < kClosureInstances) return false;
      return true;
    };
    for (int round = 0; round < 20000 && !done(); ++round) {
      auto fg = focus_goals(g.mixed(g.uniform(2, 6), 3, false), LogicVariant::LG0);
      for (const auto& goal : fg.goals) {
        if (!focused_provable(goal, fg.universe, LogicVariant::LG0)) continue;
        for (const auto& m : display_members(goal)) {
          const auto &a = m.left, &b = m.right;
          auto holds = [&](const FPresentation& c, LogicVariant v) { return focused_provable(c, fg.universe, v); };
          if (display[0] < kClosureInstances) {
            o.require(holds(m.swapped(), LogicVariant::LG0), "(a) " + print_fjudgment(m));
            ++display[0];
          }
          if (a.op() == SOp::Times && display[1] < kClosureInstances) {
            o.require(holds({a.left(), FStructure::obslash(a.right(), b)}, LogicVariant::LG0), "(b) " + print_fjudgment(m));
            ++display[1];
          }
          if (b.op() == SOp::Times && display[2] < kClosureInstances) {
            o.require(holds({FStructure::oslash(a, b.left()), b.right()}, LogicVariant::LG0), "(c) " + print_fjudgment(m));
            ++display[2];
          }
          if (a.is_leaf() || b.is_leaf()) continue;
          auto build = [](FStructure g1, FStructure g2, FStructure d2, FStructure d1) {
            return FPresentation{FStructure::times(g1, g2), FStructure::times(d2, d1)};
          };
          std::optional<FPresentation> concl;
          int k = 0;
          if (a.op() == SOp::Oslash && b.op() == SOp::Oslash) concl = build(b.right(), a.left(), a.right(), b.left());
          else if (a.op() == SOp::Obslash && b.op() == SOp::Obslash)
            concl = build(a.right(), b.left(), b.right(), a.left()), k = 1;
          else if (a.op() == SOp::Oslash && b.op() == SOp::Obslash)
            concl = build(a.right(), b.right(), a.left(), b.left()), k = 2;
          if (!concl || grishin[k] >= kClosureInstances) continue;
          o.require(linear_distributivity_premises(*concl)[static_cast<std::size_t>(k)] == m, "premise shape");
          o.require(holds(*concl, LogicVariant::LGI), "grishin " + std::to_string(k) + ": " + print_fjudgment(m));
          ++grishin[k];
        }
      }
    }
    o.require(done(), "instance quota");
    o.detail << "display (a) " << display[0] << ", (b) " << display[1] << ", (c) " << display[2]
             << "; lgi Grishin (a) " << grishin[0] << ", (b) " << grishin[1] << ", (c) " << grishin[2];
  });

  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
  return failed == 0 ? 0 : 1;
}
