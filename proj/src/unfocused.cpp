#include "lgfocus/unfocused.hpp"

#include <deque>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace lgfocus {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Provable: return "PROVABLE";
    case Verdict::Unprovable: return "UNPROVABLE";
    case Verdict::Indeterminate: return "INDETERMINATE";
  }
  return "?";
}

// ---- vocabulary ----

bool compact_vocabulary(const Formula& f) {
  switch (f.conn()) {
    case Conn::PosAtom:
    case Conn::NegAtom: return true;
    case Conn::Tensor:
    case Conn::Par:
    case Conn::And:
    case Conn::Or: return compact_vocabulary(f.left()) && compact_vocabulary(f.right());
    default: return false;
  }
}

namespace {

bool compact_structure(const Structure& s) {
  if (s.is_leaf()) return compact_vocabulary(s.formula());
  return s.op() == SOp::Times && compact_structure(s.left()) && compact_structure(s.right());
}

Structure compact_structure_map(const Structure& s) {
  if (s.is_leaf()) return Structure::leaf(to_compact(s.formula()));
  return Structure::times(compact_structure_map(s.left()), compact_structure_map(s.right()));
}

}  // namespace

bool compact_vocabulary(const Presentation& w) { return compact_structure(w.left) && compact_structure(w.right); }

Formula to_compact(const Formula& f) {
  if (f.is_atom()) return f;
  Formula a = to_compact(f.left());
  Formula b = to_compact(f.right());
  switch (f.conn()) {
    case Conn::RDiv: return Formula::par(a, negate(b));    // A/B = A⊕B⊥
    case Conn::LDiv: return Formula::par(negate(a), b);    // B\A = B⊥⊕A
    case Conn::CoRDiv: return Formula::tensor(a, negate(b));  // A⊘B = A⊗B⊥
    case Conn::CoLDiv: return Formula::tensor(negate(a), b);  // B⃠A = B⊥⊗A
    default: return Formula::make(f.conn(), a, b);
  }
}

Presentation to_compact(const Presentation& w) {
  return {compact_structure_map(w.left), compact_structure_map(w.right)};
}

// ---- classes and keys ----

namespace {

// The compact calculus has its own display rules: swap and
// ⟨Γ;⟨Δ⊗Θ⟩⟩ ⇔ ⟨⟨Γ⊗Δ⟩;Θ⟩.
std::vector<Presentation> compact_class(const Presentation& w) {
  std::set<Presentation> seen{w};
  std::deque<Presentation> todo{w};
  std::vector<Presentation> out;
  while (!todo.empty()) {
    Presentation cur = todo.front();
    todo.pop_front();
    out.push_back(cur);
    std::vector<Presentation> next{cur.swapped()};
    if (cur.right.op() == SOp::Times)
      next.push_back({Structure::times(cur.left, cur.right.left()), cur.right.right()});
    if (cur.left.op() == SOp::Times)
      next.push_back({cur.left.left(), Structure::times(cur.left.right(), cur.right)});
    for (auto& n : next)
      if (seen.insert(n).second) todo.push_back(std::move(n));
  }
  return out;
}

Presentation canonical(const Presentation& w, LogicVariant v) {
  switch (v) {
    case LogicVariant::LG0:
    case LogicVariant::LGI: return canonical_member(w);
    case LogicVariant::CNL: {
      auto ms = display_members(collapse_to_times(w));
      Presentation best = collapse_to_times(ms.front());
      for (const auto& m : ms) best = std::min(best, collapse_to_times(m));
      return best;
    }
    case LogicVariant::CNLCompact: {
      auto ms = compact_class(w);
      return *std::min_element(ms.begin(), ms.end());
    }
  }
  return w;
}

}  // namespace

std::string class_key(const Presentation& w, LogicVariant v) { return print_presentation(canonical(w, v)); }

// ---- search ----

namespace {

struct LimitReached {};

struct Displayed {
  Presentation m;  // ⟨Γ ; A⟩ with A a leaf
  Presentation conclusion;
  std::optional<Occurrence> main;
};

struct Candidate {
  std::string rule;
  std::vector<Presentation> premises;
};

Structure F(const Formula& f) { return Structure::leaf(f); }

// Logical rule instances for a displayed ⟨Γ;A⟩, Ax first. Under CNL, Γ has
// been collapsed, so ⟨⊗⟩ stands in for all three structural connectives.
std::vector<Candidate> rule_instances(const Presentation& m, LogicVariant v) {
  std::vector<Candidate> out;
  const Formula& a = m.right.formula();
  const Structure& g = m.left;
  const bool cnl = is_cnl(v);
  if (g.is_leaf() && g.formula() == negate(a)) out.push_back({"Ax", {}});
  if (a.is_atom()) return out;
  const Formula& x = a.left();
  const Formula& y = a.right();
  auto shaped = [&](SOp op) { return !g.is_leaf() && (g.op() == op || (cnl && g.op() == SOp::Times)); };
  switch (a.conn()) {
    case Conn::Tensor: out.push_back({"*", {{g, Structure::times(F(x), F(y))}}}); break;
    case Conn::CoLDiv:  // ⟨Γ;B⃠A⟩ ← ⟨Γ;⟨B⊥⃠A⟩⟩
      out.push_back({"\\>", {{g, Structure::obslash(F(negate(x)), F(y))}}});
      break;
    case Conn::CoRDiv:  // ⟨Γ;A⊘B⟩ ← ⟨Γ;⟨A⊘B⊥⟩⟩
      out.push_back({"</", {{g, Structure::oslash(F(x), F(negate(y)))}}});
      break;
    case Conn::Or: out.push_back({"|", {{g, F(x)}, {g, F(y)}}}); break;
    case Conn::Par:  // ⟨⟨Δ⊗Γ⟩;A⊕B⟩ ← ⟨Γ;A⟩, ⟨Δ;B⟩
      if (shaped(SOp::Times)) out.push_back({"+", {{g.right(), F(x)}, {g.left(), F(y)}}});
      break;
    case Conn::RDiv:  // ⟨⟨Δ⃠Γ⟩;A/B⟩ ← ⟨Δ;B⊥⟩, ⟨Γ;A⟩
      if (shaped(SOp::Obslash)) out.push_back({"/", {{g.left(), F(negate(y))}, {g.right(), F(x)}}});
      break;
    case Conn::LDiv:  // ⟨⟨Γ⊘Δ⟩;B\A⟩ ← ⟨Δ;B⊥⟩, ⟨Γ;A⟩
      if (shaped(SOp::Oslash)) out.push_back({"\\", {{g.right(), F(negate(x))}, {g.left(), F(y)}}});
      break;
    case Conn::And:
      out.push_back({"&l", {{g, F(x)}}});
      out.push_back({"&r", {{g, F(y)}}});
      break;
    default: break;
  }
  return out;
}

bool compact_rule(const std::string& r) {
  return r == "Ax" || r == "*" || r == "+" || r == "&l" || r == "&r" || r == "|";
}

std::vector<Candidate> grishin_premises(const Presentation& m) {
  std::vector<Candidate> out;
  auto ps = linear_distributivity_premises(m);
  for (std::size_t i = 0; i < ps.size(); ++i) out.push_back({"Gr" + std::to_string(i + 1), {ps[i]}});
  return out;
}

class Search {
 public:
  Search(LogicVariant v, SearchLimits lim) : v_(v), lim_(lim) {}

  ProofPtr prove(const Presentation& w0) {
    Presentation w = v_ == LogicVariant::CNL ? collapse_to_times(w0) : w0;
    std::string key = class_key(w, v_);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bump();
    ProofPtr result = prove_fresh(w);
    memo_[key] = result;
    return result;
  }

  std::size_t visited() const { return visited_; }

 private:
  LogicVariant v_;
  SearchLimits lim_;
  std::size_t visited_ = 0;
  std::unordered_map<std::string, ProofPtr> memo_;

  void bump() {
    if (++visited_ > lim_.max_visited) throw LimitReached{};
  }

  std::vector<Displayed> displayed_leaves(const Presentation& w) const {
    std::vector<Displayed> out;
    if (v_ == LogicVariant::CNLCompact) {
      for (auto& m : compact_class(w))
        if (m.right.is_leaf()) out.push_back({m, m, Occurrence{Side::Right, {}}});
      return out;
    }
    for (auto& o : occurrences(w, true)) {
      Presentation m = display(w, o);
      if (v_ == LogicVariant::CNL) m = collapse_to_times(m);
      out.push_back({std::move(m), w, o});
    }
    return out;
  }

  ProofPtr try_rule(const Displayed& d, const Candidate& c) {
    if (v_ == LogicVariant::CNLCompact && !compact_rule(c.rule)) return nullptr;
    auto node = std::make_shared<ProofNode>(ProofNode{c.rule, d.conclusion, d.main, {}});
    for (const auto& p : c.premises) {
      ProofPtr sub = prove(v_ == LogicVariant::CNL ? collapse_to_times(p) : p);
      if (!sub) return nullptr;
      node->premises.push_back(std::move(sub));
    }
    return node;
  }

  ProofPtr prove_fresh(const Presentation& w) {
    auto leaves = displayed_leaves(w);
    // Invertible phase: commit to the first positive compound leaf.
    for (const auto& d : leaves) {
      const Formula& a = d.m.right.formula();
      if (a.is_atom() && d.m.left.is_leaf() && d.m.left.formula() == negate(a)) return try_rule(d, {"Ax", {}});
    }
    for (const auto& d : leaves) {
      const Formula& a = d.m.right.formula();
      if (a.is_atom() || polarity(a) != Polarity::Positive) continue;
      auto cands = rule_instances(d.m, v_);
      if (cands.front().rule == "Ax") return try_rule(d, cands.front());
      return try_rule(d, cands.back());
    }
    if (v_ != LogicVariant::LGI) return negative_phase(w, leaves);
    return orbit_search(w);
  }

  ProofPtr negative_phase(const Presentation&, const std::vector<Displayed>& leaves) {
    for (const auto& d : leaves) {
      if (polarity(d.m.right.formula()) != Polarity::Negative) continue;
      for (const auto& c : rule_instances(d.m, v_))
        if (auto p = try_rule(d, c)) return p;
    }
    return nullptr;
  }

  // States reachable by linear distributivity, read bottom-up.
  ProofPtr orbit_search(const Presentation& w) {
    struct Entry {
      Presentation state;
      int parent;
      std::string rule;
      Presentation matched;
    };
    std::vector<Entry> orbit{{w, -1, "", w}};
    std::unordered_set<std::string> seen{class_key(w, v_)};
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      Presentation cur = orbit[i].state;
      if (ProofPtr p = negative_phase(cur, displayed_leaves(cur))) {
        for (int j = static_cast<int>(i); orbit[j].parent >= 0; j = orbit[j].parent) {
          p = std::make_shared<ProofNode>(ProofNode{orbit[j].rule, orbit[j].matched, std::nullopt, {std::move(p)}});
        }
        return p;
      }
      for (const auto& m : display_members(cur)) {
        for (auto& c : grishin_premises(m)) {
          Presentation next = c.premises.front();
          if (!seen.insert(class_key(next, v_)).second) continue;
          bump();
          orbit.push_back({std::move(next), static_cast<int>(i), c.rule, m});
        }
      }
    }
    for (const auto& e : orbit) memo_.emplace(class_key(e.state, v_), nullptr);
    return nullptr;
  }
};

}  // namespace

ProveResult prove(const Presentation& w, LogicVariant v, SearchLimits lim) {
  if (lim.max_visited < 1) throw std::invalid_argument("max_visited must be at least 1");
  if (v == LogicVariant::CNLCompact && !compact_vocabulary(w))
    throw std::invalid_argument("cnl-compact accepts only *, +, &, | formulas and '.' structures");
  Search s(v, lim);
  ProveResult r;
  try {
    r.proof = s.prove(w);
    r.verdict = r.proof ? Verdict::Provable : Verdict::Unprovable;
  } catch (const LimitReached&) {
    r.verdict = Verdict::Indeterminate;
  }
  r.visited = s.visited();
  return r;
}

// ---- checking ----

namespace {

class Checker {
 public:
  explicit Checker(LogicVariant v) : v_(v) {}

  CheckResult run(const ProofNode& n, const std::string& path) {
    if (auto why = local(n)) return {false, "node root" + path + ": " + *why};
    for (std::size_t i = 0; i < n.premises.size(); ++i) {
      auto r = run(*n.premises[i], path + "/" + std::to_string(i));
      if (!r) return r;
    }
    return {};
  }

 private:
  LogicVariant v_;

  bool same(const Presentation& a, const Presentation& b) const { return class_key(a, v_) == class_key(b, v_); }

  std::optional<std::string> premises_match(const ProofNode& n, const std::vector<Presentation>& want) const {
    if (n.premises.size() != want.size())
      return "rule " + n.rule + " needs " + std::to_string(want.size()) + " premises, has " +
             std::to_string(n.premises.size());
    for (std::size_t i = 0; i < want.size(); ++i)
      if (!same(n.premises[i]->conclusion, want[i]))
        return "premise " + std::to_string(i) + " of " + n.rule + " should be " + print_presentation(want[i]);
    return std::nullopt;
  }

  std::optional<std::string> local(const ProofNode& n) const {
    if (v_ == LogicVariant::CNLCompact && !compact_vocabulary(n.conclusion))
      return std::string("conclusion outside the compact vocabulary");
    if (n.rule == "Gr1" || n.rule == "Gr2" || n.rule == "Gr3") {
      if (v_ != LogicVariant::LGI) return "rule " + n.rule + " is not available in " + variant_name(v_);
      for (auto& c : grishin_premises(n.conclusion))
        if (c.rule == n.rule) return premises_match(n, c.premises);
      return "conclusion of " + n.rule + " is not of the form ((G1 . G2) ; (D2 . D1))";
    }
    if (!n.main) return "rule " + n.rule + " has no principal formula";
    auto sub = subterm(n.conclusion, *n.main);
    if (!sub) return "main occurrence " + print_occurrence(*n.main) + " is not in the conclusion";
    if (!sub->is_leaf()) return std::string("main occurrence is not a formula");
    Presentation base = v_ == LogicVariant::CNL ? collapse_to_times(n.conclusion) : n.conclusion;
    Presentation m = display(base, *n.main);
    if (is_cnl(v_)) m = collapse_to_times(m);
    if (v_ == LogicVariant::CNLCompact && !compact_rule(n.rule))
      return "rule " + n.rule + " is not available in cnl-compact";
    for (auto& c : rule_instances(m, v_))
      if (c.rule == n.rule) return premises_match(n, c.premises);
    return "rule " + n.rule + " does not apply to " + print_presentation(m);
  }
};

}  // namespace

CheckResult check(const ProofNode& p, LogicVariant v) { return Checker(v).run(p, ""); }

}  // namespace lgfocus
