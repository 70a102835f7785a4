#include "lgfocus/focused.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace lgfocus {

// ---- subformula universes ----

namespace {

void sigma_into(const PolFormula& n, std::set<PolFormula>& out);

void tau_into(const PolFormula& p, std::set<PolFormula>& out) {
  switch (p.conn()) {
    case PConn::PosAtom: out.insert(p); return;
    case PConn::Down:
      out.insert(p.body());
      sigma_into(p.body(), out);
      return;
    case PConn::Tensor:
    case PConn::Or:
      tau_into(p.left(), out);
      tau_into(p.right(), out);
      return;
    case PConn::CoRDiv:  // P ⊘ N
      tau_into(p.left(), out);
      sigma_into(p.right(), out);
      return;
    case PConn::CoLDiv:  // N ⃠ P
      tau_into(p.right(), out);
      sigma_into(p.left(), out);
      return;
    default: throw std::invalid_argument("tau needs a positive formula");
  }
}

void sigma_into(const PolFormula& n, std::set<PolFormula>& out) {
  switch (n.conn()) {
    case PConn::NegAtom: out.insert(n); return;
    case PConn::Up:  // the negation of P is what a later ↓R step sees
      out.insert(pol_negate(n.body()));
      tau_into(n.body(), out);
      return;
    case PConn::Par:
    case PConn::And:
      sigma_into(n.left(), out);
      sigma_into(n.right(), out);
      return;
    case PConn::RDiv:  // M / Q
      sigma_into(n.left(), out);
      tau_into(n.right(), out);
      return;
    case PConn::LDiv:  // Q \ M
      sigma_into(n.right(), out);
      tau_into(n.left(), out);
      return;
    default: throw std::invalid_argument("sigma needs a negative formula");
  }
}

}  // namespace

std::set<PolFormula> sigma(const PolFormula& n) {
  std::set<PolFormula> out;
  sigma_into(n, out);
  return out;
}

std::set<PolFormula> tau(const PolFormula& p) {
  std::set<PolFormula> out;
  tau_into(p, out);
  return out;
}

Universe build_universe(const std::vector<PolFormula>& x) {
  Universe u;
  for (const auto& n : x) {
    if (n.positive()) throw std::invalid_argument("universe base formulas must be negative");
    u.base.insert(n);
    tau_into(PolFormula::down(n), u.closure);
  }
  return u;
}

std::vector<FStructure> invp(const PolFormula& p, const Universe* u) {
  switch (p.conn()) {
    case PConn::PosAtom: return {FStructure::leaf(p)};
    case PConn::Down:
      if (u && !u->contains(p.body()))
        throw UniverseError("invp: " + print_pol_formula(p.body()) + " is outside the universe");
      return {FStructure::leaf(p.body())};
    case PConn::Or: {
      auto out = invp(p.left(), u);
      for (auto& s : invp(p.right(), u)) out.push_back(std::move(s));
      return out;
    }
    case PConn::Tensor:
    case PConn::CoRDiv:
    case PConn::CoLDiv: {
      // Left operand major in every case; the negative operand contributes invp(N⊥).
      auto ls = p.conn() == PConn::CoLDiv ? invp(pol_negate(p.left()), u) : invp(p.left(), u);
      auto rs = p.conn() == PConn::CoRDiv ? invp(pol_negate(p.right()), u) : invp(p.right(), u);
      SOp op = p.conn() == PConn::Tensor ? SOp::Times : p.conn() == PConn::CoRDiv ? SOp::Oslash : SOp::Obslash;
      std::vector<FStructure> out;
      for (const auto& l : ls)
        for (const auto& r : rs) out.push_back(FStructure::make(op, l, r));
      return out;
    }
    default: throw std::invalid_argument("invp needs a positive formula");
  }
}

// ---- linear distributivity rewrites ----

namespace {

using S = FStructure;

// Rewrites at the root of s, in rule order 1a 1b 2a 2b 3a 3b 3c 3d.
void root_rewrites(const S& s, std::vector<std::pair<const char*, S>>& out) {
  if (s.op() == SOp::Oslash && s.left().op() == SOp::Times) {
    // ⟨⟨X⊗Y⟩⊘Z⟩
    S x = s.left().left(), y = s.left().right(), z = s.right();
    out.emplace_back("Gr1a", S::times(x, S::oslash(y, z)));
    out.emplace_back("Gr2b", S::oslash(x, S::obslash(y, z)));
    out.emplace_back("Gr3c", S::times(S::oslash(x, z), y));
    out.emplace_back("Gr3d", S::oslash(y, S::oslash(z, x)));
  }
  if (s.op() == SOp::Obslash && s.right().op() == SOp::Times) {
    // ⟨X⃠⟨Y⊗Z⟩⟩
    S x = s.left(), y = s.right().left(), z = s.right().right();
    out.emplace_back("Gr1b", S::obslash(S::oslash(x, y), z));
    out.emplace_back("Gr2a", S::times(S::obslash(x, y), z));
    out.emplace_back("Gr3a", S::times(y, S::obslash(x, z)));
    out.emplace_back("Gr3b", S::obslash(S::obslash(z, x), y));
  }
}

int rule_rank(const std::string& r) {
  static const char* order[] = {"Gr1a", "Gr1b", "Gr2a", "Gr2b", "Gr3a", "Gr3b", "Gr3c", "Gr3d"};
  for (int i = 0; i < 8; ++i)
    if (r == order[i]) return i;
  return 8;
}

}  // namespace

std::vector<Rewrite> grishin_rewrites(const FStructure& s) {
  std::vector<std::vector<Dir>> paths;
  std::vector<Dir> prefix;
  collect_paths(s, prefix, paths, false);
  std::vector<Rewrite> out;
  for (const auto& path : paths) {
    auto sub = *subterm(s, path);
    std::vector<std::pair<const char*, S>> here;
    root_rewrites(sub, here);
    if (here.empty()) continue;
    auto ctx = FContext::along(s, path);
    for (auto& [rule, r] : here) out.push_back({rule, ctx.plug(r)});
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const Rewrite& a, const Rewrite& b) { return rule_rank(a.rule) < rule_rank(b.rule); });
  return out;
}

// ---- search and enumeration ----

namespace {

struct LimitReached {};

bool cnl_like(LogicVariant v) { return is_cnl(v); }

FPresentation norm(const FPresentation& w, LogicVariant v) { return cnl_like(v) ? collapse_to_times(w) : w; }
FStructure norm(const FStructure& s, LogicVariant v) { return cnl_like(v) ? collapse_to_times(s) : s; }

void check_leaves(const FStructure& s, const Universe& u) {
  if (s.is_leaf()) {
    const PolFormula& f = s.formula();
    if (f.positive() && f.conn() != PConn::PosAtom)
      throw UniverseError("focused leaves are atoms p or negative formulas, not " + print_pol_formula(f));
    if (!u.contains(f)) throw UniverseError(print_pol_formula(f) + " is outside the universe");
    return;
  }
  check_leaves(s.left(), u);
  check_leaves(s.right(), u);
}

FProofPtr make_node(std::string rule, FJudgment j, std::vector<FProofPtr> ps = {}, std::optional<Occurrence> focus = {},
                    std::size_t k = 0) {
  return std::make_shared<FProofNode>(FProofNode{std::move(rule), std::move(j), std::move(focus), k, std::move(ps)});
}

const char* split_rule(SOp op) { return sop_token(op); }

class Engine {
 public:
  // limit: stop collecting alternatives for any judgment once this many proofs are found.
  Engine(const Universe& u, LogicVariant v, std::size_t limit, SearchLimits lim)
      : u_(u), v_(v), limit_(limit), lim_(lim) {}

  const std::vector<FProofPtr>& pres(const FPresentation& w) {
    if (auto it = pmemo_.find(w); it != pmemo_.end()) return it->second;
    tick();
    std::vector<FProofPtr> out;
    for (const auto& occ : occurrences(w, true)) {
      const PolFormula& n = subterm(w, occ)->formula();
      if (n.positive()) continue;
      auto ctx = FContext::along(w.side(occ.side), occ.path);
      FStructure left = norm(displace(ctx, occ.side == Side::Left ? w.right : w.left), v_);
      auto pats = invp(pol_negate(n), &u_);
      for (std::size_t k = 0; k < pats.size() && out.size() < limit_; ++k) {
        FocusJudgment j{left, norm(pats[k], v_)};
        for (const auto& p : focus(j)) {
          out.push_back(make_node("D", w, {p}, occ, k));
          if (out.size() >= limit_) break;
        }
      }
      if (out.size() >= limit_) break;
    }
    return pmemo_.emplace(w, std::move(out)).first->second;
  }

  // Under lgi, the orbit of the left structure under the rewrites, each
  // member reached by one chain of rewrite nodes.
  const std::vector<FProofPtr>& focus(const FocusJudgment& j) {
    if (auto it = fmemo_.find(j); it != fmemo_.end()) return it->second;
    tick();
    std::vector<FProofPtr> out;
    if (v_ != LogicVariant::LGI) {
      out = base(j.left, j.pattern);
    } else {
      struct Member {
        FStructure s;
        std::size_t parent;
        std::string rule;
      };
      std::vector<Member> orbit{{j.left, 0, ""}};
      std::set<FStructure> seen{j.left};
      for (std::size_t i = 0; i < orbit.size() && out.size() < limit_; ++i) {
        for (auto& r : grishin_rewrites(orbit[i].s))
          if (seen.insert(r.result).second) {
            tick();
            orbit.push_back({r.result, i, r.rule});
          }
        for (const auto& p : base(orbit[i].s, j.pattern)) {
          FProofPtr cur = p;
          for (std::size_t m = i; m != 0; m = orbit[m].parent) {
            const auto& parent = orbit[orbit[m].parent];
            cur = make_node(orbit[m].rule, FocusJudgment{parent.s, j.pattern}, {cur});
          }
          out.push_back(cur);
          if (out.size() >= limit_) break;
        }
      }
    }
    return fmemo_.emplace(j, std::move(out)).first->second;
  }

  std::size_t visited() const { return visited_; }

 private:
  const Universe& u_;
  LogicVariant v_;
  std::size_t limit_;
  SearchLimits lim_;
  std::size_t visited_ = 0;
  std::map<FPresentation, std::vector<FProofPtr>> pmemo_;
  std::map<FocusJudgment, std::vector<FProofPtr>> fmemo_;

  void tick() {
    if (++visited_ > lim_.max_visited) throw LimitReached{};
  }

  // Cartesian product of premise proof lists, in order, up to the limit.
  template <class Make>
  std::vector<FProofPtr> product(const std::vector<std::vector<FProofPtr>>& lists, Make make) {
    std::vector<FProofPtr> out;
    for (const auto& l : lists)
      if (l.empty()) return out;
    std::vector<std::size_t> idx(lists.size(), 0);
    while (out.size() < limit_) {
      std::vector<FProofPtr> pick;
      for (std::size_t i = 0; i < lists.size(); ++i) pick.push_back(lists[i][idx[i]]);
      out.push_back(make(std::move(pick)));
      std::size_t i = lists.size();
      while (i > 0) {
        --i;
        if (++idx[i] < lists[i].size()) break;
        idx[i] = 0;
        if (i == 0) return out;
      }
      if (lists.empty()) break;
    }
    return out;
  }

  std::vector<FProofPtr> base(const FStructure& left, const FStructure& pat) {
    FocusJudgment j{left, pat};
    if (pat.is_leaf() && pat.formula().positive()) {
      if (left.is_leaf() && left.formula() == pat.formula()) return {make_node("I", j)};
      return {};
    }
    if (pat.is_leaf()) {
      std::vector<std::vector<FProofPtr>> lists;
      for (const auto& sg : invp(pol_negate(pat.formula()), &u_)) lists.push_back(pres({left, norm(sg, v_)}));
      return product(lists, [&](std::vector<FProofPtr> ps) { return make_node("R", j, std::move(ps)); });
    }
    if (left.op() != pat.op()) return {};
    std::vector<std::vector<FProofPtr>> lists;
    if (pat.op() == SOp::Oslash) {
      lists.push_back(focus({left.right(), pat.right()}));
      lists.push_back(focus({left.left(), pat.left()}));
    } else {
      lists.push_back(focus({left.left(), pat.left()}));
      lists.push_back(focus({left.right(), pat.right()}));
    }
    return product(lists, [&](std::vector<FProofPtr> ps) { return make_node(split_rule(pat.op()), j, std::move(ps)); });
  }
};

}  // namespace

FocusedResult focused_prove(const FPresentation& goal, const Universe& u, LogicVariant v, SearchLimits lim) {
  if (lim.max_visited < 1) throw std::invalid_argument("max_visited must be positive");
  FPresentation g = norm(goal, v);
  check_leaves(g.left, u);
  check_leaves(g.right, u);
  Engine e(u, v, 1, lim);
  FocusedResult r;
  try {
    const auto& ps = e.pres(g);
    if (!ps.empty()) {
      r.verdict = Verdict::Provable;
      r.proof = ps.front();
    }
  } catch (const LimitReached&) {
    r.verdict = Verdict::Indeterminate;
  }
  r.visited = e.visited();
  return r;
}

Enumeration focused_enumerate(const FPresentation& goal, const Universe& u, LogicVariant v, std::size_t cap) {
  if (cap < 1) throw std::invalid_argument("cap must be positive");
  FPresentation g = norm(goal, v);
  check_leaves(g.left, u);
  check_leaves(g.right, u);
  // One proof past the cap tells a complete list from a truncated one.
  Engine e(u, v, cap + 1, SearchLimits{static_cast<std::size_t>(-1)});
  Enumeration out;
  out.proofs = e.pres(g);
  if (out.proofs.size() > cap) {
    out.proofs.resize(cap);
    out.truncated = true;
  }
  return out;
}

bool focused_provable(const FPresentation& goal, const Universe& u, LogicVariant v) {
  return focused_prove(goal, u, v).verdict == Verdict::Provable;
}

FocusGoals focus_goals(const Presentation& w, LogicVariant v) {
  if (v == LogicVariant::CNLCompact && !compact_vocabulary(w))
    throw std::invalid_argument("cnl-compact admits only * + & | and the structural '.'");
  FocusGoals g{decorate(w), {}, {}};
  g.universe = build_universe({pol_interp_minus(g.decorated.left), pol_interp_minus(g.decorated.right)});
  auto ls = invp(pol_interp_plus(g.decorated.left), &g.universe);
  auto rs = invp(pol_interp_plus(g.decorated.right), &g.universe);
  for (const auto& l : ls)
    for (const auto& r : rs) g.goals.push_back(norm(FPresentation{l, r}, v));
  return g;
}

BridgeResult prove_presentation(const Presentation& w, LogicVariant v, SearchLimits lim) {
  BridgeResult r{Verdict::Provable, focus_goals(w, v), {}, 0};
  for (const auto& g : r.goals.goals) {
    SearchLimits left{lim.max_visited > r.visited ? lim.max_visited - r.visited : 1};
    auto one = focused_prove(g, r.goals.universe, v, left);
    r.visited += one.visited;
    if (one.verdict != Verdict::Provable) {
      r.verdict = one.verdict;
      r.proofs.clear();
      return r;
    }
    r.proofs.push_back(one.proof);
  }
  return r;
}

// ---- checking ----

namespace {

class FChecker {
 public:
  FChecker(const Universe& u, LogicVariant v) : u_(u), v_(v) {}

  CheckResult run(const FProofNode& n, const std::string& path) {
    if (auto why = local(n)) return {false, "node root" + path + ": " + *why};
    for (std::size_t i = 0; i < n.premises.size(); ++i) {
      auto r = run(*n.premises[i], path + "/" + std::to_string(i));
      if (!r) return r;
    }
    return {};
  }

 private:
  using Why = std::optional<std::string>;
  const Universe& u_;
  LogicVariant v_;

  static const FPresentation* pres(const FJudgment& j) { return std::get_if<FPresentation>(&j); }
  static const FocusJudgment* foc(const FJudgment& j) { return std::get_if<FocusJudgment>(&j); }

  Why leaves_ok(const FStructure& s) const {
    try {
      check_leaves(s, u_);
    } catch (const UniverseError& e) {
      return std::string(e.what());
    }
    if (cnl_like(v_) && has_coslash(s)) return std::string("cnl judgments are collapsed to '.'");
    return std::nullopt;
  }

  static Why premises_are(const FProofNode& n, const std::vector<FJudgment>& want) {
    if (n.premises.size() != want.size())
      return "rule " + n.rule + " needs " + std::to_string(want.size()) + " premises, has " +
             std::to_string(n.premises.size());
    for (std::size_t i = 0; i < want.size(); ++i)
      if (!(n.premises[i]->conclusion == want[i]))
        return "premise " + std::to_string(i) + " of " + n.rule + " should be " + print_fjudgment(want[i]);
    return std::nullopt;
  }

  Why local(const FProofNode& n) const {
    if (auto w = pres(n.conclusion)) {
      if (auto e = leaves_ok(w->left)) return e;
      if (auto e = leaves_ok(w->right)) return e;
      if (n.rule != "D") return "rule " + n.rule + " does not conclude a presentation";
      if (!n.focus) return std::string("D without a focus");
      auto sub = subterm(*w, *n.focus);
      if (!sub || !sub->is_leaf() || sub->formula().positive())
        return "focus " + print_occurrence(*n.focus) + " is not a negative leaf";
      auto pats = invp(pol_negate(sub->formula()), &u_);
      if (n.invp_index >= pats.size()) return std::string("invp index out of range");
      auto ctx = FContext::along(w->side(n.focus->side), n.focus->path);
      FStructure left = norm(displace(ctx, n.focus->side == Side::Left ? w->right : w->left), v_);
      return premises_are(n, {FocusJudgment{left, norm(pats[n.invp_index], v_)}});
    }
    const auto& j = *foc(n.conclusion);
    if (auto e = leaves_ok(j.left)) return e;
    if (auto e = leaves_ok(j.pattern)) return e;
    const FStructure& l = j.left;
    const FStructure& p = j.pattern;
    if (n.rule == "I") {
      if (!(p.is_leaf() && p.formula().conn() == PConn::PosAtom && l.is_leaf() && l.formula() == p.formula()))
        return std::string("I needs p |-f p");
      return premises_are(n, {});
    }
    if (n.rule == "R") {
      if (!p.is_leaf() || p.formula().positive()) return std::string("R needs a negative pattern");
      std::vector<FJudgment> want;
      for (const auto& sg : invp(pol_negate(p.formula()), &u_)) want.push_back(FPresentation{l, norm(sg, v_)});
      return premises_are(n, want);
    }
    if (n.rule.rfind("Gr", 0) == 0) {
      if (v_ != LogicVariant::LGI) return "rule " + n.rule + " is not available in " + variant_name(v_);
      if (n.premises.size() != 1) return "rule " + n.rule + " needs 1 premise";
      auto q = foc(n.premises[0]->conclusion);
      if (!q || !(q->pattern == p)) return "premise of " + n.rule + " must keep the pattern";
      for (const auto& r : grishin_rewrites(l))
        if (r.rule == n.rule && r.result == q->left) return std::nullopt;
      return "premise of " + n.rule + " is not a rewrite of " + print_fstructure(l);
    }
    for (SOp op : {SOp::Times, SOp::Oslash, SOp::Obslash}) {
      if (n.rule != split_rule(op)) continue;
      if (l.op() != op || p.op() != op) return "rule " + n.rule + " needs both sides built with it";
      if (op == SOp::Oslash)
        return premises_are(n, {FocusJudgment{l.right(), p.right()}, FocusJudgment{l.left(), p.left()}});
      return premises_are(n, {FocusJudgment{l.left(), p.left()}, FocusJudgment{l.right(), p.right()}});
    }
    return "unknown rule " + n.rule;
  }
};

}  // namespace

CheckResult check_focused(const FProofNode& p, const Universe& u, LogicVariant v) {
  try {
    return FChecker(u, v).run(p, "");
  } catch (const std::invalid_argument& e) {
    return {false, e.what()};
  }
}

std::string print_fstructure(const FStructure& s) { return print_pol_structure(s); }

std::string print_fjudgment(const FJudgment& j) {
  if (auto w = std::get_if<FPresentation>(&j)) return print_pol_presentation(*w);
  const auto& f = std::get<FocusJudgment>(j);
  return print_fstructure(f.left) + " |-f " + print_fstructure(f.pattern);
}

namespace {

// Written leaves _N stand for N.
FStructure implicit_down(const PolStructure& s) {
  if (s.is_leaf()) {
    const PolFormula& f = s.formula();
    if (f.conn() == PConn::Down) return FStructure::leaf(f.body());
    if (f.positive() && f.conn() != PConn::PosAtom)
      throw UniverseError("focused leaves are atoms p or negative formulas, not " + print_pol_formula(f));
    return s;
  }
  return FStructure::make(s.op(), implicit_down(s.left()), implicit_down(s.right()));
}

}  // namespace

FStructure parse_fstructure(std::string_view text) { return implicit_down(parse_pol_structure(text, true)); }

FPresentation parse_fpresentation(std::string_view text) {
  auto w = parse_pol_presentation(text, true);
  return {implicit_down(w.left), implicit_down(w.right)};
}

}  // namespace lgfocus
