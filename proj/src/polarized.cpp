#include "lgfocus/polarized.hpp"

#include <functional>
#include <optional>
#include <stdexcept>

#include "lgfocus/syntax.hpp"

namespace lgfocus {

namespace {

std::size_t mix(std::size_t h, std::size_t v) { return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2)); }

struct Slots {
  Polarity left, right, result;
};

Slots slots(PConn c) {
  constexpr auto P = Polarity::Positive, N = Polarity::Negative;
  switch (c) {
    case PConn::Tensor: return {P, P, P};
    case PConn::CoRDiv: return {P, N, P};
    case PConn::CoLDiv: return {N, P, P};
    case PConn::Or: return {P, P, P};
    case PConn::Par: return {N, N, N};
    case PConn::LDiv: return {P, N, N};
    case PConn::RDiv: return {N, P, N};
    case PConn::And: return {N, N, N};
    case PConn::Down: return {N, N, P};
    case PConn::Up: return {P, P, N};
    default: return {P, P, P};
  }
}

const char* pconn_name(PConn c) {
  switch (c) {
    case PConn::Down: return "_";
    case PConn::Up: return "^";
    default: return conn_token(conn_of(c));
  }
}

}  // namespace

PConn pconn_of(Conn c) {
  switch (c) {
    case Conn::PosAtom: return PConn::PosAtom;
    case Conn::NegAtom: return PConn::NegAtom;
    case Conn::Tensor: return PConn::Tensor;
    case Conn::Par: return PConn::Par;
    case Conn::RDiv: return PConn::RDiv;
    case Conn::LDiv: return PConn::LDiv;
    case Conn::CoRDiv: return PConn::CoRDiv;
    case Conn::CoLDiv: return PConn::CoLDiv;
    case Conn::And: return PConn::And;
    case Conn::Or: return PConn::Or;
  }
  return PConn::PosAtom;
}

Conn conn_of(PConn c) {
  switch (c) {
    case PConn::PosAtom: return Conn::PosAtom;
    case PConn::NegAtom: return Conn::NegAtom;
    case PConn::Tensor: return Conn::Tensor;
    case PConn::Par: return Conn::Par;
    case PConn::RDiv: return Conn::RDiv;
    case PConn::LDiv: return Conn::LDiv;
    case PConn::CoRDiv: return Conn::CoRDiv;
    case PConn::CoLDiv: return Conn::CoLDiv;
    case PConn::And: return Conn::And;
    case PConn::Or: return Conn::Or;
    case PConn::Down:
    case PConn::Up: break;
  }
  throw std::invalid_argument("shifts have no unpolarized connective");
}

PolFormula PolFormula::pos(std::string name) {
  auto n = std::make_shared<Node>();
  n->conn = PConn::PosAtom;
  n->hash = mix(std::hash<std::string>{}(name), 1);
  n->name = std::move(name);
  return PolFormula(std::move(n));
}

PolFormula PolFormula::neg(std::string name) {
  auto n = std::make_shared<Node>();
  n->conn = PConn::NegAtom;
  n->hash = mix(std::hash<std::string>{}(name), 2);
  n->name = std::move(name);
  return PolFormula(std::move(n));
}

PolFormula PolFormula::make(PConn c, PolFormula l, PolFormula r) {
  if (c == PConn::PosAtom || c == PConn::NegAtom || c == PConn::Down || c == PConn::Up)
    throw std::invalid_argument("PolFormula::make needs a binary connective");
  Slots s = slots(c);
  if (l.sort() != s.left || r.sort() != s.right)
    throw std::invalid_argument(std::string("sort mismatch under '") + pconn_name(c) + "'");
  auto n = std::make_shared<Node>();
  n->conn = c;
  n->hash = mix(mix(static_cast<std::size_t>(c) + 17, l.hash()), r.hash());
  n->l = std::make_unique<PolFormula>(std::move(l));
  n->r = std::make_unique<PolFormula>(std::move(r));
  return PolFormula(std::move(n));
}

PolFormula PolFormula::down(PolFormula x) {
  if (x.positive()) throw std::invalid_argument("'_' needs a negative operand");
  auto n = std::make_shared<Node>();
  n->conn = PConn::Down;
  n->hash = mix(static_cast<std::size_t>(PConn::Down) + 17, x.hash());
  n->l = std::make_unique<PolFormula>(std::move(x));
  return PolFormula(std::move(n));
}

PolFormula PolFormula::up(PolFormula x) {
  if (!x.positive()) throw std::invalid_argument("'^' needs a positive operand");
  auto n = std::make_shared<Node>();
  n->conn = PConn::Up;
  n->hash = mix(static_cast<std::size_t>(PConn::Up) + 17, x.hash());
  n->l = std::make_unique<PolFormula>(std::move(x));
  return PolFormula(std::move(n));
}

Polarity PolFormula::sort() const {
  if (conn() == PConn::PosAtom) return Polarity::Positive;
  if (conn() == PConn::NegAtom) return Polarity::Negative;
  return slots(conn()).result;
}

bool operator==(const PolFormula& a, const PolFormula& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.conn() != b.conn()) return false;
  if (a.is_atom()) return a.name() == b.name();
  if (a.is_shift()) return a.body() == b.body();
  return a.left() == b.left() && a.right() == b.right();
}

std::strong_ordering operator<=>(const PolFormula& a, const PolFormula& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.conn() <=> b.conn(); c != 0) return c;
  if (a.is_atom()) return a.name() <=> b.name();
  if (a.is_shift()) return a.body() <=> b.body();
  if (auto c = a.left() <=> b.left(); c != 0) return c;
  return a.right() <=> b.right();
}

PolFormula pol_negate(const PolFormula& x) {
  switch (x.conn()) {
    case PConn::PosAtom: return PolFormula::neg(x.name());
    case PConn::NegAtom: return PolFormula::pos(x.name());
    case PConn::Down: return PolFormula::up(pol_negate(x.body()));
    case PConn::Up: return PolFormula::down(pol_negate(x.body()));
    default:
      return PolFormula::make(pconn_of(dual(conn_of(x.conn()))), pol_negate(x.right()), pol_negate(x.left()));
  }
}

bool shift_free_adjacency(const PolFormula& x) {
  if (x.is_atom()) return true;
  if (x.is_shift()) return !x.body().is_shift() && shift_free_adjacency(x.body());
  return shift_free_adjacency(x.left()) && shift_free_adjacency(x.right());
}

namespace {

// A shift is inserted exactly where the operand's sort disagrees with its slot.
PolFormula fit(Polarity slot, PolFormula x) {
  if (x.sort() == slot) return x;
  return slot == Polarity::Positive ? PolFormula::down(std::move(x)) : PolFormula::up(std::move(x));
}

}  // namespace

PolFormula decorate(const Formula& a) {
  if (a.conn() == Conn::PosAtom) return PolFormula::pos(a.name());
  if (a.conn() == Conn::NegAtom) return PolFormula::neg(a.name());
  PConn c = pconn_of(a.conn());
  Slots s = slots(c);
  return PolFormula::make(c, fit(s.left, decorate(a.left())), fit(s.right, decorate(a.right())));
}

Formula forget(const PolFormula& x) {
  switch (x.conn()) {
    case PConn::PosAtom: return Formula::pos(x.name());
    case PConn::NegAtom: return Formula::neg(x.name());
    case PConn::Down:
    case PConn::Up: return forget(x.body());
    default: return Formula::make(conn_of(x.conn()), forget(x.left()), forget(x.right()));
  }
}

PolStructure decorate_structure(const Structure& g) {
  if (g.is_leaf()) return PolStructure::leaf(fit(Polarity::Positive, decorate(g.formula())));
  return PolStructure::make(g.op(), decorate_structure(g.left()), decorate_structure(g.right()));
}

PolPresentation decorate(const Presentation& w) { return {decorate_structure(w.left), decorate_structure(w.right)}; }

Structure forget_structure(const PolStructure& g) {
  if (g.is_leaf()) return Structure::leaf(forget(g.formula()));
  return Structure::make(g.op(), forget_structure(g.left()), forget_structure(g.right()));
}

Presentation forget(const PolPresentation& w) { return {forget_structure(w.left), forget_structure(w.right)}; }

PolFormula pol_interp_plus(const PolStructure& g) {
  switch (g.op()) {
    case SOp::Leaf: return g.formula();
    case SOp::Times: return PolFormula::make(PConn::Tensor, pol_interp_plus(g.left()), pol_interp_plus(g.right()));
    case SOp::Obslash: return PolFormula::make(PConn::CoLDiv, pol_interp_minus(g.left()), pol_interp_plus(g.right()));
    case SOp::Oslash: return PolFormula::make(PConn::CoRDiv, pol_interp_plus(g.left()), pol_interp_minus(g.right()));
  }
  return g.formula();
}

PolFormula pol_interp_minus(const PolStructure& g) {
  switch (g.op()) {
    case SOp::Leaf: return pol_negate(g.formula());
    case SOp::Times: return PolFormula::make(PConn::Par, pol_interp_minus(g.right()), pol_interp_minus(g.left()));
    case SOp::Obslash: return PolFormula::make(PConn::RDiv, pol_interp_minus(g.right()), pol_interp_plus(g.left()));
    case SOp::Oslash: return PolFormula::make(PConn::LDiv, pol_interp_plus(g.right()), pol_interp_minus(g.left()));
  }
  return g.formula();
}

// ---- printing and parsing ----

namespace {

void print_to(std::string& out, const PolFormula& x, bool parens) {
  switch (x.conn()) {
    case PConn::PosAtom: out += x.name(); return;
    case PConn::NegAtom: out += "~" + x.name(); return;
    case PConn::Down:
    case PConn::Up:
      out += pconn_name(x.conn());
      print_to(out, x.body(), true);
      return;
    default: break;
  }
  if (parens) out += '(';
  print_to(out, x.left(), true);
  out += ' ';
  out += pconn_name(x.conn());
  out += ' ';
  print_to(out, x.right(), true);
  if (parens) out += ')';
}

void print_structure_to(std::string& out, const PolStructure& s, bool top) {
  if (s.is_leaf()) {
    const PolFormula& f = s.formula();
    if (f.conn() == PConn::CoRDiv || f.conn() == PConn::CoLDiv)
      out += "{" + print_pol_formula(f) + "}";
    else
      out += top ? print_pol_formula(f) : print_pol_formula_nested(f);
    return;
  }
  out += '(';
  print_structure_to(out, s.left(), false);
  out += ' ';
  out += sop_token(s.op());
  out += ' ';
  print_structure_to(out, s.right(), false);
  out += ')';
}

[[noreturn]] void sort_error(const Term& t, const std::string& why) {
  throw ParseError(t.offset, {"well-sorted formula"},
                   "syntax error at offset " + std::to_string(t.offset) + ": " + why);
}

PolFormula pol_from_term(const Term& t) {
  switch (t.kind) {
    case Term::Kind::Atom: return PolFormula::pos(t.text);
    case Term::Kind::NegAtom: return PolFormula::neg(t.text);
    case Term::Kind::Prefix: {
      PolFormula body = pol_from_term(t.kids[0]);
      try {
        return t.text == "^" ? PolFormula::up(body) : PolFormula::down(body);
      } catch (const std::invalid_argument& e) {
        sort_error(t, e.what());
      }
    }
    case Term::Kind::Binary: {
      for (Conn c : {Conn::Tensor, Conn::Par, Conn::RDiv, Conn::LDiv, Conn::CoRDiv, Conn::CoLDiv, Conn::And, Conn::Or})
        if (t.text == conn_token(c)) {
          auto l = pol_from_term(t.kids[0]);
          auto r = pol_from_term(t.kids[1]);
          try {
            return PolFormula::make(pconn_of(c), l, r);
          } catch (const std::invalid_argument& e) {
            sort_error(t, e.what());
          }
        }
      sort_error(t, "'" + t.text + "' is not a formula connective");
    }
    default: sort_error(t, "expected a formula");
  }
}

PolStructure pol_structure_from_term(const Term& t, bool negative_leaves) {
  if (t.kind == Term::Kind::Binary && (t.text == "." || t.text == "</" || t.text == "\\>")) {
    SOp op = t.text == "." ? SOp::Times : t.text == "</" ? SOp::Oslash : SOp::Obslash;
    return PolStructure::make(op, pol_structure_from_term(t.kids[0], negative_leaves),
                              pol_structure_from_term(t.kids[1], negative_leaves));
  }
  PolFormula f = pol_from_term(t.kind == Term::Kind::Braced ? t.kids[0] : t);
  if (!negative_leaves && !f.positive()) sort_error(t, "structure leaves must be positive; write _N");
  return PolStructure::leaf(f);
}

}  // namespace

std::string print_pol_formula(const PolFormula& x) {
  std::string out;
  print_to(out, x, false);
  return out;
}

std::string print_pol_formula_nested(const PolFormula& x) {
  std::string out;
  print_to(out, x, true);
  return out;
}

std::string print_pol_structure(const PolStructure& s) {
  std::string out;
  print_structure_to(out, s, true);
  return out;
}

std::string print_pol_presentation(const PolPresentation& w) {
  return print_pol_structure(w.left) + " ; " + print_pol_structure(w.right);
}

std::string print_pol_judgment(const PolJudgment& j) {
  if (auto w = std::get_if<PolPresentation>(&j)) return print_pol_presentation(*w);
  const auto& s = std::get<StoupJudgment>(j);
  return print_pol_structure(s.context) + " |- " + print_pol_formula(s.stoup);
}

PolFormula parse_pol_formula(std::string_view text) {
  SyntaxOptions o;
  o.shifts = true;
  return pol_from_term(read_term(text, o));
}

PolStructure parse_pol_structure(std::string_view text, bool negative_leaves) {
  SyntaxOptions o;
  o.shifts = true;
  o.structural = true;
  return pol_structure_from_term(read_term(text, o), negative_leaves);
}

PolPresentation parse_pol_presentation(std::string_view text, bool negative_leaves) {
  SyntaxOptions o;
  o.shifts = true;
  o.structural = true;
  o.presentation = true;
  Term t = read_term(text, o);
  if (t.kind != Term::Kind::Binary || t.text != ";")
    throw ParseError(text.size(), {";"}, "syntax error at offset " + std::to_string(text.size()) +
                                             ": a polarized presentation needs ';'");
  return {pol_structure_from_term(t.kids[0], negative_leaves), pol_structure_from_term(t.kids[1], negative_leaves)};
}

// ---- checking ----

namespace {

using Why = std::optional<std::string>;

bool positive_leaves(const PolStructure& s) {
  if (s.is_leaf()) return s.formula().positive();
  return positive_leaves(s.left()) && positive_leaves(s.right());
}

PolStructure L(const PolFormula& f) { return PolStructure::leaf(f); }

PolPresentation class_rep(const PolPresentation& w, LogicVariant v) {
  if (!is_cnl(v)) return canonical_member(w);
  auto ms = display_members(collapse_to_times(w));
  PolPresentation best = collapse_to_times(ms.front());
  for (const auto& m : ms) best = std::min(best, collapse_to_times(m));
  return best;
}

// ⟨Γ;⟨Δ⃠Θ⟩⟩ ⇔ ⟨⟨Γ⊗Δ⟩;Θ⟩, read left to right.
bool assoc1(const PolPresentation& a, const PolPresentation& b) {
  return a.right.op() == SOp::Obslash && b.left.op() == SOp::Times && b.left.left() == a.left &&
         b.left.right() == a.right.left() && b.right == a.right.right();
}

// ⟨⟨Γ⊘Δ⟩;Θ⟩ ⇔ ⟨Γ;⟨Δ⊗Θ⟩⟩, read left to right.
bool assoc2(const PolPresentation& a, const PolPresentation& b) {
  return a.left.op() == SOp::Oslash && b.right.op() == SOp::Times && b.left == a.left.left() &&
         b.right.left() == a.left.right() && b.right.right() == a.right;
}

// ⟨Γ;⟨Δ⊗Θ⟩⟩ ⇔ ⟨Γ;⟨Δ op Θ⟩⟩.
bool cnl_step(const PolPresentation& a, const PolPresentation& b, SOp op) {
  return a.left == b.left && a.right.op() == SOp::Times && b.right.op() == op && a.right.left() == b.right.left() &&
         a.right.right() == b.right.right();
}

class PolChecker {
 public:
  explicit PolChecker(LogicVariant v) : v_(v) {}

  CheckResult run(const PolProofNode& n, const std::string& path) {
    if (auto why = local(n)) return {false, "node root" + path + ": " + *why};
    for (std::size_t i = 0; i < n.premises.size(); ++i) {
      auto r = run(*n.premises[i], path + "/" + std::to_string(i));
      if (!r) return r;
    }
    return {};
  }

 private:
  LogicVariant v_;

  static const PolPresentation* pres(const PolJudgment& j) { return std::get_if<PolPresentation>(&j); }
  static const StoupJudgment* stoup(const PolJudgment& j) { return std::get_if<StoupJudgment>(&j); }
  static const PolJudgment& prem(const PolProofNode& n, std::size_t i) { return n.premises[i]->conclusion; }

  static Why arity(const PolProofNode& n, std::size_t k) {
    if (n.premises.size() == k) return std::nullopt;
    return "rule " + n.rule + " needs " + std::to_string(k) + " premises, has " + std::to_string(n.premises.size());
  }

  // Callers evaluate these alongside arity(), so a missing premise is not an error here.
  static Why want_pres(const PolProofNode& n, std::size_t i, const PolPresentation& w) {
    if (i >= n.premises.size()) return std::nullopt;
    auto p = pres(prem(n, i));
    if (!p) return "premise " + std::to_string(i) + " of " + n.rule + " must be a presentation";
    if (!(*p == w)) return "premise " + std::to_string(i) + " of " + n.rule + " should be " + print_pol_presentation(w);
    return std::nullopt;
  }

  static Why want_stoup(const PolProofNode& n, std::size_t i, const StoupJudgment& s) {
    if (i >= n.premises.size()) return std::nullopt;
    auto p = stoup(prem(n, i));
    if (!p) return "premise " + std::to_string(i) + " of " + n.rule + " must be a stoup judgment";
    if (!(*p == s)) return "premise " + std::to_string(i) + " of " + n.rule + " should be " + print_pol_judgment(s);
    return std::nullopt;
  }

  static Why first(std::initializer_list<Why> ws) {
    for (const auto& w : ws)
      if (w) return w;
    return std::nullopt;
  }

  Why local(const PolProofNode& n) const {
    if (auto p = pres(n.conclusion)) {
      if (!positive_leaves(p->left) || !positive_leaves(p->right))
        return std::string("negative formula in structure position");
      return local_pres(n, *p);
    }
    const auto& s = *stoup(n.conclusion);
    if (!positive_leaves(s.context)) return std::string("negative formula in structure position");
    if (!s.stoup.positive()) return std::string("stoup formula must be positive");
    return local_stoup(n, s);
  }

  Why local_stoup(const PolProofNode& n, const StoupJudgment& s) const {
    const PolStructure& g = s.context;
    const PolFormula& f = s.stoup;
    if (n.rule == "I") {
      if (auto w = arity(n, 0)) return w;
      if (!(g.is_leaf() && g.formula() == f)) return std::string("I needs P |- P");
      return std::nullopt;
    }
    if (n.rule == "_R") {
      if (f.conn() != PConn::Down) return std::string("_R needs a stoup _N");
      return first({arity(n, 1), want_pres(n, 0, {g, L(pol_negate(f.body()))})});
    }
    if (n.rule == "*R") {
      if (f.conn() != PConn::Tensor || g.op() != SOp::Times) return std::string("*R needs (G . D) |- P * Q");
      return first({arity(n, 2), want_stoup(n, 0, {g.left(), f.left()}), want_stoup(n, 1, {g.right(), f.right()})});
    }
    if (n.rule == "\\>R") {
      if (f.conn() != PConn::CoLDiv || g.op() != SOp::Obslash) return std::string("\\>R needs (D \\> G) |- N \\> P");
      return first({arity(n, 2), want_stoup(n, 0, {g.left(), pol_negate(f.left())}),
                    want_stoup(n, 1, {g.right(), f.right()})});
    }
    if (n.rule == "</R") {
      if (f.conn() != PConn::CoRDiv || g.op() != SOp::Oslash) return std::string("</R needs (G </ D) |- P </ N");
      return first({arity(n, 2), want_stoup(n, 0, {g.right(), pol_negate(f.right())}),
                    want_stoup(n, 1, {g.left(), f.left()})});
    }
    if (n.rule == "|Rl" || n.rule == "|Rr") {
      if (f.conn() != PConn::Or) return n.rule + " needs a stoup P | Q";
      return first({arity(n, 1), want_stoup(n, 0, {g, n.rule == "|Rl" ? f.left() : f.right()})});
    }
    return "rule " + n.rule + " does not conclude a stoup judgment";
  }

  Why local_pres(const PolProofNode& n, const PolPresentation& w) const {
    const PolStructure& g = w.left;
    if (n.rule == "T") {
      if (auto e = arity(n, 2)) return e;
      auto s = stoup(prem(n, 0));
      if (!s) return std::string("premise 0 of T must be a stoup judgment");
      return first({want_stoup(n, 0, {w.right, s->stoup}), want_pres(n, 1, {g, L(s->stoup)})});
    }
    if (n.rule == "dp-swap") return first({arity(n, 1), want_pres(n, 0, w.swapped())});
    if (n.rule == "dp-assoc1" || n.rule == "dp-assoc2" || n.rule == "Dp" || n.rule == "cnl-oslash" ||
        n.rule == "cnl-obslash")
      return structural(n, w);
    if (n.rule == "Gr1" || n.rule == "Gr2" || n.rule == "Gr3") {
      if (v_ != LogicVariant::LGI) return "rule " + n.rule + " is not available in " + variant_name(v_);
      auto ps = linear_distributivity_premises(w);
      if (ps.empty()) return "conclusion of " + n.rule + " is not of the form ((G1 . G2) ; (D2 . D1))";
      return first({arity(n, 1), want_pres(n, 0, ps[static_cast<std::size_t>(n.rule[2] - '1')])});
    }
    if (!w.right.is_leaf()) return "rule " + n.rule + " needs a formula on the right";
    const PolFormula& f = w.right.formula();
    if (n.rule == "_L") {
      if (f.conn() != PConn::Down) return std::string("_L needs _N on the right");
      return first({arity(n, 1), want_stoup(n, 0, {g, pol_negate(f.body())})});
    }
    if (n.rule == "*L") {
      if (f.conn() != PConn::Tensor) return std::string("*L needs P * Q on the right");
      return first({arity(n, 1), want_pres(n, 0, {g, PolStructure::times(L(f.left()), L(f.right()))})});
    }
    if (n.rule == "\\>L") {
      if (f.conn() != PConn::CoLDiv) return std::string("\\>L needs N \\> P on the right");
      return first({arity(n, 1),
                    want_pres(n, 0, {g, PolStructure::obslash(L(pol_negate(f.left())), L(f.right()))})});
    }
    if (n.rule == "</L") {
      if (f.conn() != PConn::CoRDiv) return std::string("</L needs P </ N on the right");
      return first({arity(n, 1),
                    want_pres(n, 0, {g, PolStructure::oslash(L(f.left()), L(pol_negate(f.right())))})});
    }
    if (n.rule == "|L") {
      if (f.conn() != PConn::Or) return std::string("|L needs P | Q on the right");
      return first({arity(n, 2), want_pres(n, 0, {g, L(f.left())}), want_pres(n, 1, {g, L(f.right())})});
    }
    return "rule " + n.rule + " does not conclude a presentation";
  }

  Why structural(const PolProofNode& n, const PolPresentation& w) const {
    if (auto e = arity(n, 1)) return e;
    auto p = pres(prem(n, 0));
    if (!p) return "premise of " + n.rule + " must be a presentation";
    bool ok = false;
    if (n.rule == "dp-assoc1") ok = assoc1(w, *p) || assoc1(*p, w);
    if (n.rule == "dp-assoc2") ok = assoc2(w, *p) || assoc2(*p, w);
    if (n.rule == "Dp") ok = class_rep(w, v_) == class_rep(*p, v_);
    if (n.rule == "cnl-oslash" || n.rule == "cnl-obslash") {
      if (!is_cnl(v_)) return "rule " + n.rule + " is not available in " + variant_name(v_);
      SOp op = n.rule == "cnl-oslash" ? SOp::Oslash : SOp::Obslash;
      ok = cnl_step(w, *p, op) || cnl_step(*p, w, op);
    }
    if (!ok) return "premise " + print_pol_presentation(*p) + " is not a " + n.rule + " step away";
    return std::nullopt;
  }
};

}  // namespace

CheckResult check_pol(const PolProofNode& p, LogicVariant v) { return PolChecker(v).run(p, ""); }

}  // namespace lgfocus
