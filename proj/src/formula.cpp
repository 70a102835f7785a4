#include "lgfocus/formula.hpp"

#include <functional>

#include "lgfocus/syntax.hpp"

namespace lgfocus {

namespace {

std::size_t mix(std::size_t h, std::size_t v) { return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2)); }

}  // namespace

bool is_atom(Conn c) { return c == Conn::PosAtom || c == Conn::NegAtom; }

Conn dual(Conn c) {
  switch (c) {
    case Conn::PosAtom: return Conn::NegAtom;
    case Conn::NegAtom: return Conn::PosAtom;
    case Conn::Tensor: return Conn::Par;
    case Conn::Par: return Conn::Tensor;
    case Conn::RDiv: return Conn::CoLDiv;
    case Conn::CoLDiv: return Conn::RDiv;
    case Conn::LDiv: return Conn::CoRDiv;
    case Conn::CoRDiv: return Conn::LDiv;
    case Conn::And: return Conn::Or;
    case Conn::Or: return Conn::And;
  }
  return c;
}

Formula Formula::pos(std::string name) {
  auto n = std::make_shared<Node>();
  n->conn = Conn::PosAtom;
  n->hash = mix(std::hash<std::string>{}(name), 1);
  n->name = std::move(name);
  return Formula(std::move(n));
}

Formula Formula::neg(std::string name) {
  auto n = std::make_shared<Node>();
  n->conn = Conn::NegAtom;
  n->hash = mix(std::hash<std::string>{}(name), 2);
  n->name = std::move(name);
  return Formula(std::move(n));
}

Formula Formula::make(Conn c, Formula l, Formula r) {
  auto n = std::make_shared<Node>();
  n->conn = c;
  n->size = 1 + l.size() + r.size();
  n->hash = mix(mix(static_cast<std::size_t>(c) + 17, l.hash()), r.hash());
  n->l = std::make_unique<Formula>(std::move(l));
  n->r = std::make_unique<Formula>(std::move(r));
  return Formula(std::move(n));
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.conn() != b.conn() || a.size() != b.size()) return false;
  if (a.is_atom()) return a.name() == b.name();
  return a.left() == b.left() && a.right() == b.right();
}

std::strong_ordering operator<=>(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.conn() <=> b.conn(); c != 0) return c;
  if (a.is_atom()) return a.name() <=> b.name();
  if (auto c = a.left() <=> b.left(); c != 0) return c;
  return a.right() <=> b.right();
}

Formula negate(const Formula& a) {
  switch (a.conn()) {
    case Conn::PosAtom: return Formula::neg(a.name());
    case Conn::NegAtom: return Formula::pos(a.name());
    default: return Formula::make(dual(a.conn()), negate(a.right()), negate(a.left()));
  }
}

Polarity polarity(const Formula& a) {
  switch (a.conn()) {
    case Conn::PosAtom:
    case Conn::Tensor:
    case Conn::CoRDiv:
    case Conn::CoLDiv:
    case Conn::Or: return Polarity::Positive;
    default: return Polarity::Negative;
  }
}

const char* conn_token(Conn c) {
  switch (c) {
    case Conn::Tensor: return "*";
    case Conn::Par: return "+";
    case Conn::RDiv: return "/";
    case Conn::LDiv: return "\\";
    case Conn::CoRDiv: return "</";
    case Conn::CoLDiv: return "\\>";
    case Conn::And: return "&";
    case Conn::Or: return "|";
    default: return "";
  }
}

namespace {

void print_to(std::string& out, const Formula& a, bool parens) {
  if (a.conn() == Conn::PosAtom) {
    out += a.name();
    return;
  }
  if (a.conn() == Conn::NegAtom) {
    out += '~';
    out += a.name();
    return;
  }
  if (parens) out += '(';
  print_to(out, a.left(), true);
  out += ' ';
  out += conn_token(a.conn());
  out += ' ';
  print_to(out, a.right(), true);
  if (parens) out += ')';
}

Conn conn_of_token(const std::string& tok) {
  for (Conn c : {Conn::Tensor, Conn::Par, Conn::RDiv, Conn::LDiv, Conn::CoRDiv, Conn::CoLDiv, Conn::And, Conn::Or})
    if (tok == conn_token(c)) return c;
  return Conn::PosAtom;
}

}  // namespace

std::string print_formula(const Formula& a) {
  std::string out;
  print_to(out, a, false);
  return out;
}

std::string print_formula_nested(const Formula& a) {
  std::string out;
  print_to(out, a, true);
  return out;
}

Formula formula_from_term(const Term& t) {
  switch (t.kind) {
    case Term::Kind::Atom: return Formula::pos(t.text);
    case Term::Kind::NegAtom: return Formula::neg(t.text);
    case Term::Kind::Binary: {
      Conn c = conn_of_token(t.text);
      if (c == Conn::PosAtom)
        throw ParseError(t.offset, {"formula connective"}, "syntax error at offset " + std::to_string(t.offset) +
                                                                ": '" + t.text + "' is not a formula connective");
      return Formula::make(c, formula_from_term(t.kids[0]), formula_from_term(t.kids[1]));
    }
    default:
      throw ParseError(t.offset, {"formula"},
                       "syntax error at offset " + std::to_string(t.offset) + ": expected a formula");
  }
}

Formula parse_formula(std::string_view text) { return formula_from_term(read_term(text, SyntaxOptions{})); }

}  // namespace lgfocus
