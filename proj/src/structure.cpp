#include "lgfocus/structure.hpp"

#include "lgfocus/syntax.hpp"

namespace lgfocus {

std::string print_occurrence(const Occurrence& o) {
  std::string s = o.side == Side::Left ? "left:" : "right:";
  for (Dir d : o.path) s += d == Dir::L ? 'L' : 'R';
  return s;
}

Formula interp_plus(const Structure& g) {
  switch (g.op()) {
    case SOp::Leaf: return g.formula();
    case SOp::Times: return Formula::tensor(interp_plus(g.left()), interp_plus(g.right()));
    case SOp::Obslash: return Formula::coldiv(interp_minus(g.left()), interp_plus(g.right()));
    case SOp::Oslash: return Formula::cordiv(interp_plus(g.left()), interp_minus(g.right()));
  }
  return g.formula();
}

Formula interp_minus(const Structure& g) {
  switch (g.op()) {
    case SOp::Leaf: return negate(g.formula());
    case SOp::Times: return Formula::par(interp_minus(g.right()), interp_minus(g.left()));
    case SOp::Obslash: return Formula::rdiv(interp_minus(g.right()), interp_plus(g.left()));
    case SOp::Oslash: return Formula::ldiv(interp_plus(g.right()), interp_minus(g.left()));
  }
  return g.formula();
}

const char* sop_token(SOp op) {
  switch (op) {
    case SOp::Times: return ".";
    case SOp::Oslash: return "</";
    case SOp::Obslash: return "\\>";
    case SOp::Leaf: break;
  }
  return "";
}

namespace {

bool is_coimplication(Conn c) { return c == Conn::CoRDiv || c == Conn::CoLDiv; }

void print_to(std::string& out, const Structure& s, bool top) {
  if (s.is_leaf()) {
    const Formula& f = s.formula();
    // Coimplications would read as structural connectives here.
    if (is_coimplication(f.conn()))
      out += "{" + print_formula(f) + "}";
    else
      out += top ? print_formula(f) : print_formula_nested(f);
    return;
  }
  out += '(';
  print_to(out, s.left(), false);
  out += ' ';
  out += sop_token(s.op());
  out += ' ';
  print_to(out, s.right(), false);
  out += ')';
}

Structure structure_from_term(const Term& t) {
  if (t.kind == Term::Kind::Braced) return Structure::leaf(formula_from_term(t.kids[0]));
  if (t.kind == Term::Kind::Binary) {
    if (t.text == ".") return Structure::times(structure_from_term(t.kids[0]), structure_from_term(t.kids[1]));
    if (t.text == "</") return Structure::oslash(structure_from_term(t.kids[0]), structure_from_term(t.kids[1]));
    if (t.text == "\\>") return Structure::obslash(structure_from_term(t.kids[0]), structure_from_term(t.kids[1]));
  }
  return Structure::leaf(formula_from_term(t));
}

}  // namespace

std::string print_structure(const Structure& s) {
  std::string out;
  print_to(out, s, true);
  return out;
}

std::string print_presentation(const Presentation& w) {
  return print_structure(w.left) + " ; " + print_structure(w.right);
}

Structure parse_structure(std::string_view text) {
  SyntaxOptions o;
  o.structural = true;
  return structure_from_term(read_term(text, o));
}

Presentation parse_presentation(std::string_view text) {
  SyntaxOptions o;
  o.structural = true;
  o.presentation = true;
  Term t = read_term(text, o);
  if (t.kind != Term::Kind::Binary || (t.text != ";" && t.text != "=>"))
    throw ParseError(text.size(), {";", "=>"}, "syntax error at offset " + std::to_string(text.size()) +
                                                   ": a presentation needs ';' or '=>'");
  if (t.text == "=>")
    return {Structure::leaf(formula_from_term(t.kids[0])), Structure::leaf(negate(formula_from_term(t.kids[1])))};
  return {structure_from_term(t.kids[0]), structure_from_term(t.kids[1])};
}

}  // namespace lgfocus
