#include "lgfocus/format.hpp"

#include <cctype>
#include <vector>

#include "json.hpp"

namespace lgfocus {

using nlohmann::ordered_json;

std::optional<ProofFormat> parse_format(std::string_view s) {
  if (s == "ascii") return ProofFormat::Ascii;
  if (s == "latex") return ProofFormat::Latex;
  if (s == "json") return ProofFormat::Json;
  return std::nullopt;
}

namespace {

// One rendering-neutral node; `fields` carries the format-specific JSON keys.
struct Tree {
  std::string rule;
  std::string conclusion;
  std::string note;  // appended to the rule in ASCII and LaTeX
  ordered_json fields = ordered_json::object();
  std::vector<Tree> premises;
};

std::string occurrence_path(const Occurrence& o) { return print_occurrence(o); }

Tree tree_of(const ProofNode& p) {
  Tree t{p.rule, print_presentation(p.conclusion), "", ordered_json::object(), {}};
  t.fields["main"] = p.main ? ordered_json(occurrence_path(*p.main)) : ordered_json(nullptr);
  for (const auto& q : p.premises) t.premises.push_back(tree_of(*q));
  return t;
}

Tree tree_of(const PolProofNode& p) {
  Tree t{p.rule, print_pol_judgment(p.conclusion), "", ordered_json::object(), {}};
  t.fields["judgment"] = std::holds_alternative<PolPresentation>(p.conclusion) ? "presentation" : "stoup";
  for (const auto& q : p.premises) t.premises.push_back(tree_of(*q));
  return t;
}

Tree tree_of(const FProofNode& p) {
  Tree t{p.rule, print_fjudgment(p.conclusion), "", ordered_json::object(), {}};
  t.fields["judgment"] = std::holds_alternative<FPresentation>(p.conclusion) ? "presentation" : "focus";
  if (p.focus) {
    t.fields["focus"] = {{"path", occurrence_path(*p.focus)}, {"invp_index", p.invp_index}};
    t.note = " @" + occurrence_path(*p.focus) + " #" + std::to_string(p.invp_index);
  }
  for (const auto& q : p.premises) t.premises.push_back(tree_of(*q));
  return t;
}

void ascii(const Tree& t, int depth, std::string& out) {
  out.append(static_cast<std::size_t>(2 * depth), ' ');
  out += t.conclusion + "   [" + t.rule + t.note + "]\n";
  for (const auto& p : t.premises) ascii(p, depth + 1, out);
}

std::string latex_text(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '\\') out += "\\textbackslash{}";
    else if (c == '_' || c == '#' || c == '&' || c == '{' || c == '}' || c == '%' || c == '$') out += std::string("\\") + c;
    else if (c == '^' || c == '~') out += std::string("\\") + c + "{}";
    else out += c;
  }
  return out;
}

void latex(const Tree& t, std::string& out) {
  for (const auto& p : t.premises) latex(p, out);
  out += "  \\infer" + std::to_string(t.premises.size()) + "[\\scriptsize " + latex_text(t.rule + t.note) + "]{" +
         latex_math(t.conclusion) + "}\n";
}

ordered_json json_of(const Tree& t) {
  ordered_json j{{"rule", t.rule}, {"conclusion", t.conclusion}};
  for (const auto& [k, v] : t.fields.items()) j[k] = v;
  ordered_json ps = ordered_json::array();
  for (const auto& p : t.premises) ps.push_back(json_of(p));
  j["premises"] = ps;
  return j;
}

std::string render(const Tree& t, ProofFormat f) {
  std::string out;
  switch (f) {
    case ProofFormat::Ascii: ascii(t, 0, out); break;
    case ProofFormat::Latex:
      out = "\\begin{prooftree}\n";
      latex(t, out);
      out += "\\end{prooftree}\n";
      break;
    case ProofFormat::Json: out = json_of(t).dump(2) + "\n"; break;
  }
  return out;
}

}  // namespace

std::string format_proof(const ProofNode& p, ProofFormat f) { return render(tree_of(p), f); }
std::string format_proof(const PolProofNode& p, ProofFormat f) { return render(tree_of(p), f); }
std::string format_proof(const FProofNode& p, ProofFormat f) { return render(tree_of(p), f); }

std::string latex_math(std::string_view s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    auto next = [&](std::string_view tok) { return s.substr(i, tok.size()) == tok; };
    char c = s[i];
    if (next("|-f")) {
      out += "\\vdash_f ";
      i += 2;
    } else if (next("|-")) {
      out += "\\vdash ";
      ++i;
    } else if (next("</")) {
      out += "\\oslash ";
      ++i;
    } else if (next("\\>")) {
      out += "\\obslash ";
      ++i;
    } else if (c == '\\') {
      out += "\\backslash ";
    } else if (c == '*') {
      out += "\\otimes ";
    } else if (c == '+') {
      out += "\\oplus ";
    } else if (c == '&') {
      out += "\\land ";
    } else if (c == '|') {
      out += "\\lor ";
    } else if (c == '^') {
      out += "\\uparrow ";
    } else if (c == '_') {
      out += "\\downarrow ";
    } else if (c == '.') {
      out += "\\cdot ";
    } else if (c == '{' || c == '}') {
      out += std::string("\\") + c;
    } else if (c == '~' || std::islower(static_cast<unsigned char>(c))) {
      // An atom, barred when negative; underscores in names are literal.
      std::size_t b = c == '~' ? i + 1 : i, j = b;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      std::string name;
      for (char k : s.substr(b, j - b)) name += k == '_' ? std::string("\\_") : std::string(1, k);
      out += c == '~' ? "\\bar{" + name + "}" : name;
      i = j - 1;
    } else if (c != ' ') {
      out += c;
    }
  }
  return "$" + out + "$";
}

}  // namespace lgfocus
