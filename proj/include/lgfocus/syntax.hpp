// Shared ASCII surface syntax for formulas, polarized formulas, structures
// and presentations. The reader produces an untyped term tree; each module
// converts terms into its own types.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lgfocus {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& what);

  std::size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

struct Term {
  enum class Kind { Atom, NegAtom, Prefix, Binary, Braced };
  Kind kind = Kind::Atom;
  std::string text;  // atom name, prefix symbol or binary operator token
  std::vector<Term> kids;
  std::size_t offset = 0;
};

struct SyntaxOptions {
  bool shifts = false;       // ^ and _ prefixes
  bool structural = false;   // '.', '{ }'
  bool presentation = false; // top-level ';' or '=>'
};

// Operators within one precedence level cannot be chained without
// parentheses. Levels, loosest first: ';' '=>' | '.' | '&' '|' | '*' '+' |
// '/' '\' '</' '\>'. Fully parenthesized input never depends on them.
Term read_term(std::string_view text, const SyntaxOptions& opts);

}  // namespace lgfocus
