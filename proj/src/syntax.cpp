#include "lgfocus/syntax.hpp"

#include <array>
#include <cctype>

namespace lgfocus {

ParseError::ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& what)
    : std::runtime_error(what), offset_(offset), expected_(std::move(expected)) {}

namespace {

constexpr int kTopLevel = 0;
constexpr int kStructLevel = 1;
constexpr int kAtomLevel = 5;

struct OpInfo {
  std::string_view tok;
  int level;
};

// Longest tokens first so "\>" wins over "\".
constexpr std::array<OpInfo, 11> kOps{{
    {"=>", 0}, {"\\>", 4}, {"</", 4}, {";", 0}, {".", 1}, {"&", 2},
    {"|", 2},  {"*", 3},   {"+", 3},  {"/", 4}, {"\\", 4},
}};

class Reader {
 public:
  Reader(std::string_view s, const SyntaxOptions& o) : s_(s), opts_(o) {}

  Term run() {
    Term t = level(opts_.presentation ? kTopLevel : first_inner_level());
    skip_ws();
    if (pos_ < s_.size()) fail_after_operand("");
    return t;
  }

 private:
  std::string_view s_;
  SyntaxOptions opts_;
  std::size_t pos_ = 0;
  std::vector<char> closers_;

  int first_inner_level() const { return opts_.structural ? kStructLevel : kStructLevel + 1; }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool op_enabled(const OpInfo& op) const {
    if (op.level == 0) return opts_.presentation && closers_.empty();
    if (op.level == 1) return opts_.structural;
    return true;
  }

  const OpInfo* peek_op() {
    skip_ws();
    for (const auto& op : kOps)
      if (s_.substr(pos_, op.tok.size()) == op.tok) return &op;
    return nullptr;
  }

  std::vector<std::string> operator_tokens(int min_level) const {
    std::vector<std::string> out;
    for (const auto& op : kOps)
      if (op.level >= min_level && op_enabled(op)) out.emplace_back(op.tok);
    if (!closers_.empty())
      out.emplace_back(1, closers_.back());
    else
      out.emplace_back("end of input");
    return out;
  }

  std::vector<std::string> operand_tokens() const {
    std::vector<std::string> out{"atom", "~", "("};
    if (opts_.shifts) {
      out.emplace_back("^");
      out.emplace_back("_");
    }
    if (opts_.structural) out.emplace_back("{");
    return out;
  }

  [[noreturn]] void fail_after_operand(const std::string& why) {
    auto exp = operator_tokens(kTopLevel);
    std::string msg = "syntax error at offset " + std::to_string(pos_);
    msg += why.empty() ? ": unexpected input" : ": " + why;
    throw ParseError(pos_, std::move(exp), msg);
  }

  [[noreturn]] void fail_operand() {
    std::string msg = "syntax error at offset " + std::to_string(pos_) +
                      (pos_ >= s_.size() ? ": unexpected end of input" : ": expected an operand");
    throw ParseError(pos_, operand_tokens(), msg);
  }

  Term level(int lv) {
    if (lv >= kAtomLevel) return primary();
    Term lhs = level(lv + 1);
    const OpInfo* op = peek_op();
    if (!op || op->level != lv || !op_enabled(*op)) return lhs;
    std::size_t at = pos_;
    pos_ += op->tok.size();
    Term rhs = level(lv + 1);
    const OpInfo* again = peek_op();
    if (again && again->level == lv && op_enabled(*again))
      fail_after_operand("operators '" + std::string(op->tok) + "' and '" + std::string(again->tok) +
                         "' need parentheses");
    Term t;
    t.kind = Term::Kind::Binary;
    t.text = std::string(op->tok);
    t.offset = at;
    t.kids.push_back(std::move(lhs));
    t.kids.push_back(std::move(rhs));
    return t;
  }

  std::string identifier() {
    skip_ws();
    if (pos_ >= s_.size() || !std::islower(static_cast<unsigned char>(s_[pos_]))) fail_atom();
    std::size_t b = pos_;
    while (pos_ < s_.size()) {
      char c = s_[pos_];
      if (std::islower(static_cast<unsigned char>(c)) || std::isdigit(static_cast<unsigned char>(c)) || c == '_')
        ++pos_;
      else
        break;
    }
    return std::string(s_.substr(b, pos_ - b));
  }

  [[noreturn]] void fail_atom() {
    throw ParseError(pos_, {"atom"}, "syntax error at offset " + std::to_string(pos_) + ": expected an atom");
  }

  Term group(char open, char close, Term::Kind wrap) {
    std::size_t at = pos_;
    ++pos_;
    closers_.push_back(close);
    Term inner = level(first_inner_level());
    skip_ws();
    if (pos_ >= s_.size() || s_[pos_] != close) fail_after_operand("");
    ++pos_;
    closers_.pop_back();
    (void)open;
    if (wrap != Term::Kind::Braced) return inner;
    Term t;
    t.kind = Term::Kind::Braced;
    t.offset = at;
    t.kids.push_back(std::move(inner));
    return t;
  }

  Term primary() {
    skip_ws();
    if (pos_ >= s_.size()) fail_operand();
    char c = s_[pos_];
    Term t;
    t.offset = pos_;
    if (c == '(') return group('(', ')', Term::Kind::Binary);
    if (c == '{' && opts_.structural) return group('{', '}', Term::Kind::Braced);
    if (c == '~') {
      ++pos_;
      t.kind = Term::Kind::NegAtom;
      t.text = identifier();
      return t;
    }
    if ((c == '^' || c == '_') && opts_.shifts) {
      ++pos_;
      t.kind = Term::Kind::Prefix;
      t.text = std::string(1, c);
      t.kids.push_back(primary());
      return t;
    }
    if (std::islower(static_cast<unsigned char>(c))) {
      t.kind = Term::Kind::Atom;
      t.text = identifier();
      return t;
    }
    fail_operand();
  }
};

}  // namespace

Term read_term(std::string_view text, const SyntaxOptions& opts) { return Reader(text, opts).run(); }

}  // namespace lgfocus
