// Unpolarized formulas of LG/CNL with computed linear negation.
#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

namespace lgfocus {

struct Term;

// CoLDiv and LDiv keep surface operand order: B\A is ldiv(B, A), B⃠A is coldiv(B, A).
enum class Conn : std::uint8_t { PosAtom, NegAtom, Tensor, Par, RDiv, LDiv, CoRDiv, CoLDiv, And, Or };

enum class Polarity : std::uint8_t { Positive, Negative };

inline Polarity flip(Polarity p) { return p == Polarity::Positive ? Polarity::Negative : Polarity::Positive; }

// The connective that negation maps a binary connective to. Atoms map to each other.
Conn dual(Conn c);
bool is_atom(Conn c);

class Formula {
 public:
  static Formula pos(std::string name);
  static Formula neg(std::string name);
  static Formula make(Conn c, Formula l, Formula r);

  static Formula tensor(Formula a, Formula b) { return make(Conn::Tensor, std::move(a), std::move(b)); }
  static Formula par(Formula a, Formula b) { return make(Conn::Par, std::move(a), std::move(b)); }
  static Formula rdiv(Formula a, Formula b) { return make(Conn::RDiv, std::move(a), std::move(b)); }
  static Formula ldiv(Formula b, Formula a) { return make(Conn::LDiv, std::move(b), std::move(a)); }
  static Formula cordiv(Formula a, Formula b) { return make(Conn::CoRDiv, std::move(a), std::move(b)); }
  static Formula coldiv(Formula b, Formula a) { return make(Conn::CoLDiv, std::move(b), std::move(a)); }
  static Formula conj(Formula a, Formula b) { return make(Conn::And, std::move(a), std::move(b)); }
  static Formula disj(Formula a, Formula b) { return make(Conn::Or, std::move(a), std::move(b)); }

  Conn conn() const { return node_->conn; }
  bool is_atom() const { return lgfocus::is_atom(node_->conn); }
  const std::string& name() const { return node_->name; }
  const Formula& left() const { return *node_->l; }
  const Formula& right() const { return *node_->r; }
  // Number of binary connectives.
  std::size_t size() const { return node_->size; }
  std::size_t hash() const { return node_->hash; }

  friend bool operator==(const Formula& a, const Formula& b);
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b);

 private:
  struct Node {
    Conn conn;
    std::string name;
    std::unique_ptr<Formula> l, r;
    std::size_t size = 0;
    std::size_t hash = 0;
  };
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

Formula negate(const Formula& a);
Polarity polarity(const Formula& a);

// Top level is printed without outer parentheses; every nested binary is parenthesized.
std::string print_formula(const Formula& a);
// Nested form, parenthesized even at the top.
std::string print_formula_nested(const Formula& a);

Formula parse_formula(std::string_view text);
Formula formula_from_term(const Term& t);

const char* conn_token(Conn c);

}  // namespace lgfocus

template <>
struct std::hash<lgfocus::Formula> {
  std::size_t operator()(const lgfocus::Formula& f) const noexcept { return f.hash(); }
};
