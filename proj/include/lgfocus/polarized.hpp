// Polarized formulas with shifts, the shift decoration of unpolarized
// formulas, the forgetful maps and a checker for the polarized calculus.
#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "lgfocus/formula.hpp"
#include "lgfocus/structure.hpp"
#include "lgfocus/unfocused.hpp"
#include "lgfocus/variant.hpp"

namespace lgfocus {

// Down is ↓N (positive), Up is ↑P (negative). Binary connectives keep the
// surface operand order of Conn.
enum class PConn : std::uint8_t { PosAtom, NegAtom, Tensor, Par, RDiv, LDiv, CoRDiv, CoLDiv, And, Or, Down, Up };

// Constructors enforce the sort discipline and throw std::invalid_argument
// on a mismatch, e.g. a negative operand of ⊗.
class PolFormula {
 public:
  static PolFormula pos(std::string name);
  static PolFormula neg(std::string name);
  static PolFormula make(PConn c, PolFormula l, PolFormula r);
  static PolFormula down(PolFormula n);
  static PolFormula up(PolFormula p);

  PConn conn() const { return node_->conn; }
  Polarity sort() const;
  bool positive() const { return sort() == Polarity::Positive; }
  bool is_atom() const { return conn() == PConn::PosAtom || conn() == PConn::NegAtom; }
  bool is_shift() const { return conn() == PConn::Down || conn() == PConn::Up; }
  const std::string& name() const { return node_->name; }
  const PolFormula& left() const { return *node_->l; }
  const PolFormula& right() const { return *node_->r; }
  // Operand of a shift.
  const PolFormula& body() const { return *node_->l; }
  std::size_t hash() const { return node_->hash; }

  friend bool operator==(const PolFormula& a, const PolFormula& b);
  friend std::strong_ordering operator<=>(const PolFormula& a, const PolFormula& b);

 private:
  struct Node {
    PConn conn;
    std::string name;
    std::unique_ptr<PolFormula> l, r;
    std::size_t hash = 0;
  };
  explicit PolFormula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

PConn pconn_of(Conn c);
Conn conn_of(PConn c);  // binary connectives and atoms only

PolFormula pol_negate(const PolFormula& x);
// True when no ↓↑P or ↑↓N occurs.
bool shift_free_adjacency(const PolFormula& x);

PolFormula decorate(const Formula& a);
Formula forget(const PolFormula& x);

using PolStructure = BasicStructure<PolFormula>;
using PolPresentation = BasicPresentation<PolFormula>;

PolStructure decorate_structure(const Structure& g);
PolPresentation decorate(const Presentation& w);
Structure forget_structure(const PolStructure& g);
Presentation forget(const PolPresentation& w);

PolFormula pol_interp_plus(const PolStructure& g);
PolFormula pol_interp_minus(const PolStructure& g);

// Γ ⊢ P with P in the stoup.
struct StoupJudgment {
  PolStructure context;
  PolFormula stoup;

  friend bool operator==(const StoupJudgment&, const StoupJudgment&) = default;
};

using PolJudgment = std::variant<PolPresentation, StoupJudgment>;

// Rule names: I T _L _R *L *R \>L \>R </L </R |L |Rl |Rr, the display steps
// dp-swap dp-assoc1 dp-assoc2 and Dp (any number of them), Gr1 Gr2 Gr3 under
// lgi, and cnl-oslash cnl-obslash (or Dp modulo the collapse) under cnl.
struct PolProofNode {
  std::string rule;
  PolJudgment conclusion;
  std::vector<std::shared_ptr<const PolProofNode>> premises;
};
using PolProofPtr = std::shared_ptr<const PolProofNode>;

CheckResult check_pol(const PolProofNode& p, LogicVariant v);

std::string print_pol_formula(const PolFormula& x);
std::string print_pol_formula_nested(const PolFormula& x);
std::string print_pol_structure(const PolStructure& s);
std::string print_pol_presentation(const PolPresentation& w);
std::string print_pol_judgment(const PolJudgment& j);

PolFormula parse_pol_formula(std::string_view text);
// negative_leaves admits leaves N, as in focused structures.
PolStructure parse_pol_structure(std::string_view text, bool negative_leaves = false);
PolPresentation parse_pol_presentation(std::string_view text, bool negative_leaves = false);

}  // namespace lgfocus

template <>
struct std::hash<lgfocus::PolFormula> {
  std::size_t operator()(const lgfocus::PolFormula& f) const noexcept { return f.hash(); }
};
