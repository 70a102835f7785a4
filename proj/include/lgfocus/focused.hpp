// Strongly focalized proof search and enumeration over decorated
// presentations. Structure leaves are positive atoms p or negative formulas
// N, the latter standing for ↓N.
#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "lgfocus/polarized.hpp"
#include "lgfocus/unfocused.hpp"

namespace lgfocus {

using FStructure = BasicStructure<PolFormula>;
using FPresentation = BasicPresentation<PolFormula>;
using FContext = BasicContext<PolFormula>;

class UniverseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::set<PolFormula> sigma(const PolFormula& n);
std::set<PolFormula> tau(const PolFormula& p);

// Atoms are identified up to polarity in membership: σ(p̄) = {p̄} while
// τ(p) = {p}, and read literally the closure would miss the atoms of
// invp(N⊥) for N ∈ X^τ.
struct Universe {
  std::set<PolFormula> base;     // X
  std::set<PolFormula> closure;  // X^τ = ∪ τ(↓N), N ∈ X
  bool contains(const PolFormula& f) const {
    return closure.count(f) != 0 || (f.is_atom() && closure.count(pol_negate(f)) != 0);
  }
};

Universe build_universe(const std::vector<PolFormula>& x);

// Structural decompositions of a positive formula, in construction order
// (left operand major). With a universe, every ↓N met must have N in it.
std::vector<FStructure> invp(const PolFormula& p, const Universe* u = nullptr);

// ⊢f left ⇒ pattern, where the pattern is an element of some invp set.
struct FocusJudgment {
  FStructure left;
  FStructure pattern;

  friend bool operator==(const FocusJudgment&, const FocusJudgment&) = default;
  friend auto operator<=>(const FocusJudgment& a, const FocusJudgment& b) {
    if (auto c = a.left <=> b.left; c != 0) return c;
    return a.pattern <=> b.pattern;
  }
};

using FJudgment = std::variant<FPresentation, FocusJudgment>;

// Rules: D (focus and invp_index set), I, R, the splits . </ \>, and the
// linear distributivity rewrites Gr1a Gr1b Gr2a Gr2b Gr3a Gr3b Gr3c Gr3d,
// each with one premise whose left structure is the rewritten one.
struct FProofNode {
  std::string rule;
  FJudgment conclusion;
  std::optional<Occurrence> focus;
  std::size_t invp_index = 0;
  std::vector<std::shared_ptr<const FProofNode>> premises;
};
using FProofPtr = std::shared_ptr<const FProofNode>;

struct FocusedResult {
  Verdict verdict = Verdict::Unprovable;
  FProofPtr proof;
  std::size_t visited = 0;
};

// Under CNL variants the goal is collapsed to ⊗ first and so is every
// judgment in the returned proof.
FocusedResult focused_prove(const FPresentation& goal, const Universe& u, LogicVariant v, SearchLimits lim = {});

struct Enumeration {
  std::vector<FProofPtr> proofs;
  bool truncated = false;
};

// All focused proofs of the goal in canonical order: D choices by occurrence
// (left structure pre-order, then right) and invp index.
Enumeration focused_enumerate(const FPresentation& goal, const Universe& u, LogicVariant v, std::size_t cap);

// The goal set of a presentation: decorate, X = {Γ−, Δ−}, goals invp(Γ+) × invp(Δ+).
struct FocusGoals {
  PolPresentation decorated;
  Universe universe;
  std::vector<FPresentation> goals;
};
FocusGoals focus_goals(const Presentation& w, LogicVariant v);

struct BridgeResult {
  Verdict verdict = Verdict::Unprovable;
  FocusGoals goals;
  std::vector<FProofPtr> proofs;  // one per goal when provable
  std::size_t visited = 0;
};

// Provable iff every goal is focused-provable. Throws std::invalid_argument
// on a CNLCompact vocabulary violation, like prove().
BridgeResult prove_presentation(const Presentation& w, LogicVariant v, SearchLimits lim = {});

// Closure under the display postulates, for goals already over the universe.
bool focused_provable(const FPresentation& goal, const Universe& u, LogicVariant v);

CheckResult check_focused(const FProofNode& p, const Universe& u, LogicVariant v);

// One-step rewrites of the focused linear distributivity rules, conclusion
// to premise, at every position of s.
struct Rewrite {
  std::string rule;
  FStructure result;
};
std::vector<Rewrite> grishin_rewrites(const FStructure& s);

std::string print_fstructure(const FStructure& s);
std::string print_fjudgment(const FJudgment& j);
FStructure parse_fstructure(std::string_view text);
FPresentation parse_fpresentation(std::string_view text);

}  // namespace lgfocus
