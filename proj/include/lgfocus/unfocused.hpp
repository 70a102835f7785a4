// Cut-free backward search and checking for the unfocused display calculus.
#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lgfocus/structure.hpp"
#include "lgfocus/variant.hpp"

namespace lgfocus {

// Rule names: Ax, * + / \ </ \> &l &r |, and Gr1 Gr2 Gr3 for the linear
// distributivity rules. For logical rules `main` addresses the principal
// formula in `conclusion`; for Gr rules `conclusion` is already in the
// displayed shape ⟨⟨Γ1⊗Γ2⟩;⟨Δ2⊗Δ1⟩⟩ and `main` is empty.
struct ProofNode {
  std::string rule;
  Presentation conclusion;
  std::optional<Occurrence> main;
  std::vector<std::shared_ptr<const ProofNode>> premises;
};
using ProofPtr = std::shared_ptr<const ProofNode>;

struct SearchLimits {
  std::size_t max_visited = 2'000'000;
};

enum class Verdict { Provable, Unprovable, Indeterminate };
const char* verdict_name(Verdict v);

struct ProveResult {
  Verdict verdict = Verdict::Unprovable;
  ProofPtr proof;
  std::size_t visited = 0;
};

// Throws std::invalid_argument when a CNLCompact query uses coimplications or
// implications, in formulas or in structure.
ProveResult prove(const Presentation& w, LogicVariant v, SearchLimits lim = {});

struct CheckResult {
  bool ok = true;
  std::string diagnostic;  // first failing node, as a premise-index path
  explicit operator bool() const { return ok; }
};

CheckResult check(const ProofNode& p, LogicVariant v);

// Key of the class of w under display and, for CNL variants, the collapse of
// structural connectives. Equal keys mean display-equivalent presentations.
std::string class_key(const Presentation& w, LogicVariant v);

bool compact_vocabulary(const Formula& f);
bool compact_vocabulary(const Presentation& w);
// Rewrites implications and coimplications through the CNL identifications
// A/B = A⊕B⊥, B\A = B⊥⊕A, A⊘B = A⊗B⊥, B⃠A = B⊥⊗A.
Formula to_compact(const Formula& f);
Presentation to_compact(const Presentation& w);

}  // namespace lgfocus
