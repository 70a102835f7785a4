// Finite phase spaces, facts, the valuation of polarized formulas, space
// validation per variant, soundness checks and countermodel search.
#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lgfocus/polarized.hpp"
#include "lgfocus/variant.hpp"

namespace lgfocus {

// A subset of the carrier {0..n-1}, bit x standing for phase x.
using Subset = std::uint64_t;
constexpr int kMaxPhases = 6;

// Operation tables are row-major n×n; obslash(x, y) is the surface x⃠y.
struct PhaseSpace {
  int n = 1;
  std::vector<int> tensor, oslash, obslash;
  std::vector<std::uint8_t> bot;
  LogicVariant variant = LogicVariant::LG0;

  int times(int x, int y) const { return tensor[static_cast<std::size_t>(x * n + y)]; }
  int os(int x, int y) const { return oslash[static_cast<std::size_t>(x * n + y)]; }
  int obs(int x, int y) const { return obslash[static_cast<std::size_t>(x * n + y)]; }
  bool perp(int x, int y) const { return bot[static_cast<std::size_t>(x * n + y)] != 0; }
  Subset carrier() const { return n >= 64 ? ~Subset{0} : (Subset{1} << n) - 1; }

  // The three-component presentation for CNL, with ⊘ = ⃠ = ⊗.
  static PhaseSpace cnl(int n, std::vector<int> tensor, std::vector<std::uint8_t> bot,
                        LogicVariant v = LogicVariant::CNL);
};

Subset bot_set(const PhaseSpace& s, Subset a);
Subset closure(const PhaseSpace& s, Subset a);
bool is_fact(const PhaseSpace& s, Subset a);
std::vector<Subset> facts(const PhaseSpace& s);

Subset times(const PhaseSpace& s, Subset a, Subset b);
Subset larrow(const PhaseSpace& s, Subset a, Subset b);
Subset rarrow(const PhaseSpace& s, Subset a, Subset b);

struct Model {
  PhaseSpace space;
  std::map<std::string, Subset> valuation;  // positive atom names to facts
};

// Throw std::invalid_argument on an atom without a value.
Subset eval_pos(const PolFormula& p, const Model& m);
Subset eval_neg(const PolFormula& n, const Model& m);

struct Validation {
  bool ok = true;
  std::string diagnostic;  // the first violated condition with its witnesses
  explicit operator bool() const { return ok; }
};

// Table shapes, symmetry, both residuation laws and the variant conditions.
Validation validate_space(const PhaseSpace& s);
// validate_space plus: every valuation image is a fact.
Validation validate_model(const Model& m);

// The four inclusions of the equivalence lemma, in the order
// ⟦↑Γ+⟧ ⊆ ⟦Δ−⟧, ⟦↑Δ+⟧ ⊆ ⟦Γ−⟧, ⟦↓Δ−⟧ ⊆ ⟦Γ+⟧, ⟦↓Γ−⟧ ⊆ ⟦Δ+⟧.
std::array<bool, 4> four_inclusions(const Model& m, const PolPresentation& w);

// ⟦↓Γ−⟧+ ⊆ ⟦Δ+⟧+. Throws std::logic_error if the four inclusions disagree.
bool soundness_check(const Model& m, const PolPresentation& w);

// Calls f on every valid space of size n up to the choice among phases with
// the same ⊥-row as operation results, which no valuation can tell apart.
// n ≤ 3. Stops early when f returns false.
void enumerate_spaces(int n, LogicVariant v, const std::function<bool(const PhaseSpace&)>& f);

// Valid spaces of size n: a seeded uniform pick among all of them for n ≤ 3,
// rejection sampling over random tables above. May return fewer than count.
std::vector<PhaseSpace> sample_spaces(int n, LogicVariant v, std::size_t count, std::uint64_t seed,
                                      std::size_t attempts = 200000);

struct CountermodelOptions {
  int max_n = 2;
  std::uint64_t seed = 1;
  std::size_t attempts = 200000;  // random tables tried per size above 3
};

struct CountermodelResult {
  std::optional<Model> model;
  std::size_t spaces = 0;  // valid spaces examined
  bool exhaustive = true;  // every size searched was enumerated in full
};

// Decorates w and looks for a model with ⟦↓Γ−⟧+ ⊄ ⟦Δ+⟧+ over spaces of size
// 1..max_n (max_n ≤ kMaxPhases). A result is a certificate of unprovability.
CountermodelResult countermodel_search(const Presentation& w, LogicVariant v, const CountermodelOptions& o = {});

// {"n", "tensor", "oslash", "obslash", "bot", "valuation"}; the variant is
// supplied by the caller. Throws std::invalid_argument on malformed input.
std::string model_to_json(const Model& m);
Model model_from_json(const std::string& text, LogicVariant v);

}  // namespace lgfocus
