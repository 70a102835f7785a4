// Proof rendering: indented ASCII trees, LaTeX (ebproof) and JSON.
#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "lgfocus/focused.hpp"
#include "lgfocus/polarized.hpp"
#include "lgfocus/unfocused.hpp"

namespace lgfocus {

enum class ProofFormat { Ascii, Latex, Json };

std::optional<ProofFormat> parse_format(std::string_view s);

// JSON shapes: {"rule", "conclusion", "main": path|null, "premises"} for
// unfocused proofs; polarized ones add "judgment": "presentation"|"stoup";
// focused ones add "judgment": "presentation"|"focus" and, on D nodes,
// "focus": {"path", "invp_index"}.
std::string format_proof(const ProofNode& p, ProofFormat f);
std::string format_proof(const PolProofNode& p, ProofFormat f);
std::string format_proof(const FProofNode& p, ProofFormat f);

// Math-mode LaTeX for a printed formula, structure or judgment.
std::string latex_math(std::string_view ascii);

}  // namespace lgfocus
