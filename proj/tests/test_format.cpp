#include "doctest.h"
#include "json.hpp"
#include "lgfocus/format.hpp"

using namespace lgfocus;
using nlohmann::json;

namespace {

FProofPtr atomic_proof() {
  auto w = parse_fpresentation("p ; ~p");
  auto u = build_universe({parse_pol_formula("^p"), parse_pol_formula("~p")});
  auto r = focused_prove(w, u, LogicVariant::LG0);
  REQUIRE(r.proof);
  return r.proof;
}

}  // namespace

TEST_CASE("focused proofs") {
  auto p = atomic_proof();
  CHECK(format_proof(*p, ProofFormat::Ascii) == "p ; ~p   [D @right: #0]\n  p |-f p   [I]\n");

  auto j = json::parse(format_proof(*p, ProofFormat::Json));
  CHECK(j["rule"] == "D");
  CHECK(j["judgment"] == "presentation");
  CHECK(j["focus"]["path"] == "right:");
  CHECK(j["focus"]["invp_index"] == 0);
  REQUIRE(j["premises"].size() == 1);
  CHECK(j["premises"][0]["judgment"] == "focus");
  CHECK_FALSE(j["premises"][0].contains("focus"));

  auto tex = format_proof(*p, ProofFormat::Latex);
  CHECK(tex.find("\\infer0[\\scriptsize I]{$p\\vdash_f p$}") != std::string::npos);
  CHECK(tex.find("\\infer1") != std::string::npos);
  CHECK(tex.find("\\bar{p}") != std::string::npos);
}

TEST_CASE("unfocused and polarized proofs") {
  auto r = prove(parse_presentation("(p * q) ; (~q + ~p)"), LogicVariant::LG0);
  REQUIRE(r.proof);
  auto j = json::parse(format_proof(*r.proof, ProofFormat::Json));
  CHECK(j.contains("main"));
  CHECK(j["conclusion"] == "p * q ; ~q + ~p");
  auto ascii = format_proof(*r.proof, ProofFormat::Ascii);
  CHECK(ascii.rfind("p * q ; ~q + ~p   [", 0) == 0);

  auto pol = std::make_shared<PolProofNode>(
      PolProofNode{"I", StoupJudgment{parse_pol_structure("p"), parse_pol_formula("p")}, {}});
  auto pj = json::parse(format_proof(*pol, ProofFormat::Json));
  CHECK(pj["judgment"] == "stoup");
  CHECK(format_proof(*pol, ProofFormat::Latex).find("$p\\vdash p$") != std::string::npos);
}

TEST_CASE("latex math") {
  CHECK(latex_math("(a_1 </ ~b) \\> ^(c & d)") == "$(a\\_1\\oslash \\bar{b})\\obslash \\uparrow (c\\land d)$");
  CHECK(parse_format("json") == ProofFormat::Json);
  CHECK_FALSE(parse_format("xml"));
}
