// Command-line front end: prove, enumerate, translate, countermodel,
// check-model and a batch corpus runner.
// Exit codes: 0 provable / valid / all passed, 1 unprovable / invalid / some
// failed, 2 error or indeterminate.
#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "lgfocus/format.hpp"
#include "lgfocus/phase.hpp"
#include "lgfocus/syntax.hpp"

using namespace lgfocus;

namespace {

constexpr int kProvable = 0, kUnprovable = 1, kError = 2;

struct RunConfig {
  std::string command;
  LogicVariant variant = LogicVariant::LG0;
  std::string input;  // inline text or, with from_file, a path
  bool from_file = false;
  ProofFormat format = ProofFormat::Ascii;
  bool focused = true;
  bool certify = false;
  std::size_t max_visited = SearchLimits{}.max_visited;
  std::size_t cap = 100;
  int max_n = 2;
  std::uint64_t seed = 1;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string trim(std::string s) {
  auto ws = [](unsigned char c) { return std::isspace(c) != 0; };
  s.erase(s.begin(), std::find_if_not(s.begin(), s.end(), ws));
  s.erase(std::find_if_not(s.rbegin(), s.rend(), ws).base(), s.end());
  return s;
}

std::string input_text(const RunConfig& c) { return c.from_file ? trim(read_file(c.input)) : c.input; }

std::string input_path(const RunConfig& c) {
  if (!c.from_file) throw std::invalid_argument(c.command + " takes a file: use --file PATH");
  return c.input;
}

int report_countermodel(const Presentation& w, const RunConfig& c, std::ostream& out) {
  auto r = countermodel_search(w, c.variant, {c.max_n, c.seed});
  if (r.model) {
    out << "countermodel:\n" << model_to_json(*r.model) << "\n";
    return kUnprovable;
  }
  out << "no countermodel up to n = " << c.max_n << (r.exhaustive ? " (exhaustive)" : " (sampled)") << "\n";
  return kProvable;
}

int cmd_prove(const RunConfig& c, std::ostream& out) {
  auto w = parse_presentation(input_text(c));
  SearchLimits lim{c.max_visited};
  Verdict verdict;
  std::string proofs;
  if (c.focused) {
    auto r = prove_presentation(w, c.variant, lim);
    verdict = r.verdict;
    for (std::size_t i = 0; i < r.proofs.size(); ++i) {
      if (r.proofs.size() > 1) proofs += "goal " + std::to_string(i + 1) + ":\n";
      proofs += format_proof(*r.proofs[i], c.format);
    }
  } else {
    auto r = prove(w, c.variant, lim);
    verdict = r.verdict;
    if (r.proof) proofs = format_proof(*r.proof, c.format);
  }
  switch (verdict) {
    case Verdict::Provable: out << "PROVABLE\n" << proofs; return kProvable;
    case Verdict::Unprovable:
      out << "UNPROVABLE\n";
      if (c.certify) report_countermodel(w, c, out);
      return kUnprovable;
    case Verdict::Indeterminate: break;
  }
  out << "INDETERMINATE: search limit " << c.max_visited << " reached\n";
  return kError;
}

int cmd_enumerate(const RunConfig& c, std::ostream& out) {
  auto g = focus_goals(parse_presentation(input_text(c)), c.variant);
  std::size_t total = 0;
  bool truncated = false;
  for (std::size_t i = 0; i < g.goals.size(); ++i) {
    auto e = focused_enumerate(g.goals[i], g.universe, c.variant, c.cap);
    out << "goal " << i + 1 << ": " << print_fjudgment(g.goals[i]) << "\n";
    for (std::size_t k = 0; k < e.proofs.size(); ++k) {
      out << "proof " << i + 1 << "." << k + 1 << ":\n" << format_proof(*e.proofs[k], c.format);
    }
    total += e.proofs.size();
    truncated = truncated || e.truncated;
  }
  out << "count: " << total << (truncated ? " (truncated at cap)" : "") << "\n";
  return total > 0 ? kProvable : kUnprovable;
}

bool is_sequent(const std::string& s) {
  return s.find(';') != std::string::npos || s.find("=>") != std::string::npos;
}

bool is_polarized(const std::string& s) { return s.find_first_of("^_") != std::string::npos; }

// Unpolarized input is decorated and forgotten back; polarized input is forgotten.
int cmd_translate(const RunConfig& c, std::ostream& out) {
  auto text = input_text(c);
  if (is_sequent(text)) {
    if (is_polarized(text)) {
      out << print_presentation(forget(parse_pol_presentation(text))) << "\n";
      return kProvable;
    }
    auto w = parse_presentation(text);
    auto d = decorate(w);
    out << print_pol_presentation(d) << "\n";
    return forget(d) == w ? kProvable : kError;
  }
  if (is_polarized(text)) {
    out << print_formula(forget(parse_pol_formula(text))) << "\n";
    return kProvable;
  }
  auto a = parse_formula(text);
  auto d = decorate(a);
  out << print_pol_formula(d) << "\n";
  return forget(d) == a ? kProvable : kError;
}

int cmd_countermodel(const RunConfig& c, std::ostream& out) {
  return report_countermodel(parse_presentation(input_text(c)), c, out);
}

int cmd_check_model(const RunConfig& c, std::ostream& out) {
  auto m = model_from_json(read_file(input_path(c)), c.variant);
  auto v = validate_model(m);
  if (v) {
    out << "VALID " << variant_name(c.variant) << " model, n = " << m.space.n << "\n";
    return kProvable;
  }
  out << "INVALID: " << v.diagnostic << "\n";
  return kUnprovable;
}

struct CorpusEntry {
  int line = 0;
  std::string variant, sequent;
  char expected = '?';
  std::string got, error;
};

std::vector<CorpusEntry> read_corpus(const std::string& path) {
  std::istringstream in(read_file(path));
  std::vector<CorpusEntry> out;
  std::string line;
  for (int n = 1; std::getline(in, line); ++n) {
    if (trim(line).empty() || trim(line)[0] == '#') continue;
    std::vector<std::string> cols;
    std::stringstream ls(line);
    for (std::string col; std::getline(ls, col, '\t');) cols.push_back(trim(col));
    if (cols.size() != 3 || (cols[2] != "P" && cols[2] != "U"))
      throw std::invalid_argument(path + ":" + std::to_string(n) + ": expected `variant TAB sequent TAB P|U`");
    out.push_back({n, cols[0], cols[1], cols[2][0], "", ""});
  }
  return out;
}

void run_entry(CorpusEntry& e, const RunConfig& c) {
  try {
    auto v = parse_variant(e.variant);
    if (!v) throw std::invalid_argument("unknown variant " + e.variant);
    auto w = parse_presentation(e.sequent);
    SearchLimits lim{c.max_visited};
    auto verdict = c.focused ? prove_presentation(w, *v, lim).verdict : prove(w, *v, lim).verdict;
    e.got = verdict == Verdict::Provable ? "P" : verdict == Verdict::Unprovable ? "U" : "?";
  } catch (const std::exception& ex) {
    e.got = "!";
    e.error = ex.what();
  }
}

int cmd_corpus(const RunConfig& c, std::ostream& out) {
  auto entries = read_corpus(input_path(c));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < entries.size();) run_entry(entries[i], c);
  };
  std::vector<std::jthread> pool;
  auto workers = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, 8);
  for (std::size_t i = 0; i < std::min(workers, entries.size()); ++i) pool.emplace_back(worker);
  pool.clear();

  std::size_t passed = 0;
  for (const auto& e : entries) {
    bool ok = e.got.size() == 1 && e.got[0] == e.expected;
    passed += ok;
    out << (ok ? "PASS" : "FAIL") << "  line " << e.line << "  " << e.variant << "  expected " << e.expected
        << "  got " << e.got << "  " << e.sequent;
    if (!e.error.empty()) out << "  (" << e.error << ")";
    out << "\n";
  }
  out << "passed: " << passed << "/" << entries.size() << "\n";
  return passed == entries.size() ? kProvable : kUnprovable;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Focused proof search and phase semantics for LG and CNL"};
  app.require_subcommand(1);
  RunConfig c;
  std::string logic = "lg0", engine = "focused", format = "ascii", input, file;

  auto common = [&](CLI::App* s, bool proofs) {
    s->add_option("input", input, "Sequent `S ; S` or `A => B`, or a formula for translate");
    s->add_option("--file", file, "Read the input from a file");
    s->add_option("--logic", logic, "lg0 | lgi | cnl | cnl-compact")
        ->check(CLI::IsMember({"lg0", "lgi", "cnl", "cnl-compact"}));
    if (proofs) {
      s->add_option("--engine", engine, "focused | unfocused")->check(CLI::IsMember({"focused", "unfocused"}));
      s->add_option("--format", format, "ascii | latex | json")->check(CLI::IsMember({"ascii", "latex", "json"}));
      s->add_option("--max-visited", c.max_visited, "Search node budget")->check(CLI::PositiveNumber);
      s->add_option("--cap", c.cap, "Enumeration cap")->check(CLI::PositiveNumber);
    }
    s->add_option("--max-n", c.max_n, "Largest phase space size for countermodels")->check(CLI::Range(1, 6));
    s->add_option("--seed", c.seed, "Seed for sampled phase spaces");
  };
  for (auto [name, help, proofs] : {std::tuple{"prove", "Decide provability and print a proof", true},
                                    std::tuple{"enumerate", "List all focused proofs", true},
                                    std::tuple{"translate", "Decorate and forget polarities", false},
                                    std::tuple{"countermodel", "Search for a phase space countermodel", false},
                                    std::tuple{"check-model", "Validate a model file", false},
                                    std::tuple{"corpus", "Run a file of sequents with expected verdicts", true}}) {
    auto* s = app.add_subcommand(name, help);
    common(s, proofs);
    if (std::string(name) == "prove") s->add_flag("--certify", c.certify, "Search for a countermodel when unprovable");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kError;
  }

  try {
    c.command = app.get_subcommands().front()->get_name();
    if (input.empty() == file.empty()) throw std::invalid_argument("give exactly one of an inline input or --file");
    c.from_file = !file.empty() || c.command == "check-model" || c.command == "corpus";
    c.input = file.empty() ? input : file;
    c.variant = *parse_variant(logic);
    c.format = *parse_format(format);
    c.focused = engine == "focused";

    if (c.command == "prove") return cmd_prove(c, std::cout);
    if (c.command == "enumerate") return cmd_enumerate(c, std::cout);
    if (c.command == "translate") return cmd_translate(c, std::cout);
    if (c.command == "countermodel") return cmd_countermodel(c, std::cout);
    if (c.command == "check-model") return cmd_check_model(c, std::cout);
    return cmd_corpus(c, std::cout);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
}
