#include "lgfocus/phase.hpp"

#include <bit>
#include <random>
#include <set>
#include <stdexcept>

#include "json.hpp"
#include "lgfocus/unfocused.hpp"

namespace lgfocus {

PhaseSpace PhaseSpace::cnl(int n, std::vector<int> tensor, std::vector<std::uint8_t> bot, LogicVariant v) {
  PhaseSpace s;
  s.n = n;
  s.oslash = tensor;
  s.obslash = tensor;
  s.tensor = std::move(tensor);
  s.bot = std::move(bot);
  s.variant = v;
  return s;
}

namespace {

bool has(Subset a, int x) { return (a >> x) & 1U; }
Subset bit(int x) { return Subset{1} << x; }

Subset row(const PhaseSpace& s, int x) {
  Subset r = 0;
  for (int y = 0; y < s.n; ++y)
    if (s.perp(x, y)) r |= bit(y);
  return r;
}

// {op(x, y) | x ∈ A⊥, y ∈ B⊥}⊥
template <class Op>
Subset lift(const PhaseSpace& s, Subset a, Subset b, Op op) {
  Subset ab = bot_set(s, a), bb = bot_set(s, b), img = 0;
  for (int x = 0; x < s.n; ++x)
    if (has(ab, x))
      for (int y = 0; y < s.n; ++y)
        if (has(bb, y)) img |= bit(op(x, y));
  return bot_set(s, img);
}

}  // namespace

Subset bot_set(const PhaseSpace& s, Subset a) {
  Subset out = 0;
  for (int x = 0; x < s.n; ++x) {
    bool all = true;
    for (int y = 0; y < s.n && all; ++y)
      if (has(a, y) && !s.perp(x, y)) all = false;
    if (all) out |= bit(x);
  }
  return out;
}

Subset closure(const PhaseSpace& s, Subset a) { return bot_set(s, bot_set(s, a)); }
bool is_fact(const PhaseSpace& s, Subset a) { return closure(s, a) == a; }

std::vector<Subset> facts(const PhaseSpace& s) {
  std::vector<Subset> out;
  for (Subset a = 0; a <= s.carrier(); ++a)
    if (is_fact(s, a)) out.push_back(a);
  return out;
}

Subset times(const PhaseSpace& s, Subset a, Subset b) {
  return lift(s, a, b, [&](int x, int y) { return s.times(x, y); });
}
Subset larrow(const PhaseSpace& s, Subset a, Subset b) {
  return lift(s, a, b, [&](int x, int y) { return s.os(x, y); });
}
Subset rarrow(const PhaseSpace& s, Subset a, Subset b) {
  return lift(s, a, b, [&](int x, int y) { return s.obs(x, y); });
}

Subset eval_pos(const PolFormula& p, const Model& m) {
  const PhaseSpace& s = m.space;
  switch (p.conn()) {
    case PConn::PosAtom: {
      auto it = m.valuation.find(p.name());
      if (it == m.valuation.end()) throw std::invalid_argument("no value for atom " + p.name());
      return it->second;
    }
    case PConn::Tensor: return times(s, eval_pos(p.left(), m), eval_pos(p.right(), m));
    case PConn::CoRDiv: return larrow(s, eval_pos(p.left(), m), eval_neg(p.right(), m));
    case PConn::CoLDiv: return rarrow(s, eval_neg(p.left(), m), eval_pos(p.right(), m));
    case PConn::Or: return eval_pos(p.left(), m) & eval_pos(p.right(), m);
    case PConn::Down: return bot_set(s, eval_neg(p.body(), m));
    default: throw std::invalid_argument("eval_pos needs a positive formula");
  }
}

Subset eval_neg(const PolFormula& n, const Model& m) {
  const PhaseSpace& s = m.space;
  switch (n.conn()) {
    case PConn::NegAtom: return eval_pos(pol_negate(n), m);
    case PConn::Par: return times(s, eval_neg(n.right(), m), eval_neg(n.left(), m));
    case PConn::RDiv: return rarrow(s, eval_pos(n.right(), m), eval_neg(n.left(), m));  // M/Q: Q+ → M−
    // Q\M: M− ← Q+, so that ⟦Q\M⟧− = ⟦M⊥ ⊘ Q⊥⟧+.
    case PConn::LDiv: return larrow(s, eval_neg(n.right(), m), eval_pos(n.left(), m));
    case PConn::And: return eval_neg(n.left(), m) & eval_neg(n.right(), m);
    case PConn::Up: return bot_set(s, eval_pos(n.body(), m));
    default: throw std::invalid_argument("eval_neg needs a negative formula");
  }
}

namespace {

std::string pair(int x, int y) { return "<" + std::to_string(x) + "," + std::to_string(y) + ">"; }

Validation fail(std::string why) { return {false, std::move(why)}; }

Validation check_shape(const PhaseSpace& s) {
  if (s.n < 1 || s.n > kMaxPhases)
    return fail("carrier size " + std::to_string(s.n) + " outside 1.." + std::to_string(kMaxPhases));
  auto nn = static_cast<std::size_t>(s.n * s.n);
  for (const auto* t : {&s.tensor, &s.oslash, &s.obslash}) {
    if (t->size() != nn) return fail("operation table is not " + std::to_string(s.n) + "x" + std::to_string(s.n));
    for (int e : *t)
      if (e < 0 || e >= s.n) return fail("operation value " + std::to_string(e) + " outside the carrier");
  }
  if (s.bot.size() != nn) return fail("bot is not " + std::to_string(s.n) + "x" + std::to_string(s.n));
  return {};
}

Validation check_laws(const PhaseSpace& s) {
  const int n = s.n;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (s.perp(x, y) && !s.perp(y, x)) return fail("symmetry: " + pair(x, y) + " in bot but " + pair(y, x) + " not");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        std::string w = " at x=" + std::to_string(x) + " y=" + std::to_string(y) + " z=" + std::to_string(z);
        if (s.perp(s.times(x, y), z) != s.perp(x, s.obs(y, z))) return fail("residuation <x*y,z> vs <x,y\\>z>" + w);
        if (s.perp(x, s.times(y, z)) != s.perp(s.os(x, y), z)) return fail("residuation <x,y*z> vs <x</y,z>" + w);
      }
  if (s.variant == LogicVariant::LGI) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int u = 0; u < n; ++u)
          for (int v = 0; v < n; ++v) {
            bool concl = s.perp(s.times(x, y), s.times(u, v));
            if (concl) continue;
            std::string w = " fails at x=" + std::to_string(x) + " y=" + std::to_string(y) + " u=" + std::to_string(u) +
                            " v=" + std::to_string(v);
            if (s.perp(s.os(y, u), s.os(v, x))) return fail("Gr1" + w);
            if (s.perp(s.obs(v, x), s.obs(y, u))) return fail("Gr2" + w);
            if (s.perp(s.os(u, x), s.obs(v, y))) return fail("Gr3" + w);
          }
  }
  if (is_cnl(s.variant)) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z) {
          bool t = s.perp(s.times(x, y), z);
          if (s.perp(s.os(x, y), z) != t || s.perp(s.obs(x, y), z) != t)
            return fail("cnl identification at x=" + std::to_string(x) + " y=" + std::to_string(y) +
                        " z=" + std::to_string(z));
        }
  }
  return {};
}

}  // namespace

Validation validate_space(const PhaseSpace& s) {
  if (auto r = check_shape(s); !r) return r;
  return check_laws(s);
}

Validation validate_model(const Model& m) {
  if (auto r = validate_space(m.space); !r) return r;
  for (const auto& [atom, a] : m.valuation) {
    if (a & ~m.space.carrier()) return fail("value of " + atom + " leaves the carrier");
    if (!is_fact(m.space, a)) return fail("value of " + atom + " is not a fact");
  }
  return {};
}

std::array<bool, 4> four_inclusions(const Model& m, const PolPresentation& w) {
  auto sub = [](Subset a, Subset b) { return (a & ~b) == 0; };
  PolFormula gp = pol_interp_plus(w.left), gm = pol_interp_minus(w.left);
  PolFormula dp = pol_interp_plus(w.right), dm = pol_interp_minus(w.right);
  return {sub(eval_neg(PolFormula::up(gp), m), eval_neg(dm, m)), sub(eval_neg(PolFormula::up(dp), m), eval_neg(gm, m)),
          sub(eval_pos(PolFormula::down(dm), m), eval_pos(gp, m)),
          sub(eval_pos(PolFormula::down(gm), m), eval_pos(dp, m))};
}

bool soundness_check(const Model& m, const PolPresentation& w) {
  auto inc = four_inclusions(m, w);
  if (inc[0] != inc[3] || inc[1] != inc[3] || inc[2] != inc[3])
    throw std::logic_error("the four inclusions disagree");
  return inc[3];
}

// ---- space enumeration ----

namespace {

// Everything observable about a phase is its ⊥-row, so operation results
// range over one representative phase per row.
struct Rows {
  std::vector<Subset> of;  // row of each phase
  std::vector<int> reps;   // least phase of each distinct row
  int rep_for(Subset r) const {
    for (int e : reps)
      if (of[static_cast<std::size_t>(e)] == r) return e;
    return -1;
  }
};

Rows rows_of(const PhaseSpace& s) {
  Rows r;
  std::set<Subset> seen;
  for (int x = 0; x < s.n; ++x) {
    r.of.push_back(row(s, x));
    if (seen.insert(r.of.back()).second) r.reps.push_back(x);
  }
  return r;
}

// Fills ⊘ and ⃠ from ⊗ and ⊥ as residuation forces them; false if no phase fits.
bool derive_residuals(PhaseSpace& s, const Rows& r) {
  const int n = s.n;
  s.oslash.assign(static_cast<std::size_t>(n * n), 0);
  s.obslash.assign(static_cast<std::size_t>(n * n), 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Subset want_obs = 0, want_os = 0;  // rows of a⃠b and a⊘b
      for (int x = 0; x < n; ++x)
        if (s.perp(s.times(x, a), b)) want_obs |= bit(x);
      for (int z = 0; z < n; ++z)
        if (s.perp(a, s.times(b, z))) want_os |= bit(z);
      int e1 = r.rep_for(want_obs), e2 = r.rep_for(want_os);
      if (e1 < 0 || e2 < 0) return false;
      s.obslash[static_cast<std::size_t>(a * n + b)] = e1;
      s.oslash[static_cast<std::size_t>(a * n + b)] = e2;
    }
  return true;
}

PhaseSpace with_bot(int n, std::uint64_t bits, LogicVariant v) {
  PhaseSpace s;
  s.n = n;
  s.variant = v;
  s.bot.assign(static_cast<std::size_t>(n * n), 0);
  int k = 0;
  for (int x = 0; x < n; ++x)
    for (int y = x; y < n; ++y, ++k)
      if ((bits >> k) & 1U) s.bot[static_cast<std::size_t>(x * n + y)] = s.bot[static_cast<std::size_t>(y * n + x)] = 1;
  return s;
}

}  // namespace

void enumerate_spaces(int n, LogicVariant v, const std::function<bool(const PhaseSpace&)>& f) {
  if (n < 1 || n > 3) throw std::invalid_argument("exhaustive enumeration needs 1 <= n <= 3");
  const int pairs = n * (n + 1) / 2, cells = n * n;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << pairs); ++bits) {
    PhaseSpace s = with_bot(n, bits, v);
    Rows r = rows_of(s);
    std::vector<std::size_t> idx(static_cast<std::size_t>(cells), 0);
    s.tensor.assign(static_cast<std::size_t>(cells), r.reps.front());
    for (;;) {
      if (derive_residuals(s, r) && check_laws(s) && !f(s)) return;
      int i = 0;
      for (; i < cells; ++i) {
        auto& k = idx[static_cast<std::size_t>(i)];
        if (++k < r.reps.size()) {
          s.tensor[static_cast<std::size_t>(i)] = r.reps[k];
          break;
        }
        k = 0;
        s.tensor[static_cast<std::size_t>(i)] = r.reps.front();
      }
      if (i == cells) break;
    }
  }
}

std::vector<PhaseSpace> sample_spaces(int n, LogicVariant v, std::size_t count, std::uint64_t seed,
                                      std::size_t attempts) {
  std::mt19937_64 rng(seed);
  std::vector<PhaseSpace> out;
  if (n <= 3) {
    std::vector<PhaseSpace> all;
    enumerate_spaces(n, v, [&](const PhaseSpace& s) {
      all.push_back(s);
      return true;
    });
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    for (std::size_t i = 0; i < count && !all.empty(); ++i) out.push_back(all[pick(rng)]);
    return out;
  }
  if (n > kMaxPhases) throw std::invalid_argument("carrier size above " + std::to_string(kMaxPhases));
  const int pairs = n * (n + 1) / 2;
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (std::size_t t = 0; t < attempts && out.size() < count; ++t) {
    double density = unit(rng);
    std::uint64_t bits = 0;
    for (int k = 0; k < pairs; ++k)
      if (unit(rng) < density) bits |= std::uint64_t{1} << k;
    PhaseSpace s = with_bot(n, bits, v);
    Rows r = rows_of(s);
    std::uniform_int_distribution<std::size_t> pick(0, r.reps.size() - 1);
    s.tensor.resize(static_cast<std::size_t>(n * n));
    for (auto& e : s.tensor) e = r.reps[pick(rng)];
    if (derive_residuals(s, r) && check_laws(s)) out.push_back(std::move(s));
  }
  return out;
}

// ---- countermodels ----

namespace {

void atoms_of(const PolFormula& f, std::set<std::string>& out) {
  if (f.is_atom()) {
    out.insert(f.name());
    return;
  }
  atoms_of(f.left(), out);
  if (!f.is_shift()) atoms_of(f.right(), out);
}

// Tries every fact-valued valuation of the atoms on s.
std::optional<Model> refute(const PhaseSpace& s, const std::vector<std::string>& atoms, const PolPresentation& w) {
  auto fs = facts(s);
  std::vector<std::size_t> idx(atoms.size(), 0);
  Model m{s, {}};
  for (;;) {
    for (std::size_t i = 0; i < atoms.size(); ++i) m.valuation[atoms[i]] = fs[idx[i]];
    if (!soundness_check(m, w)) return m;
    std::size_t i = 0;
    for (; i < atoms.size(); ++i) {
      if (++idx[i] < fs.size()) break;
      idx[i] = 0;
    }
    if (i == atoms.size()) return std::nullopt;
  }
}

}  // namespace

CountermodelResult countermodel_search(const Presentation& w, LogicVariant v, const CountermodelOptions& o) {
  if (o.max_n < 1 || o.max_n > kMaxPhases)
    throw std::invalid_argument("max-n must lie in 1.." + std::to_string(kMaxPhases));
  if (v == LogicVariant::CNLCompact && !compact_vocabulary(w))
    throw std::invalid_argument("cnl-compact admits only * + & | and the structural '.'");
  PolPresentation d = decorate(w);
  std::set<std::string> names;
  atoms_of(pol_interp_plus(d.left), names);
  atoms_of(pol_interp_plus(d.right), names);
  std::vector<std::string> atoms(names.begin(), names.end());

  CountermodelResult r;
  for (int n = 1; n <= o.max_n && !r.model; ++n) {
    auto visit = [&](const PhaseSpace& s) {
      ++r.spaces;
      r.model = refute(s, atoms, d);
      return !r.model;
    };
    if (n <= 3) {
      enumerate_spaces(n, v, visit);
    } else {
      r.exhaustive = false;
      for (const auto& s : sample_spaces(n, v, o.attempts, o.seed + static_cast<std::uint64_t>(n), o.attempts))
        if (!visit(s)) break;
    }
  }
  return r;
}

// ---- JSON ----

std::string model_to_json(const Model& m) {
  using nlohmann::json;
  const auto& s = m.space;
  auto table = [&](const std::vector<int>& t) {
    json rows = json::array();
    for (int x = 0; x < s.n; ++x) {
      json r = json::array();
      for (int y = 0; y < s.n; ++y) r.push_back(t[static_cast<std::size_t>(x * s.n + y)]);
      rows.push_back(r);
    }
    return rows;
  };
  json bot = json::array();
  for (int x = 0; x < s.n; ++x) {
    json r = json::array();
    for (int y = 0; y < s.n; ++y) r.push_back(s.perp(x, y));
    bot.push_back(r);
  }
  json val = json::object();
  for (const auto& [atom, a] : m.valuation) {
    json xs = json::array();
    for (int x = 0; x < s.n; ++x)
      if (has(a, x)) xs.push_back(x);
    val[atom] = xs;
  }
  json j{{"n", s.n},
         {"tensor", table(s.tensor)},
         {"oslash", table(s.oslash)},
         {"obslash", table(s.obslash)},
         {"bot", bot},
         {"valuation", val}};
  return j.dump();
}

Model model_from_json(const std::string& text, LogicVariant v) {
  using nlohmann::json;
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("model is not JSON: ") + e.what());
  }
  try {
    Model m;
    auto& s = m.space;
    s.variant = v;
    s.n = j.at("n").get<int>();
    if (s.n < 1 || s.n > kMaxPhases) throw std::invalid_argument("n must lie in 1.." + std::to_string(kMaxPhases));
    auto grid = [&](const char* key) {
      const json& rows = j.at(key);
      if (!rows.is_array() || rows.size() != static_cast<std::size_t>(s.n))
        throw std::invalid_argument(std::string(key) + " must have n rows");
      std::vector<json> cells;
      for (const auto& r : rows) {
        if (!r.is_array() || r.size() != static_cast<std::size_t>(s.n))
          throw std::invalid_argument(std::string(key) + " rows must have n entries");
        for (const auto& c : r) cells.push_back(c);
      }
      return cells;
    };
    for (auto [key, t] : {std::pair{"tensor", &s.tensor}, std::pair{"oslash", &s.oslash}, std::pair{"obslash", &s.obslash}})
      for (const auto& c : grid(key)) t->push_back(c.get<int>());
    for (const auto& c : grid("bot")) s.bot.push_back(c.is_boolean() ? c.get<bool>() : c.get<int>() != 0);
    if (j.contains("valuation"))
      for (const auto& [atom, xs] : j.at("valuation").items()) {
        Subset a = 0;
        for (const auto& x : xs) {
          int e = x.get<int>();
          if (e < 0 || e >= s.n) throw std::invalid_argument("valuation of " + atom + " leaves the carrier");
          a |= bit(e);
        }
        m.valuation[atom] = a;
      }
    return m;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed model: ") + e.what());
  }
}

}  // namespace lgfocus
