// Structures, presentations, occurrences, one-hole contexts and the display
// machinery. Generic over the leaf type so the polarized and focused modules
// reuse the same trees.
#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <deque>
#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "lgfocus/formula.hpp"

namespace lgfocus {

// Obslash stores (l = Δ, r = Γ) for the surface ⟨Δ⃠Γ⟩.
enum class SOp : std::uint8_t { Leaf, Times, Oslash, Obslash };

enum class Side : std::uint8_t { Left, Right };
enum class Dir : std::uint8_t { L, R };

struct Occurrence {
  Side side = Side::Left;
  std::vector<Dir> path;

  friend bool operator==(const Occurrence&, const Occurrence&) = default;
  friend auto operator<=>(const Occurrence&, const Occurrence&) = default;
};

std::string print_occurrence(const Occurrence& o);
const char* sop_token(SOp op);

template <class Leaf>
class BasicStructure {
 public:
  static BasicStructure leaf(Leaf f) {
    auto n = std::make_shared<Node>(Node{SOp::Leaf, std::move(f), {}, {}, 1});
    return BasicStructure(std::move(n));
  }
  static BasicStructure make(SOp op, BasicStructure l, BasicStructure r) {
    std::size_t nodes = 1 + l.node_count() + r.node_count();
    auto n = std::make_shared<Node>(Node{op, std::nullopt, std::move(l.node_), std::move(r.node_), nodes});
    return BasicStructure(std::move(n));
  }
  static BasicStructure times(BasicStructure l, BasicStructure r) { return make(SOp::Times, std::move(l), std::move(r)); }
  static BasicStructure oslash(BasicStructure l, BasicStructure r) { return make(SOp::Oslash, std::move(l), std::move(r)); }
  static BasicStructure obslash(BasicStructure l, BasicStructure r) { return make(SOp::Obslash, std::move(l), std::move(r)); }

  SOp op() const { return node_->op; }
  bool is_leaf() const { return node_->op == SOp::Leaf; }
  const Leaf& formula() const { return *node_->leaf; }
  BasicStructure left() const { return BasicStructure(node_->l); }
  BasicStructure right() const { return BasicStructure(node_->r); }
  BasicStructure child(Dir d) const { return d == Dir::L ? left() : right(); }
  std::size_t node_count() const { return node_->nodes; }

  friend bool operator==(const BasicStructure& a, const BasicStructure& b) {
    if (a.node_ == b.node_) return true;
    if (a.op() != b.op() || a.node_count() != b.node_count()) return false;
    if (a.is_leaf()) return a.formula() == b.formula();
    return a.left() == b.left() && a.right() == b.right();
  }
  friend std::strong_ordering operator<=>(const BasicStructure& a, const BasicStructure& b) {
    if (a.node_ == b.node_) return std::strong_ordering::equal;
    if (auto c = a.op() <=> b.op(); c != 0) return c;
    if (a.is_leaf()) return a.formula() <=> b.formula();
    if (auto c = a.left() <=> b.left(); c != 0) return c;
    return a.right() <=> b.right();
  }

 private:
  struct Node {
    SOp op;
    std::optional<Leaf> leaf;
    std::shared_ptr<const Node> l, r;
    std::size_t nodes;
  };
  explicit BasicStructure(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

template <class Leaf>
struct BasicPresentation {
  BasicStructure<Leaf> left;
  BasicStructure<Leaf> right;

  const BasicStructure<Leaf>& side(Side s) const { return s == Side::Left ? left : right; }
  BasicPresentation swapped() const { return {right, left}; }
  std::size_t node_count() const { return left.node_count() + right.node_count(); }

  friend bool operator==(const BasicPresentation& a, const BasicPresentation& b) {
    return a.left == b.left && a.right == b.right;
  }
  friend std::strong_ordering operator<=>(const BasicPresentation& a, const BasicPresentation& b) {
    if (auto c = a.left <=> b.left; c != 0) return c;
    return a.right <=> b.right;
  }
};

using Structure = BasicStructure<Formula>;
using Presentation = BasicPresentation<Formula>;

// ---- occurrences ----

template <class Leaf>
std::optional<BasicStructure<Leaf>> subterm(const BasicStructure<Leaf>& s, const std::vector<Dir>& path) {
  BasicStructure<Leaf> cur = s;
  for (Dir d : path) {
    if (cur.is_leaf()) return std::nullopt;
    cur = cur.child(d);
  }
  return cur;
}

template <class Leaf>
std::optional<BasicStructure<Leaf>> subterm(const BasicPresentation<Leaf>& w, const Occurrence& o) {
  return subterm(w.side(o.side), o.path);
}

template <class Leaf>
void collect_paths(const BasicStructure<Leaf>& s, std::vector<Dir>& prefix, std::vector<std::vector<Dir>>& out,
                   bool leaves_only) {
  if (!leaves_only || s.is_leaf()) out.push_back(prefix);
  if (s.is_leaf()) return;
  prefix.push_back(Dir::L);
  collect_paths(s.left(), prefix, out, leaves_only);
  prefix.back() = Dir::R;
  collect_paths(s.right(), prefix, out, leaves_only);
  prefix.pop_back();
}

// Pre-order over the left structure, then the right one.
template <class Leaf>
std::vector<Occurrence> occurrences(const BasicPresentation<Leaf>& w, bool leaves_only) {
  std::vector<Occurrence> out;
  for (Side side : {Side::Left, Side::Right}) {
    std::vector<std::vector<Dir>> paths;
    std::vector<Dir> prefix;
    collect_paths(w.side(side), prefix, paths, leaves_only);
    for (auto& p : paths) out.push_back(Occurrence{side, std::move(p)});
  }
  return out;
}

// ---- contexts and displacement ----

template <class Leaf>
struct ContextFrame {
  SOp op;
  Dir hole;
  BasicStructure<Leaf> sibling;
};

// A one-hole context, frames listed from the root down to the hole.
template <class Leaf>
struct BasicContext {
  std::vector<ContextFrame<Leaf>> frames;

  static BasicContext along(const BasicStructure<Leaf>& s, const std::vector<Dir>& path) {
    BasicContext c;
    BasicStructure<Leaf> cur = s;
    for (Dir d : path) {
      if (cur.is_leaf()) throw std::invalid_argument("context path leaves the structure");
      c.frames.push_back({cur.op(), d, d == Dir::L ? cur.right() : cur.left()});
      cur = cur.child(d);
    }
    return c;
  }

  BasicStructure<Leaf> plug(BasicStructure<Leaf> x) const {
    for (auto it = frames.rbegin(); it != frames.rend(); ++it)
      x = it->hole == Dir::L ? BasicStructure<Leaf>::make(it->op, std::move(x), it->sibling)
                             : BasicStructure<Leaf>::make(it->op, it->sibling, std::move(x));
    return x;
  }
};

// The displacement Π[] ÷ Υ: ⊢ Π[Σ];Υ is display-equivalent to ⊢ (Π[]÷Υ);Σ.
template <class Leaf>
BasicStructure<Leaf> displace(const BasicContext<Leaf>& c, BasicStructure<Leaf> u) {
  using S = BasicStructure<Leaf>;
  for (const auto& f : c.frames) {
    const S& sib = f.sibling;
    switch (f.op) {
      case SOp::Times:  // ⟨Π[]⊗Σ⟩ ↦ ⟨Σ⃠Υ⟩ ; ⟨Π⊗Σ[]⟩ ↦ ⟨Υ⊘Π⟩
        u = f.hole == Dir::L ? S::obslash(sib, std::move(u)) : S::oslash(std::move(u), sib);
        break;
      case SOp::Oslash:  // ⟨Π[]⊘Σ⟩ ↦ ⟨Σ⊗Υ⟩ ; ⟨Π⊘Σ[]⟩ ↦ ⟨Υ⃠Π⟩
        u = f.hole == Dir::L ? S::times(sib, std::move(u)) : S::obslash(std::move(u), sib);
        break;
      case SOp::Obslash:  // ⟨Σ[]⃠Π⟩ ↦ ⟨Π⊘Υ⟩ ; ⟨Σ⃠Π[]⟩ ↦ ⟨Υ⊗Σ⟩
        u = f.hole == Dir::L ? S::oslash(sib, std::move(u)) : S::times(std::move(u), sib);
        break;
      case SOp::Leaf: break;
    }
  }
  return u;
}

template <class Leaf>
BasicPresentation<Leaf> display(const BasicPresentation<Leaf>& w, const Occurrence& o) {
  auto sub = subterm(w, o);
  if (!sub) throw std::invalid_argument("occurrence " + print_occurrence(o) + " does not address a node");
  auto ctx = BasicContext<Leaf>::along(w.side(o.side), o.path);
  const auto& other = o.side == Side::Left ? w.right : w.left;
  return {displace(ctx, other), *sub};
}

// One step of the three reversible display rules, both directions.
template <class Leaf>
std::vector<BasicPresentation<Leaf>> dp_neighbours(const BasicPresentation<Leaf>& w) {
  using S = BasicStructure<Leaf>;
  std::vector<BasicPresentation<Leaf>> out;
  out.push_back(w.swapped());
  if (w.left.op() == SOp::Times)  // ⟨⟨Γ⊗Δ⟩;Θ⟩ → ⟨Γ;⟨Δ⃠Θ⟩⟩
    out.push_back({w.left.left(), S::obslash(w.left.right(), w.right)});
  if (w.right.op() == SOp::Obslash)
    out.push_back({S::times(w.left, w.right.left()), w.right.right()});
  if (w.right.op() == SOp::Times)  // ⟨Γ;⟨Δ⊗Θ⟩⟩ → ⟨⟨Γ⊘Δ⟩;Θ⟩
    out.push_back({S::oslash(w.left, w.right.left()), w.right.right()});
  if (w.left.op() == SOp::Oslash)
    out.push_back({w.left.left(), S::times(w.left.right(), w.right)});
  return out;
}

// Breadth-first closure under the display rules.
template <class Leaf>
std::set<BasicPresentation<Leaf>> display_class(const BasicPresentation<Leaf>& w) {
  std::set<BasicPresentation<Leaf>> seen{w};
  std::deque<BasicPresentation<Leaf>> todo{w};
  while (!todo.empty()) {
    auto cur = std::move(todo.front());
    todo.pop_front();
    for (auto& n : dp_neighbours(cur))
      if (seen.insert(n).second) todo.push_back(std::move(n));
  }
  return seen;
}

// The same class, built by displaying every node and its swap. The two
// routes must agree; this one is linear in the class size.
template <class Leaf>
std::vector<BasicPresentation<Leaf>> display_members(const BasicPresentation<Leaf>& w) {
  std::vector<BasicPresentation<Leaf>> out;
  for (const auto& o : occurrences(w, false)) {
    if (o.side == Side::Left && o.path.empty()) continue;  // same edge as the right root
    auto m = display(w, o);
    out.push_back(m.swapped());
    out.push_back(std::move(m));
  }
  return out;
}

template <class Leaf>
BasicPresentation<Leaf> canonical_member(const BasicPresentation<Leaf>& w) {
  auto ms = display_members(w);
  return *std::min_element(ms.begin(), ms.end());
}

template <class Leaf>
BasicStructure<Leaf> collapse_to_times(const BasicStructure<Leaf>& s) {
  if (s.is_leaf()) return s;
  return BasicStructure<Leaf>::times(collapse_to_times(s.left()), collapse_to_times(s.right()));
}

template <class Leaf>
BasicPresentation<Leaf> collapse_to_times(const BasicPresentation<Leaf>& w) {
  return {collapse_to_times(w.left), collapse_to_times(w.right)};
}

// Premises of Gr1, Gr2, Gr3 for a conclusion ⟨⟨Γ1⊗Γ2⟩;⟨Δ2⊗Δ1⟩⟩; empty for any other shape.
template <class Leaf>
std::vector<BasicPresentation<Leaf>> linear_distributivity_premises(const BasicPresentation<Leaf>& m) {
  using S = BasicStructure<Leaf>;
  if (m.left.op() != SOp::Times || m.right.op() != SOp::Times) return {};
  S g1 = m.left.left(), g2 = m.left.right(), d2 = m.right.left(), d1 = m.right.right();
  return {{S::oslash(g2, d2), S::oslash(d1, g1)},
          {S::obslash(d1, g1), S::obslash(g2, d2)},
          {S::oslash(d2, g1), S::obslash(d1, g2)}};
}

template <class Leaf>
bool has_coslash(const BasicStructure<Leaf>& s) {
  if (s.is_leaf()) return false;
  return s.op() != SOp::Times || has_coslash(s.left()) || has_coslash(s.right());
}

template <class Leaf>
void leaves_of(const BasicStructure<Leaf>& s, std::vector<Leaf>& out) {
  if (s.is_leaf()) {
    out.push_back(s.formula());
    return;
  }
  leaves_of(s.left(), out);
  leaves_of(s.right(), out);
}

// ---- unpolarized interpretation and printing ----

Formula interp_plus(const Structure& g);
Formula interp_minus(const Structure& g);

std::string print_structure(const Structure& s);
std::string print_presentation(const Presentation& w);

Structure parse_structure(std::string_view text);
// Accepts "S ; S" or the sequent form "A => B", which denotes ⟨A ; B⊥⟩.
Presentation parse_presentation(std::string_view text);

}  // namespace lgfocus
