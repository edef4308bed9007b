#include "numu/alpha.hpp"

#include <deque>
#include <set>
#include <tuple>

#include "numu/error.hpp"
#include "numu/nominal.hpp"

namespace numu {

namespace {

NamelessPtr mk_nameless(Nameless n) {
  return std::make_shared<Nameless>(std::move(n));
}

NamelessPtr nameless_at(const TruncPtr& t,
                        std::vector<const std::vector<Atom>*>& blocks) {
  if (is_hole(t)) return mk_nameless(Nameless{std::monostate{}});
  if (const Atom* a = std::get_if<Atom>(&t->node)) {
    // Innermost block first; within a block the last position binds.
    for (std::size_t up = 0; up < blocks.size(); ++up) {
      const std::vector<Atom>& blk = *blocks[blocks.size() - 1 - up];
      for (std::size_t k = blk.size(); k-- > 0;) {
        if (blk[k] == *a)
          return mk_nameless(Nameless{BoundIdx{static_cast<unsigned>(up),
                                               static_cast<unsigned>(k)}});
      }
    }
    return mk_nameless(Nameless{*a});
  }
  const auto& c = std::get<TruncCons>(t->node);
  NamelessCons out{c.cons, {}};
  out.args.reserve(c.args.size());
  for (const TruncArg& a : c.args) {
    blocks.push_back(&a.binders);
    NamelessPtr body = nameless_at(a.child, blocks);
    blocks.pop_back();
    out.args.emplace_back(static_cast<unsigned>(a.binders.size()), std::move(body));
  }
  return mk_nameless(Nameless{std::move(out)});
}

}  // namespace

NamelessPtr nameless_form(const TruncPtr& t) {
  std::vector<const std::vector<Atom>*> blocks;
  return nameless_at(t, blocks);
}

bool nameless_equal(const NamelessPtr& a, const NamelessPtr& b) {
  if (a == b) return true;
  if (a->node.index() != b->node.index()) return false;
  if (std::holds_alternative<std::monostate>(a->node)) return true;
  if (const Atom* v = std::get_if<Atom>(&a->node))
    return *v == std::get<Atom>(b->node);
  if (const BoundIdx* i = std::get_if<BoundIdx>(&a->node))
    return *i == std::get<BoundIdx>(b->node);
  const auto& ca = std::get<NamelessCons>(a->node);
  const auto& cb = std::get<NamelessCons>(b->node);
  if (ca.cons != cb.cons || ca.args.size() != cb.args.size()) return false;
  for (std::size_t i = 0; i < ca.args.size(); ++i) {
    if (ca.args[i].first != cb.args[i].first) return false;
    if (!nameless_equal(ca.args[i].second, cb.args[i].second)) return false;
  }
  return true;
}

bool alpha_eq_finite(const TruncPtr& t, const TruncPtr& u) {
  if (t->node.index() != u->node.index()) return false;
  if (is_hole(t)) return true;
  if (const Atom* a = std::get_if<Atom>(&t->node))
    return *a == std::get<Atom>(u->node);
  const auto& ct = std::get<TruncCons>(t->node);
  const auto& cu = std::get<TruncCons>(u->node);
  if (ct.cons != cu.cons || ct.args.size() != cu.args.size()) return false;
  for (std::size_t i = 0; i < ct.args.size(); ++i) {
    const TruncArg& at = ct.args[i];
    const TruncArg& au = cu.args[i];
    if (at.binders.size() != au.binders.size()) return false;
    if (at.binders.empty()) {
      if (!alpha_eq_finite(at.child, au.child)) return false;
      continue;
    }
    // (x̄ z̄)·t =α (ȳ z̄)·u for one deterministic tuple of fresh z̄;
    // composition order makes the last position of a block bind tightest.
    AtomSet avoid = set_union(atoms_of(at.child), atoms_of(au.child));
    for (Atom b : at.binders) avoid.insert(b);
    for (Atom b : au.binders) avoid.insert(b);
    std::vector<Atom> zs = fresh_many(avoid, at.binders.size());
    Permutation pt, pu;
    for (std::size_t k = 0; k < zs.size(); ++k) {
      pt = compose(pt, Permutation::transposition(at.binders[k], zs[k]));
      pu = compose(pu, Permutation::transposition(au.binders[k], zs[k]));
    }
    if (!alpha_eq_finite(act(pt, at.child), act(pu, au.child))) return false;
  }
  return true;
}

bool alpha_eq_trunc(const TruncPtr& a, const TruncPtr& b) {
  return nameless_equal(nameless_form(a), nameless_form(b));
}

bool alpha_eq_upto(const MixedTerm& t, const MixedTerm& u, unsigned n) {
  return alpha_eq_trunc(truncate(t, n), truncate(u, n));
}

MetricResult alpha_distance(const MixedTerm& t, const MixedTerm& u,
                            unsigned precision) {
  if (precision == 0) fail(Errc::Internal, "precision must be >= 1");
  for (unsigned n = 1; n <= precision; ++n)
    if (!alpha_eq_trunc(truncate(t, n), truncate(u, n)))
      return MetricResult{true, n - 1};
  return MetricResult{false, precision};
}

// --------------------------------------------------------------------
// Exact α on regular terms: bisimulation over pairs of syntactic
// positions plus a partial bijection between the atoms of the two
// systems. Binder blocks are matched positionally; a pair killed by
// shadowing leaves a tombstone so stale matches cannot resurface.

namespace {

const Atom kDead{-1};

struct Bij {
  std::map<Atom, Atom> fwd;
  std::map<Atom, Atom> bwd;

  bool match(Atom a, Atom b) const {
    auto f = fwd.find(a);
    if (f != fwd.end()) return f->second == b;
    if (bwd.count(b)) return false;
    return a == b;
  }

  void add(Atom x, Atom y) {
    auto f = fwd.find(x);
    if (f != fwd.end() && f->second != kDead && f->second != y)
      bwd.insert_or_assign(f->second, kDead);
    auto g = bwd.find(y);
    if (g != bwd.end() && g->second != kDead && g->second != x)
      fwd.insert_or_assign(g->second, kDead);
    fwd.insert_or_assign(x, y);
    bwd.insert_or_assign(y, x);
  }

  auto key() const { return std::tie(fwd, bwd); }
  bool operator<(const Bij& o) const { return key() < o.key(); }
};

using RegState = std::tuple<const Expr*, const Expr*, Bij>;

const Expr* resolve(const TermEnv& env, const Expr* e) {
  while (const Ref* r = std::get_if<Ref>(&e->node)) e = env.lookup(r->name)->get();
  return e;
}

bool compare_layer(const SigPtr& sig, const TermEnv& ea, const TermEnv& eb,
                   const Expr* a, const Expr* b, const Bij& m,
                   std::deque<RegState>& todo) {
  a = resolve(ea, a);
  b = resolve(eb, b);
  if (a->node.index() != b->node.index()) return false;
  if (const Atom* va = std::get_if<Atom>(&a->node))
    return m.match(*va, std::get<Atom>(b->node));
  const ExprCons& ca = std::get<ExprCons>(a->node);
  const ExprCons& cb = std::get<ExprCons>(b->node);
  if (ca.cons != cb.cons) return false;
  const Constructor& decl = sig->at(ca.cons);
  for (std::size_t i = 0; i < ca.args.size(); ++i) {
    Bij m2 = m;
    for (std::size_t k = 0; k < ca.args[i].binders.size(); ++k)
      m2.add(ca.args[i].binders[k], cb.args[i].binders[k]);
    if (decl.args[i].mode == Mode::Inductive) {
      if (!compare_layer(sig, ea, eb, ca.args[i].child.get(),
                         cb.args[i].child.get(), m2, todo))
        return false;
    } else {
      todo.emplace_back(resolve(ea, ca.args[i].child.get()),
                        resolve(eb, cb.args[i].child.get()), std::move(m2));
    }
  }
  return true;
}

}  // namespace

bool alpha_eq_regular(const SigPtr& sig, const TermEnv& a, const TermEnv& b) {
  validate_env(sig, a);
  validate_env(sig, b);
  std::deque<RegState> todo;
  std::set<RegState> visited;
  todo.emplace_back(resolve(a, a.root.get()), resolve(b, b.root.get()), Bij{});
  while (!todo.empty()) {
    RegState st = std::move(todo.front());
    todo.pop_front();
    if (!visited.insert(st).second) continue;
    const auto& [pa, pb, m] = st;
    if (!compare_layer(sig, a, b, pa, pb, m, todo)) return false;
  }
  return true;
}

}  // namespace numu
