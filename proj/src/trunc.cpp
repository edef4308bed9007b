#include "numu/trunc.hpp"

namespace numu {

TruncPtr mk_hole() {
  static const TruncPtr hole = std::make_shared<Trunc>(Trunc{std::monostate{}});
  return hole;
}

TruncPtr mk_tvar(Atom a) { return std::make_shared<Trunc>(Trunc{a}); }

TruncPtr mk_tcons(std::size_t cons, std::vector<TruncArg> args) {
  return std::make_shared<Trunc>(Trunc{TruncCons{cons, std::move(args)}});
}

bool is_hole(const TruncPtr& t) {
  return std::holds_alternative<std::monostate>(t->node);
}

bool has_hole(const TruncPtr& t) {
  if (is_hole(t)) return true;
  if (const auto* c = std::get_if<TruncCons>(&t->node)) {
    for (const TruncArg& a : c->args)
      if (has_hole(a.child)) return true;
  }
  return false;
}

bool trunc_equal(const TruncPtr& a, const TruncPtr& b) {
  if (a == b) return true;
  if (a->node.index() != b->node.index()) return false;
  if (std::holds_alternative<std::monostate>(a->node)) return true;
  if (const auto* va = std::get_if<Atom>(&a->node))
    return *va == std::get<Atom>(b->node);
  const auto& ca = std::get<TruncCons>(a->node);
  const auto& cb = std::get<TruncCons>(b->node);
  if (ca.cons != cb.cons || ca.args.size() != cb.args.size()) return false;
  for (std::size_t i = 0; i < ca.args.size(); ++i) {
    if (ca.args[i].binders != cb.args[i].binders) return false;
    if (!trunc_equal(ca.args[i].child, cb.args[i].child)) return false;
  }
  return true;
}

static void collect_atoms(const TruncPtr& t, AtomSet& out) {
  if (const auto* v = std::get_if<Atom>(&t->node)) {
    out.insert(*v);
  } else if (const auto* c = std::get_if<TruncCons>(&t->node)) {
    for (const TruncArg& a : c->args) {
      for (Atom b : a.binders) out.insert(b);
      collect_atoms(a.child, out);
    }
  }
}

AtomSet atoms_of(const TruncPtr& t) {
  AtomSet s;
  collect_atoms(t, s);
  return s;
}

static void collect_free(const TruncPtr& t, AtomSet& bound, AtomSet& out) {
  if (const auto* v = std::get_if<Atom>(&t->node)) {
    if (!bound.count(*v)) out.insert(*v);
  } else if (const auto* c = std::get_if<TruncCons>(&t->node)) {
    for (const TruncArg& a : c->args) {
      std::vector<Atom> added;
      for (Atom b : a.binders)
        if (bound.insert(b).second) added.push_back(b);
      collect_free(a.child, bound, out);
      for (Atom b : added) bound.erase(b);
    }
  }
}

AtomSet free_vars(const TruncPtr& t) {
  AtomSet bound, out;
  collect_free(t, bound, out);
  return out;
}

std::size_t node_count(const TruncPtr& t) {
  if (const auto* c = std::get_if<TruncCons>(&t->node)) {
    std::size_t n = 1;
    for (const TruncArg& a : c->args) n += node_count(a.child);
    return n;
  }
  return 1;
}

TruncPtr act(const Permutation& p, const TruncPtr& t) {
  if (p.is_identity()) return t;
  if (is_hole(t)) return t;
  if (const auto* v = std::get_if<Atom>(&t->node)) return mk_tvar(p(*v));
  const auto& c = std::get<TruncCons>(t->node);
  std::vector<TruncArg> args;
  args.reserve(c.args.size());
  for (const TruncArg& a : c.args) {
    std::vector<Atom> bs;
    bs.reserve(a.binders.size());
    for (Atom b : a.binders) bs.push_back(p(b));
    args.push_back(TruncArg{std::move(bs), act(p, a.child)});
  }
  return mk_tcons(c.cons, std::move(args));
}

TruncPtr truncate_finite(const SigPtr& sig, const TruncPtr& t, unsigned depth) {
  if (depth == 0) return mk_hole();
  if (is_hole(t)) return t;
  if (std::holds_alternative<Atom>(t->node)) return t;
  const auto& c = std::get<TruncCons>(t->node);
  const Constructor& decl = sig->at(c.cons);
  std::vector<TruncArg> args;
  args.reserve(c.args.size());
  for (std::size_t i = 0; i < c.args.size(); ++i) {
    unsigned budget =
        decl.args[i].mode == Mode::Coinductive ? depth - 1 : depth;
    args.push_back(
        TruncArg{c.args[i].binders, truncate_finite(sig, c.args[i].child, budget)});
  }
  return mk_tcons(c.cons, std::move(args));
}

}  // namespace numu
