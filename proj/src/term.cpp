#include "numu/term.hpp"

#include "numu/nominal.hpp"

namespace numu {

struct Child::Cell {
  std::mutex mu;
  std::function<MixedTerm()> fn;
  std::optional<MixedTerm> val;
};

Child Child::ready(MixedTerm value) {
  Child c;
  c.cell_ = std::make_shared<Cell>();
  c.cell_->val = std::move(value);
  return c;
}

Child Child::lazy(std::function<MixedTerm()> thunk) {
  Child c;
  c.cell_ = std::make_shared<Cell>();
  c.cell_->fn = std::move(thunk);
  return c;
}

MixedTerm Child::force() const {
  {
    std::lock_guard<std::mutex> lk(cell_->mu);
    if (cell_->val) return *cell_->val;
  }
  // Run the thunk outside the lock: forcing may reach other cells (never
  // this one again, by guardedness). First result installed wins.
  MixedTerm r = cell_->fn();
  std::lock_guard<std::mutex> lk(cell_->mu);
  if (!cell_->val) {
    cell_->val = std::move(r);
    cell_->fn = nullptr;
  }
  return *cell_->val;
}

bool Child::forced() const {
  std::lock_guard<std::mutex> lk(cell_->mu);
  return cell_->val.has_value();
}

MixedTerm MixedTerm::var(SigPtr sig, Atom a, std::shared_ptr<const AtomSet> bound) {
  if (!bound) bound = std::make_shared<const AtomSet>(AtomSet{a});
  return MixedTerm(std::make_shared<const TermNode>(
      TermNode{std::move(sig), std::move(bound), a}));
}

MixedTerm MixedTerm::cons(SigPtr sig, std::size_t cons_index,
                          std::vector<TermArg> args,
                          std::shared_ptr<const AtomSet> bound) {
  if (cons_index >= sig->size())
    fail(Errc::UnknownConstructor, "constructor index out of range");
  const Constructor& decl = sig->at(cons_index);
  if (args.size() != decl.args.size())
    fail(Errc::ArityMismatch, "wrong arity for '" + decl.name + "'");
  for (std::size_t i = 0; i < args.size(); ++i)
    if (args[i].binders.size() != decl.args[i].binders)
      fail(Errc::ArityMismatch, "wrong binder count for '" + decl.name + "'");
  return MixedTerm(std::make_shared<const TermNode>(
      TermNode{std::move(sig), std::move(bound),
               ConsData{cons_index, std::move(args)}}));
}

TruncPtr truncate(const MixedTerm& t, unsigned depth) {
  if (depth == 0) return mk_hole();
  if (t.is_var()) return mk_tvar(t.var_atom());
  const Constructor& decl = t.sig()->at(t.cons_index());
  std::vector<TruncArg> out;
  out.reserve(t.args().size());
  for (std::size_t i = 0; i < t.args().size(); ++i) {
    unsigned budget = decl.args[i].mode == Mode::Coinductive ? depth - 1 : depth;
    // At budget 0 the result is the hole; do not force the slot.
    TruncPtr child = budget == 0 ? mk_hole() : truncate(t.child(i), budget);
    out.push_back(TruncArg{t.args()[i].binders, std::move(child)});
  }
  return mk_tcons(t.cons_index(), std::move(out));
}

MixedTerm act_term(const Permutation& p, const MixedTerm& t) {
  if (p.is_identity()) return t;
  std::shared_ptr<const AtomSet> bound;
  if (t.atom_bound())
    bound = std::make_shared<const AtomSet>(act(p, *t.atom_bound()));
  if (t.is_var()) return MixedTerm::var(t.sig(), p(t.var_atom()), bound);
  std::vector<TermArg> args;
  args.reserve(t.args().size());
  for (std::size_t i = 0; i < t.args().size(); ++i) {
    std::vector<Atom> bs;
    bs.reserve(t.args()[i].binders.size());
    for (Atom b : t.args()[i].binders) bs.push_back(p(b));
    Child child;
    if (t.mode(i) == Mode::Inductive) {
      child = Child::ready(act_term(p, t.child(i)));
    } else {
      Child slot = t.args()[i].child;
      child = Child::lazy([p, slot]() { return act_term(p, slot.force()); });
    }
    args.push_back(TermArg{std::move(bs), std::move(child)});
  }
  return MixedTerm::cons(t.sig(), t.cons_index(), std::move(args), bound);
}

static MixedTerm embed_at(const SigPtr& sig, const TruncPtr& t,
                          const std::shared_ptr<const AtomSet>& bound) {
  if (is_hole(t)) fail(Errc::HoleInTerm, "cannot embed a term containing holes");
  if (const Atom* a = std::get_if<Atom>(&t->node))
    return MixedTerm::var(sig, *a, bound);
  const auto& c = std::get<TruncCons>(t->node);
  std::vector<TermArg> args;
  args.reserve(c.args.size());
  for (const TruncArg& a : c.args)
    args.push_back(TermArg{a.binders, Child::ready(embed_at(sig, a.child, bound))});
  return MixedTerm::cons(sig, c.cons, std::move(args), bound);
}

MixedTerm embed(const SigPtr& sig, const TruncPtr& finite) {
  auto bound = std::make_shared<const AtomSet>(atoms_of(finite));
  return embed_at(sig, finite, bound);
}

AtomSet atoms_of(const MixedTerm& t, unsigned depth) {
  return atoms_of(truncate(t, depth));
}

AtomSet free_vars(const MixedTerm& t, unsigned depth) {
  return free_vars(truncate(t, depth));
}

}  // namespace numu
