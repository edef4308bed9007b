#ifndef NUMU_TERM_HPP
#define NUMU_TERM_HPP

#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <variant>
#include <vector>

#include "numu/atom.hpp"
#include "numu/error.hpp"
#include "numu/perm.hpp"
#include "numu/signature.hpp"
#include "numu/trunc.hpp"

namespace numu {

class MixedTerm;

/// Memoized suspension of a child term. Forcing is idempotent: racing
/// forcings may both run the thunk, but the first installed value wins and
/// both produce observationally equal results.
class Child {
 public:
  static Child ready(MixedTerm value);
  static Child lazy(std::function<MixedTerm()> thunk);

  MixedTerm force() const;
  bool forced() const;

 private:
  struct Cell;
  std::shared_ptr<Cell> cell_;
};

struct TermArg {
  std::vector<Atom> binders;
  Child child;  // inductive slots are always pre-forced
};

struct ConsData {
  std::size_t cons;
  std::vector<TermArg> args;
};

struct TermNode {
  SigPtr sig;
  // Upper bound on the atoms occurring anywhere in the term (including
  // binders), when one is known. Regular and embedded terms always carry
  // one; it is what makes lazy freshening in subst possible.
  std::shared_ptr<const AtomSet> bound;
  std::variant<Atom, ConsData> data;
};

/// Immutable handle on a lazily unfolded mixed term. Equality is only
/// observational (via truncations / α); there is no operator==.
class MixedTerm {
 public:
  MixedTerm() = default;

  static MixedTerm var(SigPtr sig, Atom a,
                       std::shared_ptr<const AtomSet> bound = nullptr);
  static MixedTerm cons(SigPtr sig, std::size_t cons_index,
                        std::vector<TermArg> args,
                        std::shared_ptr<const AtomSet> bound = nullptr);

  const SigPtr& sig() const { return node_->sig; }
  const std::shared_ptr<const AtomSet>& atom_bound() const { return node_->bound; }

  bool is_var() const { return std::holds_alternative<Atom>(node_->data); }
  Atom var_atom() const { return std::get<Atom>(node_->data); }

  std::size_t cons_index() const { return std::get<ConsData>(node_->data).cons; }
  const std::vector<TermArg>& args() const {
    return std::get<ConsData>(node_->data).args;
  }
  Mode mode(std::size_t i) const {
    return sig()->at(cons_index()).args[i].mode;
  }
  /// Forces the slot (coinductive slots only compute on first observation).
  MixedTerm child(std::size_t i) const { return args()[i].child.force(); }

  const std::shared_ptr<const TermNode>& node() const { return node_; }

 private:
  explicit MixedTerm(std::shared_ptr<const TermNode> n) : node_(std::move(n)) {}
  std::shared_ptr<const TermNode> node_;
};

/// Mixed truncation at depth n: the budget decreases only through
/// coinductive argument positions; at budget 0 the result is the hole.
TruncPtr truncate(const MixedTerm& t, unsigned depth);

/// Renames every atom, bound and free. Lazy: deferred children are
/// wrapped, not forced.
MixedTerm act_term(const Permutation& p, const MixedTerm& t);

/// Finite (hole-free) term as a mixed term whose every slot is pre-forced.
MixedTerm embed(const SigPtr& sig, const TruncPtr& finite);

AtomSet atoms_of(const MixedTerm& t, unsigned depth);
AtomSet free_vars(const MixedTerm& t, unsigned depth);

// ---------------------------------------------------------------------
// Corecursion: one observable layer per seed.
//
// A Layer<S> is one inductive layer. Argument payloads are:
//   inductive positions:   a nested layer, or an already-built MixedTerm;
//   coinductive positions: a seed S to continue from, or an already-built
//                          MixedTerm placed there as-is (shared, final).

template <class S>
struct Layer;

template <class S>
using LayerPtr = std::shared_ptr<const Layer<S>>;

template <class S>
struct LayerArg {
  std::vector<Atom> binders;
  std::variant<LayerPtr<S>, MixedTerm, S> payload;
};

template <class S>
struct LayerCons {
  std::size_t cons;
  std::vector<LayerArg<S>> args;
};

template <class S>
struct Layer {
  std::variant<Atom, LayerCons<S>> node;
};

namespace detail {

template <class S>
MixedTerm materialize(const SigPtr& sig,
                      const std::shared_ptr<const std::function<Layer<S>(const S&)>>& step,
                      const Layer<S>& layer,
                      const std::shared_ptr<const AtomSet>& bound) {
  if (const Atom* a = std::get_if<Atom>(&layer.node))
    return MixedTerm::var(sig, *a, bound);
  const LayerCons<S>& c = std::get<LayerCons<S>>(layer.node);
  if (c.cons >= sig->size())
    fail(Errc::UnknownConstructor, "unfold produced an unknown constructor");
  const Constructor& decl = sig->at(c.cons);
  if (c.args.size() != decl.args.size())
    fail(Errc::ArityMismatch, "unfold produced wrong arity for '" + decl.name + "'");
  std::vector<TermArg> args;
  args.reserve(c.args.size());
  for (std::size_t i = 0; i < c.args.size(); ++i) {
    const LayerArg<S>& la = c.args[i];
    if (la.binders.size() != decl.args[i].binders)
      fail(Errc::ArityMismatch,
           "unfold produced wrong binder count for '" + decl.name + "'");
    Child child;
    if (const MixedTerm* m = std::get_if<MixedTerm>(&la.payload)) {
      child = Child::ready(*m);
    } else if (const LayerPtr<S>* sub = std::get_if<LayerPtr<S>>(&la.payload)) {
      if (decl.args[i].mode != Mode::Inductive)
        fail(Errc::Internal, "nested layer in a coinductive slot");
      child = Child::ready(materialize<S>(sig, step, **sub, bound));
    } else {
      if (decl.args[i].mode != Mode::Coinductive)
        fail(Errc::Internal, "seed in an inductive slot");
      S seed = std::get<S>(la.payload);
      child = Child::lazy([sig, step, seed = std::move(seed), bound]() {
        return materialize<S>(sig, step, (*step)(seed), bound);
      });
    }
    args.push_back(TermArg{la.binders, std::move(child)});
  }
  return MixedTerm::cons(sig, c.cons, std::move(args), bound);
}

}  // namespace detail

/// The unique term with observe(unfold(step, s)) = step(s), coinductive
/// seeds replaced corecursively. `bound`, when given, certifies a finite
/// superset of the atoms of every layer reachable from `seed`; it is what
/// subst and freshening rely on.
template <class S>
MixedTerm unfold(const SigPtr& sig, std::function<Layer<S>(const S&)> step,
                 const S& seed, std::optional<AtomSet> bound = std::nullopt) {
  auto stepp = std::make_shared<const std::function<Layer<S>(const S&)>>(std::move(step));
  std::shared_ptr<const AtomSet> b;
  if (bound) b = std::make_shared<const AtomSet>(*std::move(bound));
  return detail::materialize<S>(sig, stepp, (*stepp)(seed), b);
}

}  // namespace numu

#endif
