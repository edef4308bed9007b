#ifndef NUMU_SUBST_HPP
#define NUMU_SUBST_HPP

#include "numu/term.hpp"

namespace numu {

/// One pending substitution t[x := u], the seed of the outer corecursion.
struct SubstTask {
  MixedTerm target;
  Atom var;
  MixedTerm replacement;
};

/// A coinductive child of the current layer that still awaits the pair
/// (x, u): the right summand, before the strength has packed the pair
/// underneath its abstractions.
struct PendingChild {
  MixedTerm child;
};

/// Layers flowing through the substitution pipeline. Coinductive slots
/// hold either PendingChild (right summand) or a finished MixedTerm (left
/// summand, shared as-is). After strength_pack they hold SubstTask
/// (pending) or MixedTerm (done) and feed straight into unfold.
using PreLayer = Layer<PendingChild>;
using SubstLayer = Layer<SubstTask>;

/// One fully expanded inductive layer of t; coinductive slots are the
/// deferred children marked as right summand (substitution to continue).
PreLayer observe_pending(const MixedTerm& t);

/// α-equivalent layer whose every binder avoids `avoid`. Deterministic
/// (least fresh atoms); renamings reach coinductive children lazily.
PreLayer freshen_binders(const PreLayer& layer, const AtomSet& avoid);

/// The inner recursion h: rewrites the inductive spine, replacing x by one
/// forced layer of u (left-injected, so nothing below u is substituted
/// again) and leaving coinductive children untouched. Throws
/// FreshnessViolation on an unfreshened binder - a pipeline bug, never a
/// user error.
PreLayer layer_subst_h(const PreLayer& layer, Atom x, const MixedTerm& u);

/// The strengths τ̄/τ_n: pushes the pair (x, u) underneath every remaining
/// right-summand slot's abstractions, producing pending tasks. Binders are
/// already fresh for x and u, so the strength's fresh atom can be the
/// binder itself and no capture occurs.
SubstLayer strength_pack(const PreLayer& layer, Atom x, const MixedTerm& u);

/// Capture-avoiding substitution on α-classes of mixed terms: the outer
/// unfold with seed (t, x, u), each step being freshen, then h, then the
/// strength. Lazy and productive. Requires both terms to carry a finite
/// atom bound (regular and embedded terms always do).
MixedTerm subst(const MixedTerm& t, Atom x, const MixedTerm& u);

}  // namespace numu

#endif
