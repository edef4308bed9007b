#ifndef NUMU_ALPHA_HPP
#define NUMU_ALPHA_HPP

#include <cstddef>
#include <memory>
#include <variant>
#include <vector>

#include "numu/env.hpp"
#include "numu/metric.hpp"
#include "numu/term.hpp"
#include "numu/trunc.hpp"

namespace numu {

// Canonical nameless forms: bound occurrences become (blocks-up, position
// in block) indices, free atoms and holes stay verbatim. Two finite terms
// are α-equivalent iff their nameless forms are equal.

struct Nameless;
using NamelessPtr = std::shared_ptr<const Nameless>;

struct BoundIdx {
  unsigned up = 0;   // binder blocks between occurrence and its block
  unsigned pos = 0;  // position within the block (iterated abstraction:
                     // the last position with a given name binds)
  bool operator==(const BoundIdx&) const = default;
};

struct NamelessCons {
  std::size_t cons;
  std::vector<std::pair<unsigned, NamelessPtr>> args;  // (binder count, body)
};

struct Nameless {
  std::variant<std::monostate, Atom, BoundIdx, NamelessCons> node;
};

NamelessPtr nameless_form(const TruncPtr& t);
bool nameless_equal(const NamelessPtr& a, const NamelessPtr& b);

/// Rule-based =α: simultaneous traversal, renaming matched binder blocks
/// to one deterministic tuple of fresh atoms. The hole is α-equivalent
/// only to itself. Cross-validated against nameless_form.
bool alpha_eq_finite(const TruncPtr& t, const TruncPtr& u);

/// Fast decision via canonical forms (same relation as alpha_eq_finite).
bool alpha_eq_trunc(const TruncPtr& a, const TruncPtr& b);

/// trunc_k(t) =α trunc_k(u) for all k <= n; by truncation monotonicity it
/// suffices to compare at k = n.
bool alpha_eq_upto(const MixedTerm& t, const MixedTerm& u, unsigned n);

/// d_α(t,u) = inf{2^-n : trunc_n(t) =α trunc_n(u)}, probed to `precision`.
MetricResult alpha_distance(const MixedTerm& t, const MixedTerm& u,
                            unsigned precision);

/// Exact α-equivalence of the two regular terms denoted by guarded
/// equation systems, by a bisimulation fixpoint over (position, position,
/// partial atom bijection) states. Agrees with alpha_eq_upto at every
/// depth.
bool alpha_eq_regular(const SigPtr& sig, const TermEnv& a, const TermEnv& b);

}  // namespace numu

#endif
