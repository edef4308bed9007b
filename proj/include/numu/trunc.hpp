#ifndef NUMU_TRUNC_HPP
#define NUMU_TRUNC_HPP

#include <cstddef>
#include <memory>
#include <variant>
#include <vector>

#include "numu/atom.hpp"
#include "numu/perm.hpp"
#include "numu/signature.hpp"

namespace numu {

// Finite terms over Σ extended with the nullary hole `*`. Both depth-n
// observations of mixed terms and plain finite terms live here; a finite
// term is simply a hole-free truncation.

struct Trunc;
using TruncPtr = std::shared_ptr<const Trunc>;

struct TruncArg {
  std::vector<Atom> binders;
  TruncPtr child;
};

struct TruncCons {
  std::size_t cons;  // index into the ambient signature
  std::vector<TruncArg> args;
};

struct Trunc {
  std::variant<std::monostate, Atom, TruncCons> node;  // monostate = hole
};

TruncPtr mk_hole();
TruncPtr mk_tvar(Atom a);
TruncPtr mk_tcons(std::size_t cons, std::vector<TruncArg> args);

bool is_hole(const TruncPtr& t);
bool has_hole(const TruncPtr& t);

/// Raw syntactic equality (not α).
bool trunc_equal(const TruncPtr& a, const TruncPtr& b);

/// Every atom occurring, bound or free. This is also the support of a raw
/// term, since the action renames binders too.
AtomSet atoms_of(const TruncPtr& t);

/// Atoms with a free occurrence.
AtomSet free_vars(const TruncPtr& t);

std::size_t node_count(const TruncPtr& t);

TruncPtr act(const Permutation& p, const TruncPtr& t);
inline AtomSet support(const TruncPtr& t) { return atoms_of(t); }

/// Reference truncation on finite trees: the depth budget is spent only on
/// coinductive argument positions of `sig`.
TruncPtr truncate_finite(const SigPtr& sig, const TruncPtr& t, unsigned depth);

}  // namespace numu

#endif
