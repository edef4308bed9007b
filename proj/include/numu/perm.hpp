#ifndef NUMU_PERM_HPP
#define NUMU_PERM_HPP

#include <map>

#include "numu/atom.hpp"

namespace numu {

/// Finitely supported permutation of atoms, stored as a canonical finite
/// map: atoms mapped to themselves are absent, so equality is structural.
class Permutation {
 public:
  Permutation() = default;  // identity

  static Permutation transposition(Atom a, Atom b);

  Atom operator()(Atom a) const;

  bool is_identity() const { return map_.empty(); }

  /// Atoms moved by the permutation.
  AtomSet domain() const;

  Permutation inverse() const;

  bool operator==(const Permutation&) const = default;

  const std::map<Atom, Atom>& mapping() const { return map_; }

  friend Permutation compose(const Permutation& p, const Permutation& q);

 private:
  std::map<Atom, Atom> map_;
};

/// Acts as "first q, then p": compose(p, q)(a) = p(q(a)).
Permutation compose(const Permutation& p, const Permutation& q);

}  // namespace numu

#endif
