#ifndef NUMU_NOMINAL_HPP
#define NUMU_NOMINAL_HPP

#include <functional>
#include <utility>

#include "numu/atom.hpp"
#include "numu/error.hpp"
#include "numu/perm.hpp"

namespace numu {

// The permutation-action interface: every nominal type provides overloads
// of act(p, v) and support(v). Group-action laws and support minimality
// are property-tested, not enforced here.

inline Atom act(const Permutation& p, Atom a) { return p(a); }
inline AtomSet support(Atom a) { return {a}; }

inline AtomSet act(const Permutation& p, const AtomSet& s) {
  AtomSet out;
  for (Atom a : s) out.insert(p(a));
  return out;
}
inline AtomSet support(const AtomSet& s) { return s; }

template <class A, class B>
std::pair<A, B> act(const Permutation& p, const std::pair<A, B>& v) {
  return {act(p, v.first), act(p, v.second)};
}
template <class A, class B>
AtomSet support(const std::pair<A, B>& v) {
  return set_union(support(v.first), support(v.second));
}

/// ⟨x⟩a with a chosen representative. Equality of abstractions is abs_eq,
/// never field-wise comparison.
template <class T>
struct Abstraction {
  Atom binder;
  T body;
};

template <class T>
Abstraction<T> act(const Permutation& p, const Abstraction<T>& a) {
  return {p(a.binder), act(p, a.body)};
}

template <class T>
AtomSet support(const Abstraction<T>& a) {
  AtomSet s = support(a.body);
  s.erase(a.binder);
  return s;
}

/// (x,a) ~ (x',a') iff for one (equivalently, any) y fresh for both,
/// (x y)·a = (x' y)·a'. The witness choice is irrelevant, so we pick the
/// deterministic least one. `eq` lets infinitary payloads plug in a
/// depth-bounded comparison.
template <class T, class Eq = std::equal_to<T>>
bool abs_eq(const Abstraction<T>& a, const Abstraction<T>& b, Eq eq = Eq{}) {
  AtomSet avoid = set_union(support(a.body), support(b.body));
  avoid.insert(a.binder);
  avoid.insert(b.binder);
  Atom y = fresh(avoid);
  return eq(act(Permutation::transposition(a.binder, y), a.body),
            act(Permutation::transposition(b.binder, y), b.body));
}

/// Concretion ⟨x⟩a @ y = (x y)·a, defined only for y fresh for the class.
template <class T>
T concrete(const Abstraction<T>& a, Atom y) {
  AtomSet s = support(a);
  if (s.count(y)) fail(Errc::NotFresh, "concretion at a non-fresh atom");
  return act(Permutation::transposition(a.binder, y), a.body);
}

}  // namespace numu

#endif
