#include "numu/atom.hpp"

namespace numu {

Atom fresh(const AtomSet& avoid) {
  std::int32_t candidate = 0;
  for (Atom a : avoid) {
    if (a.id() < 0) continue;
    if (a.id() > candidate) break;
    if (a.id() == candidate) ++candidate;
  }
  return Atom(candidate);
}

std::vector<Atom> fresh_many(const AtomSet& avoid, std::size_t n) {
  std::vector<Atom> out;
  out.reserve(n);
  AtomSet blocked = avoid;
  for (std::size_t i = 0; i < n; ++i) {
    Atom a = fresh(blocked);
    blocked.insert(a);
    out.push_back(a);
  }
  return out;
}

}  // namespace numu
