#include "numu/perm.hpp"

namespace numu {

Permutation Permutation::transposition(Atom a, Atom b) {
  Permutation p;
  if (a != b) {
    p.map_.insert({a, b});
    p.map_.insert({b, a});
  }
  return p;
}

Atom Permutation::operator()(Atom a) const {
  auto it = map_.find(a);
  return it == map_.end() ? a : it->second;
}

AtomSet Permutation::domain() const {
  AtomSet s;
  for (const auto& [k, v] : map_) s.insert(k);
  return s;
}

Permutation Permutation::inverse() const {
  Permutation q;
  for (const auto& [k, v] : map_) q.map_.insert({v, k});
  return q;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  Permutation r;
  AtomSet dom = q.domain();
  merge_into(dom, p.domain());
  for (Atom a : dom) {
    Atom b = p(q(a));
    if (b != a) r.map_.insert({a, b});
  }
  return r;
}

}  // namespace numu
