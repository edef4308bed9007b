#ifndef NUMU_ATOM_HPP
#define NUMU_ATOM_HPP

#include <compare>
#include <cstdint>
#include <set>
#include <vector>

namespace numu {

/// A pure name. Identity is the integer id; display names live in
/// syntax::NameTable so values stay cheap to copy and compare.
class Atom {
 public:
  explicit constexpr Atom(std::int32_t id) : id_(id) {}
  constexpr std::int32_t id() const { return id_; }
  auto operator<=>(const Atom&) const = default;

 private:
  std::int32_t id_;
};

using AtomSet = std::set<Atom>;

/// Least atom (under the total order on ids) not in `avoid`.
/// Deterministic, so freshening is reproducible.
Atom fresh(const AtomSet& avoid);

/// n distinct fresh atoms, smallest first.
std::vector<Atom> fresh_many(const AtomSet& avoid, std::size_t n);

inline AtomSet& merge_into(AtomSet& dst, const AtomSet& src) {
  dst.insert(src.begin(), src.end());
  return dst;
}

inline AtomSet set_union(AtomSet a, const AtomSet& b) {
  merge_into(a, b);
  return a;
}

}  // namespace numu

#endif
