#ifndef NUMU_SYNTAX_HPP
#define NUMU_SYNTAX_HPP

#include <map>
#include <optional>
#include <string>

#include "numu/env.hpp"
#include "numu/perm.hpp"
#include "numu/signature.hpp"
#include "numu/trunc.hpp"

namespace numu {

/// Bidirectional identifier <-> atom table for one session. Parsing
/// interns names densely from 0; atoms produced by freshening may have no
/// name and get a deterministic, collision-free fallback when printed.
class NameTable {
 public:
  Atom intern(const std::string& name);
  std::optional<std::string> name(Atom a) const;
  std::optional<Atom> find(const std::string& name) const;
  std::string display(Atom a) const;

 private:
  std::map<std::string, Atom> by_name_;
  std::map<Atom, std::string> by_atom_;
  std::int32_t next_ = 0;
};

/// Term expression syntax.
///
///   variable              x
///   constructor           op(x1 x2. e, e2, ...)   (nullary: op or op())
///   hole                  _
///   recursive system      rec { T = e; U = e } in e
///
/// When the signature is structurally a λ^abc instance, sugar is enabled:
/// \x. e for lam(x. e) and juxtaposition e1 e2 for app(e1, e2).
///
/// Parse errors carry 1-based line/column.
TermEnv parse_term(const std::string& src, const SigPtr& sig, NameTable& names);

/// Truncations and finite terms print in the same syntax, `_` for the
/// hole; λ-sugar is used when the signature is a λ^abc instance.
std::string print_trunc(const TruncPtr& t, const SigPtr& sig,
                        const NameTable& names);

/// Sorted (by display name) atom set: "{x, y, z}".
std::string print_atom_set(const AtomSet& s, const NameTable& names);

/// "(x y)(u v)": a product of transpositions, the rightmost applied first.
Permutation parse_perm(const std::string& src, NameTable& names);

}  // namespace numu

#endif
