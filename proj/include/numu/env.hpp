#ifndef NUMU_ENV_HPP
#define NUMU_ENV_HPP

#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "numu/term.hpp"
#include "numu/trunc.hpp"

namespace numu {

// Term expressions: the syntax of equation right-hand sides. An Expr may
// mention equation names (Ref) and, when it denotes a printed truncation,
// the hole.

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Ref {
  std::string name;
  bool operator==(const Ref&) const = default;
};

struct ExprArg {
  std::vector<Atom> binders;
  ExprPtr child;
};

struct ExprCons {
  std::size_t cons;
  std::vector<ExprArg> args;
};

struct Expr {
  std::variant<std::monostate, Atom, Ref, ExprCons> node;  // monostate = hole
};

ExprPtr mk_ehole();
ExprPtr mk_evar(Atom a);
ExprPtr mk_eref(std::string name);
ExprPtr mk_econs(std::size_t cons, std::vector<ExprArg> args);

/// Named system of mutually recursive equations with a root expression.
/// Well-formedness (names defined, guardedness) is checked by validate_env.
struct TermEnv {
  std::vector<std::pair<std::string, ExprPtr>> defs;
  ExprPtr root;

  const ExprPtr* lookup(const std::string& name) const;
};

/// Checks, in order: duplicate/undefined names, constructor arities,
/// absence of holes, and guardedness (every cycle in the reference graph
/// passes through a coinductive argument position). Throws Unguarded with
/// the offending cycle spelled out.
void validate_env(const SigPtr& sig, const TermEnv& env);

/// Exact finite set of atoms appearing in the equations and root; an upper
/// bound for the support of the denoted term at every depth.
AtomSet env_atoms(const TermEnv& env);

/// The unique mixed term unfolding of the root. Lazy; validate_env is run
/// first, so every inductive layer of the result is finite.
MixedTerm from_equations(const SigPtr& sig, const TermEnv& env);

/// Expr without Refs and holes, as a finite term.
TruncPtr expr_to_finite(const ExprPtr& e);

/// Expr without Refs (holes allowed), as a truncation-shaped finite tree.
TruncPtr expr_to_trunc(const ExprPtr& e);

bool expr_has_ref(const ExprPtr& e);

}  // namespace numu

#endif
