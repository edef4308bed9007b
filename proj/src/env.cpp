#include "numu/env.hpp"

#include <set>

#include "numu/error.hpp"

namespace numu {

ExprPtr mk_ehole() {
  static const ExprPtr hole = std::make_shared<Expr>(Expr{std::monostate{}});
  return hole;
}
ExprPtr mk_evar(Atom a) { return std::make_shared<Expr>(Expr{a}); }
ExprPtr mk_eref(std::string name) {
  return std::make_shared<Expr>(Expr{Ref{std::move(name)}});
}
ExprPtr mk_econs(std::size_t cons, std::vector<ExprArg> args) {
  return std::make_shared<Expr>(Expr{ExprCons{cons, std::move(args)}});
}

const ExprPtr* TermEnv::lookup(const std::string& name) const {
  for (const auto& [n, e] : defs)
    if (n == name) return &e;
  return nullptr;
}

namespace {

void check_expr(const SigPtr& sig, const TermEnv& env, const ExprPtr& e,
                bool allow_holes) {
  if (std::holds_alternative<std::monostate>(e->node)) {
    if (!allow_holes)
      fail(Errc::HoleInTerm, "the hole '_' cannot appear in a term definition");
    return;
  }
  if (const Ref* r = std::get_if<Ref>(&e->node)) {
    if (!env.lookup(r->name))
      fail(Errc::UndefinedName, "undefined name '" + r->name + "'");
    return;
  }
  if (const ExprCons* c = std::get_if<ExprCons>(&e->node)) {
    if (c->cons >= sig->size())
      fail(Errc::UnknownConstructor, "constructor index out of range");
    const Constructor& decl = sig->at(c->cons);
    if (c->args.size() != decl.args.size())
      fail(Errc::ArityMismatch, "wrong arity for '" + decl.name + "'");
    for (std::size_t i = 0; i < c->args.size(); ++i) {
      if (c->args[i].binders.size() != decl.args[i].binders)
        fail(Errc::ArityMismatch, "wrong binder count for '" + decl.name + "'");
      check_expr(sig, env, c->args[i].child, allow_holes);
    }
  }
}

// Edges of the reference graph that are not protected by a coinductive
// argument position on the path from the equation root to the Ref.
void unguarded_refs(const SigPtr& sig, const ExprPtr& e, bool guarded,
                    std::set<std::string>& out) {
  if (const Ref* r = std::get_if<Ref>(&e->node)) {
    if (!guarded) out.insert(r->name);
    return;
  }
  if (const ExprCons* c = std::get_if<ExprCons>(&e->node)) {
    const Constructor& decl = sig->at(c->cons);
    for (std::size_t i = 0; i < c->args.size(); ++i) {
      bool g = guarded || decl.args[i].mode == Mode::Coinductive;
      unguarded_refs(sig, c->args[i].child, g, out);
    }
  }
}

}  // namespace

void validate_env(const SigPtr& sig, const TermEnv& env) {
  std::set<std::string> names;
  for (const auto& [n, e] : env.defs) {
    if (n.empty()) fail(Errc::EmptyName, "equation with empty name");
    if (!names.insert(n).second)
      fail(Errc::DuplicateConstructor, "duplicate equation name '" + n + "'");
  }
  for (const auto& [n, e] : env.defs) check_expr(sig, env, e, false);
  if (env.root) check_expr(sig, env, env.root, false);

  // Guardedness: the subgraph of unguarded edges must be acyclic.
  std::map<std::string, std::set<std::string>> graph;
  for (const auto& [n, e] : env.defs) unguarded_refs(sig, e, false, graph[n]);

  std::map<std::string, int> state;  // 0 unseen, 1 on stack, 2 done
  std::vector<std::string> stack;
  auto dfs = [&](auto&& self, const std::string& n) -> void {
    state[n] = 1;
    stack.push_back(n);
    for (const std::string& m : graph[n]) {
      if (state[m] == 1) {
        std::string cycle = m;
        for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
          cycle += " -> " + *it;
          if (*it == m) break;
        }
        fail(Errc::Unguarded,
             "non-productive definition: cycle without a coinductive guard: " +
                 cycle);
      }
      if (state[m] == 0) self(self, m);
    }
    stack.pop_back();
    state[n] = 2;
  };
  for (const auto& [n, e] : env.defs)
    if (state[n] == 0) dfs(dfs, n);
}

namespace {

void expr_atoms(const ExprPtr& e, AtomSet& out) {
  if (const Atom* a = std::get_if<Atom>(&e->node)) {
    out.insert(*a);
  } else if (const ExprCons* c = std::get_if<ExprCons>(&e->node)) {
    for (const ExprArg& a : c->args) {
      for (Atom b : a.binders) out.insert(b);
      expr_atoms(a.child, out);
    }
  }
}

struct Builder : std::enable_shared_from_this<Builder> {
  SigPtr sig;
  std::map<std::string, ExprPtr> defs;
  std::shared_ptr<const AtomSet> bound;
  std::map<std::string, Child> cells;

  MixedTerm build(const ExprPtr& e) {
    if (const Atom* a = std::get_if<Atom>(&e->node))
      return MixedTerm::var(sig, *a, bound);
    if (const Ref* r = std::get_if<Ref>(&e->node)) return cells.at(r->name).force();
    if (std::holds_alternative<std::monostate>(e->node))
      fail(Errc::HoleInTerm, "hole in term definition");
    const ExprCons& c = std::get<ExprCons>(e->node);
    const Constructor& decl = sig->at(c.cons);
    std::vector<TermArg> args;
    args.reserve(c.args.size());
    for (std::size_t i = 0; i < c.args.size(); ++i) {
      const ExprPtr& sub = c.args[i].child;
      Child child;
      if (decl.args[i].mode == Mode::Inductive) {
        child = Child::ready(build(sub));
      } else if (const Ref* r = std::get_if<Ref>(&sub->node)) {
        child = cells.at(r->name);  // share the equation's cell
      } else {
        child = Child::lazy(
            [self = shared_from_this(), sub]() { return self->build(sub); });
      }
      args.push_back(TermArg{c.args[i].binders, std::move(child)});
    }
    return MixedTerm::cons(sig, c.cons, std::move(args), bound);
  }
};

}  // namespace

AtomSet env_atoms(const TermEnv& env) {
  AtomSet s;
  for (const auto& [n, e] : env.defs) expr_atoms(e, s);
  if (env.root) expr_atoms(env.root, s);
  return s;
}

MixedTerm from_equations(const SigPtr& sig, const TermEnv& env) {
  validate_env(sig, env);
  auto b = std::make_shared<Builder>();
  b->sig = sig;
  for (const auto& [n, e] : env.defs) b->defs[n] = e;
  b->bound = std::make_shared<const AtomSet>(env_atoms(env));
  for (const auto& [n, e] : b->defs)
    b->cells.emplace(n, Child::lazy([b, e]() { return b->build(e); }));
  return b->build(env.root);
}

TruncPtr expr_to_trunc(const ExprPtr& e) {
  if (std::holds_alternative<std::monostate>(e->node)) return mk_hole();
  if (const Atom* a = std::get_if<Atom>(&e->node)) return mk_tvar(*a);
  if (std::holds_alternative<Ref>(e->node))
    fail(Errc::UndefinedName, "recursive name in a finite term");
  const ExprCons& c = std::get<ExprCons>(e->node);
  std::vector<TruncArg> args;
  args.reserve(c.args.size());
  for (const ExprArg& a : c.args)
    args.push_back(TruncArg{a.binders, expr_to_trunc(a.child)});
  return mk_tcons(c.cons, std::move(args));
}

TruncPtr expr_to_finite(const ExprPtr& e) {
  TruncPtr t = expr_to_trunc(e);
  if (has_hole(t)) fail(Errc::HoleInTerm, "hole in a finite term");
  return t;
}

bool expr_has_ref(const ExprPtr& e) {
  if (std::holds_alternative<Ref>(e->node)) return true;
  if (const ExprCons* c = std::get_if<ExprCons>(&e->node))
    for (const ExprArg& a : c->args)
      if (expr_has_ref(a.child)) return true;
  return false;
}

}  // namespace numu
