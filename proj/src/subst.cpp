#include "numu/subst.hpp"

#include "numu/error.hpp"

namespace numu {

namespace {

const AtomSet& bound_of(const MixedTerm& m) {
  if (!m.atom_bound())
    fail(Errc::UnboundedSupport,
         "substitution requires terms with a finite atom bound");
  return *m.atom_bound();
}

template <class S>
LayerPtr<S> box(Layer<S> l) {
  return std::make_shared<const Layer<S>>(std::move(l));
}

void layer_atoms(const PreLayer& layer, AtomSet& out) {
  if (const Atom* a = std::get_if<Atom>(&layer.node)) {
    out.insert(*a);
    return;
  }
  const auto& c = std::get<LayerCons<PendingChild>>(layer.node);
  for (const auto& arg : c.args) {
    for (Atom b : arg.binders) out.insert(b);
    if (const auto* sub = std::get_if<LayerPtr<PendingChild>>(&arg.payload))
      layer_atoms(**sub, out);
    else if (const MixedTerm* m = std::get_if<MixedTerm>(&arg.payload))
      merge_into(out, bound_of(*m));
    else
      merge_into(out, bound_of(std::get<PendingChild>(arg.payload).child));
  }
}

PreLayer observe_at(const MixedTerm& t) {
  if (t.is_var()) return PreLayer{t.var_atom()};
  LayerCons<PendingChild> c{t.cons_index(), {}};
  c.args.reserve(t.args().size());
  for (std::size_t i = 0; i < t.args().size(); ++i) {
    LayerArg<PendingChild> arg;
    arg.binders = t.args()[i].binders;
    if (t.mode(i) == Mode::Inductive)
      arg.payload = box(observe_at(t.child(i)));
    else
      arg.payload = PendingChild{t.child(i)};
    c.args.push_back(std::move(arg));
  }
  return PreLayer{std::move(c)};
}

PreLayer freshen_at(const PreLayer& layer, const AtomSet& avoid,
                    const Permutation& p, AtomSet& forbidden) {
  if (const Atom* a = std::get_if<Atom>(&layer.node)) return PreLayer{p(*a)};
  const auto& c = std::get<LayerCons<PendingChild>>(layer.node);
  LayerCons<PendingChild> out{c.cons, {}};
  out.args.reserve(c.args.size());
  for (const auto& arg : c.args) {
    Permutation pl = p;
    LayerArg<PendingChild> narg;
    narg.binders.reserve(arg.binders.size());
    for (Atom b : arg.binders) {
      Atom b0 = pl(b);
      if (avoid.count(b0)) {
        Atom z = fresh(forbidden);
        forbidden.insert(z);
        pl = compose(Permutation::transposition(b0, z), pl);
        narg.binders.push_back(z);
      } else {
        narg.binders.push_back(b0);
      }
    }
    if (const auto* sub = std::get_if<LayerPtr<PendingChild>>(&arg.payload))
      narg.payload = box(freshen_at(**sub, avoid, pl, forbidden));
    else if (const MixedTerm* m = std::get_if<MixedTerm>(&arg.payload))
      narg.payload = act_term(pl, *m);
    else
      narg.payload =
          PendingChild{act_term(pl, std::get<PendingChild>(arg.payload).child)};
    out.args.push_back(std::move(narg));
  }
  return PreLayer{std::move(out)};
}

/// One forced layer of u, left-injected: coinductive children are placed
/// as final terms (shared), never re-substituted.
PreLayer replacement_layer(const MixedTerm& u) {
  if (u.is_var()) return PreLayer{u.var_atom()};
  LayerCons<PendingChild> c{u.cons_index(), {}};
  c.args.reserve(u.args().size());
  for (std::size_t i = 0; i < u.args().size(); ++i) {
    LayerArg<PendingChild> arg;
    arg.binders = u.args()[i].binders;
    arg.payload = u.child(i);  // MixedTerm alternative: done
    c.args.push_back(std::move(arg));
  }
  return PreLayer{std::move(c)};
}

void require_fresh_binders(const std::vector<Atom>& binders, Atom x,
                           const MixedTerm& u) {
  for (Atom b : binders)
    if (b == x || bound_of(u).count(b))
      fail(Errc::FreshnessViolation,
           "binder not freshened before the inner recursion");
}

PreLayer h_at(const PreLayer& layer, Atom x, const MixedTerm& u) {
  if (const Atom* a = std::get_if<Atom>(&layer.node)) {
    if (*a == x) return replacement_layer(u);
    return layer;
  }
  const auto& c = std::get<LayerCons<PendingChild>>(layer.node);
  LayerCons<PendingChild> out{c.cons, {}};
  out.args.reserve(c.args.size());
  for (const auto& arg : c.args) {
    require_fresh_binders(arg.binders, x, u);
    LayerArg<PendingChild> narg;
    narg.binders = arg.binders;
    if (const auto* sub = std::get_if<LayerPtr<PendingChild>>(&arg.payload))
      narg.payload = box(h_at(**sub, x, u));
    else
      narg.payload = arg.payload;  // coinductive children stay untouched
    out.args.push_back(std::move(narg));
  }
  return PreLayer{std::move(out)};
}

SubstLayer pack_at(const PreLayer& layer, Atom x, const MixedTerm& u) {
  if (const Atom* a = std::get_if<Atom>(&layer.node)) return SubstLayer{*a};
  const auto& c = std::get<LayerCons<PendingChild>>(layer.node);
  LayerCons<SubstTask> out{c.cons, {}};
  out.args.reserve(c.args.size());
  for (const auto& arg : c.args) {
    LayerArg<SubstTask> narg;
    narg.binders = arg.binders;
    if (const auto* sub = std::get_if<LayerPtr<PendingChild>>(&arg.payload)) {
      narg.payload = box(pack_at(**sub, x, u));
    } else if (const MixedTerm* m = std::get_if<MixedTerm>(&arg.payload)) {
      narg.payload = *m;
    } else {
      // τ_n: the pair (x, u) moves under the abstractions; the binders are
      // fresh for both, so they serve as the strength's fresh atoms.
      require_fresh_binders(arg.binders, x, u);
      narg.payload = SubstTask{std::get<PendingChild>(arg.payload).child, x, u};
    }
    out.args.push_back(std::move(narg));
  }
  return SubstLayer{std::move(out)};
}

}  // namespace

PreLayer observe_pending(const MixedTerm& t) { return observe_at(t); }

PreLayer freshen_binders(const PreLayer& layer, const AtomSet& avoid) {
  AtomSet forbidden = avoid;
  layer_atoms(layer, forbidden);
  return freshen_at(layer, avoid, Permutation{}, forbidden);
}

PreLayer layer_subst_h(const PreLayer& layer, Atom x, const MixedTerm& u) {
  return h_at(layer, x, u);
}

SubstLayer strength_pack(const PreLayer& layer, Atom x, const MixedTerm& u) {
  return pack_at(layer, x, u);
}

MixedTerm subst(const MixedTerm& t, Atom x, const MixedTerm& u) {
  AtomSet bound = set_union(bound_of(t), bound_of(u));
  bound.insert(x);
  std::function<SubstLayer(const SubstTask&)> step =
      [](const SubstTask& task) -> SubstLayer {
    AtomSet avoid = bound_of(task.replacement);
    avoid.insert(task.var);
    PreLayer layer = observe_pending(task.target);
    layer = freshen_binders(layer, avoid);
    layer = layer_subst_h(layer, task.var, task.replacement);
    return strength_pack(layer, task.var, task.replacement);
  };
  return unfold<SubstTask>(t.sig(), std::move(step), SubstTask{t, x, u},
                           std::move(bound));
}

}  // namespace numu
