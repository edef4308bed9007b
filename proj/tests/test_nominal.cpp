#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "numu/nominal.hpp"
#include "support/gen.hpp"

using namespace numu;
using testgen::Gen;

namespace {
const Atom x{0}, y{1}, z{2}, w{3};
}

TEST_CASE("transposition basics") {
  CHECK(Permutation::transposition(x, x).is_identity());
  CHECK(Permutation::transposition(x, y)(x) == y);
  CHECK(Permutation::transposition(x, y)(y) == x);
  CHECK(Permutation::transposition(x, y)(z) == z);
}

TEST_CASE("compose applies the right factor first") {
  Permutation p = compose(Permutation::transposition(x, y),
                          Permutation::transposition(y, z));
  // z ↦ y by (y z), then y ↦ x by (x y).
  CHECK(p(z) == x);
  CHECK(p(x) == y);
  CHECK(p(y) == z);
}

TEST_CASE("group laws") {
  Gen g(11);
  for (int i = 0; i < 1000; ++i) {
    Permutation p = g.perm(), q = g.perm();
    CHECK(compose(p, p.inverse()).is_identity());
    CHECK(compose(p.inverse(), p).is_identity());
    Permutation pq = compose(p, q);
    for (int a = 0; a < 10; ++a) CHECK(pq(Atom(a)) == p(q(Atom(a))));
  }
  Permutation t = Permutation::transposition(x, y);
  CHECK(t.inverse().mapping() == t.mapping());
}

TEST_CASE("action laws on atoms, sets and abstractions") {
  Gen g(12);
  for (int i = 0; i < 1000; ++i) {
    Permutation p = g.perm(), q = g.perm();
    Atom a = g.atom();
    AtomSet s = g.atom_set();
    Abstraction<Atom> ab{g.atom(), g.atom()};

    CHECK(act(Permutation{}, a) == a);
    CHECK(act(Permutation{}, s) == s);
    CHECK(act(p, act(q, a)) == act(compose(p, q), a));
    CHECK(act(p, act(q, s)) == act(compose(p, q), s));
    Abstraction<Atom> lhs = act(p, act(q, ab));
    Abstraction<Atom> rhs = act(compose(p, q), ab);
    CHECK(lhs.binder == rhs.binder);
    CHECK(lhs.body == rhs.body);

    // support-respecting: a permutation fixing the support acts trivially
    Permutation fix;  // identity certainly fixes everything
    CHECK(act(fix, s) == s);
  }
}

TEST_CASE("support and its minimality") {
  CHECK(support(x) == AtomSet{x});
  CHECK(support(Abstraction<Atom>{x, x}) == AtomSet{});
  CHECK(support(Abstraction<Atom>{x, y}) == AtomSet{y});
  CHECK(support(std::pair{x, y}) == AtomSet{x, y});

  Gen g(13);
  for (int i = 0; i < 1000; ++i) {
    AtomSet s = g.atom_set();
    for (Atom a : support(s)) {
      Atom b = fresh(support(s));
      CHECK(act(Permutation::transposition(a, b), s) != s);
    }
    Abstraction<Atom> ab{g.atom(), g.atom()};
    for (Atom a : support(ab)) {
      AtomSet avoid = support(ab);
      avoid.insert(ab.binder);
      avoid.insert(ab.body);
      Atom b = fresh(avoid);
      CHECK_FALSE(
          abs_eq(act(Permutation::transposition(a, b), ab), ab));
    }
  }
}

TEST_CASE("fresh is the deterministic least choice") {
  CHECK(fresh({}) == Atom(0));
  CHECK(fresh({Atom(0)}) == Atom(1));
  CHECK(fresh({Atom(0), Atom(1), Atom(3)}) == Atom(2));
  Gen g(14);
  for (int i = 0; i < 200; ++i) {
    AtomSet s = g.atom_set();
    CHECK(s.count(fresh(s)) == 0);
  }
  auto many = fresh_many({Atom(1)}, 3);
  CHECK(many == std::vector<Atom>{Atom(0), Atom(2), Atom(3)});
}

TEST_CASE("abs_eq examples") {
  CHECK(abs_eq(Abstraction<Atom>{x, x}, Abstraction<Atom>{y, y}));
  CHECK(abs_eq(Abstraction<Atom>{x, z}, Abstraction<Atom>{y, z}));
  CHECK_FALSE(abs_eq(Abstraction<Atom>{x, y}, Abstraction<Atom>{y, x}));
}

namespace {
// abs_eq with an explicitly chosen witness, for choice-independence.
bool abs_eq_with(const Abstraction<Atom>& a, const Abstraction<Atom>& b,
                 Atom yw) {
  return act(Permutation::transposition(a.binder, yw), a.body) ==
         act(Permutation::transposition(b.binder, yw), b.body);
}
}  // namespace

TEST_CASE("abs_eq is an equivalence, equivariant, witness-independent") {
  Gen g(15);
  for (int i = 0; i < 1000; ++i) {
    Abstraction<Atom> a{g.atom(), g.atom()}, b{g.atom(), g.atom()},
        c{g.atom(), g.atom()};
    CHECK(abs_eq(a, a));
    CHECK(abs_eq(a, b) == abs_eq(b, a));
    if (abs_eq(a, b) && abs_eq(b, c)) CHECK(abs_eq(a, c));

    Permutation p = g.perm();
    if (abs_eq(a, b)) CHECK(abs_eq(act(p, a), act(p, b)));

    AtomSet avoid = set_union(support(a.body), support(b.body));
    avoid.insert(a.binder);
    avoid.insert(b.binder);
    std::vector<Atom> ws = fresh_many(avoid, 2);
    CHECK(abs_eq_with(a, b, ws[0]) == abs_eq_with(a, b, ws[1]));
    CHECK(abs_eq_with(a, b, ws[0]) == abs_eq(a, b));
  }
}

TEST_CASE("concretion") {
  CHECK(concrete(Abstraction<Atom>{x, x}, y) == y);
  CHECK(concrete(Abstraction<Atom>{x, z}, y) == z);
  CHECK_THROWS_AS(concrete(Abstraction<Atom>{x, z}, z), Error);

  // round trip: ⟨y⟩(A @ y) = A for fresh y
  Gen g(16);
  for (int i = 0; i < 1000; ++i) {
    Abstraction<Atom> a{g.atom(), g.atom()};
    AtomSet avoid = support(a);
    avoid.insert(a.binder);
    avoid.insert(a.body);
    Atom yw = fresh(avoid);
    CHECK(abs_eq(Abstraction<Atom>{yw, concrete(a, yw)}, a));
  }
}
