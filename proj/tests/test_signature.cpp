#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "numu/error.hpp"
#include "numu/signature.hpp"

using namespace numu;

TEST_CASE("validate") {
  CHECK_NOTHROW(validate(lambda_signature(false, false, true)));
  CHECK_NOTHROW(validate(Signature{}));  // terms are then just variables

  Signature dup{"d", {Constructor{"f", {}}, Constructor{"f", {}}}};
  CHECK_THROWS_AS(validate(dup), Error);
  Signature anon{"a", {Constructor{"", {}}}};
  CHECK_THROWS_AS(validate(anon), Error);
}

TEST_CASE("lambda_signature arities and modes") {
  Signature s = lambda_signature(false, false, true);
  REQUIRE(s.size() == 2);
  CHECK(s.at(0).name == "lam");
  CHECK(s.at(0).args == std::vector<ArgSpec>{{1, Mode::Inductive}});
  CHECK(s.at(1).name == "app");
  CHECK(s.at(1).args ==
        std::vector<ArgSpec>{{0, Mode::Inductive}, {0, Mode::Coinductive}});

  Signature all = lambda_signature(true, true, true);
  CHECK(all.at(0).args[0].mode == Mode::Coinductive);
  CHECK(all.at(1).args[0].mode == Mode::Coinductive);
  CHECK(all.at(1).args[1].mode == Mode::Coinductive);

  Signature none = lambda_signature(false, false, false);
  for (const Constructor& c : none.constructors())
    for (const ArgSpec& a : c.args) CHECK(a.mode == Mode::Inductive);

  for (int m = 0; m < 8; ++m)
    CHECK_NOTHROW(validate(lambda_signature(m & 4, m & 2, m & 1)));
}

TEST_CASE("non-triviality") {
  CHECK_FALSE(is_nontrivial(Signature{}));
  for (int m = 0; m < 8; ++m) {
    Signature s = lambda_signature(m & 4, m & 2, m & 1);
    // non-trivial iff some argument is coinductive: lam always provides
    // the binder, app the width.
    CHECK(is_nontrivial(s) == (m != 0));
  }

  NontrivialityReport r = nontriviality(lambda_signature(false, false, true));
  REQUIRE(r.nontrivial());
  CHECK(*r.binder_op == 0);       // lam
  CHECK(*r.wide_op == 1);         // app
  CHECK(*r.coinductive_op == 1);  // app again

  NontrivialityReport r0 = nontriviality(lambda_signature(false, false, false));
  CHECK(r0.binder_op);
  CHECK(r0.wide_op);
  CHECK_FALSE(r0.coinductive_op);
}

TEST_CASE("non-triviality is monotone under adding constructors") {
  Constructor guard{"node",
                    {ArgSpec{0, Mode::Inductive}, ArgSpec{0, Mode::Coinductive}}};
  for (int m = 0; m < 8; ++m) {
    Signature s = lambda_signature(m & 4, m & 2, m & 1);
    std::vector<Constructor> cs = s.constructors();
    cs.push_back(guard);
    Signature bigger{"ext", cs};
    if (is_nontrivial(s)) CHECK(is_nontrivial(bigger));
    CHECK(is_nontrivial(bigger));  // node supplies width and coinduction
  }
}

TEST_CASE("lambda_shape detection") {
  for (int m = 0; m < 8; ++m) {
    auto sh = lambda_shape(lambda_signature(m & 4, m & 2, m & 1));
    REQUIRE(sh);
    CHECK(sh->modes == std::array<bool, 3>{bool(m & 4), bool(m & 2), bool(m & 1)});
    CHECK(sh->lam == 0);
    CHECK(sh->app == 1);
  }
  Signature rtree{"rtree",
                  {Constructor{"node", {ArgSpec{0, Mode::Inductive},
                                        ArgSpec{0, Mode::Coinductive}}},
                   Constructor{"leaf", {}}}};
  CHECK_FALSE(lambda_shape(rtree));
  CHECK_FALSE(lambda_shape(Signature{}));
}

TEST_CASE("signature files round-trip") {
  Signature s = lambda_signature(true, false, true);
  Signature back = parse_signature_json(signature_to_json(s));
  CHECK(back == s);

  CHECK_THROWS_AS(parse_signature_json("{"), Error);
  CHECK_THROWS_AS(parse_signature_json(R"({"constructors":[
      {"name":"f","args":[{"binders":0,"mode":"weird"}]}]})"),
                  Error);

  Signature parsed = parse_signature_json(R"({
    "name": "rtree",
    "constructors": [
      { "name": "node", "args": [ { "binders": 0, "mode": "ind" },
                                  { "binders": 0, "mode": "coind" } ] },
      { "name": "leaf", "args": [] }
    ]})");
  CHECK(parsed.name() == "rtree");
  REQUIRE(parsed.size() == 2);
  CHECK(parsed.at(0).args[1].mode == Mode::Coinductive);
  CHECK(parsed.find("leaf") == 1);
  CHECK_FALSE(parsed.find("nope"));
}
