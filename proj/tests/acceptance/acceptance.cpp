// Acceptance suite: one pass/fail line per criterion, exit code = number
// of failed criteria. Scales are deliberately larger than the unit tests.
//
// Environment: NUMU_CLI (path to the CLI binary), NUMU_GOLDEN (golden
// files), NUMU_SIGS (shipped signature files).

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "numu/alpha.hpp"
#include "numu/env.hpp"
#include "numu/metric.hpp"
#include "numu/nominal.hpp"
#include "numu/signature.hpp"
#include "numu/subst.hpp"
#include "numu/syntax.hpp"
#include "numu/term.hpp"
#include "support/gen.hpp"
#include "support/oracles.hpp"

using namespace numu;
using testgen::Gen;

namespace {

struct Failure {
  std::string what;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

std::string env_or(const char* var, const char* fallback) {
  const char* v = std::getenv(var);
  return v ? v : fallback;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  require(bool(in), "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string run_cli(const std::string& args) {
  std::string cmd = env_or("NUMU_CLI", "./numu") + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  require(p != nullptr, "popen failed");
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  require(pclose(p) == 0, "CLI exited nonzero: " + cmd);
  return out;
}

const Atom ax{0}, ay{1}, az{2};
SigPtr sig001 = std::make_shared<const Signature>(lambda_signature(0, 0, 1));
SigPtr sig000 = std::make_shared<const Signature>(lambda_signature(0, 0, 0));
SigPtr sig111 = std::make_shared<const Signature>(lambda_signature(1, 1, 1));
constexpr std::size_t kLam = 0, kApp = 1;

TruncPtr tapp(TruncPtr f, TruncPtr a) {
  return mk_tcons(kApp, {TruncArg{{}, std::move(f)}, TruncArg{{}, std::move(a)}});
}
TruncPtr tlam(Atom b, TruncPtr body) {
  return mk_tcons(kLam, {TruncArg{{b}, std::move(body)}});
}
ExprPtr eapp(ExprPtr f, ExprPtr a) {
  return mk_econs(kApp, {ExprArg{{}, std::move(f)}, ExprArg{{}, std::move(a)}});
}
ExprPtr elam(Atom b, ExprPtr body) {
  return mk_econs(kLam, {ExprArg{{b}, std::move(body)}});
}

TermEnv env1(const char* name, ExprPtr body) {
  TermEnv e;
  e.defs.emplace_back(name, std::move(body));
  e.root = mk_eref(name);
  return e;
}

MixedTerm reg(Gen& g) {
  return from_equations(sig001, g.regular_env(sig001, {}));
}

// ---------------------------------------------------------------- criteria

void criterion1() {
  Gen g(101);
  for (int i = 0; i < 10000; ++i) {
    Permutation p = g.perm(), q = g.perm();
    AtomSet s = g.atom_set();
    Atom a = g.atom();
    require(act(Permutation{}, s) == s, "identity law");
    require(act(p, act(q, a)) == act(compose(p, q), a), "composition on atoms");
    require(act(p, act(q, s)) == act(compose(p, q), s), "composition on sets");

    for (Atom m : support(s)) {
      Atom b = fresh(support(s));
      require(act(Permutation::transposition(m, b), s) != s,
              "support minimality");
    }

    Abstraction<Atom> ab{g.atom(), g.atom()}, cd{g.atom(), g.atom()};
    AtomSet avoid = support(ab);
    avoid.insert(ab.binder);
    avoid.insert(ab.body);
    Atom w = fresh(avoid);
    require(abs_eq(Abstraction<Atom>{w, concrete(ab, w)}, ab),
            "concretion round-trip");

    require(abs_eq(ab, ab), "abs_eq reflexive");
    require(abs_eq(ab, cd) == abs_eq(cd, ab), "abs_eq symmetric");
    if (abs_eq(ab, cd))
      require(abs_eq(act(p, ab), act(p, cd)), "abs_eq equivariance");

    AtomSet av2 = set_union(support(ab.body), support(cd.body));
    av2.insert(ab.binder);
    av2.insert(cd.binder);
    auto ws = fresh_many(av2, 2);
    auto with = [&](Atom yw) {
      return act(Permutation::transposition(ab.binder, yw), ab.body) ==
             act(Permutation::transposition(cd.binder, yw), cd.body);
    };
    require(with(ws[0]) == with(ws[1]), "fresh-witness independence");
    require(with(ws[0]) == abs_eq(ab, cd), "fresh-witness vs abs_eq");
  }
}

void criterion2() {
  Gen g(102);
  for (int i = 0; i < 2000; ++i) {
    TermEnv e = g.regular_env(sig001, {});
    MixedTerm t = from_equations(sig001, e);
    require(trunc_equal(truncate(t, 0), mk_hole()), "trunc_0 = *");
    Permutation p = g.perm(6);
    for (unsigned n = 0; n <= 6; ++n) {
      TruncPtr tn = truncate(t, n);
      for (unsigned m = 0; m <= n; ++m)
        require(trunc_equal(truncate(t, m), truncate_finite(sig001, tn, m)),
                "monotonicity");
      require(trunc_equal(truncate(act_term(p, t), n), act(p, tn)),
              "equivariance");
    }
  }
  // worked values
  TermEnv e = env1("T", eapp(mk_evar(ax), elam(ay, eapp(mk_evar(ay), mk_eref("T")))));
  MixedTerm t = from_equations(sig001, e);
  require(trunc_equal(truncate(t, 2),
                      tapp(mk_tvar(ax), tlam(ay, tapp(mk_tvar(ay), mk_hole())))),
          "worked 001 value");
  MixedTerm u = embed(sig111, tlam(ax, tapp(mk_tvar(ax), mk_tvar(ax))));
  require(trunc_equal(truncate(u, 1), tlam(ax, mk_hole())), "worked 111 value");
}

void criterion3() {
  Gen g(103);
  for (int i = 0; i < 1000; ++i) {
    MixedTerm a = reg(g), b = reg(g), c = reg(g);
    for (auto dist : {an_distance, alpha_distance}) {
      MetricResult ab = dist(a, b, 12), ba = dist(b, a, 12);
      MetricResult bc = dist(b, c, 12), ac = dist(a, c, 12);
      require(ab == ba, "symmetry");
      require(ac.exponent >= std::min(ab.exponent, bc.exponent), "ultrametric");
    }
    require(alpha_distance(a, b, 12).exponent >= an_distance(a, b, 12).exponent,
            "d_alpha <= d");
  }
  auto sh = *lambda_shape(*sig001);
  for (int i = 0; i < 1000; ++i) {
    TruncPtr fin = g.lam_term(sh, 4);
    MixedTerm t = embed(sig001, fin);
    for (unsigned n = 0; n <= 8; ++n)
      require(trunc_equal(truncate(t, n), truncate_finite(sig001, fin, n)),
              "embed preserves truncations");
    TruncPtr stable = truncate(t, (unsigned)node_count(fin) + 1);
    require(!has_hole(stable) && trunc_equal(stable, fin),
            "finite terms stabilize");
  }
}

void criterion4() {
  Gen g(104);
  auto sh = *lambda_shape(*sig001);
  for (int i = 0; i < 10000; ++i) {
    TruncPtr t = g.lam_term(sh, 4);
    TruncPtr u = g.coin() ? g.alpha_variant(t) : g.lam_term(sh, 4);
    require(alpha_eq_finite(t, u) ==
                nameless_equal(nameless_form(t), nameless_form(u)),
            "rule-based vs nameless");
  }
  for (int i = 0; i < 300; ++i) {
    MixedTerm a = reg(g), b = reg(g);
    bool prev = true;
    for (unsigned k = 0; k <= 10; ++k) {
      bool now = alpha_eq_upto(a, b, k);
      require(prev || !now, "depth antitone");
      prev = now;
    }
  }
  std::vector<std::pair<TermEnv, TermEnv>> pairs;
  pairs.emplace_back(env1("M", elam(ax, eapp(mk_evar(ax), mk_eref("M")))),
                     env1("N", elam(ay, eapp(mk_evar(ay), mk_eref("N")))));
  pairs.emplace_back(env1("T", eapp(mk_evar(ax), mk_eref("T"))),
                     env1("U", eapp(mk_evar(ay), mk_eref("U"))));
  while (pairs.size() < 200) {
    TermEnv a = g.regular_env(sig001, {});
    TermEnv b = g.coin() ? a : g.regular_env(sig001, {});
    pairs.emplace_back(std::move(a), std::move(b));
  }
  require(alpha_eq_regular(sig001, pairs[0].first, pairs[0].second),
          "M/N alpha-equal");
  require(!alpha_eq_regular(sig001, pairs[1].first, pairs[1].second),
          "T/U not alpha-equal");
  for (const auto& [a, b] : pairs) {
    bool exact = alpha_eq_regular(sig001, a, b);
    MixedTerm ta = from_equations(sig001, a), tb = from_equations(sig001, b);
    require(exact == alpha_eq_upto(ta, tb, 50), "regular vs depth 50");
    require(alpha_eq_upto(ta, tb, 0), "depth 0 trivially equal");
  }
}

void criterion5() {
  Gen g(105);
  auto sh = *lambda_shape(*sig000);
  // (a) de Bruijn oracle
  for (int i = 0; i < 10000; ++i) {
    TruncPtr t = g.lam_term(sh, 4);
    TruncPtr u = g.lam_term(sh, 3);
    Atom v = g.atom(6);
    TruncPtr rt = truncate(subst(embed(sig000, t), v, embed(sig000, u)), 1);
    require(oracle::db_equal(
                oracle::to_db(sh, rt),
                oracle::db_subst_free(oracle::to_db(sh, t), v,
                                      oracle::to_db(sh, u))),
            "de Bruijn oracle agreement");
  }
  // (b) the four clauses, depth 15
  for (int i = 0; i < 150; ++i) {
    MixedTerm m = reg(g), m2 = reg(g), n = reg(g);
    Atom v = g.atom(4);
    require(alpha_eq_upto(subst(MixedTerm::var(sig001, v,
                                               std::make_shared<const AtomSet>(
                                                   AtomSet{v})),
                                v, n),
                          n, 15),
            "clause s(x,x,N)=N");
    AtomSet taken = set_union(*m.atom_bound(), *n.atom_bound());
    taken.insert(v);
    Atom w = fresh(taken);
    require(trunc_equal(truncate(subst(MixedTerm::var(
                                           sig001, w,
                                           std::make_shared<const AtomSet>(
                                               AtomSet{w})),
                                       v, n),
                                 15),
                        mk_tvar(w)),
            "clause s(y,x,N)=y");
    auto bp = [&](const MixedTerm& a, const MixedTerm& b, AtomSet extra) {
      AtomSet s = set_union(*a.atom_bound(), *b.atom_bound());
      merge_into(s, extra);
      return std::make_shared<const AtomSet>(std::move(s));
    };
    MixedTerm lam_m = MixedTerm::cons(sig001, kLam,
                                      {TermArg{{w}, Child::ready(m)}},
                                      bp(m, m, {w}));
    MixedTerm lam_sub = MixedTerm::cons(
        sig001, kLam, {TermArg{{w}, Child::ready(subst(m, v, n))}},
        bp(m, n, {w, v}));
    require(alpha_eq_upto(subst(lam_m, v, n), lam_sub, 15), "lambda clause");
    MixedTerm app_mm = MixedTerm::cons(
        sig001, kApp,
        {TermArg{{}, Child::ready(m)}, TermArg{{}, Child::ready(m2)}},
        bp(m, m2, {}));
    MixedTerm app_sub = MixedTerm::cons(
        sig001, kApp,
        {TermArg{{}, Child::ready(subst(m, v, n))},
         TermArg{{}, Child::ready(subst(m2, v, n))}},
        bp(m, n, *m2.atom_bound()));
    require(alpha_eq_upto(subst(app_mm, v, n), app_sub, 15),
            "application clause");
  }
  // (c) the infinite case
  {
    MixedTerm t = from_equations(
        sig001, env1("T", eapp(mk_evar(ay), mk_eref("T"))));
    MixedTerm id = embed(sig001, tlam(az, mk_tvar(az)));
    MixedTerm r = subst(t, ay, id);
    MixedTerm u = from_equations(
        sig001, env1("U", eapp(elam(az, mk_evar(az)), mk_eref("U"))));
    for (unsigned d = 1; d <= 10; ++d)
      require(alpha_eq_upto(r, u, d), "infinite case depth " + std::to_string(d));
  }
  // (d) well-definedness, equivariance, vacuous, productivity
  auto sh1 = *lambda_shape(*sig001);
  for (int i = 0; i < 300; ++i) {
    TruncPtr tf = g.lam_term(sh1, 4);
    TruncPtr uf = g.lam_term(sh1, 3);
    Atom v = g.atom(6);
    require(alpha_eq_upto(subst(embed(sig001, tf), v, embed(sig001, uf)),
                          subst(embed(sig001, g.alpha_variant(tf)), v,
                                embed(sig001, g.alpha_variant(uf))),
                          12),
            "well-definedness mod alpha");
  }
  for (int i = 0; i < 100; ++i) {
    MixedTerm t = reg(g), u = reg(g);
    Atom v = g.atom(4);
    Permutation p = g.perm(6);
    require(alpha_eq_upto(act_term(p, subst(t, v, u)),
                          subst(act_term(p, t), p(v), act_term(p, u)), 10),
            "equivariance");
    require(alpha_eq_upto(subst(t, Atom{97}, u), t, 10), "vacuous subst");
  }
  for (int i = 0; i < 20; ++i) {
    MixedTerm t = reg(g), u = reg(g);
    require(truncate(subst(t, g.atom(4), u), 25) != nullptr,
            "productivity at depth 25");
  }
}

void criterion6() {
  std::string sigs = env_or("NUMU_SIGS", "sigs");
  for (int m = 0; m < 8; ++m) {
    std::string name = std::string("lambda_") + char('0' + ((m >> 2) & 1)) +
                       char('0' + ((m >> 1) & 1)) + char('0' + (m & 1));
    Signature s = load_signature_file(sigs + "/" + name + ".sig");
    validate(s);
    require(s == lambda_signature(m & 4, m & 2, m & 1),
            name + " matches lambda_signature");
    require(is_nontrivial(s) == (m != 0), name + " non-triviality verdict");
  }
  Signature rt = load_signature_file(sigs + "/rtree.sig");
  validate(rt);
  require(!is_nontrivial(rt), "rtree is trivial (no binder)");

  TermEnv e = env1("T", elam(ax, mk_eref("T")));
  bool rejected = false;
  try {
    from_equations(sig001, e);
  } catch (const Error& err) {
    rejected = err.code() == Errc::Unguarded;
  }
  require(rejected, "T = lam(x.T) rejected under 001");
  require(trunc_equal(truncate(from_equations(sig111, e), 1),
                      tlam(ax, mk_hole())),
          "T = lam(x.T) accepted under 111");
}

void criterion7() {
  std::string golden = env_or("NUMU_GOLDEN", "tests/golden");
  require(run_cli("trunc --depth 2 \"rec { T = x T } in T\"") ==
              read_file(golden + "/trunc.txt"),
          "golden trunc");
  require(run_cli("alpha --depth 10 \"rec { M = \\\\x. x M } in M\" "
                  "\"rec { N = \\\\y. y N } in N\"") ==
              read_file(golden + "/alpha.txt"),
          "golden alpha");
  require(run_cli("subst --depth 3 \"rec { T = y T } in T\" y \"\\\\z. z\"") ==
              read_file(golden + "/subst.txt"),
          "golden subst");

  // 50-term parse/print round-trip corpus
  std::istringstream corpus(read_file(golden + "/corpus.txt"));
  NameTable names;
  for (char c = 'a'; c < 'a' + 6; ++c) names.intern(std::string(1, c));
  std::string line;
  int count = 0;
  while (std::getline(corpus, line)) {
    if (line.empty()) continue;
    TermEnv env = parse_term(line, sig001, names);
    require(env.defs.empty(), "corpus lines are rec-free");
    require(print_trunc(expr_to_trunc(env.root), sig001, names) == line,
            "round-trip: " + line);
    ++count;
  }
  require(count == 50, "corpus has 50 terms");
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<void()> run;
  };
  const std::vector<Criterion> table = {
      {"1 nominal-core laws (10^4 cases)", criterion1},
      {"2 truncation suite with worked values", criterion2},
      {"3 metric suite at precision 12", criterion3},
      {"4 alpha suite incl. regular bisimulation", criterion4},
      {"5 substitution suite incl. oracle agreement", criterion5},
      {"6 signature and guardedness suite", criterion6},
      {"7 CLI golden tests and corpus round-trip", criterion7},
  };
  int failed = 0;
  for (const Criterion& c : table) {
    try {
      c.run();
      std::cout << "PASS criterion " << c.name << "\n";
    } catch (const Failure& f) {
      std::cout << "FAIL criterion " << c.name << ": " << f.what << "\n";
      ++failed;
    } catch (const std::exception& e) {
      std::cout << "FAIL criterion " << c.name << ": unexpected error: "
                << e.what() << "\n";
      ++failed;
    }
  }
  return failed;
}
