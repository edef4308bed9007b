// Command-line front end: truncation, alpha-equivalence, distances,
// substitution, support and guardedness queries over signature-generic
// mixed terms.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "numu/alpha.hpp"
#include "numu/env.hpp"
#include "numu/error.hpp"
#include "numu/metric.hpp"
#include "numu/signature.hpp"
#include "numu/subst.hpp"
#include "numu/syntax.hpp"
#include "numu/term.hpp"

namespace {

using namespace numu;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Session {
  SigPtr sig;
  NameTable names;

  explicit Session(const std::string& sig_path) {
    if (!sig_path.empty()) {
      sig = std::make_shared<const Signature>(load_signature_file(sig_path));
    } else if (std::ifstream probe{"lambda_001.sig"}; probe.good()) {
      sig = std::make_shared<const Signature>(load_signature_file("lambda_001.sig"));
    } else {
      sig = std::make_shared<const Signature>(lambda_signature(false, false, true));
    }
    validate(*sig);
  }

  MixedTerm term(const std::string& src, const std::string& file) {
    std::string text = file.empty() ? src : read_file(file);
    TermEnv env = parse_term(text, sig, names);
    return from_equations(sig, env);
  }

  TermEnv env(const std::string& src, const std::string& file) {
    std::string text = file.empty() ? src : read_file(file);
    return parse_term(text, sig, names);
  }
};

std::string describe_nontriviality(const Signature& sig) {
  NontrivialityReport r = nontriviality(sig);
  if (r.nontrivial()) {
    return "non-trivial (binder=" + sig.at(*r.binder_op).name +
           ", branching=" + sig.at(*r.wide_op).name +
           ", coinductive=" + sig.at(*r.coinductive_op).name + ")";
  }
  std::string out = "trivial:";
  if (!r.binder_op) out += " no binding constructor;";
  if (!r.wide_op) out += " no constructor with two arguments;";
  if (!r.coinductive_op) out += " no coinductive argument;";
  out.pop_back();
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"signature-generic mixed inductive-coinductive terms with binding"};
  app.require_subcommand(1);

  std::string sig_path;
  app.add_option("--sig", sig_path, "signature file (default: lambda_001.sig)");

  // check
  std::string check_sig, check_term_file;
  auto* c_check = app.add_subcommand("check", "validate a signature (and optionally a term file)");
  c_check->add_option("sig-file", check_sig, "signature file")->required();
  c_check->add_option("term-file", check_term_file, "term file to check for guardedness");

  std::string t1, t2, file1, file2, var_name, perm_src;
  unsigned depth = 4, precision = 12;
  bool use_alpha = false;

  auto* c_trunc = app.add_subcommand("trunc", "print the depth-n truncation");
  c_trunc->add_option("term", t1, "term");
  c_trunc->add_option("--file", file1, "read the term from a file");
  c_trunc->add_option("--depth", depth, "truncation depth")->default_val(4);

  auto* c_alpha = app.add_subcommand("alpha", "alpha-equivalence up to a depth");
  c_alpha->add_option("term1", t1, "first term");
  c_alpha->add_option("term2", t2, "second term");
  c_alpha->add_option("--file", file1, "read the first term from a file");
  c_alpha->add_option("--file2", file2, "read the second term from a file");
  c_alpha->add_option("--depth", depth, "comparison depth")->default_val(8);

  auto* c_dist = app.add_subcommand("dist", "Arnold-Nivat distance (raw or alpha)");
  c_dist->add_option("term1", t1, "first term");
  c_dist->add_option("term2", t2, "second term");
  c_dist->add_option("--file", file1, "read the first term from a file");
  c_dist->add_option("--file2", file2, "read the second term from a file");
  c_dist->add_option("--precision", precision, "probe depth")->default_val(12);
  c_dist->add_flag("--alpha", use_alpha, "compare truncations up to alpha");

  auto* c_subst = app.add_subcommand("subst", "capture-avoiding substitution");
  c_subst->add_option("term", t1, "target term");
  c_subst->add_option("var", var_name, "variable to replace")->required();
  c_subst->add_option("replacement", t2, "replacement term");
  c_subst->add_option("--file", file1, "read the target term from a file");
  c_subst->add_option("--file2", file2, "read the replacement from a file");
  c_subst->add_option("--depth", depth, "truncation depth of the printed result")
      ->default_val(4);

  auto* c_fv = app.add_subcommand("fv", "free atoms of the depth-n truncation");
  c_fv->add_option("term", t1, "term");
  c_fv->add_option("--file", file1, "read the term from a file");
  c_fv->add_option("--depth", depth, "observation depth")->default_val(8);

  auto* c_support = app.add_subcommand("support", "all atoms of the depth-n truncation");
  c_support->add_option("term", t1, "term");
  c_support->add_option("--file", file1, "read the term from a file");
  c_support->add_option("--depth", depth, "observation depth")->default_val(8);

  auto* c_act = app.add_subcommand("act", "apply a permutation of atoms");
  c_act->add_option("term", t1, "term");
  c_act->add_option("--file", file1, "read the term from a file");
  c_act->add_option("--perm", perm_src, "permutation, e.g. \"(x y)(u v)\"")->required();
  c_act->add_option("--depth", depth, "truncation depth of the printed result")
      ->default_val(4);

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_check->parsed()) {
      Signature sig = load_signature_file(check_sig);
      validate(sig);
      std::cout << "signature " << (sig.name().empty() ? "<unnamed>" : sig.name())
                << ": valid, " << sig.size() << " constructor(s)\n";
      std::cout << describe_nontriviality(sig) << "\n";
      if (!check_term_file.empty()) {
        auto sp = std::make_shared<const Signature>(std::move(sig));
        NameTable names;
        TermEnv env = parse_term(read_file(check_term_file), sp, names);
        validate_env(sp, env);
        std::cout << "guarded\n";
      }
      return 0;
    }

    Session session(sig_path);

    if (c_trunc->parsed()) {
      MixedTerm t = session.term(t1, file1);
      std::cout << print_trunc(truncate(t, depth), session.sig, session.names) << "\n";
    } else if (c_alpha->parsed()) {
      MixedTerm a = session.term(t1, file1);
      MixedTerm b = session.term(t2, file2);
      std::cout << (alpha_eq_upto(a, b, depth) ? "true" : "false") << "\n";
    } else if (c_dist->parsed()) {
      MixedTerm a = session.term(t1, file1);
      MixedTerm b = session.term(t2, file2);
      MetricResult r = use_alpha ? alpha_distance(a, b, precision)
                                 : an_distance(a, b, precision);
      std::cout << to_string(r) << "\n";
    } else if (c_subst->parsed()) {
      MixedTerm t = session.term(t1, file1);
      MixedTerm u = session.term(t2, file2);
      Atom x = session.names.intern(var_name);
      MixedTerm r = subst(t, x, u);
      std::cout << print_trunc(truncate(r, depth), session.sig, session.names) << "\n";
    } else if (c_fv->parsed()) {
      MixedTerm t = session.term(t1, file1);
      std::cout << print_atom_set(free_vars(t, depth), session.names) << "\n";
    } else if (c_support->parsed()) {
      MixedTerm t = session.term(t1, file1);
      std::cout << print_atom_set(atoms_of(t, depth), session.names) << "\n";
    } else if (c_act->parsed()) {
      MixedTerm t = session.term(t1, file1);
      Permutation p = parse_perm(perm_src, session.names);
      std::cout << print_trunc(truncate(act_term(p, t), depth), session.sig,
                               session.names)
                << "\n";
    }
  } catch (const Error& e) {
    std::cerr << "error";
    if (e.line() > 0) std::cerr << " at " << e.line() << ":" << e.col();
    std::cerr << ": " << e.what() << "\n";
    return e.internal() ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
