#include "numu/syntax.hpp"

#include <cctype>
#include <set>
#include <sstream>
#include <vector>

#include "numu/error.hpp"

namespace numu {

Atom NameTable::intern(const std::string& name) {
  auto it = by_name_.find(name);
  if (it != by_name_.end()) return it->second;
  Atom a{next_++};
  by_name_.emplace(name, a);
  by_atom_.emplace(a, name);
  return a;
}

std::optional<std::string> NameTable::name(Atom a) const {
  auto it = by_atom_.find(a);
  if (it == by_atom_.end()) return std::nullopt;
  return it->second;
}

std::optional<Atom> NameTable::find(const std::string& name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

std::string NameTable::display(Atom a) const {
  if (auto n = name(a)) return *n;
  std::string candidate = "v" + std::to_string(a.id());
  while (by_name_.count(candidate)) candidate += '\'';
  return candidate;
}

namespace {

struct Token {
  enum Kind {
    Ident, Backslash, Dot, LPar, RPar, LBrace, RBrace,
    Eq, Semi, Comma, Hole, KwRec, KwIn, End,
  } kind;
  std::string text;
  int line = 1;
  int col = 1;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)); }
bool ident_cont(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

std::vector<Token> lex(const std::string& src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto push = [&](Token::Kind k, std::string text) {
    out.push_back(Token{k, std::move(text), line, col});
  };
  while (i < src.size()) {
    char c = src[i];
    if (c == '\n') { ++line; col = 1; ++i; continue; }
    if (c == ' ' || c == '\t' || c == '\r') { ++col; ++i; continue; }
    if (c == '#') {  // comment to end of line
      while (i < src.size() && src[i] != '\n') ++i;
      continue;
    }
    int startcol = col;
    switch (c) {
      case '\\': push(Token::Backslash, "\\"); ++i; ++col; continue;
      case '.': push(Token::Dot, "."); ++i; ++col; continue;
      case '(': push(Token::LPar, "("); ++i; ++col; continue;
      case ')': push(Token::RPar, ")"); ++i; ++col; continue;
      case '{': push(Token::LBrace, "{"); ++i; ++col; continue;
      case '}': push(Token::RBrace, "}"); ++i; ++col; continue;
      case '=': push(Token::Eq, "="); ++i; ++col; continue;
      case ';': push(Token::Semi, ";"); ++i; ++col; continue;
      case ',': push(Token::Comma, ","); ++i; ++col; continue;
      default: break;
    }
    if (c == '_' && (i + 1 >= src.size() || !ident_cont(src[i + 1]))) {
      push(Token::Hole, "_");
      ++i; ++col;
      continue;
    }
    if (ident_start(c) || c == '_') {
      std::string id(1, c);
      ++i; ++col;
      while (i < src.size() && ident_cont(src[i])) {
        id += src[i];
        ++i; ++col;
      }
      Token t{Token::Ident, id, line, startcol};
      if (id == "rec") t.kind = Token::KwRec;
      if (id == "in") t.kind = Token::KwIn;
      out.push_back(std::move(t));
      continue;
    }
    throw Error(Errc::ParseError,
                "unexpected character '" + std::string(1, c) + "'", line, col);
  }
  out.push_back(Token{Token::End, "", line, col});
  return out;
}

class Parser {
 public:
  Parser(const std::string& src, const SigPtr& sig, NameTable& names)
      : toks_(lex(src)), sig_(sig), names_(names), shape_(lambda_shape(*sig)) {}

  TermEnv run() {
    ExprPtr root = term();
    expect(Token::End, "end of input");
    return TermEnv{std::move(defs_), std::move(root)};
  }

 private:
  const Token& peek(std::size_t off = 0) const {
    std::size_t i = pos_ + off;
    return i < toks_.size() ? toks_[i] : toks_.back();
  }
  const Token& next() { return toks_[pos_++]; }

  [[noreturn]] void err(const std::string& msg, const Token& t) {
    throw Error(Errc::ParseError, msg, t.line, t.col);
  }

  void expect(Token::Kind k, const std::string& what) {
    if (peek().kind != k) err("expected " + what, peek());
    next();
  }

  bool starts_atom(Token::Kind k) const {
    return k == Token::Ident || k == Token::LPar || k == Token::Hole ||
           k == Token::KwRec;
  }

  ExprPtr term() {
    if (shape_) {
      if (peek().kind == Token::Backslash) return lambda();
      ExprPtr e = atom();
      while (starts_atom(peek().kind) || peek().kind == Token::Backslash) {
        ExprPtr a = peek().kind == Token::Backslash ? lambda() : atom();
        e = mk_econs(shape_->app, {ExprArg{{}, e}, ExprArg{{}, a}});
      }
      return e;
    }
    return atom();
  }

  ExprPtr lambda() {
    expect(Token::Backslash, "'\\'");
    std::vector<Atom> binders;
    while (peek().kind == Token::Ident) binders.push_back(names_.intern(next().text));
    if (binders.empty()) err("expected binder after '\\'", peek());
    expect(Token::Dot, "'.' after binders");
    ExprPtr body = term();
    for (auto it = binders.rbegin(); it != binders.rend(); ++it)
      body = mk_econs(shape_->lam, {ExprArg{{*it}, body}});
    return body;
  }

  ExprPtr atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Token::LPar: {
        next();
        ExprPtr e = term();
        expect(Token::RPar, "')'");
        return e;
      }
      case Token::Hole:
        next();
        return mk_ehole();
      case Token::KwRec:
        return rec_block();
      case Token::Ident: {
        next();
        if (rec_names_.count(t.text)) return mk_eref(t.text);
        if (auto ci = sig_->find(t.text)) return cons_app(*ci, t);
        return mk_evar(names_.intern(t.text));
      }
      default:
        err("expected a term", t);
    }
  }

  ExprPtr cons_app(std::size_t ci, const Token& at) {
    const Constructor& decl = sig_->at(ci);
    std::vector<ExprArg> args;
    if (peek().kind == Token::LPar) {
      next();
      if (peek().kind != Token::RPar) {
        while (true) {
          args.push_back(cons_arg());
          if (peek().kind != Token::Comma) break;
          next();
        }
      }
      expect(Token::RPar, "')'");
    }
    if (args.size() != decl.args.size())
      err("constructor '" + decl.name + "' expects " +
              std::to_string(decl.args.size()) + " argument(s), got " +
              std::to_string(args.size()),
          at);
    for (std::size_t i = 0; i < args.size(); ++i)
      if (args[i].binders.size() != decl.args[i].binders)
        err("argument " + std::to_string(i + 1) + " of '" + decl.name +
                "' binds " + std::to_string(decl.args[i].binders) + " atom(s)",
            at);
    return mk_econs(ci, std::move(args));
  }

  ExprArg cons_arg() {
    // Binder prefix: one or more identifiers followed by '.'.
    std::size_t save = pos_;
    std::vector<Atom> binders;
    while (peek().kind == Token::Ident) binders.push_back(names_.intern(next().text));
    if (!binders.empty() && peek().kind == Token::Dot) {
      next();
      return ExprArg{std::move(binders), term()};
    }
    pos_ = save;
    return ExprArg{{}, term()};
  }

  ExprPtr rec_block() {
    expect(Token::KwRec, "'rec'");
    const Token& open = peek();
    expect(Token::LBrace, "'{'");
    // Pre-scan the names of this block so mutual references parse.
    int depth = 1;
    for (std::size_t i = pos_; i < toks_.size() && depth > 0; ++i) {
      Token::Kind k = toks_[i].kind;
      if (k == Token::LBrace) ++depth;
      else if (k == Token::RBrace) --depth;
      else if (depth == 1 && k == Token::Ident && peek(i - pos_ + 1).kind == Token::Eq) {
        if (!rec_names_.insert(toks_[i].text).second)
          err("duplicate equation name '" + toks_[i].text + "'", toks_[i]);
      }
    }
    if (depth > 0) err("unterminated 'rec' block", open);
    while (peek().kind != Token::RBrace) {
      const Token& nt = peek();
      if (nt.kind != Token::Ident) err("expected equation name", nt);
      std::string name = next().text;
      expect(Token::Eq, "'='");
      defs_.emplace_back(std::move(name), term());
      if (peek().kind == Token::Semi) next();
      else break;
    }
    expect(Token::RBrace, "'}'");
    expect(Token::KwIn, "'in'");
    return term();
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  SigPtr sig_;
  NameTable& names_;
  std::optional<LambdaShape> shape_;
  std::set<std::string> rec_names_;
  std::vector<std::pair<std::string, ExprPtr>> defs_;
};

enum class Ctx { Top, Fun, Arg };

void print_sugar(std::ostream& os, const TruncPtr& t, const LambdaShape& shape,
                 const NameTable& names, Ctx ctx) {
  if (is_hole(t)) {
    os << "_";
    return;
  }
  if (const Atom* a = std::get_if<Atom>(&t->node)) {
    os << names.display(*a);
    return;
  }
  const auto& c = std::get<TruncCons>(t->node);
  if (c.cons == shape.lam) {
    if (ctx != Ctx::Top) os << "(";
    os << "\\" << names.display(c.args[0].binders[0]) << ". ";
    print_sugar(os, c.args[0].child, shape, names, Ctx::Top);
    if (ctx != Ctx::Top) os << ")";
  } else {
    if (ctx == Ctx::Arg) os << "(";
    print_sugar(os, c.args[0].child, shape, names, Ctx::Fun);
    os << " ";
    print_sugar(os, c.args[1].child, shape, names, Ctx::Arg);
    if (ctx == Ctx::Arg) os << ")";
  }
}

void print_generic(std::ostream& os, const TruncPtr& t, const SigPtr& sig,
                   const NameTable& names) {
  if (is_hole(t)) {
    os << "_";
    return;
  }
  if (const Atom* a = std::get_if<Atom>(&t->node)) {
    os << names.display(*a);
    return;
  }
  const auto& c = std::get<TruncCons>(t->node);
  os << sig->at(c.cons).name << "(";
  for (std::size_t i = 0; i < c.args.size(); ++i) {
    if (i) os << ", ";
    for (std::size_t k = 0; k < c.args[i].binders.size(); ++k) {
      if (k) os << " ";
      os << names.display(c.args[i].binders[k]);
    }
    if (!c.args[i].binders.empty()) os << ". ";
    print_generic(os, c.args[i].child, sig, names);
  }
  os << ")";
}

}  // namespace

TermEnv parse_term(const std::string& src, const SigPtr& sig, NameTable& names) {
  return Parser(src, sig, names).run();
}

std::string print_trunc(const TruncPtr& t, const SigPtr& sig,
                        const NameTable& names) {
  std::ostringstream os;
  if (auto shape = lambda_shape(*sig))
    print_sugar(os, t, *shape, names, Ctx::Top);
  else
    print_generic(os, t, sig, names);
  return os.str();
}

std::string print_atom_set(const AtomSet& s, const NameTable& names) {
  std::set<std::string> sorted;
  for (Atom a : s) sorted.insert(names.display(a));
  std::string out = "{";
  bool first = true;
  for (const std::string& n : sorted) {
    if (!first) out += ", ";
    out += n;
    first = false;
  }
  return out + "}";
}

Permutation parse_perm(const std::string& src, NameTable& names) {
  std::vector<Token> toks = lex(src);
  Permutation p;
  std::size_t i = 0;
  while (toks[i].kind != Token::End) {
    if (toks[i].kind != Token::LPar)
      throw Error(Errc::ParseError, "expected '(' in permutation", toks[i].line,
                  toks[i].col);
    ++i;
    if (toks[i].kind != Token::Ident || toks[i + 1].kind != Token::Ident)
      throw Error(Errc::ParseError, "expected two atoms in transposition",
                  toks[i].line, toks[i].col);
    Atom a = names.intern(toks[i].text);
    Atom b = names.intern(toks[i + 1].text);
    i += 2;
    if (toks[i].kind != Token::RPar)
      throw Error(Errc::ParseError, "expected ')' in permutation", toks[i].line,
                  toks[i].col);
    ++i;
    p = compose(p, Permutation::transposition(a, b));  // rightmost acts first
  }
  return p;
}

}  // namespace numu
