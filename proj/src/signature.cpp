#include "numu/signature.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "numu/error.hpp"

namespace numu {

std::optional<std::size_t> Signature::find(const std::string& cons_name) const {
  for (std::size_t i = 0; i < constructors_.size(); ++i)
    if (constructors_[i].name == cons_name) return i;
  return std::nullopt;
}

void validate(const Signature& sig) {
  std::set<std::string> seen;
  for (const Constructor& c : sig.constructors()) {
    if (c.name.empty()) fail(Errc::EmptyName, "constructor with empty name");
    if (!seen.insert(c.name).second)
      fail(Errc::DuplicateConstructor, "duplicate constructor '" + c.name + "'");
  }
}

static Mode mode_of(bool coinductive) {
  return coinductive ? Mode::Coinductive : Mode::Inductive;
}

Signature lambda_signature(bool a, bool b, bool c) {
  std::string name = "lambda_";
  name += a ? '1' : '0';
  name += b ? '1' : '0';
  name += c ? '1' : '0';
  return Signature(name, {
      Constructor{"lam", {ArgSpec{1, mode_of(a)}}},
      Constructor{"app", {ArgSpec{0, mode_of(b)}, ArgSpec{0, mode_of(c)}}},
  });
}

std::optional<LambdaShape> lambda_shape(const Signature& sig) {
  if (sig.size() != 2) return std::nullopt;
  for (std::size_t lam = 0; lam < 2; ++lam) {
    std::size_t app = 1 - lam;
    const auto& l = sig.at(lam).args;
    const auto& p = sig.at(app).args;
    if (l.size() == 1 && l[0].binders == 1 && p.size() == 2 &&
        p[0].binders == 0 && p[1].binders == 0) {
      return LambdaShape{{l[0].mode == Mode::Coinductive,
                          p[0].mode == Mode::Coinductive,
                          p[1].mode == Mode::Coinductive},
                         lam, app};
    }
  }
  return std::nullopt;
}

NontrivialityReport nontriviality(const Signature& sig) {
  NontrivialityReport r;
  for (std::size_t i = 0; i < sig.size(); ++i) {
    const Constructor& c = sig.at(i);
    if (!r.wide_op && c.args.size() >= 2) r.wide_op = i;
    for (const ArgSpec& a : c.args) {
      if (!r.binder_op && a.binders >= 1) r.binder_op = i;
      if (!r.coinductive_op && a.mode == Mode::Coinductive) r.coinductive_op = i;
    }
  }
  return r;
}

bool is_nontrivial(const Signature& sig) { return nontriviality(sig).nontrivial(); }

Signature parse_signature_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, std::string("signature file: ") + e.what());
  }
  try {
    std::vector<Constructor> cons;
    for (const auto& jc : j.at("constructors")) {
      Constructor c;
      c.name = jc.at("name").get<std::string>();
      for (const auto& ja : jc.at("args")) {
        std::string m = ja.at("mode").get<std::string>();
        if (m != "ind" && m != "coind")
          throw Error(Errc::ParseError, "signature file: bad mode '" + m + "'");
        c.args.push_back(ArgSpec{ja.at("binders").get<unsigned>(),
                                 m == "coind" ? Mode::Coinductive : Mode::Inductive});
      }
      cons.push_back(std::move(c));
    }
    Signature sig(j.value("name", std::string{}), std::move(cons));
    validate(sig);
    return sig;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, std::string("signature file: ") + e.what());
  }
}

std::string signature_to_json(const Signature& sig) {
  nlohmann::json j;
  j["name"] = sig.name();
  j["constructors"] = nlohmann::json::array();
  for (const Constructor& c : sig.constructors()) {
    nlohmann::json jc;
    jc["name"] = c.name;
    jc["args"] = nlohmann::json::array();
    for (const ArgSpec& a : c.args)
      jc["args"].push_back({{"binders", a.binders},
                            {"mode", a.mode == Mode::Coinductive ? "coind" : "ind"}});
    j["constructors"].push_back(jc);
  }
  return j.dump(2) + "\n";
}

Signature load_signature_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open signature file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_signature_json(ss.str());
}

}  // namespace numu
