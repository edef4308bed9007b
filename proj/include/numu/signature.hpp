#ifndef NUMU_SIGNATURE_HPP
#define NUMU_SIGNATURE_HPP

#include <array>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace numu {

enum class Mode { Inductive, Coinductive };

struct ArgSpec {
  unsigned binders = 0;
  Mode mode = Mode::Inductive;
  bool operator==(const ArgSpec&) const = default;
};

struct Constructor {
  std::string name;
  std::vector<ArgSpec> args;
  bool operator==(const Constructor&) const = default;
};

class Signature {
 public:
  Signature() = default;
  Signature(std::string name, std::vector<Constructor> constructors)
      : name_(std::move(name)), constructors_(std::move(constructors)) {}

  const std::string& name() const { return name_; }
  const std::vector<Constructor>& constructors() const { return constructors_; }
  std::size_t size() const { return constructors_.size(); }
  const Constructor& at(std::size_t i) const { return constructors_[i]; }

  std::optional<std::size_t> find(const std::string& cons_name) const;

  bool operator==(const Signature&) const = default;

 private:
  std::string name_;
  std::vector<Constructor> constructors_;
};

using SigPtr = std::shared_ptr<const Signature>;

/// Throws DuplicateConstructor / EmptyName on invalid declarations.
void validate(const Signature& sig);

/// Σ_λ = {lam, app} with lam: ((1,a)) and app: ((0,b),(0,c)).
Signature lambda_signature(bool a, bool b, bool c);

/// Structural check: is this signature one of the eight λ^abc instances?
/// Returns (a,b,c) and, via out parameters of the struct, which
/// constructor plays λ and which plays @.
struct LambdaShape {
  std::array<bool, 3> modes;  // a, b, c
  std::size_t lam;            // index of the unary binding constructor
  std::size_t app;            // index of the binary constructor
};
std::optional<LambdaShape> lambda_shape(const Signature& sig);

/// Witnesses for the three clauses of non-triviality (they may coincide):
/// a constructor with a binding argument, one with >= 2 arguments, and one
/// with a coinductive argument.
struct NontrivialityReport {
  std::optional<std::size_t> binder_op;
  std::optional<std::size_t> wide_op;
  std::optional<std::size_t> coinductive_op;
  bool nontrivial() const {
    return binder_op && wide_op && coinductive_op;
  }
};
NontrivialityReport nontriviality(const Signature& sig);

bool is_nontrivial(const Signature& sig);

/// Text (JSON) signature files:
/// { "name": ..., "constructors": [ { "name": ...,
///   "args": [ { "binders": n, "mode": "ind"|"coind" } ] } ] }
Signature parse_signature_json(const std::string& text);
std::string signature_to_json(const Signature& sig);
Signature load_signature_file(const std::string& path);

}  // namespace numu

#endif
