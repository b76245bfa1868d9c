#pragma once

#include "filtration.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace fh {

/// Malformed spec file. `where` is a JSON pointer ("/objects/1/measure") or
/// "line L, column C" for syntax errors.
class SpecError : public std::runtime_error {
 public:
  SpecError(std::string where, const std::string& what)
      : std::runtime_error(where + ": " + what), where_(std::move(where)) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

struct LoadedSpec {
  Filtration filtration;
  std::string digest;  // "sha256:<hex>" of the input bytes
};

/// Parses a filtration spec (JSON, rationals as "p/q"). Structural problems
/// (syntax, missing fields, dangling names, bad rationals, mass != 1) throw
/// SpecError; semantic problems are left to Filtration::validate.
LoadedSpec parse_spec(std::string_view text);
LoadedSpec load_spec_file(const std::string& path);

/// Canonical form of a filtration: sorted keys, reduced rationals, arrays in
/// declaration order, compositions with identities omitted unless they differ
/// from the identity law.
nlohmann::json to_spec_json(const Filtration& f);

/// Two-space indented dump with a trailing newline.
std::string canonical_text(const nlohmann::json& j);

std::string sha256_digest(std::string_view bytes);

}  // namespace fh
