#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace fh {

using ObjectId = std::size_t;

struct ArrowDecl {
  std::string name;
  ObjectId src = 0;
  ObjectId dst = 0;
};

/// An arrow of the time category, written as a word.
///
/// Free mode: generator indices in traversal order (src first); the empty word
/// is the identity at `src`. Table mode: exactly one arrow index, identities
/// included.
struct Path {
  ObjectId src = 0;
  ObjectId dst = 0;
  std::vector<std::size_t> word;

  friend auto operator<=>(const Path&, const Path&) = default;
  friend bool operator==(const Path&, const Path&) = default;
};

class Quiver {
 public:
  Quiver(std::vector<std::string> objects, std::vector<ArrowDecl> generators);

  const std::vector<std::string>& objects() const { return objects_; }
  const std::vector<ArrowDecl>& generators() const { return generators_; }
  std::optional<ObjectId> object_index(const std::string& name) const;
  std::optional<std::size_t> generator_index(const std::string& name) const;

  bool is_acyclic() const;

 private:
  std::vector<std::string> objects_;
  std::vector<ArrowDecl> generators_;
};

/// All paths of length 0..max_len ordered by length, then lexicographically
/// by generator index. Length-0 paths come in object order.
std::vector<Path> enumerate_arrows(const Quiver& q, std::size_t max_len);

struct CompositionDecl {
  std::string inner;   // i : s -> t
  std::string outer;   // j : t -> u
  std::string result;  // j o i : s -> u
};

struct TableViolation {
  enum class Kind { Missing, Endpoints, IdentityLaw, Associativity };
  Kind kind;
  std::string message;
};

/// Explicit finite category. Identity arrows "id_<object>" occupy indices
/// 0..objects-1, declared arrows follow in declaration order. Compositions
/// with an identity are filled in unless the input lists them.
class FinCategory {
 public:
  /// Throws std::invalid_argument on dangling names, duplicate names, or use
  /// of the reserved "id_" prefix.
  FinCategory(std::vector<std::string> objects, std::vector<ArrowDecl> arrows,
              const std::vector<CompositionDecl>& compositions);

  const std::vector<std::string>& objects() const { return objects_; }
  const std::vector<ArrowDecl>& arrows() const { return arrows_; }
  std::size_t identity(ObjectId obj) const { return obj; }
  bool is_identity(std::size_t arrow) const { return arrow < objects_.size(); }

  std::optional<ObjectId> object_index(const std::string& name) const;
  std::optional<std::size_t> arrow_index(const std::string& name) const;

  /// outer o inner, when the table has an entry for the pair.
  std::optional<std::size_t> compose(std::size_t inner, std::size_t outer) const;

  /// (inner, outer) -> result, identity entries included.
  const std::map<std::pair<std::size_t, std::size_t>, std::size_t>& entries() const { return table_; }

  /// Every totality, endpoint, identity-law and associativity violation.
  std::vector<TableViolation> validate_table() const;

 private:
  std::vector<std::string> objects_;
  std::vector<ArrowDecl> arrows_;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> table_;
};

/// Finite table presentation of the free category on an acyclic quiver.
/// words[a] is the generator word of arrow a (empty for identities).
struct TableClosure {
  FinCategory category;
  std::vector<std::vector<std::size_t>> words;
};

/// Throws std::invalid_argument when the quiver has a directed cycle.
TableClosure table_closure(const Quiver& q);

enum class Mode { Free, Table };

/// Either presentation of the time category behind one interface.
class Presentation {
 public:
  explicit Presentation(Quiver q) : rep_(std::move(q)) {}
  explicit Presentation(FinCategory c) : rep_(std::move(c)) {}

  Mode mode() const { return std::holds_alternative<Quiver>(rep_) ? Mode::Free : Mode::Table; }
  const Quiver& quiver() const { return std::get<Quiver>(rep_); }
  const FinCategory& category() const { return std::get<FinCategory>(rep_); }

  const std::vector<std::string>& objects() const;
  std::size_t object_count() const { return objects().size(); }
  std::optional<ObjectId> object_index(const std::string& name) const;

  /// Generators (free mode) or every arrow, identities first (table mode).
  const std::vector<ArrowDecl>& arrow_decls() const;

  Path identity(ObjectId obj) const;
  Path generator(std::size_t index) const;
  bool is_identity(const Path& p) const;

  /// Resolves a generator/arrow name or "id_<object>".
  std::optional<Path> find_arrow(const std::string& name) const;

  /// p then q, i.e. the composite q o p. Throws std::invalid_argument when
  /// dst(p) != src(q) or, in table mode, the table has no entry.
  Path compose(const Path& p, const Path& q) const;

  /// Number of generators traversed; in table mode 0 for identities, else 1.
  std::size_t length(const Path& p) const;

  std::string name(const Path& p) const;

  /// Free mode: paths up to max_len. Table mode: every arrow (max_len unused).
  std::vector<Path> enumerate_arrows(std::size_t max_len) const;

 private:
  std::variant<Quiver, FinCategory> rep_;
};

}  // namespace fh
