#include "category.hpp"

#include <functional>
#include <set>
#include <stdexcept>

namespace fh {

namespace {

constexpr const char* kCompose = "\xE2\x88\x98";  // U+2218 RING OPERATOR

std::string identity_name(const std::string& object) { return "id_" + object; }

void check_objects(const std::vector<std::string>& objects) {
  std::set<std::string> seen;
  for (const auto& o : objects) {
    if (o.empty()) throw std::invalid_argument("object names must be nonempty");
    if (!seen.insert(o).second) throw std::invalid_argument("duplicate object \"" + o + "\"");
  }
}

void check_arrows(const std::vector<std::string>& objects, const std::vector<ArrowDecl>& arrows) {
  std::set<std::string> seen;
  for (const auto& a : arrows) {
    if (a.name.empty()) throw std::invalid_argument("arrow names must be nonempty");
    if (a.name.rfind("id_", 0) == 0) {
      throw std::invalid_argument("arrow name \"" + a.name + "\" uses the reserved id_ prefix");
    }
    if (!seen.insert(a.name).second) throw std::invalid_argument("duplicate arrow \"" + a.name + "\"");
    if (a.src >= objects.size() || a.dst >= objects.size()) {
      throw std::invalid_argument("arrow \"" + a.name + "\" references an unknown object");
    }
  }
}

std::optional<std::size_t> find_name(const std::vector<std::string>& names, const std::string& name) {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) return i;
  }
  return std::nullopt;
}

}  // namespace

Quiver::Quiver(std::vector<std::string> objects, std::vector<ArrowDecl> generators)
    : objects_(std::move(objects)), generators_(std::move(generators)) {
  check_objects(objects_);
  check_arrows(objects_, generators_);
}

std::optional<ObjectId> Quiver::object_index(const std::string& name) const {
  return find_name(objects_, name);
}

std::optional<std::size_t> Quiver::generator_index(const std::string& name) const {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (generators_[i].name == name) return i;
  }
  return std::nullopt;
}

bool Quiver::is_acyclic() const {
  // Kahn's algorithm; self-loops count as cycles.
  std::vector<std::size_t> indegree(objects_.size(), 0);
  for (const auto& g : generators_) ++indegree[g.dst];
  std::vector<ObjectId> ready;
  for (ObjectId o = 0; o < objects_.size(); ++o) {
    if (indegree[o] == 0) ready.push_back(o);
  }
  std::size_t removed = 0;
  while (!ready.empty()) {
    const ObjectId o = ready.back();
    ready.pop_back();
    ++removed;
    for (const auto& g : generators_) {
      if (g.src == o && --indegree[g.dst] == 0) ready.push_back(g.dst);
    }
  }
  return removed == objects_.size();
}

std::vector<Path> enumerate_arrows(const Quiver& q, std::size_t max_len) {
  std::vector<Path> out;
  for (ObjectId o = 0; o < q.objects().size(); ++o) out.push_back(Path{o, o, {}});
  if (max_len == 0) return out;

  std::vector<Path> level;
  for (std::size_t g = 0; g < q.generators().size(); ++g) {
    level.push_back(Path{q.generators()[g].src, q.generators()[g].dst, {g}});
  }
  for (std::size_t len = 1; len <= max_len && !level.empty(); ++len) {
    out.insert(out.end(), level.begin(), level.end());
    if (len == max_len) break;
    std::vector<Path> next;
    for (const Path& p : level) {
      for (std::size_t g = 0; g < q.generators().size(); ++g) {
        if (q.generators()[g].src != p.dst) continue;
        Path ext = p;
        ext.word.push_back(g);
        ext.dst = q.generators()[g].dst;
        next.push_back(std::move(ext));
      }
    }
    level = std::move(next);
  }
  return out;
}

FinCategory::FinCategory(std::vector<std::string> objects, std::vector<ArrowDecl> arrows,
                         const std::vector<CompositionDecl>& compositions)
    : objects_(std::move(objects)) {
  check_objects(objects_);
  check_arrows(objects_, arrows);
  for (ObjectId o = 0; o < objects_.size(); ++o) {
    arrows_.push_back(ArrowDecl{identity_name(objects_[o]), o, o});
  }
  arrows_.insert(arrows_.end(), arrows.begin(), arrows.end());

  for (const auto& c : compositions) {
    const auto inner = arrow_index(c.inner);
    const auto outer = arrow_index(c.outer);
    const auto result = arrow_index(c.result);
    if (!inner || !outer || !result) {
      throw std::invalid_argument("composition (" + c.outer + kCompose + c.inner + " = " + c.result +
                                  ") references an unknown arrow");
    }
    if (!table_.emplace(std::pair{*inner, *outer}, *result).second) {
      throw std::invalid_argument("composition " + c.outer + kCompose + c.inner + " listed twice");
    }
  }
  for (std::size_t a = 0; a < arrows_.size(); ++a) {
    table_.emplace(std::pair{identity(arrows_[a].src), a}, a);
    table_.emplace(std::pair{a, identity(arrows_[a].dst)}, a);
  }
}

std::optional<ObjectId> FinCategory::object_index(const std::string& name) const {
  return find_name(objects_, name);
}

std::optional<std::size_t> FinCategory::arrow_index(const std::string& name) const {
  for (std::size_t i = 0; i < arrows_.size(); ++i) {
    if (arrows_[i].name == name) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> FinCategory::compose(std::size_t inner, std::size_t outer) const {
  const auto it = table_.find({inner, outer});
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

std::vector<TableViolation> FinCategory::validate_table() const {
  using Kind = TableViolation::Kind;
  std::vector<TableViolation> out;
  auto pair_name = [&](std::size_t inner, std::size_t outer) {
    return "(" + arrows_[outer].name + kCompose + arrows_[inner].name + ")";
  };

  for (const auto& [key, result] : table_) {
    const auto [inner, outer] = key;
    if (arrows_[inner].dst != arrows_[outer].src) {
      out.push_back({Kind::Endpoints, "table entry " + pair_name(inner, outer) +
                                          " composes arrows that are not composable"});
    } else if (arrows_[result].src != arrows_[inner].src || arrows_[result].dst != arrows_[outer].dst) {
      out.push_back({Kind::Endpoints, "composite " + pair_name(inner, outer) + " = " +
                                          arrows_[result].name + " has the wrong endpoints"});
    }
  }

  for (std::size_t a = 0; a < arrows_.size(); ++a) {
    for (std::size_t b = 0; b < arrows_.size(); ++b) {
      if (arrows_[a].dst == arrows_[b].src && !compose(a, b)) {
        out.push_back({Kind::Missing, "missing composite for the pair " + pair_name(a, b)});
      }
    }
  }

  for (std::size_t a = 0; a < arrows_.size(); ++a) {
    const auto left = compose(identity(arrows_[a].src), a);
    const auto right = compose(a, identity(arrows_[a].dst));
    if ((left && *left != a) || (right && *right != a)) {
      out.push_back({Kind::IdentityLaw, "identity law fails for " + arrows_[a].name});
    }
  }

  for (std::size_t a = 0; a < arrows_.size(); ++a) {
    for (std::size_t b = 0; b < arrows_.size(); ++b) {
      if (arrows_[a].dst != arrows_[b].src) continue;
      const auto ba = compose(a, b);
      for (std::size_t c = 0; c < arrows_.size(); ++c) {
        if (arrows_[b].dst != arrows_[c].src) continue;
        const auto cb = compose(b, c);
        if (!ba || !cb) continue;
        const auto lhs = compose(*ba, c);
        const auto rhs = compose(a, *cb);
        if (lhs && rhs && *lhs != *rhs) {
          out.push_back({Kind::Associativity, "associativity fails for " + arrows_[c].name + kCompose +
                                                  arrows_[b].name + kCompose + arrows_[a].name});
        }
      }
    }
  }
  return out;
}

TableClosure table_closure(const Quiver& q) {
  if (!q.is_acyclic()) {
    throw std::invalid_argument("table closure needs an acyclic quiver");
  }
  // Longest path in a DAG has at most objects-1 generators.
  const std::vector<Path> paths = enumerate_arrows(q, q.objects().size());
  const Presentation free{q};

  std::vector<ArrowDecl> arrows;
  std::vector<std::vector<std::size_t>> words;
  for (ObjectId o = 0; o < q.objects().size(); ++o) words.emplace_back();
  std::map<std::vector<std::size_t>, std::string> name_of;
  for (const Path& p : paths) {
    if (p.word.empty()) continue;
    const std::string name = free.name(p);
    arrows.push_back(ArrowDecl{name, p.src, p.dst});
    words.push_back(p.word);
    name_of.emplace(p.word, name);
  }
  std::vector<CompositionDecl> comps;
  for (const Path& p : paths) {
    if (p.word.empty()) continue;
    for (const Path& r : paths) {
      if (r.word.empty() || r.src != p.dst) continue;
      std::vector<std::size_t> joined = p.word;
      joined.insert(joined.end(), r.word.begin(), r.word.end());
      comps.push_back({name_of.at(p.word), name_of.at(r.word), name_of.at(joined)});
    }
  }
  return TableClosure{FinCategory(q.objects(), std::move(arrows), comps), std::move(words)};
}

const std::vector<std::string>& Presentation::objects() const {
  return std::visit([](const auto& r) -> const std::vector<std::string>& { return r.objects(); }, rep_);
}

std::optional<ObjectId> Presentation::object_index(const std::string& name) const {
  return find_name(objects(), name);
}

const std::vector<ArrowDecl>& Presentation::arrow_decls() const {
  if (mode() == Mode::Free) return quiver().generators();
  return category().arrows();
}

Path Presentation::identity(ObjectId obj) const {
  if (obj >= object_count()) throw std::out_of_range("object index out of range");
  if (mode() == Mode::Free) return Path{obj, obj, {}};
  return Path{obj, obj, {category().identity(obj)}};
}

Path Presentation::generator(std::size_t index) const {
  const auto& decls = arrow_decls();
  if (index >= decls.size()) throw std::out_of_range("arrow index out of range");
  return Path{decls[index].src, decls[index].dst, {index}};
}

bool Presentation::is_identity(const Path& p) const {
  if (mode() == Mode::Free) return p.word.empty();
  return p.word.size() == 1 && category().is_identity(p.word[0]);
}

std::optional<Path> Presentation::find_arrow(const std::string& name) const {
  if (mode() == Mode::Free) {
    if (auto g = quiver().generator_index(name)) return generator(*g);
    if (name.rfind("id_", 0) == 0) {
      if (auto o = object_index(name.substr(3))) return identity(*o);
    }
    return std::nullopt;
  }
  if (auto a = category().arrow_index(name)) return generator(*a);
  return std::nullopt;
}

Path Presentation::compose(const Path& p, const Path& q) const {
  if (p.dst != q.src) {
    throw std::invalid_argument("cannot compose " + name(p) + " then " + name(q) +
                                ": endpoints do not match");
  }
  if (mode() == Mode::Free) {
    Path out{p.src, q.dst, p.word};
    out.word.insert(out.word.end(), q.word.begin(), q.word.end());
    return out;
  }
  const auto r = category().compose(p.word.at(0), q.word.at(0));
  if (!r) {
    throw std::invalid_argument("composition table has no entry for " + name(q) + kCompose + name(p));
  }
  return Path{p.src, q.dst, {*r}};
}

std::size_t Presentation::length(const Path& p) const {
  if (mode() == Mode::Free) return p.word.size();
  return is_identity(p) ? 0 : 1;
}

std::string Presentation::name(const Path& p) const {
  if (mode() == Mode::Table) return category().arrows().at(p.word.at(0)).name;
  if (p.word.empty()) return identity_name(objects().at(p.src));
  std::string out;
  for (std::size_t i = p.word.size(); i-- > 0;) {
    out += quiver().generators().at(p.word[i]).name;
    if (i > 0) out += kCompose;
  }
  return out;
}

std::vector<Path> Presentation::enumerate_arrows(std::size_t max_len) const {
  if (mode() == Mode::Free) return fh::enumerate_arrows(quiver(), max_len);
  std::vector<Path> out;
  for (std::size_t a = 0; a < category().arrows().size(); ++a) out.push_back(generator(a));
  return out;
}

}  // namespace fh
