#include "spec_io.hpp"

#include <openssl/evp.h>

#include <fstream>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

namespace fh {

namespace {

using json = nlohmann::json;

std::string at(const std::string& base, const std::string& key) { return base + "/" + key; }
std::string at(const std::string& base, std::size_t i) { return base + "/" + std::to_string(i); }

void only_keys(const json& j, const std::string& where, std::initializer_list<const char*> allowed) {
  for (const auto& [key, _] : j.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) throw SpecError(at(where, key), "unknown field");
  }
}

const json& field(const json& j, const std::string& where, const char* key) {
  if (!j.is_object()) throw SpecError(where, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) throw SpecError(at(where, key), "missing field");
  return *it;
}

std::string text_field(const json& j, const std::string& where, const char* key) {
  const json& v = field(j, where, key);
  if (!v.is_string()) throw SpecError(at(where, key), "expected a string");
  return v.get<std::string>();
}

const json& array_field(const json& j, const std::string& where, const char* key) {
  const json& v = field(j, where, key);
  if (!v.is_array()) throw SpecError(at(where, key), "expected an array");
  return v;
}

Rational rational_value(const json& v, const std::string& where) {
  if (!v.is_string()) throw SpecError(where, "expected a rational written as a string \"p/q\"");
  try {
    return parse_rational(v.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw SpecError(where, e.what());
  }
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

struct ObjectSpec {
  std::string name;
  FiniteProbSpace space;
};

ObjectSpec parse_object(const json& j, const std::string& where) {
  if (!j.is_object()) throw SpecError(where, "expected an object");
  only_keys(j, where, {"name", "atoms", "measure"});
  const std::string name = text_field(j, where, "name");
  const json& atoms_json = array_field(j, where, "atoms");
  std::vector<std::string> atoms;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < atoms_json.size(); ++i) {
    if (!atoms_json[i].is_string()) throw SpecError(at(at(where, "atoms"), i), "expected a string");
    atoms.push_back(atoms_json[i].get<std::string>());
    if (!seen.insert(atoms.back()).second) throw SpecError(at(at(where, "atoms"), i), "duplicate atom");
  }
  if (atoms.empty()) throw SpecError(at(where, "atoms"), "a space needs at least one atom");

  const json& measure = field(j, where, "measure");
  const std::string mwhere = at(where, "measure");
  if (!measure.is_object()) throw SpecError(mwhere, "expected an object mapping atoms to rationals");
  Measure weights(atoms.size());
  for (const auto& [key, value] : measure.items()) {
    if (!seen.count(key)) throw SpecError(at(mwhere, key), "measure names an unknown atom");
  }
  Rational total = 0;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    const auto it = measure.find(atoms[i]);
    if (it == measure.end()) throw SpecError(at(mwhere, atoms[i]), "missing weight");
    weights[i] = rational_value(*it, at(mwhere, atoms[i]));
    if (weights[i] < 0) throw SpecError(at(mwhere, atoms[i]), "negative weight");
    total += weights[i];
  }
  if (total != 1) throw SpecError(mwhere, "mass ≠ 1 (weights sum to " + to_string(total) + ")");
  return ObjectSpec{name, FiniteProbSpace(std::move(atoms), std::move(weights))};
}

}  // namespace

LoadedSpec parse_spec(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const auto [line, col] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    throw SpecError("line " + std::to_string(line) + ", column " + std::to_string(col), "invalid JSON");
  }
  if (!root.is_object()) throw SpecError("", "expected a JSON object at the top level");
  only_keys(root, "", {"mode", "objects", "arrows", "compositions"});

  const std::string mode = text_field(root, "", "mode");
  if (mode != "free" && mode != "table") throw SpecError("/mode", "expected \"free\" or \"table\"");

  const json& objects_json = array_field(root, "", "objects");
  if (objects_json.empty()) throw SpecError("/objects", "at least one object is required");
  std::vector<std::string> names;
  std::vector<FiniteProbSpace> spaces;
  std::map<std::string, ObjectId> object_of;
  for (std::size_t i = 0; i < objects_json.size(); ++i) {
    ObjectSpec o = parse_object(objects_json[i], at("/objects", i));
    if (!object_of.emplace(o.name, i).second) throw SpecError(at(at("/objects", i), "name"), "duplicate object");
    names.push_back(o.name);
    spaces.push_back(std::move(o.space));
  }

  const json& arrows_json = root.contains("arrows") ? array_field(root, "", "arrows") : json::array();
  std::vector<ArrowDecl> decls;
  std::vector<AtomMap> maps;
  std::set<std::string> arrow_names;
  for (std::size_t a = 0; a < arrows_json.size(); ++a) {
    const json& j = arrows_json[a];
    const std::string where = at("/arrows", a);
    if (!j.is_object()) throw SpecError(where, "expected an object");
    only_keys(j, where, {"name", "src", "dst", "map"});
    ArrowDecl d{text_field(j, where, "name"), 0, 0};
    if (d.name.rfind("id_", 0) == 0) throw SpecError(at(where, "name"), "the id_ prefix is reserved for identities");
    if (!arrow_names.insert(d.name).second) throw SpecError(at(where, "name"), "duplicate arrow");
    const std::string src = text_field(j, where, "src");
    const std::string dst = text_field(j, where, "dst");
    if (!object_of.count(src)) throw SpecError(at(where, "src"), "unknown object \"" + src + "\"");
    if (!object_of.count(dst)) throw SpecError(at(where, "dst"), "unknown object \"" + dst + "\"");
    d.src = object_of.at(src);
    d.dst = object_of.at(dst);

    // F(i) goes from the atoms of dst to the atoms of src.
    const FiniteProbSpace& from = spaces[d.dst];
    const FiniteProbSpace& to = spaces[d.src];
    const json& map_json = field(j, where, "map");
    const std::string mwhere = at(where, "map");
    if (!map_json.is_object()) throw SpecError(mwhere, "expected an object mapping atoms of dst to atoms of src");
    for (const auto& [key, _] : map_json.items()) {
      if (!from.index_of(key)) throw SpecError(at(mwhere, key), "\"" + key + "\" is not an atom of " + dst);
    }
    AtomMap m{to.size(), std::vector<std::size_t>(from.size())};
    for (std::size_t x = 0; x < from.size(); ++x) {
      const auto it = map_json.find(from.atom(x));
      if (it == map_json.end()) throw SpecError(at(mwhere, from.atom(x)), "map is not total");
      if (!it->is_string()) throw SpecError(at(mwhere, from.atom(x)), "expected an atom name");
      const auto y = to.index_of(it->get<std::string>());
      if (!y) throw SpecError(at(mwhere, from.atom(x)), "\"" + it->get<std::string>() + "\" is not an atom of " + src);
      m.image[x] = *y;
    }
    decls.push_back(std::move(d));
    maps.push_back(std::move(m));
  }

  std::vector<CompositionDecl> comps;
  if (root.contains("compositions")) {
    if (mode != "table") throw SpecError("/compositions", "compositions are only allowed in table mode");
    const json& comps_json = array_field(root, "", "compositions");
    for (std::size_t c = 0; c < comps_json.size(); ++c) {
      const std::string where = at("/compositions", c);
      if (!comps_json[c].is_object()) throw SpecError(where, "expected an object");
      only_keys(comps_json[c], where, {"inner", "outer", "result"});
      CompositionDecl d{text_field(comps_json[c], where, "inner"), text_field(comps_json[c], where, "outer"),
                        text_field(comps_json[c], where, "result")};
      for (const auto* name : {&d.inner, &d.outer, &d.result}) {
        const bool identity = name->rfind("id_", 0) == 0 && object_of.count(name->substr(3));
        if (!identity && !arrow_names.count(*name)) throw SpecError(where, "unknown arrow \"" + *name + "\"");
      }
      comps.push_back(std::move(d));
    }
  }

  try {
    Presentation pres = mode == "free" ? Presentation(Quiver(names, decls))
                                       : Presentation(FinCategory(names, decls, comps));
    return LoadedSpec{Filtration(std::move(pres), std::move(spaces), std::move(maps)), sha256_digest(text)};
  } catch (const std::invalid_argument& e) {
    throw SpecError(mode == "table" ? "/compositions" : "/arrows", e.what());
  }
}

LoadedSpec load_spec_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SpecError(path, "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_spec(buf.str());
}

json to_spec_json(const Filtration& f) {
  const Presentation& pres = f.presentation();
  json root;
  root["mode"] = pres.mode() == Mode::Free ? "free" : "table";
  json objects = json::array();
  for (ObjectId o = 0; o < pres.object_count(); ++o) {
    const FiniteProbSpace& s = f.space(o);
    json measure = json::object();
    for (std::size_t i = 0; i < s.size(); ++i) measure[s.atom(i)] = to_string(s.weight(i));
    objects.push_back({{"name", pres.objects()[o]}, {"atoms", s.atoms()}, {"measure", measure}});
  }
  root["objects"] = objects;

  json arrows = json::array();
  const auto& decls = pres.arrow_decls();
  for (std::size_t a = 0; a < decls.size(); ++a) {
    const Path p = pres.generator(a);
    if (pres.mode() == Mode::Table && pres.is_identity(p)) continue;
    const AtomMap m = f.map_of(p);
    json map = json::object();
    for (std::size_t x = 0; x < m.source_size(); ++x) {
      map[f.space(decls[a].dst).atom(x)] = f.space(decls[a].src).atom(m.image[x]);
    }
    arrows.push_back({{"name", decls[a].name},
                      {"src", pres.objects()[decls[a].src]},
                      {"dst", pres.objects()[decls[a].dst]},
                      {"map", map}});
  }
  root["arrows"] = arrows;

  if (pres.mode() == Mode::Table) {
    const FinCategory& cat = pres.category();
    json comps = json::array();
    for (const auto& [key, result] : cat.entries()) {
      const auto [inner, outer] = key;
      const bool with_identity = cat.is_identity(inner) || cat.is_identity(outer);
      if (with_identity) {
        const std::size_t other = cat.is_identity(inner) ? outer : inner;
        if (result == other) continue;
      }
      comps.push_back({{"inner", cat.arrows()[inner].name},
                       {"outer", cat.arrows()[outer].name},
                       {"result", cat.arrows()[result].name}});
    }
    root["compositions"] = comps;
  }
  return root;
}

std::string canonical_text(const json& j) { return j.dump(2) + "\n"; }

std::string sha256_digest(std::string_view bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("sha256 digest failed");
  }
  std::ostringstream out;
  out << "sha256:";
  for (unsigned int i = 0; i < len; ++i) out << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
  return out.str();
}

}  // namespace fh
