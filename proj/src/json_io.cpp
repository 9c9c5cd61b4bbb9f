#include "nervekit/json_io.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace nervekit {

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::InvalidInput, where + ": " + what);
}

void expect_keys(const Json& j, const std::string& where, std::initializer_list<const char*> required,
                 std::initializer_list<const char*> optional = {}) {
  if (!j.is_object()) bad(where, "expected an object");
  for (const char* k : required)
    if (!j.contains(k)) bad(where, std::string("missing key \"") + k + "\"");
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool known = false;
    for (const char* k : required) known = known || it.key() == k;
    for (const char* k : optional) known = known || it.key() == k;
    if (!known) bad(where, "unknown key \"" + it.key() + "\"");
  }
}

const Json& array_at(const Json& j, const char* key, const std::string& where) {
  const Json& a = j.at(key);
  if (!a.is_array()) bad(where, std::string("\"") + key + "\" must be an array");
  return a;
}

const Json& object_at(const Json& j, const char* key, const std::string& where) {
  const Json& a = j.at(key);
  if (!a.is_object()) bad(where, std::string("\"") + key + "\" must be an object");
  return a;
}

std::string str(const Json& j, const std::string& where) {
  if (!j.is_string()) bad(where, "expected a string, got " + j.dump());
  return j.get<std::string>();
}

std::vector<std::string> strings(const Json& j, const std::string& where) {
  if (!j.is_array()) bad(where, "expected an array of strings");
  std::vector<std::string> out;
  for (const auto& e : j) out.push_back(str(e, where));
  return out;
}

std::size_t lookup(const std::map<std::string, std::size_t>& m, const std::string& name, const std::string& what) {
  auto it = m.find(name);
  if (it == m.end()) throw Error(ErrorKind::DanglingId, what + " " + name);
  return it->second;
}

template <typename T>
std::map<std::string, std::size_t> index_names(const std::vector<T>& names) {
  std::map<std::string, std::size_t> m;
  for (std::size_t i = 0; i < names.size(); ++i) m.emplace(names[i], i);
  return m;
}

std::size_t object_of(const FiniteGroupoid& g, const std::string& name) {
  auto x = g.find_object(name);
  if (!x) throw Error(ErrorKind::UnknownObject, name);
  return *x;
}

std::size_t arrow_of(const FiniteGroupoid& g, const std::string& name) {
  auto a = g.find_arrow(name);
  if (!a) throw Error(ErrorKind::DanglingId, "arrow " + name);
  return *a;
}

std::size_t object_of(const FiniteCategory& c, const std::string& name) {
  auto x = c.find_object(name);
  if (!x) throw Error(ErrorKind::UnknownObject, name);
  return *x;
}

std::size_t morphism_of(const FiniteCategory& c, const std::string& name) {
  auto f = c.find_morphism(name);
  if (!f) throw Error(ErrorKind::DanglingId, "morphism " + name);
  return *f;
}

SetOp op_from_json(const Json& j) {
  const std::string where = "pullback op";
  expect_keys(j, where, {"op"}, {"with", "n"});
  const std::string kind = str(j.at("op"), where);
  SetOp op;
  if (kind == "identity") {
    op.kind = SetOp::Kind::Identity;
  } else if (kind == "terminal") {
    op.kind = SetOp::Kind::Terminal;
  } else if (kind == "product" || kind == "coproduct") {
    op.kind = kind == "product" ? SetOp::Kind::ProductWith : SetOp::Kind::CoproductWith;
    if (!j.contains("with")) bad(where, kind + " needs \"with\"");
    op.with.elements = strings(j.at("with"), where);
  } else if (kind == "power") {
    op.kind = SetOp::Kind::Power;
    if (!j.contains("n") || !j.at("n").is_number_unsigned()) bad(where, "power needs a nonnegative \"n\"");
    op.power = j.at("n").get<std::size_t>();
  } else {
    bad(where, "unknown op \"" + kind + "\"");
  }
  return op;
}

Lift lift_from_json(const IndexedCategory& ic, const CategoryFunctor& over, const Json& j, const std::string& where) {
  expect_keys(j, where, {"sets"}, {"maps"});
  const auto& e = *over.source;
  const Json& sets = object_at(j, "sets", where);
  Lift p;
  p.over = over;
  for (std::size_t x = 0; x < e.num_objects(); ++x) {
    if (!sets.contains(e.object_name(x))) bad(where, "no set for " + e.object_name(x));
    p.sets.push_back(FinSet{strings(sets.at(e.object_name(x)), where)});
  }
  for (auto it = sets.begin(); it != sets.end(); ++it) object_of(e, it.key());
  Json maps = j.contains("maps") ? j.at("maps") : Json::object();
  if (!maps.is_object()) bad(where, "\"maps\" must be an object");
  for (auto it = maps.begin(); it != maps.end(); ++it) morphism_of(e, it.key());
  for (MorphismId h = 0; h < e.num_morphisms(); ++h) {
    const FinSet tgt = ic.pull(over.mor_map[h], p.sets[e.tgt(h)]);
    const std::string& name = e.morphism_name(h);
    if (!maps.contains(name)) {
      if (!e.is_identity(h)) bad(where, "no map over " + name);
      p.maps.push_back(identity_map(p.sets[e.src(h)]));
      continue;
    }
    SetMap m{p.sets[e.src(h)], tgt, {}};
    for (const auto& v : maps.at(name)) {
      if (!v.is_number_unsigned()) bad(where, "map over " + name + " must list element indices");
      m.map.push_back(v.get<std::size_t>());
    }
    p.maps.push_back(std::move(m));
  }
  validate_lift(ic, p);
  return p;
}

}  // namespace

Json parse_json(const std::string& text, const std::string& where) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    bad(where, e.what());
  }
}

Json read_json_file(const std::string& path, std::string* bytes) {
  std::ifstream in(path, std::ios::binary);
  if (!in) bad(path, "cannot open");
  std::stringstream ss;
  ss << in.rdbuf();
  std::string text = ss.str();
  if (bytes) *bytes += text;
  return parse_json(text, path);
}

GroupoidHandle groupoid_from_json(const Json& j) {
  const std::string where = "groupoid";
  expect_keys(j, where, {"objects", "arrows", "comp", "id", "inv"});
  GroupoidTables t;
  t.object_names = strings(j.at("objects"), where);
  for (const auto& a : array_at(j, "arrows", where)) {
    expect_keys(a, "groupoid arrow", {"id", "src", "tgt"});
    t.arrow_names.push_back(str(a.at("id"), where));
  }
  const auto objects = index_names(t.object_names);
  const auto arrows = index_names(t.arrow_names);
  for (const auto& a : j.at("arrows")) {
    t.src.push_back(lookup(objects, str(a.at("src"), where), "object"));
    t.tgt.push_back(lookup(objects, str(a.at("tgt"), where), "object"));
  }
  const std::size_t n = t.arrow_names.size();
  t.comp.assign(n * n, kNone);
  for (const auto& e : array_at(j, "comp", where)) {
    if (!e.is_array() || e.size() != 3) bad(where, "comp entries are [a, b, a then b]");
    std::size_t a = lookup(arrows, str(e[0], where), "arrow");
    std::size_t b = lookup(arrows, str(e[1], where), "arrow");
    std::size_t c = lookup(arrows, str(e[2], where), "arrow");
    if (t.comp[a * n + b] != kNone && t.comp[a * n + b] != c)
      bad(where, "conflicting comp entries for " + t.arrow_names[a] + ", " + t.arrow_names[b]);
    t.comp[a * n + b] = c;
  }
  t.identity.assign(t.object_names.size(), kNone);
  const Json& ids = object_at(j, "id", where);
  for (auto it = ids.begin(); it != ids.end(); ++it)
    t.identity[lookup(objects, it.key(), "object")] = lookup(arrows, str(it.value(), where), "arrow");
  t.inverse.assign(n, kNone);
  const Json& inv = object_at(j, "inv", where);
  for (auto it = inv.begin(); it != inv.end(); ++it)
    t.inverse[lookup(arrows, it.key(), "arrow")] = lookup(arrows, str(it.value(), where), "arrow");
  return make_groupoid(std::move(t));
}

Json groupoid_to_json(const FiniteGroupoid& g) {
  Json j;
  j["objects"] = Json::array();
  for (ObjectId x = 0; x < g.num_objects(); ++x) j["objects"].push_back(g.object_name(x));
  j["arrows"] = Json::array();
  for (ArrowId a = 0; a < g.num_arrows(); ++a)
    j["arrows"].push_back(
        Json{{"id", g.arrow_name(a)}, {"src", g.object_name(g.src(a))}, {"tgt", g.object_name(g.tgt(a))}});
  j["comp"] = Json::array();
  for (ArrowId a = 0; a < g.num_arrows(); ++a)
    for (ArrowId b : g.arrows_from(g.tgt(a)))
      j["comp"].push_back(Json::array({g.arrow_name(a), g.arrow_name(b), g.arrow_name(g.comp(a, b))}));
  j["id"] = Json::object();
  for (ObjectId x = 0; x < g.num_objects(); ++x) j["id"][g.object_name(x)] = g.arrow_name(g.id(x));
  j["inv"] = Json::object();
  for (ArrowId a = 0; a < g.num_arrows(); ++a) j["inv"][g.arrow_name(a)] = g.arrow_name(g.inv(a));
  return j;
}

GroupoidFunctor groupoid_functor_from_json(GroupoidHandle source, GroupoidHandle target, const Json& j) {
  const std::string where = "functor";
  expect_keys(j, where, {"objects", "arrows"}, {"source", "target"});
  std::vector<ObjectId> obj(source->num_objects(), kNone);
  std::vector<ArrowId> arr(source->num_arrows(), kNone);
  const Json& om = object_at(j, "objects", where);
  for (auto it = om.begin(); it != om.end(); ++it)
    obj[object_of(*source, it.key())] = object_of(*target, str(it.value(), where));
  const Json& am = object_at(j, "arrows", where);
  for (auto it = am.begin(); it != am.end(); ++it)
    arr[arrow_of(*source, it.key())] = arrow_of(*target, str(it.value(), where));
  for (ObjectId x = 0; x < obj.size(); ++x)
    if (obj[x] == kNone) throw Error(ErrorKind::DanglingId, "no image for object " + source->object_name(x));
  for (ArrowId a = 0; a < arr.size(); ++a)
    if (arr[a] == kNone) throw Error(ErrorKind::DanglingId, "no image for arrow " + source->arrow_name(a));
  return validate_functor(std::move(source), std::move(target), std::move(obj), std::move(arr));
}

GroupoidFunctor standalone_functor_from_json(const Json& j) {
  expect_keys(j, "functor", {"source", "target", "objects", "arrows"});
  return groupoid_functor_from_json(groupoid_from_json(j.at("source")), groupoid_from_json(j.at("target")), j);
}

CategoryHandle category_from_json(const Json& j) {
  const std::string where = "category";
  expect_keys(j, where, {"objects", "morphisms", "id"}, {"comp"});
  CategoryTables t;
  t.object_names = strings(j.at("objects"), where);
  for (const auto& m : array_at(j, "morphisms", where)) {
    expect_keys(m, "category morphism", {"id", "src", "tgt"});
    t.morphism_names.push_back(str(m.at("id"), where));
  }
  const auto objects = index_names(t.object_names);
  const auto morphisms = index_names(t.morphism_names);
  for (const auto& m : j.at("morphisms")) {
    t.src.push_back(lookup(objects, str(m.at("src"), where), "object"));
    t.tgt.push_back(lookup(objects, str(m.at("tgt"), where), "object"));
  }
  t.identity.assign(t.object_names.size(), kNone);
  const Json& ids = object_at(j, "id", where);
  for (auto it = ids.begin(); it != ids.end(); ++it)
    t.identity[lookup(objects, it.key(), "object")] = lookup(morphisms, str(it.value(), where), "morphism");
  for (std::size_t x = 0; x < t.identity.size(); ++x)
    if (t.identity[x] == kNone) throw Error(ErrorKind::DanglingId, "identity of " + t.object_names[x]);
  const std::size_t n = t.morphism_names.size();
  t.comp.assign(n * n, kNone);
  for (std::size_t f = 0; f < n; ++f) {
    if (t.identity[t.src[f]] < n) t.comp[t.identity[t.src[f]] * n + f] = f;
    if (t.identity[t.tgt[f]] < n) t.comp[f * n + t.identity[t.tgt[f]]] = f;
  }
  if (j.contains("comp"))
    for (const auto& e : array_at(j, "comp", where)) {
      if (!e.is_array() || e.size() != 3) bad(where, "comp entries are [f, g, f then g]");
      std::size_t a = lookup(morphisms, str(e[0], where), "morphism");
      std::size_t b = lookup(morphisms, str(e[1], where), "morphism");
      std::size_t c = lookup(morphisms, str(e[2], where), "morphism");
      if (t.comp[a * n + b] != kNone && t.comp[a * n + b] != c)
        bad(where, "conflicting comp entries for " + t.morphism_names[a] + ", " + t.morphism_names[b]);
      t.comp[a * n + b] = c;
    }
  return make_category(std::move(t));
}

Json category_to_json(const FiniteCategory& c) {
  Json j;
  j["objects"] = Json::array();
  for (std::size_t x = 0; x < c.num_objects(); ++x) j["objects"].push_back(c.object_name(x));
  j["morphisms"] = Json::array();
  for (MorphismId f = 0; f < c.num_morphisms(); ++f)
    j["morphisms"].push_back(
        Json{{"id", c.morphism_name(f)}, {"src", c.object_name(c.src(f))}, {"tgt", c.object_name(c.tgt(f))}});
  j["comp"] = Json::array();
  for (MorphismId f = 0; f < c.num_morphisms(); ++f)
    for (MorphismId g : c.morphisms_from(c.tgt(f)))
      if (!c.is_identity(f) && !c.is_identity(g))
        j["comp"].push_back(Json::array({c.morphism_name(f), c.morphism_name(g), c.morphism_name(c.comp(f, g))}));
  j["id"] = Json::object();
  for (std::size_t x = 0; x < c.num_objects(); ++x) j["id"][c.object_name(x)] = c.morphism_name(c.id(x));
  return j;
}

CategoryFunctor category_functor_from_json(CategoryHandle source, CategoryHandle target, const Json& j) {
  const std::string where = "category functor";
  expect_keys(j, where, {"objects"}, {"morphisms"});
  std::vector<std::size_t> obj(source->num_objects(), kNone);
  std::vector<MorphismId> mor(source->num_morphisms(), kNone);
  const Json& om = object_at(j, "objects", where);
  for (auto it = om.begin(); it != om.end(); ++it)
    obj[object_of(*source, it.key())] = object_of(*target, str(it.value(), where));
  for (std::size_t x = 0; x < obj.size(); ++x)
    if (obj[x] == kNone) throw Error(ErrorKind::DanglingId, "no image for object " + source->object_name(x));
  if (j.contains("morphisms")) {
    const Json& mm = object_at(j, "morphisms", where);
    for (auto it = mm.begin(); it != mm.end(); ++it)
      mor[morphism_of(*source, it.key())] = morphism_of(*target, str(it.value(), where));
  }
  for (MorphismId f = 0; f < mor.size(); ++f) {
    if (mor[f] != kNone) continue;
    if (!source->is_identity(f)) throw Error(ErrorKind::DanglingId, "no image for morphism " + source->morphism_name(f));
    mor[f] = target->id(obj[source->src(f)]);
  }
  return validate_category_functor(std::move(source), std::move(target), std::move(obj), std::move(mor));
}

MorphismClass class_from_json(CategoryHandle c, const Json& j) {
  const std::string where = "class";
  expect_keys(j, where, {"members"}, {"close", "pullbacks"});
  std::vector<MorphismId> members;
  for (const auto& m : array_at(j, "members", where)) members.push_back(morphism_of(*c, str(m, where)));
  if (j.contains("close")) {
    if (!j.at("close").is_boolean()) bad(where, "\"close\" must be a boolean");
    if (j.at("close").get<bool>()) members = composition_closure(*c, members);
  }
  std::optional<PullbackOracle> oracle;
  if (j.contains("pullbacks")) {
    const Json& p = j.at("pullbacks");
    if (p.is_string() && p.get<std::string>() == "enumerate") {
      oracle = PullbackOracle::by_enumeration(*c);
    } else if (p.is_array()) {
      oracle.emplace();
      for (const auto& e : p) {
        expect_keys(e, "pullback entry", {"f", "g", "apex", "p1", "p2"});
        oracle->set(morphism_of(*c, str(e.at("f"), where)), morphism_of(*c, str(e.at("g"), where)),
                    Pullback{object_of(*c, str(e.at("apex"), where)), morphism_of(*c, str(e.at("p1"), where)),
                             morphism_of(*c, str(e.at("p2"), where))});
      }
    } else {
      bad(where, "\"pullbacks\" must be \"enumerate\" or a list");
    }
  }
  return make_class(std::move(c), members, std::move(oracle));
}

Cocycle cocycle_from_json(const Json& j) {
  const std::string where = "cocycle";
  expect_keys(j, where, {"target", "W", "cover", "a", "gamma"});
  GroupoidHandle target = groupoid_from_json(j.at("target"));
  std::vector<std::pair<std::string, std::vector<std::string>>> sets;
  const Json& cover = object_at(j, "cover", where);
  for (auto it = cover.begin(); it != cover.end(); ++it) sets.emplace_back(it.key(), strings(it.value(), where));
  Cocycle c = Cocycle::blank(target, make_cover(strings(j.at("W"), where), sets));
  const auto points = index_names(c.cover.points);
  const auto charts = index_names(c.cover.index_names);
  const Json& a = object_at(j, "a", where);
  for (auto it = a.begin(); it != a.end(); ++it) {
    std::size_t i = lookup(charts, it.key(), "cover index");
    if (!it.value().is_object()) bad(where, "a." + it.key() + " must be an object");
    for (auto w = it.value().begin(); w != it.value().end(); ++w)
      c.a[i][lookup(points, w.key(), "point")] = object_of(*target, str(w.value(), where));
  }
  const Json& gamma = object_at(j, "gamma", where);
  for (auto it = gamma.begin(); it != gamma.end(); ++it) {
    const std::string& key = it.key();
    auto comma = key.find(',');
    if (comma == std::string::npos) bad(where, "gamma keys are \"i,j\", got \"" + key + "\"");
    std::size_t i = lookup(charts, key.substr(0, comma), "cover index");
    std::size_t k = lookup(charts, key.substr(comma + 1), "cover index");
    if (!it.value().is_object()) bad(where, "gamma." + key + " must be an object");
    for (auto w = it.value().begin(); w != it.value().end(); ++w)
      c.gamma[i][k][lookup(points, w.key(), "point")] = arrow_of(*target, str(w.value(), where));
  }
  return c;
}

Json cocycle_to_json(const Cocycle& c) {
  const auto& g = *c.target;
  const auto& cv = c.cover;
  Json j;
  j["target"] = groupoid_to_json(g);
  j["W"] = cv.points;
  j["cover"] = Json::object();
  for (std::size_t i = 0; i < cv.num_sets(); ++i) {
    Json members = Json::array();
    for (std::size_t w = 0; w < cv.num_points(); ++w)
      if (cv.contains(i, w)) members.push_back(cv.points[w]);
    j["cover"][cv.index_names[i]] = members;
  }
  j["a"] = Json::object();
  for (std::size_t i = 0; i < cv.num_sets(); ++i) {
    Json row = Json::object();
    for (std::size_t w = 0; w < cv.num_points(); ++w)
      if (c.a[i][w] != kNone) row[cv.points[w]] = g.object_name(c.a[i][w]);
    j["a"][cv.index_names[i]] = row;
  }
  j["gamma"] = Json::object();
  for (std::size_t i = 0; i < cv.num_sets(); ++i)
    for (std::size_t k = 0; k < cv.num_sets(); ++k) {
      Json row = Json::object();
      for (std::size_t w = 0; w < cv.num_points(); ++w)
        if (c.gamma[i][k][w] != kNone) row[cv.points[w]] = g.arrow_name(c.gamma[i][k][w]);
      if (!row.empty()) j["gamma"][cv.index_names[i] + "," + cv.index_names[k]] = row;
    }
  return j;
}

Json torsor_to_json(const Torsor& t) {
  const auto& g = *t.target;
  Json j;
  j["elements"] = t.elements;
  j["p"] = Json::object();
  j["f"] = Json::object();
  for (std::size_t u = 0; u < t.size(); ++u) {
    j["p"][t.elements[u]] = t.cover.points[t.p[u]];
    j["f"][t.elements[u]] = g.object_name(t.f[u]);
  }
  j["delta"] = Json::array();
  for (std::size_t u = 0; u < t.size(); ++u)
    for (std::size_t v = 0; v < t.size(); ++v)
      if (t.delta[u][v] != kNone)
        j["delta"].push_back(Json::array({t.elements[u], t.elements[v], g.arrow_name(t.delta[u][v])}));
  j["sections"] = Json::object();
  for (std::size_t i = 0; i < t.cover.num_sets(); ++i) {
    Json row = Json::object();
    for (std::size_t w = 0; w < t.cover.num_points(); ++w)
      if (t.sigma[i][w] != kNone) row[t.cover.points[w]] = t.elements[t.sigma[i][w]];
    j["sections"][t.cover.index_names[i]] = row;
  }
  return j;
}

KanInput kan_from_json(const Json& base_j, const Json& fibers, const Json& along, const Json& lift) {
  CategoryHandle base = category_from_json(base_j);
  expect_keys(fibers, "fibers", {"pullback"});
  std::vector<SetWord> words(base->num_morphisms());
  const Json& pb = object_at(fibers, "pullback", "fibers");
  for (auto it = pb.begin(); it != pb.end(); ++it) {
    MorphismId f = morphism_of(*base, it.key());
    if (!it.value().is_array()) bad("fibers", "pullback." + it.key() + " must be a list of ops");
    for (const auto& op : it.value()) words[f].push_back(op_from_json(op));
  }
  KanInput in{make_indexed_category(base, std::move(words)), {}, {}, {}, {}};

  expect_keys(along, "along", {"D", "E", "F", "p"});
  CategoryHandle d = category_from_json(along.at("D"));
  CategoryHandle e = category_from_json(along.at("E"));
  in.f = category_functor_from_json(e, d, along.at("F"));
  in.p = category_functor_from_json(d, base, along.at("p"));

  expect_keys(lift, "lift", {"sets"}, {"maps", "tests"});
  CategoryFunctor q{e, base, {}, {}};
  for (std::size_t x = 0; x < e->num_objects(); ++x) q.obj_map.push_back(in.p.obj_map[in.f.obj_map[x]]);
  for (MorphismId h = 0; h < e->num_morphisms(); ++h) q.mor_map.push_back(in.p.mor_map[in.f.mor_map[h]]);
  Json p_json = Json::object();
  p_json["sets"] = lift.at("sets");
  if (lift.contains("maps")) p_json["maps"] = lift.at("maps");
  in.lift = lift_from_json(in.ic, q, p_json, "lift");
  if (lift.contains("tests"))
    for (const auto& t : array_at(lift, "tests", "lift")) in.tests.push_back(lift_from_json(in.ic, in.p, t, "test lift"));
  return in;
}

Json finset_to_json(const FinSet& s) { return s.elements; }

GroupoidDiagram groupoid_diagram_from_json(const Json& j) {
  const std::string where = "diagram";
  expect_keys(j, where, {"shape", "groupoids", "functors"});
  GroupoidDiagram d;
  d.shape = category_from_json(j.at("shape"));
  const auto& c = *d.shape;
  const Json& gs = object_at(j, "groupoids", where);
  for (std::size_t x = 0; x < c.num_objects(); ++x) {
    if (!gs.contains(c.object_name(x))) bad(where, "no groupoid for " + c.object_name(x));
    d.objects.push_back(groupoid_from_json(gs.at(c.object_name(x))));
  }
  for (auto it = gs.begin(); it != gs.end(); ++it) object_of(c, it.key());
  std::vector<std::optional<GroupoidFunctor>> arrows(c.num_morphisms());
  const Json& fs = object_at(j, "functors", where);
  for (auto it = fs.begin(); it != fs.end(); ++it) {
    MorphismId f = morphism_of(c, it.key());
    arrows[f] = groupoid_functor_from_json(d.objects[c.src(f)], d.objects[c.tgt(f)], it.value());
  }
  for (std::size_t x = 0; x < c.num_objects(); ++x)
    if (!arrows[c.id(x)]) arrows[c.id(x)] = identity_functor(d.objects[x]);
  bool grew = true;
  while (grew) {
    grew = false;
    for (MorphismId f = 0; f < c.num_morphisms(); ++f) {
      if (!arrows[f]) continue;
      for (MorphismId g : c.morphisms_from(c.tgt(f)))
        if (arrows[g] && !arrows[c.comp(f, g)]) {
          arrows[c.comp(f, g)] = compose(*arrows[f], *arrows[g]);
          grew = true;
        }
    }
  }
  for (MorphismId f = 0; f < c.num_morphisms(); ++f) {
    if (!arrows[f]) bad(where, "no functor for " + c.morphism_name(f));
    d.arrows.push_back(*arrows[f]);
  }
  validate_groupoid_diagram(d);
  return d;
}

GroupoidFunctor cover_from_json(const GroupoidDiagram& d, const Json& j) {
  expect_keys(j, "cover", {"source", "objects", "arrows"});
  return groupoid_functor_from_json(groupoid_from_json(j.at("source")), d.objects[final_object(*d.shape)], j);
}

}  // namespace nervekit
