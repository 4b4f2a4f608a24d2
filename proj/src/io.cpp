#include "serreloc/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "serreloc/errors.hpp"

namespace serreloc {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ValidationError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string text(const Json& j, const char* what) {
  if (!j.is_string()) throw ValidationError(std::string(what) + " must be a string");
  return j.get<std::string>();
}

std::vector<std::string> text_list(const Json& j, const char* what) {
  if (!j.is_array()) throw ValidationError(std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const auto& e : j) out.push_back(text(e, what));
  return out;
}

int integer(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw ValidationError(std::string(what) + " must be an integer");
  return j.get<int>();
}

std::size_t vertex(const BoundQuiver& q, const Json& j) {
  const auto label = text(j, "vertex");
  const auto v = q.vertex_index(label);
  if (!v) throw ValidationError("unknown vertex '" + label + "'");
  return *v;
}

std::vector<Mask> family_from_json(const FinitePoset& spec, const Json& j) {
  if (!j.is_array()) throw ValidationError("ideal family must be an array of generator lists");
  std::vector<Mask> out;
  for (const auto& gens : j) out.push_back(spec.up_closure(labels_to_mask(spec, gens)));
  return out;
}

ExactFunctorModel functor_step(const CategoryModel& current, const Json& j) {
  const auto kind = text(field(j, "kind"), "functor kind");
  if (kind == "inclusion") {
    const auto* sub = std::get_if<ExactSubModel>(&current);
    if (!sub) throw ValidationError("inclusion needs an exactsub source");
    return inclusion_functor(*sub);
  }
  if (kind == "quotient") {
    return quotient_functor(current, {labels_to_mask(serre_base(current), field(j, "kill"))});
  }
  if (kind == "identity") return identity_functor(current);
  throw ValidationError("unknown functor kind '" + kind + "'");
}

}  // namespace

FinitePoset poset_from_json(const Json& j) {
  auto labels = text_list(field(j, "elements"), "element");
  std::vector<std::pair<std::string, std::string>> covers;
  if (j.contains("covers")) {
    for (const auto& c : j.at("covers")) {
      if (!c.is_array() || c.size() != 2) throw ValidationError("each cover must be a [lower, upper] pair");
      covers.emplace_back(text(c[0], "cover"), text(c[1], "cover"));
    }
  }
  return FinitePoset::from_covers(std::move(labels), covers);
}

Json poset_to_json(const FinitePoset& p) {
  Json covers = Json::array();
  for (const auto& [lo, hi] : p.covers()) covers.push_back({p.label(lo), p.label(hi)});
  return {{"elements", p.labels()}, {"covers", covers}};
}

QuiverPtr quiver_from_json(const Json& j) {
  auto vertices = text_list(field(j, "vertices"), "vertex");
  std::vector<Arrow> arrows;
  const auto find = [&](const Json& v) {
    const auto label = text(v, "arrow endpoint");
    const auto it = std::find(vertices.begin(), vertices.end(), label);
    if (it == vertices.end()) throw ValidationError("arrow endpoint '" + label + "' is not a vertex");
    return static_cast<std::size_t>(it - vertices.begin());
  };
  if (j.contains("arrows")) {
    for (const auto& a : j.at("arrows")) {
      arrows.push_back({text(field(a, "name"), "arrow name"), find(field(a, "src")), find(field(a, "dst"))});
    }
  }
  std::vector<Relation> relations;
  if (j.contains("relations")) {
    for (const auto& r : j.at("relations")) {
      Relation rel;
      for (const auto& t : r) {
        PathTerm term;
        term.coefficient = t.contains("coef") ? integer(t.at("coef"), "coefficient") : 1;
        for (const auto& name : field(t, "path")) {
          const auto label = text(name, "path arrow");
          const auto it = std::find_if(arrows.begin(), arrows.end(), [&](const Arrow& a) { return a.name == label; });
          if (it == arrows.end()) throw ValidationError("relation uses unknown arrow '" + label + "'");
          term.arrows.push_back(static_cast<std::size_t>(it - arrows.begin()));
        }
        rel.terms.push_back(std::move(term));
      }
      relations.push_back(std::move(rel));
    }
  }
  const int p = j.contains("char") ? integer(j.at("char"), "char") : 2;
  return std::make_shared<const BoundQuiver>(std::move(vertices), std::move(arrows), std::move(relations), p);
}

Json quiver_to_json(const BoundQuiver& q) {
  Json arrows = Json::array();
  for (const auto& a : q.arrows()) {
    arrows.push_back({{"name", a.name}, {"src", q.vertices()[a.source]}, {"dst", q.vertices()[a.target]}});
  }
  Json relations = Json::array();
  for (const auto& r : q.relations()) {
    Json terms = Json::array();
    for (const auto& t : r.terms) {
      Json path = Json::array();
      for (auto a : t.arrows) path.push_back(q.arrows()[a].name);
      terms.push_back({{"coef", t.coefficient}, {"path", path}});
    }
    relations.push_back(terms);
  }
  return {{"vertices", q.vertices()}, {"arrows", arrows}, {"relations", relations}, {"char", q.characteristic()}};
}

Representation representation_from_json(const QuiverPtr& q, const Json& j) {
  std::vector<int> dims(q->vertex_count(), 0);
  if (j.contains("dims")) {
    for (const auto& [label, d] : j.at("dims").items()) {
      dims[vertex(*q, Json(label))] = integer(d, "dimension");
      if (dims[vertex(*q, Json(label))] < 0) throw ValidationError("negative dimension at vertex '" + label + "'");
    }
  }
  std::vector<FpMatrix> maps;
  for (const auto& a : q->arrows()) {
    const int rows = dims[a.target], cols = dims[a.source];
    FpMatrix m = FpMatrix::Zero(rows, cols);
    if (j.contains("maps") && j.at("maps").contains(a.name)) {
      const auto& rows_j = j.at("maps").at(a.name);
      if (!rows_j.is_array() || static_cast<int>(rows_j.size()) != rows) {
        throw ValidationError("arrow '" + a.name + "' needs " + std::to_string(rows) + " rows");
      }
      for (int r = 0; r < rows; ++r) {
        if (!rows_j[r].is_array() || static_cast<int>(rows_j[r].size()) != cols) {
          throw ValidationError("arrow '" + a.name + "' needs " + std::to_string(cols) + " columns");
        }
        for (int c = 0; c < cols; ++c) m(r, c) = integer(rows_j[r][c], "matrix entry");
      }
    }
    maps.push_back(std::move(m));
  }
  return make_representation(q, std::move(dims), std::move(maps));
}

Json representation_to_json(const Representation& r) {
  const auto& q = r.quiver();
  Json dims = Json::object(), maps = Json::object();
  for (std::size_t v = 0; v < q.vertex_count(); ++v) dims[q.vertices()[v]] = r.dim(v);
  for (std::size_t a = 0; a < q.arrows().size(); ++a) {
    Json rows = Json::array();
    const auto& m = r.map(a);
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      Json row = Json::array();
      for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
      rows.push_back(row);
    }
    maps[q.arrows()[a].name] = rows;
  }
  return {{"dims", dims}, {"maps", maps}};
}

Mask labels_to_mask(const FinitePoset& base, const Json& labels) {
  Mask m = 0;
  for (const auto& l : text_list(labels, "label")) {
    const auto i = base.index_of(l);
    if (!i) throw ValidationError("unknown label '" + l + "'");
    m |= bit(*i);
  }
  return m;
}

Json mask_to_labels(const Preorder& base, Mask m) { return base.sorted_labels(m); }

CategoryModel model_from_json(const Json& j) {
  const auto kind = text(field(j, "kind"), "kind");
  if (kind == "spectral") return SpectralModel{poset_from_json(j)};
  if (kind == "length") return LengthModel{quiver_from_json(field(j, "quiver"))};
  if (kind == "exactsub") {
    LengthModel ambient{quiver_from_json(field(j, "ambient"))};
    std::vector<std::string> labels;
    std::vector<Representation> simples;
    for (const auto& s : field(j, "simples")) {
      labels.push_back(text(field(s, "label"), "simple label"));
      simples.push_back(representation_from_json(ambient.quiver, field(s, "rep")));
    }
    return ExactSubModel::make(std::move(ambient), std::move(labels), std::move(simples));
  }
  throw ValidationError("unknown model kind '" + kind + "'");
}

Json model_to_json(const CategoryModel& m) {
  if (const auto* s = std::get_if<SpectralModel>(&m)) {
    Json j = poset_to_json(s->spec);
    j["kind"] = "spectral";
    return j;
  }
  if (const auto* l = std::get_if<LengthModel>(&m)) return {{"kind", "length"}, {"quiver", quiver_to_json(*l->quiver)}};
  const auto& e = std::get<ExactSubModel>(m);
  Json simples = Json::array();
  for (std::size_t i = 0; i < e.simples.size(); ++i) {
    simples.push_back({{"label", e.labels[i]}, {"rep", representation_to_json(e.simples[i])}});
  }
  return {{"kind", "exactsub"}, {"ambient", quiver_to_json(*e.ambient.quiver)}, {"simples", simples}};
}

ModelObject object_from_json(const CategoryModel& m, const Json& j) {
  if (const auto* l = std::get_if<LengthModel>(&m)) return representation_from_json(l->quiver, j);
  if (const auto* s = std::get_if<SpectralModel>(&m)) {
    return SpectralObject{labels_to_mask(s->spec, field(j, "generators"))};
  }
  const auto& e = std::get<ExactSubModel>(m);
  SemisimpleObject o{std::vector<int>(e.labels.size(), 0)};
  for (const auto& [label, n] : field(j, "multiplicity").items()) {
    const auto it = std::find(e.labels.begin(), e.labels.end(), label);
    if (it == e.labels.end()) throw ValidationError("unknown simple '" + label + "'");
    o.multiplicity[static_cast<std::size_t>(it - e.labels.begin())] = integer(n, "multiplicity");
  }
  object_support(m, o);
  return o;
}

Json object_to_json(const CategoryModel& m, const ModelObject& o) {
  if (const auto* r = std::get_if<Representation>(&o)) return representation_to_json(*r);
  if (const auto* s = std::get_if<SpectralObject>(&o)) {
    return {{"generators", mask_to_labels(std::get<SpectralModel>(m).spec, s->generators)}};
  }
  const auto& e = std::get<ExactSubModel>(m);
  Json mult = Json::object();
  const auto& v = std::get<SemisimpleObject>(o).multiplicity;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0) mult[e.labels[i]] = v[i];
  }
  return {{"multiplicity", mult}};
}

Fixture fixture_from_json(const Json& j, std::string name) {
  const auto kind = text(field(j, "kind"), "kind");
  if (kind == "inclusion" || kind == "quotient" || kind == "composite" || kind == "identity") {
    const CategoryModel source = model_from_json(field(j, "source"));
    ExactFunctorModel f = identity_functor(source);
    if (kind == "composite") {
      const auto& steps = field(j, "steps");
      if (!steps.is_array() || steps.empty()) throw ValidationError("composite needs a non-empty 'steps' array");
      f = functor_step(source, steps[0]);
      for (std::size_t i = 1; i < steps.size(); ++i) f = compose(f, functor_step(f.target, steps[i]));
    } else {
      f = functor_step(source, j);
    }
    if (j.contains("target")) {
      const auto declared = model_from_json(j.at("target"));
      if (declared.index() != f.target.index() || !(serre_base(declared) == serre_base(f.target))) {
        throw ValidationError("declared target does not match the functor's target");
      }
    }
    validate(f);
    if (j.contains("object_map")) {
      for (const auto& pair : j.at("object_map")) {
        const auto a = object_from_json(f.source, field(pair, "source"));
        const auto b = object_from_json(f.target, field(pair, "target"));
        if (object_support(f.target, f(a)) != object_support(f.target, b)) {
          throw ValidationError("object_map entry disagrees with the functor on composition factors");
        }
      }
    }
    return Fixture{std::move(name), kind, source, std::nullopt, std::move(f), {}};
  }

  Fixture fx{std::move(name), kind, model_from_json(j), std::nullopt, std::nullopt, {}};
  if (const auto* s = std::get_if<SpectralModel>(&fx.model)) {
    std::optional<std::vector<Mask>> fg, pp;
    if (j.contains("fg")) fg = family_from_json(s->spec, j.at("fg"));
    if (j.contains("pp")) pp = family_from_json(s->spec, j.at("pp"));
    fx.spectral.emplace(s->spec, fg, pp);
  }
  if (j.contains("objects")) {
    for (const auto& [label, o] : j.at("objects").items()) fx.objects.emplace_back(label, object_from_json(fx.model, o));
  }
  return fx;
}

Fixture load_fixture(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read " + path.string());
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ValidationError(path.filename().string() + ": " + e.what());
  }
  return fixture_from_json(j, path.stem().string());
}

std::vector<Fixture> load_fixture_dir(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(dir)) {
    if (e.path().extension() == ".json") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<Fixture> out;
  for (const auto& f : files) out.push_back(load_fixture(f));
  return out;
}

std::string hasse_dot(const std::string& graph_name, const FinitePoset& poset) {
  std::ostringstream os;
  os << "digraph \"" << graph_name << "\" {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < poset.size(); ++i) os << "  n" << i << " [label=\"" << poset.label(i) << "\"];\n";
  for (const auto& [lo, hi] : poset.covers()) os << "  n" << lo << " -> n" << hi << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace serreloc
