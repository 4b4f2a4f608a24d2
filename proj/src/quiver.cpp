#include "serreloc/quiver.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

#include "serreloc/errors.hpp"

namespace serreloc {

BoundQuiver::BoundQuiver(std::vector<std::string> vertices, std::vector<Arrow> arrows,
                         std::vector<Relation> relations, int characteristic)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)), relations_(std::move(relations)),
      p_(characteristic) {
  if (p_ != 2 && p_ != 3 && p_ != 5) {
    throw ValidationError("characteristic must be 2, 3 or 5, got " + std::to_string(p_));
  }
  if (vertices_.size() > kMaxCarrier) throw SizeError("too many vertices");
  std::set<std::string> seen;
  for (const auto& v : vertices_) {
    if (!seen.insert(v).second) throw ValidationError("duplicate vertex '" + v + "'");
  }
  seen.clear();
  for (const auto& a : arrows_) {
    if (a.source >= vertices_.size() || a.target >= vertices_.size()) {
      throw ValidationError("arrow '" + a.name + "' has an unknown endpoint");
    }
    if (!seen.insert(a.name).second) throw ValidationError("duplicate arrow '" + a.name + "'");
  }

  // Kahn's algorithm; leftover vertices lie on an oriented cycle.
  std::vector<int> indeg(vertices_.size(), 0);
  for (const auto& a : arrows_) ++indeg[a.target];
  std::vector<std::size_t> queue;
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    if (indeg[v] == 0) queue.push_back(v);
  }
  std::size_t visited = 0;
  while (!queue.empty()) {
    const auto v = queue.back();
    queue.pop_back();
    ++visited;
    for (const auto& a : arrows_) {
      if (a.source == v && --indeg[a.target] == 0) queue.push_back(a.target);
    }
  }
  if (visited != vertices_.size()) throw ValidationError("quiver has an oriented cycle; only acyclic quivers are supported");

  for (std::size_t r = 0; r < relations_.size(); ++r) {
    const auto& rel = relations_[r];
    if (rel.terms.empty()) throw ValidationError("relation " + std::to_string(r) + " is empty");
    std::optional<std::pair<std::size_t, std::size_t>> ends;
    for (const auto& term : rel.terms) {
      if (term.arrows.empty()) throw ValidationError("relation " + std::to_string(r) + " contains a trivial path");
      for (std::size_t i = 0; i < term.arrows.size(); ++i) {
        if (term.arrows[i] >= arrows_.size()) throw ValidationError("relation refers to unknown arrow");
        if (i > 0 && arrows_[term.arrows[i - 1]].target != arrows_[term.arrows[i]].source) {
          throw ValidationError("relation " + std::to_string(r) + " has a non-composable path");
        }
      }
      const std::pair<std::size_t, std::size_t> e{arrows_[term.arrows.front()].source,
                                                  arrows_[term.arrows.back()].target};
      if (ends && *ends != e) throw ValidationError("relation " + std::to_string(r) + " mixes non-parallel paths");
      ends = e;
    }
  }
}

std::optional<std::size_t> BoundQuiver::vertex_index(const std::string& label) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), label);
  if (it == vertices_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::optional<std::size_t> BoundQuiver::arrow_index(const std::string& name) const {
  auto it = std::find_if(arrows_.begin(), arrows_.end(), [&](const Arrow& a) { return a.name == name; });
  if (it == arrows_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - arrows_.begin());
}

BoundQuiver BoundQuiver::without_vertices(Mask killed, std::vector<std::size_t>* kept) const {
  std::vector<std::size_t> keep;
  std::vector<std::size_t> new_index(vertices_.size(), SIZE_MAX);
  std::vector<std::string> verts;
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    if (!(killed & bit(v))) {
      new_index[v] = keep.size();
      keep.push_back(v);
      verts.push_back(vertices_[v]);
    }
  }
  std::vector<std::size_t> arrow_map(arrows_.size(), SIZE_MAX);
  std::vector<Arrow> arrs;
  for (std::size_t a = 0; a < arrows_.size(); ++a) {
    const auto& arr = arrows_[a];
    if (new_index[arr.source] != SIZE_MAX && new_index[arr.target] != SIZE_MAX) {
      arrow_map[a] = arrs.size();
      arrs.push_back({arr.name, new_index[arr.source], new_index[arr.target]});
    }
  }
  std::vector<Relation> rels;
  for (const auto& rel : relations_) {
    Relation out;
    for (const auto& term : rel.terms) {
      PathTerm t{term.coefficient, {}};
      bool ok = true;
      for (auto a : term.arrows) {
        if (arrow_map[a] == SIZE_MAX) {
          ok = false;
          break;
        }
        t.arrows.push_back(arrow_map[a]);
      }
      if (ok) out.terms.push_back(std::move(t));
    }
    if (!out.terms.empty()) rels.push_back(std::move(out));
  }
  if (kept) *kept = keep;
  return BoundQuiver(std::move(verts), std::move(arrs), std::move(rels), p_);
}

bool operator==(const BoundQuiver& a, const BoundQuiver& b) {
  if (a.vertices_ != b.vertices_ || a.p_ != b.p_ || a.arrows_.size() != b.arrows_.size()) return false;
  for (std::size_t i = 0; i < a.arrows_.size(); ++i) {
    const auto& x = a.arrows_[i];
    const auto& y = b.arrows_[i];
    if (x.name != y.name || x.source != y.source || x.target != y.target) return false;
  }
  return true;
}

Representation::Representation(QuiverPtr quiver, std::vector<int> dims, std::vector<FpMatrix> maps)
    : quiver_(std::move(quiver)), dims_(std::move(dims)), maps_(std::move(maps)) {
  if (!quiver_) throw ValidationError("representation without a quiver");
  const auto& q = *quiver_;
  if (dims_.size() != q.vertex_count()) throw ValidationError("dimension vector has the wrong length");
  for (int d : dims_) {
    if (d < 0) throw ValidationError("negative dimension");
  }
  if (maps_.size() != q.arrows().size()) throw ValidationError("expected one matrix per arrow");
  for (std::size_t a = 0; a < maps_.size(); ++a) {
    const auto& arr = q.arrows()[a];
    if (maps_[a].rows() != dims_[arr.target] || maps_[a].cols() != dims_[arr.source]) {
      throw ValidationError("arrow '" + arr.name + "': matrix is " + std::to_string(maps_[a].rows()) + "x" +
                            std::to_string(maps_[a].cols()) + ", expected " + std::to_string(dims_[arr.target]) +
                            "x" + std::to_string(dims_[arr.source]));
    }
    maps_[a] = fp::reduce(maps_[a], q.characteristic());
  }
}

int Representation::total_dim() const {
  int t = 0;
  for (int d : dims_) t += d;
  return t;
}

Mask Representation::support() const {
  Mask m = 0;
  for (std::size_t v = 0; v < dims_.size(); ++v) {
    if (dims_[v] > 0) m |= bit(v);
  }
  return m;
}

FpMatrix Representation::path_map(const std::vector<std::size_t>& arrows) const {
  const int p = characteristic();
  const auto& arr = quiver_->arrows();
  FpMatrix m = FpMatrix::Identity(dims_[arr[arrows.front()].source], dims_[arr[arrows.front()].source]);
  for (auto a : arrows) m = fp::multiply(maps_[a], m, p);
  return m;
}

bool Representation::satisfies_relations() const {
  const int p = characteristic();
  for (const auto& rel : quiver_->relations()) {
    const auto& first = quiver_->arrows()[rel.terms.front().arrows.front()];
    const auto& last = quiver_->arrows()[rel.terms.front().arrows.back()];
    FpMatrix sum = FpMatrix::Zero(dims_[last.target], dims_[first.source]);
    for (const auto& term : rel.terms) sum += term.coefficient * path_map(term.arrows);
    if (!fp::reduce(sum, p).isZero()) return false;
  }
  return true;
}

bool validate(const Representation& rep) { return rep.satisfies_relations(); }

Representation make_representation(QuiverPtr quiver, std::vector<int> dims, std::vector<FpMatrix> maps) {
  Representation r(std::move(quiver), std::move(dims), std::move(maps));
  if (!validate(r)) throw ValidationError("representation violates a relation");
  return r;
}

namespace {

std::vector<FpMatrix> zero_maps(const BoundQuiver& q, const std::vector<int>& dims) {
  std::vector<FpMatrix> maps;
  for (const auto& a : q.arrows()) maps.push_back(FpMatrix::Zero(dims[a.target], dims[a.source]));
  return maps;
}

}  // namespace

Representation zero_representation(const QuiverPtr& quiver) {
  std::vector<int> dims(quiver->vertex_count(), 0);
  return Representation(quiver, dims, zero_maps(*quiver, dims));
}

Representation simple(const QuiverPtr& quiver, std::size_t vertex) {
  std::vector<int> dims(quiver->vertex_count(), 0);
  dims.at(vertex) = 1;
  return Representation(quiver, dims, zero_maps(*quiver, dims));
}

std::vector<Representation> simples(const QuiverPtr& quiver) {
  std::vector<Representation> out;
  for (std::size_t v = 0; v < quiver->vertex_count(); ++v) out.push_back(simple(quiver, v));
  return out;
}

Representation direct_sum(const Representation& a, const Representation& b) {
  if (a.quiver_ptr() != b.quiver_ptr()) throw ValidationError("direct sum of representations of different quivers");
  std::vector<int> dims(a.dims().size());
  for (std::size_t v = 0; v < dims.size(); ++v) dims[v] = a.dim(v) + b.dim(v);
  std::vector<FpMatrix> maps;
  for (std::size_t i = 0; i < a.maps().size(); ++i) {
    const auto& x = a.map(i);
    const auto& y = b.map(i);
    FpMatrix m = FpMatrix::Zero(x.rows() + y.rows(), x.cols() + y.cols());
    m.topLeftCorner(x.rows(), x.cols()) = x;
    m.bottomRightCorner(y.rows(), y.cols()) = y;
    maps.push_back(std::move(m));
  }
  return Representation(a.quiver_ptr(), std::move(dims), std::move(maps));
}

Representation power(const Representation& a, int n) {
  Representation out = zero_representation(a.quiver_ptr());
  for (int i = 0; i < n; ++i) out = direct_sum(out, a);
  return out;
}

Representation restrict_to(const Representation& rep, const QuiverPtr& target, const std::vector<std::size_t>& kept) {
  std::vector<int> dims;
  for (auto v : kept) dims.push_back(rep.dim(v));
  std::vector<FpMatrix> maps;
  for (const auto& arr : target->arrows()) {
    const auto idx = rep.quiver().arrow_index(arr.name);
    if (!idx) throw ValidationError("arrow '" + arr.name + "' missing from the source quiver");
    maps.push_back(rep.map(*idx));
  }
  return Representation(target, std::move(dims), std::move(maps));
}

std::vector<Representation> enumerate_representations(const QuiverPtr& quiver, int max_total_dim) {
  const auto& q = *quiver;
  const int p = q.characteristic();
  const std::size_t n = q.vertex_count();
  std::vector<Representation> out;
  std::vector<int> dims(n, 0);

  auto emit_all_maps = [&]() {
    std::vector<std::pair<std::size_t, std::pair<int, int>>> cells;
    for (std::size_t a = 0; a < q.arrows().size(); ++a) {
      const auto& arr = q.arrows()[a];
      for (int r = 0; r < dims[arr.target]; ++r) {
        for (int c = 0; c < dims[arr.source]; ++c) cells.push_back({a, {r, c}});
      }
    }
    double combos = 1;
    for (std::size_t i = 0; i < cells.size(); ++i) combos *= p;
    if (combos > double(1 << 22)) throw SizeError("too many map tuples to enumerate");
    std::vector<int> digits(cells.size(), 0);
    while (true) {
      auto maps = zero_maps(q, dims);
      for (std::size_t i = 0; i < cells.size(); ++i) {
        maps[cells[i].first](cells[i].second.first, cells[i].second.second) = digits[i];
      }
      Representation rep(quiver, dims, std::move(maps));
      if (validate(rep)) out.push_back(std::move(rep));
      std::size_t i = 0;
      while (i < cells.size() && ++digits[i] == p) digits[i++] = 0;
      if (i == cells.size()) break;
    }
  };

  auto rec = [&](auto&& self, std::size_t v, int remaining) -> void {
    if (v == n) {
      emit_all_maps();
      return;
    }
    for (int d = 0; d <= remaining; ++d) {
      dims[v] = d;
      self(self, v + 1, remaining - d);
    }
    dims[v] = 0;
  };
  rec(rec, 0, max_total_dim);
  std::stable_sort(out.begin(), out.end(),
                   [](const Representation& a, const Representation& b) { return a.total_dim() < b.total_dim(); });
  return out;
}

}  // namespace serreloc
