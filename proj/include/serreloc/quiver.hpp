#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "serreloc/fp_matrix.hpp"
#include "serreloc/poset.hpp"

namespace serreloc {

struct Arrow {
  std::string name;
  std::size_t source = 0;
  std::size_t target = 0;
};

/// `coefficient` times the path that traverses `arrows` in order.
struct PathTerm {
  int coefficient = 1;
  std::vector<std::size_t> arrows;
};

/// A linear combination of parallel paths required to act as zero.
struct Relation {
  std::vector<PathTerm> terms;
};

/// An acyclic quiver with relations over F_p, p in {2, 3, 5}.
class BoundQuiver {
 public:
  /// Throws ValidationError for unsupported characteristic, oriented cycles, dangling
  /// arrows, or relations whose paths are not composable or not parallel.
  BoundQuiver(std::vector<std::string> vertices, std::vector<Arrow> arrows, std::vector<Relation> relations,
              int characteristic);

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const std::vector<Relation>& relations() const { return relations_; }
  int characteristic() const { return p_; }
  std::size_t vertex_count() const { return vertices_.size(); }

  std::optional<std::size_t> vertex_index(const std::string& label) const;
  std::optional<std::size_t> arrow_index(const std::string& name) const;

  /// Drops the vertices in `killed`, their incident arrows, and every relation term that
  /// uses a dropped arrow. `kept` receives the original index of each surviving vertex.
  BoundQuiver without_vertices(Mask killed, std::vector<std::size_t>* kept = nullptr) const;

  friend bool operator==(const BoundQuiver& a, const BoundQuiver& b);

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::vector<Relation> relations_;
  int p_;
};

using QuiverPtr = std::shared_ptr<const BoundQuiver>;

/// Default bound on total dimension for subobject enumeration.
inline constexpr int kDefaultDimBound = 6;
/// Bound on n * dim(B) for `succeeds`.
inline constexpr int kExtendedDimBound = 8;

/// A finite-dimensional representation: one matrix per arrow, shaped target x source.
class Representation {
 public:
  /// Checks matrix shapes (naming the offending arrow) and reduces entries mod p.
  /// Relations are not checked here; see `validate`.
  Representation(QuiverPtr quiver, std::vector<int> dims, std::vector<FpMatrix> maps);

  const BoundQuiver& quiver() const { return *quiver_; }
  const QuiverPtr& quiver_ptr() const { return quiver_; }
  int characteristic() const { return quiver_->characteristic(); }

  const std::vector<int>& dims() const { return dims_; }
  int dim(std::size_t v) const { return dims_[v]; }
  const std::vector<FpMatrix>& maps() const { return maps_; }
  const FpMatrix& map(std::size_t arrow) const { return maps_[arrow]; }

  int total_dim() const;
  /// Vertices with non-zero dimension.
  Mask support() const;
  bool is_zero() const { return total_dim() == 0; }

  /// Matrix of the path traversing `arrows` in order.
  FpMatrix path_map(const std::vector<std::size_t>& arrows) const;
  bool satisfies_relations() const;

  friend bool operator==(const Representation& a, const Representation& b) {
    return a.quiver_ == b.quiver_ && a.dims_ == b.dims_ && a.maps_ == b.maps_;
  }

 private:
  QuiverPtr quiver_;
  std::vector<int> dims_;
  std::vector<FpMatrix> maps_;
};

/// Whether every relation evaluates to zero.
bool validate(const Representation& rep);

/// Representation with validated shapes and relations.
Representation make_representation(QuiverPtr quiver, std::vector<int> dims, std::vector<FpMatrix> maps);

Representation zero_representation(const QuiverPtr& quiver);
/// S_v for every vertex v: dimension 1 at v, all maps zero.
std::vector<Representation> simples(const QuiverPtr& quiver);
Representation simple(const QuiverPtr& quiver, std::size_t vertex);

Representation direct_sum(const Representation& a, const Representation& b);
Representation power(const Representation& a, int n);

/// Restriction to the vertices listed in `kept` over the quiver `target`, which must be the
/// result of `without_vertices` with the same vertex list.
Representation restrict_to(const Representation& rep, const QuiverPtr& target, const std::vector<std::size_t>& kept);

/// Every representation of total dimension at most `max_total_dim` (all bases, not up to
/// isomorphism). Throws SizeError if a single dimension vector has too many map tuples.
std::vector<Representation> enumerate_representations(const QuiverPtr& quiver, int max_total_dim);

}  // namespace serreloc
