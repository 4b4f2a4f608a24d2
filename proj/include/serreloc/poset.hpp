#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace serreloc {

/// Subset of a carrier of at most 64 points, bit i standing for point i.
using Mask = std::uint64_t;

inline constexpr std::size_t kMaxCarrier = 64;

inline constexpr Mask bit(std::size_t i) { return Mask{1} << i; }
inline constexpr Mask full_mask(std::size_t n) { return n >= 64 ? ~Mask{0} : bit(n) - 1; }
inline constexpr bool subset(Mask a, Mask b) { return (a & ~b) == 0; }
inline int popcount(Mask m) { return std::popcount(m); }

/// Indices of the set bits of `m`, ascending.
std::vector<std::size_t> members(Mask m);

/// Calls `fn(i)` for every set bit of `m`, ascending.
template <typename Fn>
void for_each_bit(Mask m, Fn&& fn) {
  while (m != 0) {
    const auto i = static_cast<std::size_t>(std::countr_zero(m));
    fn(i);
    m &= m - 1;
  }
}

/// A reflexive, transitive relation on labelled points.
///
/// Stored as the up-closure mask of every point: `up(i)` holds every j with i <= j.
class Preorder {
 public:
  Preorder() = default;
  /// `up[i]` must contain i; transitivity is enforced by closing.
  Preorder(std::vector<std::string> labels, std::vector<Mask> up);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  std::optional<std::size_t> index_of(const std::string& label) const;

  bool leq(std::size_t i, std::size_t j) const { return (up_[i] & bit(j)) != 0; }
  Mask up(std::size_t i) const { return up_[i]; }
  Mask down(std::size_t i) const { return down_[i]; }
  Mask full() const { return full_mask(size()); }

  Mask up_closure(Mask m) const;
  Mask down_closure(Mask m) const;
  bool is_up_set(Mask m) const { return up_closure(m) == m; }
  bool is_down_set(Mask m) const { return down_closure(m) == m; }

  /// Whether i <= j <= i implies i == j.
  bool is_antisymmetric() const;

  /// Renders a subset as "{a,b,c}" with labels sorted.
  std::string format(Mask m) const;
  std::vector<std::string> sorted_labels(Mask m) const;

 protected:
  std::vector<std::string> labels_;
  std::vector<Mask> up_;
  std::vector<Mask> down_;
};

/// A finite partially ordered set with unique labels.
class FinitePoset : public Preorder {
 public:
  FinitePoset() = default;

  /// Builds the poset from Hasse edges `(lower, upper)`; the transitive closure is taken
  /// and antisymmetry is validated. Throws ValidationError or SizeError.
  static FinitePoset from_covers(std::vector<std::string> labels,
                                 const std::vector<std::pair<std::size_t, std::size_t>>& covers);
  static FinitePoset from_covers(std::vector<std::string> labels,
                                 const std::vector<std::pair<std::string, std::string>>& covers);
  /// Builds from a full relation; `up[i]` lists every j with i <= j.
  static FinitePoset from_up_sets(std::vector<std::string> labels, std::vector<Mask> up);

  static FinitePoset antichain(std::vector<std::string> labels);
  static FinitePoset chain(std::vector<std::string> labels);

  Mask minimal(Mask m) const;
  Mask maximal(Mask m) const;

  /// Hasse edges (lower, upper), lexicographically sorted.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;

  FinitePoset opposite() const;

  /// Induced subposet on `keep`; `index_map[k]` is the original index of new point k.
  FinitePoset restrict(Mask keep, std::vector<std::size_t>* index_map = nullptr) const;

  friend bool operator==(const FinitePoset& a, const FinitePoset& b) {
    return a.labels_ == b.labels_ && a.up_ == b.up_;
  }

 private:
  explicit FinitePoset(Preorder p) : Preorder(std::move(p)) {}
};

/// Every set `U` of points `0..up.size()-1` such that `i` in `U` implies `up[i]` is a subset of
/// `U`. `up` must be transitively closed and reflexive. Results are emitted through `emit`.
void enumerate_up_closed(const std::vector<Mask>& up, const std::function<void(Mask)>& emit);

/// Sorts masks by cardinality, then numerically.
void sort_by_size(std::vector<Mask>& masks);

/// Random poset on n points labelled x0, x1, ...: each pair i < j is an edge with probability `density`.
FinitePoset random_poset(std::size_t n, std::mt19937& rng, double density = 0.3);

}  // namespace serreloc
