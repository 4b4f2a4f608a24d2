#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "serreloc/poset.hpp"

namespace serreloc {

/// Largest point set accepted by the topology constructors.
inline constexpr std::size_t kMaxTopologyPoints = 20;

/// A finite topological space given by its full family of open sets.
class TopologySpace {
 public:
  /// Validates that `opens` contains the empty and full sets and is closed under unions and
  /// intersections. Throws ValidationError or SizeError.
  TopologySpace(std::vector<std::string> points, std::vector<Mask> opens);

  std::size_t size() const { return points_.size(); }
  const std::vector<std::string>& points() const { return points_; }
  const std::vector<Mask>& opens() const { return opens_; }
  Mask full() const { return full_mask(size()); }

  bool is_open(Mask m) const;
  bool is_closed(Mask m) const { return is_open(full() & ~m); }
  std::vector<Mask> closeds() const;

  /// Smallest open set containing point x.
  Mask neighbourhood(std::size_t x) const { return neighbourhood_[x]; }
  Mask closure(Mask m) const;
  Mask interior(Mask m) const;

  std::string format(Mask m) const;

 private:
  std::vector<std::string> points_;
  std::vector<Mask> opens_;  // sorted by size, then numerically
  std::vector<Mask> neighbourhood_;
};

/// Opens are the up-closed sets of the preorder.
TopologySpace alexandrov(const Preorder& order);

/// The coarsest topology containing `family`: finite intersections, then arbitrary unions.
TopologySpace topology_from_subbasis(std::vector<std::string> points, std::span<const Mask> family);

enum class TopologyOrder { Equal, StrictlyCoarser, StrictlyFiner, Incomparable };

std::string to_string(TopologyOrder order);

/// How `a` relates to `b`. Both must live on the same labelled point list.
TopologyOrder compare_topologies(const TopologySpace& a, const TopologySpace& b);

/// x <= y iff x lies in the closure of y.
Preorder specialisation(const TopologySpace& t);

struct T0Quotient {
  TopologySpace space;
  std::vector<std::size_t> class_of;  ///< quotient point of every original point
};

/// Identifies topologically indistinguishable points.
T0Quotient t0_quotient(const TopologySpace& t);

/// Non-empty closed sets that are not the union of two strictly smaller closed sets.
/// Throws SizeError when the closed-set family is too large to scan pairwise.
std::vector<Mask> irreducible_closeds(const TopologySpace& t);

/// A point whose closure is exactly `closed`, if any (lowest index first).
std::optional<std::size_t> generic_point(const TopologySpace& t, Mask closed);

/// Opens U != X such that V & W <= U implies V <= U or W <= U, over all opens V, W.
std::vector<Mask> prime_opens(const TopologySpace& t);

}  // namespace serreloc
