#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "serreloc/poset.hpp"

namespace serreloc {

/// Largest base poset accepted by `upset_frame` (the frame then has at most 2^20 elements).
inline constexpr std::size_t kMaxFrameBase = 20;

/// A finite frame (complete Heyting algebra), realized as the up-sets of its base poset.
///
/// Elements are `Mask`s over the base; meet is intersection and join is union. The element
/// list is sorted by cardinality and then numerically, so bottom comes first and top last.
class Frame {
 public:
  Frame() : Frame(FinitePoset::antichain({})) {}
  explicit Frame(FinitePoset base);

  const FinitePoset& base() const { return base_; }
  std::span<const Mask> elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }

  Mask top() const { return base_.full(); }
  Mask bottom() const { return 0; }

  bool contains(Mask a) const { return index_.contains(a); }
  /// Position of `a` in `elements()`. Throws ValidationError for non-members.
  std::size_t index_of(Mask a) const;

  bool leq(Mask a, Mask b) const { return subset(a, b); }
  Mask meet(Mask a, Mask b) const { return a & b; }
  Mask join(Mask a, Mask b) const { return a | b; }
  Mask meet_all(std::span<const Mask> xs) const;
  Mask join_all(std::span<const Mask> xs) const;

  /// Heyting implication: the largest c with a & c <= b.
  Mask implies(Mask a, Mask b) const;

  std::vector<Mask> upper_covers(Mask a) const;
  std::vector<Mask> lower_covers(Mask a) const;

  std::string format(Mask a) const { return base_.format(a); }

 private:
  FinitePoset base_;
  std::vector<Mask> elements_;
  std::unordered_map<Mask, std::size_t> index_;
};

/// The frame of all up-sets of `poset`. Throws SizeError above `kMaxFrameBase` points.
Frame upset_frame(const FinitePoset& poset);

/// The three equivalent descriptions of a prime element, computed separately.
struct PrimeCheck {
  bool prime = false;             ///< b & c <= a implies b <= a or c <= a (and a != top)
  bool meet_irreducible = false;  ///< a = b & c implies a = b or a = c (and a != top)
  bool point = false;             ///< b |-> (b not<= a) is a frame map onto the 2-element frame
};

/// Brute-force primality test over all pairs of elements. Top is never prime.
/// Throws InvariantError if the three characterizations disagree.
PrimeCheck prime_check(const Frame& frame, Mask a);
bool is_prime(const Frame& frame, Mask a);

/// All prime elements, via the unique-upper-cover criterion for meet-irreducibility.
std::vector<Mask> primes(const Frame& frame);

/// A point of the locale, presented by its principal prime ideal {b : b <= generator}.
struct FramePoint {
  Mask generator = 0;
  friend bool operator==(const FramePoint&, const FramePoint&) = default;
};

std::vector<FramePoint> points(const Frame& frame);
/// The completely prime filter {b : b not<= p.generator} of a point.
std::vector<Mask> point_filter(const Frame& frame, const FramePoint& p);

/// A map between frames given on every source element.
class FrameMap {
 public:
  FrameMap(const Frame& source, const Frame& target, std::vector<Mask> assignment);

  Mask operator()(Mask a) const { return assignment_[source_->index_of(a)]; }

  bool preserves_order() const;
  bool preserves_finite_meets() const;
  /// Arbitrary joins reduce to the empty join and binary joins in a finite frame.
  bool preserves_joins() const;
  bool is_frame_morphism() const { return preserves_finite_meets() && preserves_joins(); }
  bool is_bijective() const;

 private:
  const Frame* source_;
  const Frame* target_;
  std::vector<Mask> assignment_;
};

/// Join-irreducible elements of a frame as a poset, ordered by reverse inclusion so that
/// `upset_frame(dual.poset)` is isomorphic to the frame again.
struct BirkhoffDual {
  FinitePoset poset;
  std::vector<Mask> join_irreducibles;  ///< frame element standing for each poset point
};

BirkhoffDual birkhoff_poset(const Frame& frame);

/// The explicit isomorphism frame -> upset_frame(dual.poset): a |-> {j : j <= a}.
std::vector<Mask> birkhoff_isomorphism(const Frame& frame, const BirkhoffDual& dual);

}  // namespace serreloc
