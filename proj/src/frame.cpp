#include "serreloc/frame.hpp"

#include <algorithm>

#include "serreloc/errors.hpp"

namespace serreloc {

Frame::Frame(FinitePoset base) : base_(std::move(base)) {
  if (base_.size() > kMaxFrameBase) {
    throw SizeError("frame base has " + std::to_string(base_.size()) + " points; the limit is " +
                    std::to_string(kMaxFrameBase) + " (2^20 elements)");
  }
  std::vector<Mask> ups(base_.size());
  for (std::size_t i = 0; i < base_.size(); ++i) ups[i] = base_.up(i);
  enumerate_up_closed(ups, [&](Mask m) { elements_.push_back(m); });
  sort_by_size(elements_);
  index_.reserve(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], i);
}

std::size_t Frame::index_of(Mask a) const {
  auto it = index_.find(a);
  if (it == index_.end()) throw ValidationError(format(a) + " is not an element of the frame");
  return it->second;
}

Mask Frame::meet_all(std::span<const Mask> xs) const {
  Mask out = top();
  for (Mask x : xs) out &= x;
  return out;
}

Mask Frame::join_all(std::span<const Mask> xs) const {
  Mask out = bottom();
  for (Mask x : xs) out |= x;
  return out;
}

Mask Frame::implies(Mask a, Mask b) const {
  // Interior of the set-theoretic implication.
  const Mask allowed = (~a | b) & top();
  Mask out = 0;
  for (std::size_t x = 0; x < base_.size(); ++x) {
    if (subset(base_.up(x), allowed)) out |= bit(x);
  }
  return out;
}

std::vector<Mask> Frame::upper_covers(Mask a) const {
  std::vector<Mask> out;
  for_each_bit(base_.maximal(top() & ~a), [&](std::size_t x) { out.push_back(a | bit(x)); });
  return out;
}

std::vector<Mask> Frame::lower_covers(Mask a) const {
  std::vector<Mask> out;
  for_each_bit(base_.minimal(a), [&](std::size_t x) { out.push_back(a & ~bit(x)); });
  return out;
}

Frame upset_frame(const FinitePoset& poset) { return Frame(poset); }

PrimeCheck prime_check(const Frame& frame, Mask a) {
  frame.index_of(a);
  PrimeCheck r;
  if (a == frame.top()) return r;
  const auto els = frame.elements();

  r.prime = true;
  r.meet_irreducible = true;
  for (Mask b : els) {
    for (Mask c : els) {
      const Mask m = frame.meet(b, c);
      if (frame.leq(m, a) && !frame.leq(b, a) && !frame.leq(c, a)) r.prime = false;
      if (m == a && b != a && c != a) r.meet_irreducible = false;
    }
  }

  const Frame two(FinitePoset::antichain({"*"}));
  std::vector<Mask> chi;
  chi.reserve(els.size());
  for (Mask b : els) chi.push_back(frame.leq(b, a) ? two.bottom() : two.top());
  r.point = FrameMap(frame, two, std::move(chi)).is_frame_morphism();

  if (r.prime != r.meet_irreducible || r.prime != r.point) {
    throw InvariantError("prime characterizations disagree at " + frame.format(a));
  }
  return r;
}

bool is_prime(const Frame& frame, Mask a) { return prime_check(frame, a).prime; }

std::vector<Mask> primes(const Frame& frame) {
  std::vector<Mask> out;
  for (Mask a : frame.elements()) {
    if (a != frame.top() && frame.upper_covers(a).size() == 1) out.push_back(a);
  }
  return out;
}

std::vector<FramePoint> points(const Frame& frame) {
  std::vector<FramePoint> out;
  for (Mask p : primes(frame)) out.push_back({p});
  return out;
}

std::vector<Mask> point_filter(const Frame& frame, const FramePoint& p) {
  std::vector<Mask> out;
  for (Mask b : frame.elements()) {
    if (!frame.leq(b, p.generator)) out.push_back(b);
  }
  return out;
}

FrameMap::FrameMap(const Frame& source, const Frame& target, std::vector<Mask> assignment)
    : source_(&source), target_(&target), assignment_(std::move(assignment)) {
  if (assignment_.size() != source.size()) throw ValidationError("frame map must assign every element");
  for (Mask m : assignment_) target.index_of(m);
}

bool FrameMap::preserves_order() const {
  const auto els = source_->elements();
  for (std::size_t i = 0; i < els.size(); ++i) {
    for (std::size_t j = 0; j < els.size(); ++j) {
      if (subset(els[i], els[j]) && !subset(assignment_[i], assignment_[j])) return false;
    }
  }
  return true;
}

bool FrameMap::preserves_finite_meets() const {
  if ((*this)(source_->top()) != target_->top()) return false;
  const auto els = source_->elements();
  for (std::size_t i = 0; i < els.size(); ++i) {
    for (std::size_t j = i + 1; j < els.size(); ++j) {
      if ((*this)(els[i] & els[j]) != (assignment_[i] & assignment_[j])) return false;
    }
  }
  return true;
}

bool FrameMap::preserves_joins() const {
  if ((*this)(source_->bottom()) != target_->bottom()) return false;
  const auto els = source_->elements();
  for (std::size_t i = 0; i < els.size(); ++i) {
    for (std::size_t j = i + 1; j < els.size(); ++j) {
      if ((*this)(els[i] | els[j]) != (assignment_[i] | assignment_[j])) return false;
    }
  }
  return true;
}

bool FrameMap::is_bijective() const {
  if (source_->size() != target_->size()) return false;
  std::vector<Mask> sorted = assignment_;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

BirkhoffDual birkhoff_poset(const Frame& frame) {
  BirkhoffDual dual;
  for (Mask a : frame.elements()) {
    if (a != frame.bottom() && frame.lower_covers(a).size() == 1) dual.join_irreducibles.push_back(a);
  }
  const auto& js = dual.join_irreducibles;
  std::vector<std::string> labels;
  std::vector<Mask> up(js.size(), 0);
  for (std::size_t i = 0; i < js.size(); ++i) {
    // A join-irreducible up-set is principal; name it after its generator.
    const Mask gen = frame.base().minimal(js[i]);
    labels.push_back(popcount(gen) == 1 ? frame.base().label(members(gen).front()) : frame.format(js[i]));
    for (std::size_t k = 0; k < js.size(); ++k) {
      if (subset(js[k], js[i])) up[i] |= bit(k);
    }
  }
  dual.poset = FinitePoset::from_up_sets(std::move(labels), std::move(up));
  return dual;
}

std::vector<Mask> birkhoff_isomorphism(const Frame& frame, const BirkhoffDual& dual) {
  std::vector<Mask> out;
  out.reserve(frame.size());
  for (Mask a : frame.elements()) {
    Mask img = 0;
    for (std::size_t k = 0; k < dual.join_irreducibles.size(); ++k) {
      if (subset(dual.join_irreducibles[k], a)) img |= bit(k);
    }
    out.push_back(img);
  }
  return out;
}

}  // namespace serreloc
