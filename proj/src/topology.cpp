#include "serreloc/topology.hpp"

#include <algorithm>

#include "serreloc/errors.hpp"

namespace serreloc {

namespace {

void check_points(const std::vector<std::string>& points) {
  if (points.size() > kMaxTopologyPoints) {
    throw SizeError("topology has " + std::to_string(points.size()) + " points; the limit is " +
                    std::to_string(kMaxTopologyPoints));
  }
}

std::vector<Mask> up_closed_family(const std::vector<Mask>& nbhd) {
  std::vector<Mask> out;
  enumerate_up_closed(nbhd, [&](Mask m) { out.push_back(m); });
  sort_by_size(out);
  return out;
}

constexpr std::size_t kMaxPairwiseClosed = 4096;

}  // namespace

TopologySpace::TopologySpace(std::vector<std::string> points, std::vector<Mask> opens)
    : points_(std::move(points)), opens_(std::move(opens)) {
  check_points(points_);
  Preorder(points_, std::vector<Mask>(points_.size(), 0));  // label checks
  sort_by_size(opens_);
  opens_.erase(std::unique(opens_.begin(), opens_.end()), opens_.end());
  const Mask all = full();
  for (Mask u : opens_) {
    if (!subset(u, all)) throw ValidationError("open set refers to unknown point");
  }
  if (opens_.empty() || opens_.front() != 0 || opens_.back() != all) {
    throw ValidationError("open family must contain the empty set and the whole space");
  }
  neighbourhood_.assign(size(), all);
  for (Mask u : opens_) {
    for_each_bit(u, [&](std::size_t x) { neighbourhood_[x] &= u; });
  }
  // A family closed under unions and finite intersections is exactly the family of sets
  // that contain the minimal neighbourhood of each of their points.
  for (std::size_t x = 0; x < size(); ++x) {
    for_each_bit(neighbourhood_[x], [&](std::size_t y) {
      if (!subset(neighbourhood_[y], neighbourhood_[x])) {
        throw ValidationError("open family is not closed under finite intersections");
      }
    });
  }
  if (up_closed_family(neighbourhood_) != opens_) {
    throw ValidationError("open family is not closed under unions and finite intersections");
  }
}

bool TopologySpace::is_open(Mask m) const {
  if (!subset(m, full())) return false;
  Mask need = 0;
  for_each_bit(m, [&](std::size_t x) { need |= neighbourhood_[x]; });
  return need == m;
}

std::vector<Mask> TopologySpace::closeds() const {
  std::vector<Mask> out;
  out.reserve(opens_.size());
  for (Mask u : opens_) out.push_back(full() & ~u);
  sort_by_size(out);
  return out;
}

Mask TopologySpace::closure(Mask m) const {
  Mask out = 0;
  for (std::size_t x = 0; x < size(); ++x) {
    if (neighbourhood_[x] & m) out |= bit(x);
  }
  return out;
}

Mask TopologySpace::interior(Mask m) const {
  Mask out = 0;
  for (std::size_t x = 0; x < size(); ++x) {
    if (subset(neighbourhood_[x], m)) out |= bit(x);
  }
  return out;
}

std::string TopologySpace::format(Mask m) const {
  std::vector<std::string> labels;
  for_each_bit(m, [&](std::size_t i) { labels.push_back(points_[i]); });
  std::sort(labels.begin(), labels.end());
  std::string s = "{";
  for (std::size_t i = 0; i < labels.size(); ++i) s += (i ? "," : "") + labels[i];
  return s + "}";
}

TopologySpace alexandrov(const Preorder& order) {
  check_points(order.labels());
  std::vector<Mask> ups(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) ups[i] = order.up(i);
  return TopologySpace(order.labels(), up_closed_family(ups));
}

TopologySpace topology_from_subbasis(std::vector<std::string> points, std::span<const Mask> family) {
  check_points(points);
  const Mask all = full_mask(points.size());
  for (Mask s : family) {
    if (!subset(s, all)) throw ValidationError("subbasis member refers to unknown point");
  }
  // Basis element at x: intersection of the subbasis members containing x (the empty
  // intersection is the whole space). Unions of these are the generated opens.
  std::vector<Mask> nbhd(points.size(), all);
  for (Mask s : family) {
    for_each_bit(s, [&](std::size_t x) { nbhd[x] &= s; });
  }
  return TopologySpace(std::move(points), up_closed_family(nbhd));
}

std::string to_string(TopologyOrder order) {
  switch (order) {
    case TopologyOrder::Equal: return "Equal";
    case TopologyOrder::StrictlyCoarser: return "StrictlyCoarser";
    case TopologyOrder::StrictlyFiner: return "StrictlyFiner";
    case TopologyOrder::Incomparable: return "Incomparable";
  }
  return "?";
}

TopologyOrder compare_topologies(const TopologySpace& a, const TopologySpace& b) {
  if (a.points() != b.points()) throw ValidationError("topologies live on different labelled point sets");
  auto contained = [](const TopologySpace& s, const TopologySpace& t) {
    return std::all_of(s.opens().begin(), s.opens().end(), [&](Mask u) { return t.is_open(u); });
  };
  const bool a_in_b = contained(a, b);
  const bool b_in_a = contained(b, a);
  if (a_in_b && b_in_a) return TopologyOrder::Equal;
  if (a_in_b) return TopologyOrder::StrictlyCoarser;
  if (b_in_a) return TopologyOrder::StrictlyFiner;
  return TopologyOrder::Incomparable;
}

Preorder specialisation(const TopologySpace& t) {
  // x in cl(y) iff every open around x contains y.
  std::vector<Mask> up(t.size());
  for (std::size_t x = 0; x < t.size(); ++x) up[x] = t.neighbourhood(x);
  return Preorder(t.points(), std::move(up));
}

T0Quotient t0_quotient(const TopologySpace& t) {
  std::vector<std::size_t> class_of(t.size());
  std::vector<Mask> classes;
  for (std::size_t x = 0; x < t.size(); ++x) {
    bool found = false;
    for (std::size_t c = 0; c < classes.size(); ++c) {
      const auto rep = members(classes[c]).front();
      if (t.neighbourhood(rep) == t.neighbourhood(x)) {
        classes[c] |= bit(x);
        class_of[x] = c;
        found = true;
        break;
      }
    }
    if (!found) {
      class_of[x] = classes.size();
      classes.push_back(bit(x));
    }
  }
  std::vector<std::string> labels;
  for (Mask c : classes) labels.push_back(popcount(c) == 1 ? t.points()[members(c).front()] : t.format(c));
  std::vector<Mask> opens;
  for (Mask u : t.opens()) {
    Mask img = 0;
    for_each_bit(u, [&](std::size_t x) { img |= bit(class_of[x]); });
    opens.push_back(img);
  }
  return {TopologySpace(std::move(labels), std::move(opens)), std::move(class_of)};
}

std::vector<Mask> irreducible_closeds(const TopologySpace& t) {
  const auto closed = t.closeds();
  if (closed.size() > kMaxPairwiseClosed) {
    throw SizeError("too many closed sets for a pairwise irreducibility scan");
  }
  std::vector<Mask> out;
  for (Mask c : closed) {
    if (c == 0) continue;
    std::vector<Mask> smaller;
    for (Mask d : closed) {
      if (d != c && subset(d, c)) smaller.push_back(d);
    }
    bool reducible = false;
    for (std::size_t i = 0; i < smaller.size() && !reducible; ++i) {
      for (std::size_t j = i; j < smaller.size(); ++j) {
        if ((smaller[i] | smaller[j]) == c) {
          reducible = true;
          break;
        }
      }
    }
    if (!reducible) out.push_back(c);
  }
  return out;
}

std::optional<std::size_t> generic_point(const TopologySpace& t, Mask closed) {
  for (std::size_t x = 0; x < t.size(); ++x) {
    if (t.closure(bit(x)) == closed) return x;
  }
  return std::nullopt;
}

std::vector<Mask> prime_opens(const TopologySpace& t) {
  std::vector<Mask> out;
  const auto& opens = t.opens();
  for (Mask u : opens) {
    if (u == t.full()) continue;
    bool prime = true;
    for (std::size_t i = 0; i < opens.size() && prime; ++i) {
      for (std::size_t j = i; j < opens.size(); ++j) {
        if (subset(opens[i] & opens[j], u) && !subset(opens[i], u) && !subset(opens[j], u)) {
          prime = false;
          break;
        }
      }
    }
    if (prime) out.push_back(u);
  }
  return out;
}

}  // namespace serreloc
