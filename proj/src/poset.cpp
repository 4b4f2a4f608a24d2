#include "serreloc/poset.hpp"

#include <algorithm>
#include <set>

#include "serreloc/errors.hpp"

namespace serreloc {

std::vector<std::size_t> members(Mask m) {
  std::vector<std::size_t> out;
  for_each_bit(m, [&](std::size_t i) { out.push_back(i); });
  return out;
}

namespace {

void check_labels(const std::vector<std::string>& labels) {
  if (labels.size() > kMaxCarrier) {
    throw SizeError("carrier has " + std::to_string(labels.size()) + " points; at most " +
                    std::to_string(kMaxCarrier) + " are supported");
  }
  std::set<std::string> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second) throw ValidationError("duplicate label '" + l + "'");
  }
}

std::vector<Mask> transpose(const std::vector<Mask>& up) {
  std::vector<Mask> down(up.size(), 0);
  for (std::size_t i = 0; i < up.size(); ++i) {
    for_each_bit(up[i], [&](std::size_t j) { down[j] |= bit(i); });
  }
  return down;
}

// Warshall closure on bit rows.
void close_transitively(std::vector<Mask>& up) {
  const std::size_t n = up.size();
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (up[i] & bit(k)) up[i] |= up[k];
    }
  }
}

}  // namespace

Preorder::Preorder(std::vector<std::string> labels, std::vector<Mask> up)
    : labels_(std::move(labels)), up_(std::move(up)) {
  check_labels(labels_);
  if (up_.size() != labels_.size()) throw ValidationError("relation size does not match labels");
  const Mask all = full();
  for (std::size_t i = 0; i < up_.size(); ++i) {
    if (!subset(up_[i], all)) throw ValidationError("relation refers to unknown point");
    up_[i] |= bit(i);
  }
  close_transitively(up_);
  down_ = transpose(up_);
}

std::optional<std::size_t> Preorder::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

Mask Preorder::up_closure(Mask m) const {
  Mask out = 0;
  for_each_bit(m, [&](std::size_t i) { out |= up_[i]; });
  return out;
}

Mask Preorder::down_closure(Mask m) const {
  Mask out = 0;
  for_each_bit(m, [&](std::size_t i) { out |= down_[i]; });
  return out;
}

bool Preorder::is_antisymmetric() const {
  for (std::size_t i = 0; i < size(); ++i) {
    if ((up_[i] & down_[i]) != bit(i)) return false;
  }
  return true;
}

std::vector<std::string> Preorder::sorted_labels(Mask m) const {
  std::vector<std::string> out;
  for_each_bit(m, [&](std::size_t i) { out.push_back(labels_[i]); });
  std::sort(out.begin(), out.end());
  return out;
}

std::string Preorder::format(Mask m) const {
  std::string s = "{";
  bool first = true;
  for (const auto& l : sorted_labels(m)) {
    if (!first) s += ',';
    s += l;
    first = false;
  }
  return s + "}";
}

FinitePoset FinitePoset::from_up_sets(std::vector<std::string> labels, std::vector<Mask> up) {
  FinitePoset p{Preorder(std::move(labels), std::move(up))};
  if (!p.is_antisymmetric()) throw ValidationError("relation is not antisymmetric (contains a cycle)");
  return p;
}

FinitePoset FinitePoset::from_covers(std::vector<std::string> labels,
                                     const std::vector<std::pair<std::size_t, std::size_t>>& covers) {
  check_labels(labels);
  std::vector<Mask> up(labels.size(), 0);
  for (auto [lo, hi] : covers) {
    if (lo >= labels.size() || hi >= labels.size()) throw ValidationError("cover refers to unknown element");
    up[lo] |= bit(hi);
  }
  return from_up_sets(std::move(labels), std::move(up));
}

FinitePoset FinitePoset::from_covers(std::vector<std::string> labels,
                                     const std::vector<std::pair<std::string, std::string>>& covers) {
  check_labels(labels);
  auto find = [&](const std::string& l) {
    auto it = std::find(labels.begin(), labels.end(), l);
    if (it == labels.end()) throw ValidationError("cover refers to unknown element '" + l + "'");
    return static_cast<std::size_t>(it - labels.begin());
  };
  std::vector<std::pair<std::size_t, std::size_t>> idx;
  for (const auto& [lo, hi] : covers) idx.emplace_back(find(lo), find(hi));
  return from_covers(std::move(labels), idx);
}

FinitePoset FinitePoset::antichain(std::vector<std::string> labels) {
  return from_covers(std::move(labels), std::vector<std::pair<std::size_t, std::size_t>>{});
}

FinitePoset FinitePoset::chain(std::vector<std::string> labels) {
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (std::size_t i = 1; i < labels.size(); ++i) covers.emplace_back(i - 1, i);
  return from_covers(std::move(labels), covers);
}

Mask FinitePoset::minimal(Mask m) const {
  Mask out = 0;
  for_each_bit(m, [&](std::size_t i) {
    if ((down_[i] & m) == bit(i)) out |= bit(i);
  });
  return out;
}

Mask FinitePoset::maximal(Mask m) const {
  Mask out = 0;
  for_each_bit(m, [&](std::size_t i) {
    if ((up_[i] & m) == bit(i)) out |= bit(i);
  });
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> FinitePoset::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < size(); ++i) {
    const Mask strictly_above = up_[i] & ~bit(i);
    for_each_bit(minimal(strictly_above), [&](std::size_t j) { out.emplace_back(i, j); });
  }
  return out;
}

FinitePoset FinitePoset::opposite() const {
  FinitePoset p;
  p.labels_ = labels_;
  p.up_ = down_;
  p.down_ = up_;
  return p;
}

FinitePoset FinitePoset::restrict(Mask keep, std::vector<std::size_t>* index_map) const {
  const auto idx = members(keep & full());
  std::vector<std::string> labels;
  std::vector<Mask> up(idx.size(), 0);
  for (std::size_t a = 0; a < idx.size(); ++a) {
    labels.push_back(labels_[idx[a]]);
    for (std::size_t b = 0; b < idx.size(); ++b) {
      if (leq(idx[a], idx[b])) up[a] |= bit(b);
    }
  }
  if (index_map) *index_map = idx;
  return from_up_sets(std::move(labels), std::move(up));
}

void enumerate_up_closed(const std::vector<Mask>& up, const std::function<void(Mask)>& emit) {
  const std::size_t n = up.size();
  const auto down = transpose(up);
  // Including i forces up[i]; excluding i forbids everything that requires i.
  std::function<void(std::size_t, Mask, Mask)> rec = [&](std::size_t i, Mask in, Mask out) {
    while (i < n && ((in | out) & bit(i))) ++i;
    if (i == n) {
      emit(in);
      return;
    }
    const Mask in2 = in | up[i];
    if ((in2 & out) == 0) rec(i + 1, in2, out);
    const Mask out2 = out | down[i];
    if ((out2 & in) == 0) rec(i + 1, in, out2);
  };
  rec(0, 0, 0);
}

void sort_by_size(std::vector<Mask>& masks) {
  std::sort(masks.begin(), masks.end(), [](Mask a, Mask b) {
    const int pa = popcount(a), pb = popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
}

FinitePoset random_poset(std::size_t n, std::mt19937& rng, double density) {
  std::bernoulli_distribution edge(density);
  std::vector<std::string> labels;
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back("x" + std::to_string(i));
    for (std::size_t j = 0; j < i; ++j) {
      if (edge(rng)) covers.emplace_back(j, i);
    }
  }
  return FinitePoset::from_covers(std::move(labels), covers);
}

}  // namespace serreloc
