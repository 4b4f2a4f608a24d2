#pragma once

#include <memory>
#include <string>
#include <vector>

#include "serreloc/poset.hpp"
#include "serreloc/quiver.hpp"

namespace serreloc::testing {

inline FinitePoset chain2() { return FinitePoset::chain({"g", "m"}); }

/// Generic point below n incomparable closed points.
inline FinitePoset fan(int n) {
  std::vector<std::string> labels{"g"};
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (int i = 1; i <= n; ++i) {
    labels.push_back("p" + std::to_string(i));
    covers.emplace_back(0, static_cast<std::size_t>(i));
  }
  return FinitePoset::from_covers(labels, covers);
}

inline FinitePoset fan3() { return fan(3); }

inline FinitePoset diamond() {
  return FinitePoset::from_covers({"g", "p1", "p2", "m"},
                                  std::vector<std::pair<std::string, std::string>>{
                                      {"g", "p1"}, {"g", "p2"}, {"p1", "m"}, {"p2", "m"}});
}

inline FinitePoset antichain2() { return FinitePoset::antichain({"a", "b"}); }

/// 1 --a--> 2
inline QuiverPtr a2_quiver(int p = 2) {
  return std::make_shared<BoundQuiver>(std::vector<std::string>{"1", "2"}, std::vector<Arrow>{{"a", 0, 1}},
                                       std::vector<Relation>{}, p);
}

/// 1 --a--> 0 <--b-- 2
inline QuiverPtr a3_sink_quiver(int p = 2) {
  return std::make_shared<BoundQuiver>(std::vector<std::string>{"0", "1", "2"},
                                       std::vector<Arrow>{{"a", 1, 0}, {"b", 2, 0}}, std::vector<Relation>{}, p);
}

inline FpMatrix mat(int rows, int cols, std::initializer_list<int> entries) {
  FpMatrix m(rows, cols);
  auto it = entries.begin();
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) m(r, c) = *it++;
  }
  return m;
}

/// Projective cover of S_1 over the A2 quiver: k --1--> k.
inline Representation a2_p1(const QuiverPtr& q) { return make_representation(q, {1, 1}, {mat(1, 1, {1})}); }

/// P_1 and P_2 over the central-sink A3 quiver (vertex order 0, 1, 2).
inline Representation a3_p1(const QuiverPtr& q) {
  return make_representation(q, {1, 1, 0}, {mat(1, 1, {1}), FpMatrix(1, 0)});
}
inline Representation a3_p2(const QuiverPtr& q) {
  return make_representation(q, {1, 0, 1}, {FpMatrix(1, 0), mat(1, 1, {1})});
}

/// Every poset fixture used across the suites.
inline std::vector<FinitePoset> poset_fixtures() {
  return {FinitePoset::antichain({}), FinitePoset::antichain({"x"}), chain2(), fan3(), diamond(), antichain2(),
          FinitePoset::chain({"a", "b", "c", "d"}), fan(4)};
}

}  // namespace serreloc::testing
