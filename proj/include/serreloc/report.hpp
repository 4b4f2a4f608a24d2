#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "serreloc/io.hpp"
#include "serreloc/serre.hpp"

namespace serreloc {

/// Covering pairs (i, j) between positions in `frame.elements()`.
std::vector<std::pair<std::size_t, std::size_t>> frame_hasse(const Frame& frame);
std::string frame_dot(const std::string& graph_name, const Frame& frame);

Json lattice_report(const Fixture& fx);
Json primes_report(const Fixture& fx);
Json local_report(const Fixture& fx);
/// `kill` lists base labels generating the Serre subcategory to divide out.
/// Throws InvariantError if the interval certificate fails.
Json quotient_report(const Fixture& fx, const std::vector<std::string>& kill);
/// Throws ValidationError for fixtures without a functor.
Json pullback_json(const Fixture& fx);
/// Throws ValidationError for non-spectral fixtures.
Json topologies_report(const Fixture& fx, std::optional<IdealFlag> flag);
/// Specialisation order of the T0 quotient of `t`.
std::string topology_dot(const std::string& graph_name, const TopologySpace& t);

}  // namespace serreloc
