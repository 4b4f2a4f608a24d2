#pragma once

#include <optional>
#include <string>
#include <vector>

#include "serreloc/frame.hpp"
#include "serreloc/topology.hpp"

namespace serreloc {

/// Which ideals may appear in V(I): all of them, the pp-definable ones, or the finitely
/// generated ones.
enum class IdealFlag { All, PP, FG };
std::string to_string(IdealFlag flag);
/// Accepts "ALL", "PP" or "FG". Throws ValidationError otherwise.
IdealFlag parse_flag(const std::string& text);

/// A finite poset of primes (smaller = more generic) with families of closed sets V(I).
/// Every family contains the empty set and the whole spectrum; FG <= PP <= ALL.
class SpectralPoset {
 public:
  /// `fg` and `pp` list up-sets. A missing FG family means every up-set; a missing PP family
  /// copies FG. Throws ValidationError on non-up-sets or when FG is not inside PP.
  explicit SpectralPoset(FinitePoset spec, std::optional<std::vector<Mask>> fg = std::nullopt,
                         std::optional<std::vector<Mask>> pp = std::nullopt);

  const FinitePoset& spec() const { return spec_; }
  const std::vector<Mask>& family(IdealFlag flag) const;
  bool has_full_families() const;

 private:
  FinitePoset spec_;
  std::vector<Mask> all_, pp_, fg_;
};

struct ClosedSet {
  Mask v = 0;  ///< V(I), the up-closure of the generators
  Mask d = 0;  ///< D(I), its complement
  bool normalized = false;  ///< generators were not an antichain and were reduced to minimal ones
};

/// Throws ValidationError when `gens` leaves the spectrum.
ClosedSet v_of(const SpectralPoset& sp, Mask gens);
Mask d_of(const SpectralPoset& sp, Mask gens);

/// A hereditary torsion theory, recorded through the supports of its torsion modules.
struct TorsionTheoryModel {
  Mask torsion_supports = 0;  ///< up-set Y
  Mask cogenerating = 0;      ///< down-set X of primes P with E(R/P) torsion-free
  std::vector<Mask> gabriel_filter;  ///< up-sets V(I) contained in Y
};

/// Throws ValidationError unless `x` is a down-set.
TorsionTheoryModel torsion_from_x(const SpectralPoset& sp, Mask x);
/// Throws ValidationError unless `y` is an up-set.
TorsionTheoryModel torsion_from_supports(const SpectralPoset& sp, Mask y);
/// The intersection of D(I) over the Gabriel filter.
Mask d_tau(const SpectralPoset& sp, const TorsionTheoryModel& tau);

struct PrimeBijection {
  std::vector<Mask> prime_of_point;  ///< S_P = spec minus the down-closure of P
  bool all_prime = false;            ///< each S_P is prime in the up-set frame
  bool exhaustive = false;           ///< no other primes exist
  bool order_reversing = false;
  bool certified() const { return all_prime && exhaustive && order_reversing; }
};

PrimeBijection prime_bijection(const SpectralPoset& sp);

/// Points E(R/P) with the up-sets as opens.
TopologySpace ziegler_space(const SpectralPoset& sp);

struct GenericPointReport {
  bool irreducibles_have_generic_points = false;
  bool primes_match_points_opposite = false;  ///< Sp is the opposite of the T0 specialisation order
};

GenericPointReport generic_point_check(const SpectralPoset& sp);

struct IsolatedPointReport {
  std::size_t point = 0;
  bool isolated = false;          ///< {N} is open
  bool open_of_simple = false;    ///< the open set of the simple R/m is {N}
  bool dense = false;             ///< the closure of N is everything
};

/// Requires a unique maximal prime; throws PreconditionError otherwise.
IsolatedPointReport local_isolated_point_check(const SpectralPoset& sp);

/// Opens generated by the family members V(I).
TopologySpace ziegler_type_topology(const SpectralPoset& sp, IdealFlag flag);
/// Opens generated by the complements D(I) of family members.
TopologySpace zariski_type_topology(const SpectralPoset& sp, IdealFlag flag);
/// Every V(I) of the family is open for the Ziegler type and closed for the Zariski type,
/// and every D(I) the reverse.
bool topologies_dual(const SpectralPoset& sp, IdealFlag flag);

struct ThomasonBijection {
  std::vector<Mask> finite_type;  ///< torsion supports that are unions of FG members
  std::vector<Mask> opens;        ///< opens of the topology generated by FG members
  bool certified = false;
};

ThomasonBijection thomason_bijection(const SpectralPoset& sp);

struct SpectrumCorrespondence {
  std::size_t primes = 0;
  std::size_t points = 0;
  bool bijection = false;
  bool ziegler_types_equal = false;
  bool zariski_types_equal = false;
  bool ziegler_is_alexandrov = false;
  bool certified() const {
    return primes == points && bijection && ziegler_types_equal && zariski_types_equal && ziegler_is_alexandrov;
  }
};

/// Requires full ideal families; throws PreconditionError otherwise.
SpectrumCorrespondence spectrum_correspondence_check(const SpectralPoset& sp);

}  // namespace serreloc
