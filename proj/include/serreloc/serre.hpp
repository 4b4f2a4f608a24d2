#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "serreloc/frame.hpp"
#include "serreloc/model.hpp"
#include "serreloc/topology.hpp"

namespace serreloc {

/// A Serre subcategory, as an element of `serre_lattice(model)` (an up-set of the base).
struct SerreSub {
  Mask element = 0;
  friend bool operator==(const SerreSub&, const SerreSub&) = default;
  friend auto operator<=>(const SerreSub&, const SerreSub&) = default;
};

/// Ser(A) together with the model it was built from.
class SerreLattice {
 public:
  explicit SerreLattice(CategoryModel model);

  const CategoryModel& model() const { return model_; }
  const Frame& frame() const { return frame_; }
  /// Throws ValidationError unless `s` is an element of the lattice.
  void check(SerreSub s) const;
  /// Sorted labels of the vertices, primes, or declared simples allowed by `s`.
  std::vector<std::string> decode(SerreSub s) const;
  std::string format(SerreSub s) const { return frame_.format(s.element); }
  std::vector<SerreSub> elements() const;

 private:
  CategoryModel model_;
  Frame frame_;
};

SerreLattice serre_lattice(const CategoryModel& model);

/// The least Serre subcategory containing every object.
SerreSub serre_generated(const CategoryModel& model, const std::vector<ModelObject>& objects);

struct SpResult {
  std::vector<SerreSub> primes;
  /// Spectral models only: `point_prime[x]` is S_x = spec minus the down-closure of x.
  std::vector<SerreSub> point_prime;
  /// Spectral models only: x <= y iff S_x contains S_y, for every pair.
  std::optional<bool> order_reversing;
};

/// The prime Serre subcategories. Throws InvariantError if a spectral model's primes are
/// not exactly the sets S_x.
SpResult sp(const CategoryModel& model);

struct NotLocal {
  std::optional<std::pair<SerreSub, SerreSub>> witness;
};
struct LocalCase1 {
  std::string simple;
  SerreSub minimal_serre;
};
struct LocalCase2 {
  SerreSub minimal_serre;
};
/// No minimal non-zero Serre subcategory. Finite models never produce it.
struct LocalCase3 {};
using LocalityVerdict = std::variant<NotLocal, LocalCase1, LocalCase2, LocalCase3>;

std::string verdict_name(const LocalityVerdict& v);
LocalityVerdict classify_local(const CategoryModel& model);

struct QuotientModel {
  CategoryModel model;
  SerreSub killed;
  /// Base point of the original model for every base point of the quotient.
  std::vector<std::size_t> base_index;
  /// Sends a Serre subcategory of the quotient to its preimage in the original lattice.
  SerreSub embed(SerreSub q) const;
};

QuotientModel quotient_model(const CategoryModel& model, SerreSub s);

struct QuotientCertificate {
  bool interval_isomorphism = false;     ///< embedding is an order isomorphism onto [s, top]
  bool zariski_topologies_agree = false;  ///< induced topology on [s, top] equals the quotient's
};

QuotientCertificate certify_quotient(const CategoryModel& model, SerreSub s);

/// The frame of up-sets of Ser(A), whose basic opens are the up-intervals above elements.
struct ZariskiLocale {
  FinitePoset ser_poset;  ///< one point per element of Ser(A), in frame order
  Frame frame;
  std::vector<Mask> ser_elements;  ///< Serre subcategory standing for each point
  Mask basic_open(SerreSub s) const;
};

/// Throws SizeError when Ser(A) has more than `kMaxFrameBase` elements.
ZariskiLocale zariski_locale(const CategoryModel& model);
Mask basic_open(const ZariskiLocale& locale, const CategoryModel& model, const ModelObject& object);

struct SerreLocalCheck {
  bool join_below = false;          ///< the join of everything strictly below <A> is smaller
  bool unique_maximal_avoiding = false;
  std::optional<bool> zariski_prime;  ///< present when the Zariski locale fits the size guard
  std::optional<bool> chain_test;     ///< length models: via chains of subobjects
  bool local() const { return join_below; }
};

/// Every available characterization of Serre-locality; throws InvariantError if they differ.
SerreLocalCheck serre_local_check(const CategoryModel& model, const ModelObject& object,
                                  int dim_bound = kDefaultDimBound);
bool is_serre_local(const CategoryModel& model, const ModelObject& object);
/// Elements <A> of Ser(A) generated by a Serre-local object.
std::vector<SerreSub> serre_local_basics(const CategoryModel& model);

/// The join of all Serre subcategories strictly below <A>.
SerreSub serre_below(const CategoryModel& model, const ModelObject& object);

struct SSimpleCheck {
  bool by_support = false;
  bool by_enumeration = false;
};

/// Length models only. Throws PreconditionError for other models.
SSimpleCheck s_simple_check(const CategoryModel& model, const Representation& a, SerreSub s,
                            int dim_bound = kDefaultDimBound);
/// Throws InvariantError when the two criteria disagree.
bool is_s_simple(const CategoryModel& model, const Representation& a, SerreSub s, int dim_bound = kDefaultDimBound);
bool is_quasisimple(const CategoryModel& model, const Representation& a, int dim_bound = kDefaultDimBound);
/// The Serre subcategories maximal among those not containing A, each checked to be prime.
std::vector<SerreSub> maximal_avoiding(const CategoryModel& model, const ModelObject& object);
/// Whether nothing lies strictly between s and <A, s>. Requires A to be s-simple.
bool no_intermediate_check(const CategoryModel& model, const Representation& a, SerreSub s,
                           int dim_bound = kDefaultDimBound);

/// For each spec point x: the prime open of the Ziegler topology (up-sets) and of the Zariski
/// topology (down-sets) whose closed complement has x as generic point.
struct PrimePairing {
  std::size_t point = 0;
  Mask ziegler_prime = 0;
  Mask zariski_prime = 0;
};

struct ZieglerZariskiPrimes {
  std::vector<PrimePairing> pairs;
  bool certified = false;
};

ZieglerZariskiPrimes ziegler_zariski_primes(const SpectralModel& model);

}  // namespace serreloc
