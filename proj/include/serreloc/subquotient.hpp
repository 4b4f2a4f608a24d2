#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "serreloc/quiver.hpp"

namespace serreloc {

/// One subspace per vertex, each given by its canonical basis (columns).
using SubspaceTuple = std::vector<FpMatrix>;

std::vector<int> tuple_dims(const SubspaceTuple& t);
/// Whether `inner` is contained in `outer` vertexwise.
bool tuple_contained(const SubspaceTuple& inner, const SubspaceTuple& outer, int p);

/// Every arrow-stable subspace tuple of `x`, including 0 and `x`, by increasing total
/// dimension. Throws SizeError when `x` exceeds `dim_bound`.
std::vector<SubspaceTuple> subrepresentations(const Representation& x, int dim_bound = kDefaultDimBound);

/// The representation Y/Z for arrow-stable tuples Z <= Y of `x`.
Representation subquotient(const Representation& x, const SubspaceTuple& y, const SubspaceTuple& z);

/// Basis of Hom(m, n), one column per basis morphism, coordinates packed vertex by vertex.
FpMatrix hom_space(const Representation& m, const Representation& n);
int hom_dimension(const Representation& m, const Representation& n);

/// Vertexwise invertible morphism m -> n, if one exists. Searches the whole Hom space when
/// it has at most 2^18 elements, otherwise samples 2^18 elements with a fixed seed.
std::optional<std::vector<FpMatrix>> find_isomorphism(const Representation& m, const Representation& n);
bool isomorphic(const Representation& m, const Representation& n);

/// One representative per isomorphism class, in input order.
std::vector<Representation> isomorphism_classes(const std::vector<Representation>& reps);

/// Z <= Y <= X with Y/Z isomorphic to A; `iso[v]` maps Y/Z coordinates to A coordinates.
struct SubquotientWitness {
  SubspaceTuple sub;
  SubspaceTuple kernel;
  std::vector<FpMatrix> iso;
};

std::optional<SubquotientWitness> is_subquotient(const Representation& a, const Representation& x,
                                                 int dim_bound = kDefaultDimBound);

/// A = chain.front() >= ... >= chain.back() = 0, as subobjects of A; the factor between
/// positions i and i+1 is a subquotient of `gens[factor_generator[i]]`.
struct MembershipChain {
  std::vector<SubspaceTuple> chain;
  std::vector<std::size_t> factor_generator;
};

/// Membership of A in the Serre subcategory generated by `gens`, decided by searching for a
/// chain of subobjects whose factors are subquotients of generators.
std::optional<MembershipChain> serre_membership_chain(const Representation& a, const std::vector<Representation>& gens,
                                                      int dim_bound = kDefaultDimBound);

/// The same question answered by composition-factor supports.
bool serre_membership_support(const Representation& a, const std::vector<Representation>& gens);

/// A shared vertex simple when the supports meet, otherwise nothing.
std::optional<Representation> common_subquotient(const Representation& a, const Representation& b);

/// Whether A is a subquotient of B^n.
bool succeeds(const Representation& b, const Representation& a, int n, int dim_bound = kExtendedDimBound);
/// Whether succeeds(B, A, n) for every non-zero B in `objects`.
bool is_quasifinal(const Representation& a, const std::vector<Representation>& objects, int n,
                   int dim_bound = kExtendedDimBound);

}  // namespace serreloc
