#pragma once

#include <string>
#include <variant>
#include <vector>

#include "serreloc/poset.hpp"
#include "serreloc/quiver.hpp"

namespace serreloc {

/// Finite-dimensional representations of a bound quiver. Serre subcategories are encoded by
/// sets of vertices (the composition-factor supports they allow).
struct LengthModel {
  QuiverPtr quiver;
};

/// A finite poset standing for the prime spectrum of a commutative noetherian ring, ordered
/// by inclusion (generic points are small). Serre subcategories are its up-sets.
struct SpectralModel {
  FinitePoset spec;
};

/// A semisimple exact abelian subcategory of a length model, presented by its simple objects.
struct ExactSubModel {
  LengthModel ambient;
  std::vector<std::string> labels;
  std::vector<Representation> simples;

  /// Validates that each simple is non-zero with one-dimensional endomorphisms and that the
  /// simples are pairwise hom-orthogonal in the ambient category.
  static ExactSubModel make(LengthModel ambient, std::vector<std::string> labels, std::vector<Representation> simples);
};

using CategoryModel = std::variant<LengthModel, SpectralModel, ExactSubModel>;

/// Stands for a cyclic module R/I of a spectral model, with V(I) the up-closure of `generators`.
struct SpectralObject {
  Mask generators = 0;
  friend bool operator==(const SpectralObject&, const SpectralObject&) = default;
};

/// Direct sum of the declared simples of an exact-subcategory model.
struct SemisimpleObject {
  std::vector<int> multiplicity;
  friend bool operator==(const SemisimpleObject&, const SemisimpleObject&) = default;
};

using ModelObject = std::variant<Representation, SpectralObject, SemisimpleObject>;

std::string kind_name(const CategoryModel& model);

/// The poset whose up-sets are the Serre subcategories: the vertex antichain, the spectrum,
/// or the antichain of declared simples.
FinitePoset serre_base(const CategoryModel& model);

/// Element of the Serre lattice generated by a single object.
/// Throws ValidationError if the object does not belong to the model.
Mask object_support(const CategoryModel& model, const ModelObject& object);

/// One object per base point generating the corresponding principal Serre subcategory:
/// vertex simples, cyclic modules R/P, or the declared simples.
std::vector<ModelObject> generator_objects(const CategoryModel& model);

ModelObject zero_object(const CategoryModel& model);
ModelObject sum_objects(const CategoryModel& model, const ModelObject& a, const ModelObject& b);

/// An object generating the Serre subcategory `element`: the sum of the generators inside it.
ModelObject representative_object(const CategoryModel& model, Mask element);

/// The ambient representation underlying a semisimple object.
Representation realize(const ExactSubModel& model, const SemisimpleObject& object);

std::string describe(const CategoryModel& model, const ModelObject& object);

}  // namespace serreloc
