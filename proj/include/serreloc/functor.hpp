#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "serreloc/serre.hpp"

namespace serreloc {

enum class FunctorKind { Identity, Inclusion, Quotient, Composite };
std::string to_string(FunctorKind kind);

/// An exact functor between models, given by its effect on objects.
struct ExactFunctorModel {
  FunctorKind kind = FunctorKind::Identity;
  CategoryModel source;
  CategoryModel target;
  std::function<ModelObject(const ModelObject&)> object_map;

  ModelObject operator()(const ModelObject& a) const { return object_map(a); }
};

ExactFunctorModel identity_functor(const CategoryModel& model);
/// The inclusion of a semisimple exact subcategory into its ambient length model.
ExactFunctorModel inclusion_functor(const ExactSubModel& sub);
/// The localisation A -> A/S.
ExactFunctorModel quotient_functor(const CategoryModel& model, SerreSub s);
/// `second` after `first`. Throws ValidationError when the models do not match.
ExactFunctorModel compose(const ExactFunctorModel& first, const ExactFunctorModel& second);

/// Checks that zero goes to zero, every source generator lands in the target model, and
/// supports of sums of generators are unions of the images' supports. Throws ValidationError.
void validate(const ExactFunctorModel& f);

/// Ser(f)(t) = {A : fA in t}, determined by the generators of the source.
SerreSub ser_pullback(const ExactFunctorModel& f, SerreSub t);

struct JoinFailure {
  SerreSub left, right;
  std::string witness;  ///< a source object in the pullback of the join but of neither side's join
};

struct PullbackReport {
  bool preserves_order = false;
  bool preserves_meets = false;
  std::vector<JoinFailure> join_failures;
  std::vector<SerreSub> sp_failures;  ///< primes of the target whose pullback is not prime
};

PullbackReport pullback_report(const ExactFunctorModel& f);

struct ContinuityCertificate {
  bool basic_preimages = false;  ///< the preimage of [A] is [fA] for every finitely generated <A>
  bool zariski = false;          ///< preimages of Zariski opens are open
  bool ziegler = false;          ///< preimages of intersections of basics are the matching intersections
};

ContinuityCertificate continuity_check(const ExactFunctorModel& f);

/// The two counterexample functors, built on the A2 and central-sink A3 quivers.
ExactFunctorModel example_inclusion_functor();
ExactFunctorModel example_composite_functor();

}  // namespace serreloc
