#include "serreloc/model.hpp"

#include <sstream>

#include "serreloc/errors.hpp"
#include "serreloc/subquotient.hpp"

namespace serreloc {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

[[noreturn]] void wrong_object(const CategoryModel& model) {
  throw ValidationError("object does not belong to a " + kind_name(model) + " model");
}

}  // namespace

ExactSubModel ExactSubModel::make(LengthModel ambient, std::vector<std::string> labels,
                                  std::vector<Representation> simples) {
  if (labels.size() != simples.size()) throw ValidationError("one label per declared simple is required");
  for (std::size_t i = 0; i < simples.size(); ++i) {
    if (simples[i].quiver_ptr() != ambient.quiver && !(simples[i].quiver() == *ambient.quiver)) {
      throw ValidationError("declared simple '" + labels[i] + "' lives over another quiver");
    }
    if (simples[i].is_zero()) throw ValidationError("declared simple '" + labels[i] + "' is zero");
    if (!validate(simples[i])) throw ValidationError("declared simple '" + labels[i] + "' violates a relation");
    if (hom_dimension(simples[i], simples[i]) != 1) {
      throw ValidationError("declared simple '" + labels[i] + "' has endomorphisms beyond the field");
    }
    for (std::size_t j = 0; j < simples.size(); ++j) {
      if (i != j && hom_dimension(simples[i], simples[j]) != 0) {
        throw ValidationError("declared simples '" + labels[i] + "' and '" + labels[j] + "' are not hom-orthogonal");
      }
    }
  }
  FinitePoset::antichain(labels);  // label uniqueness
  return ExactSubModel{std::move(ambient), std::move(labels), std::move(simples)};
}

std::string kind_name(const CategoryModel& model) {
  return std::visit(overloaded{[](const LengthModel&) { return std::string("length"); },
                               [](const SpectralModel&) { return std::string("spectral"); },
                               [](const ExactSubModel&) { return std::string("exactsub"); }},
                    model);
}

FinitePoset serre_base(const CategoryModel& model) {
  return std::visit(overloaded{[](const LengthModel& m) { return FinitePoset::antichain(m.quiver->vertices()); },
                               [](const SpectralModel& m) { return m.spec; },
                               [](const ExactSubModel& m) { return FinitePoset::antichain(m.labels); }},
                    model);
}

Mask object_support(const CategoryModel& model, const ModelObject& object) {
  if (const auto* m = std::get_if<LengthModel>(&model)) {
    const auto* rep = std::get_if<Representation>(&object);
    if (!rep || (rep->quiver_ptr() != m->quiver && !(rep->quiver() == *m->quiver))) wrong_object(model);
    return rep->support();
  }
  if (const auto* m = std::get_if<SpectralModel>(&model)) {
    const auto* obj = std::get_if<SpectralObject>(&object);
    if (!obj || !subset(obj->generators, m->spec.full())) wrong_object(model);
    return m->spec.up_closure(obj->generators);
  }
  const auto& m = std::get<ExactSubModel>(model);
  const auto* obj = std::get_if<SemisimpleObject>(&object);
  if (!obj || obj->multiplicity.size() != m.simples.size()) wrong_object(model);
  Mask out = 0;
  for (std::size_t i = 0; i < obj->multiplicity.size(); ++i) {
    if (obj->multiplicity[i] < 0) throw ValidationError("negative multiplicity");
    if (obj->multiplicity[i] > 0) out |= bit(i);
  }
  return out;
}

std::vector<ModelObject> generator_objects(const CategoryModel& model) {
  std::vector<ModelObject> out;
  std::visit(overloaded{[&](const LengthModel& m) {
                          for (auto& s : simples(m.quiver)) out.emplace_back(std::move(s));
                        },
                        [&](const SpectralModel& m) {
                          for (std::size_t i = 0; i < m.spec.size(); ++i) out.emplace_back(SpectralObject{bit(i)});
                        },
                        [&](const ExactSubModel& m) {
                          for (std::size_t i = 0; i < m.simples.size(); ++i) {
                            SemisimpleObject o{std::vector<int>(m.simples.size(), 0)};
                            o.multiplicity[i] = 1;
                            out.emplace_back(std::move(o));
                          }
                        }},
             model);
  return out;
}

ModelObject zero_object(const CategoryModel& model) {
  return std::visit(
      overloaded{[](const LengthModel& m) -> ModelObject { return zero_representation(m.quiver); },
                 [](const SpectralModel&) -> ModelObject { return SpectralObject{0}; },
                 [](const ExactSubModel& m) -> ModelObject {
                   return SemisimpleObject{std::vector<int>(m.simples.size(), 0)};
                 }},
      model);
}

ModelObject sum_objects(const CategoryModel& model, const ModelObject& a, const ModelObject& b) {
  object_support(model, a);
  object_support(model, b);
  if (std::holds_alternative<LengthModel>(model)) {
    return direct_sum(std::get<Representation>(a), std::get<Representation>(b));
  }
  if (const auto* m = std::get_if<SpectralModel>(&model)) {
    // R/I + R/J has support V(I) u V(J).
    const Mask v = m->spec.up_closure(std::get<SpectralObject>(a).generators | std::get<SpectralObject>(b).generators);
    return SpectralObject{m->spec.minimal(v)};
  }
  auto x = std::get<SemisimpleObject>(a);
  const auto& y = std::get<SemisimpleObject>(b);
  for (std::size_t i = 0; i < x.multiplicity.size(); ++i) x.multiplicity[i] += y.multiplicity[i];
  return x;
}

ModelObject representative_object(const CategoryModel& model, Mask element) {
  const auto gens = generator_objects(model);
  ModelObject out = zero_object(model);
  if (const auto* m = std::get_if<SpectralModel>(&model)) return SpectralObject{m->spec.minimal(element)};
  for_each_bit(element, [&](std::size_t i) { out = sum_objects(model, out, gens.at(i)); });
  return out;
}

Representation realize(const ExactSubModel& model, const SemisimpleObject& object) {
  Representation out = zero_representation(model.ambient.quiver);
  for (std::size_t i = 0; i < model.simples.size(); ++i) out = direct_sum(out, power(model.simples[i], object.multiplicity.at(i)));
  return out;
}

std::string describe(const CategoryModel& model, const ModelObject& object) {
  std::ostringstream os;
  if (const auto* rep = std::get_if<Representation>(&object)) {
    os << "rep(dims=";
    for (std::size_t v = 0; v < rep->dims().size(); ++v) os << (v ? "," : "") << rep->dim(v);
    os << ")";
  } else if (const auto* s = std::get_if<SpectralObject>(&object)) {
    os << "R/I with V(I)=" << std::get<SpectralModel>(model).spec.format(std::get<SpectralModel>(model).spec.up_closure(s->generators));
  } else {
    const auto& m = std::get<ExactSubModel>(model);
    const auto& mult = std::get<SemisimpleObject>(object).multiplicity;
    bool first = true;
    for (std::size_t i = 0; i < mult.size(); ++i) {
      if (mult[i] == 0) continue;
      os << (first ? "" : "+") << m.labels[i];
      if (mult[i] > 1) os << "^" << mult[i];
      first = false;
    }
    if (first) os << "0";
  }
  return os.str();
}

}  // namespace serreloc
