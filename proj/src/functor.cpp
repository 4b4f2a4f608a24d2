#include "serreloc/functor.hpp"

#include <map>

#include "serreloc/errors.hpp"

namespace serreloc {

namespace {

Mask image_support(const ExactFunctorModel& f, const ModelObject& a) { return object_support(f.target, f(a)); }

std::vector<Mask> generator_images(const ExactFunctorModel& f) {
  std::vector<Mask> out;
  for (const auto& g : generator_objects(f.source)) out.push_back(image_support(f, g));
  return out;
}

Mask pull(const std::vector<Mask>& images, Mask t) {
  Mask out = 0;
  for (std::size_t k = 0; k < images.size(); ++k) {
    if (subset(images[k], t)) out |= bit(k);
  }
  return out;
}

bool same_model(const CategoryModel& a, const CategoryModel& b) {
  return a.index() == b.index() && serre_base(a) == serre_base(b);
}

}  // namespace

std::string to_string(FunctorKind kind) {
  switch (kind) {
    case FunctorKind::Identity: return "identity";
    case FunctorKind::Inclusion: return "inclusion";
    case FunctorKind::Quotient: return "quotient";
    default: return "composite";
  }
}

ExactFunctorModel identity_functor(const CategoryModel& model) {
  return {FunctorKind::Identity, model, model, [](const ModelObject& a) { return a; }};
}

ExactFunctorModel inclusion_functor(const ExactSubModel& sub) {
  return {FunctorKind::Inclusion, sub, sub.ambient, [sub](const ModelObject& a) -> ModelObject {
            const auto* s = std::get_if<SemisimpleObject>(&a);
            if (!s) throw ValidationError("inclusion expects an object of the subcategory");
            return realize(sub, *s);
          }};
}

ExactFunctorModel quotient_functor(const CategoryModel& model, SerreSub s) {
  auto q = quotient_model(model, s);
  ExactFunctorModel f{FunctorKind::Quotient, model, q.model, {}};
  const auto index = q.base_index;
  if (const auto* lm = std::get_if<LengthModel>(&q.model)) {
    const QuiverPtr target = lm->quiver;
    f.object_map = [target, index](const ModelObject& a) -> ModelObject {
      return restrict_to(std::get<Representation>(a), target, index);
    };
  } else if (const auto* sm = std::get_if<SpectralModel>(&model)) {
    const FinitePoset spec = sm->spec;
    const FinitePoset small = std::get<SpectralModel>(q.model).spec;
    f.object_map = [spec, small, index](const ModelObject& a) -> ModelObject {
      const Mask v = spec.up_closure(std::get<SpectralObject>(a).generators);
      Mask local = 0;
      for (std::size_t k = 0; k < index.size(); ++k) {
        if (v & bit(index[k])) local |= bit(k);
      }
      return SpectralObject{small.minimal(local)};
    };
  } else {
    f.object_map = [index](const ModelObject& a) -> ModelObject {
      const auto& mult = std::get<SemisimpleObject>(a).multiplicity;
      SemisimpleObject out;
      for (std::size_t k : index) out.multiplicity.push_back(mult.at(k));
      return out;
    };
  }
  return f;
}

ExactFunctorModel compose(const ExactFunctorModel& first, const ExactFunctorModel& second) {
  if (!same_model(first.target, second.source)) {
    throw ValidationError("cannot compose: target of the first functor is not the source of the second");
  }
  auto a = first.object_map;
  auto b = second.object_map;
  return {FunctorKind::Composite, first.source, second.target, [a, b](const ModelObject& x) { return b(a(x)); }};
}

void validate(const ExactFunctorModel& f) {
  if (image_support(f, zero_object(f.source)) != 0) throw ValidationError("functor does not send zero to zero");
  const auto gens = generator_objects(f.source);
  const auto images = generator_images(f);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i; j < gens.size(); ++j) {
      const Mask s = image_support(f, sum_objects(f.source, gens[i], gens[j]));
      if (s != (images[i] | images[j])) throw ValidationError("functor is not additive on composition factors");
    }
  }
}

SerreSub ser_pullback(const ExactFunctorModel& f, SerreSub t) {
  serre_lattice(f.target).check(t);
  const SerreSub out{pull(generator_images(f), t.element)};
  serre_lattice(f.source).check(out);
  return out;
}

PullbackReport pullback_report(const ExactFunctorModel& f) {
  const auto src = serre_lattice(f.source);
  const auto tgt = serre_lattice(f.target);
  const auto images = generator_images(f);
  const auto gens = generator_objects(f.source);
  const auto elems = tgt.frame().elements();
  std::map<Mask, Mask> pb;
  for (Mask t : elems) {
    pb[t] = pull(images, t);
    src.check({pb[t]});
  }
  PullbackReport r;
  r.preserves_order = true;
  r.preserves_meets = pb[tgt.frame().top()] == src.frame().top();
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = 0; j < elems.size(); ++j) {
      const Mask a = elems[i], b = elems[j];
      if (subset(a, b) && !subset(pb[a], pb[b])) r.preserves_order = false;
      if (pb[a & b] != (pb[a] & pb[b])) r.preserves_meets = false;
      if (j <= i) continue;
      const Mask joined = pb[a | b], separate = pb[a] | pb[b];
      if (joined != separate) {
        const Mask extra = joined & ~separate;
        const std::size_t k = members(extra).front();
        r.join_failures.push_back({{a}, {b}, describe(f.source, gens[k])});
      }
    }
  }
  for (const auto& t : sp(f.target).primes) {
    if (!is_prime(src.frame(), pb[t.element])) r.sp_failures.push_back(t);
  }
  return r;
}

ContinuityCertificate continuity_check(const ExactFunctorModel& f) {
  const auto src = serre_lattice(f.source);
  const auto tgt = serre_lattice(f.target);
  const auto images = generator_images(f);
  const auto s_elems = src.frame().elements();
  const auto t_elems = tgt.frame().elements();
  ContinuityCertificate c;

  // [fA] for each finitely generated <A> of the source, as a set of target elements.
  std::vector<Mask> f_support(s_elems.size());
  c.basic_preimages = true;
  for (std::size_t i = 0; i < s_elems.size(); ++i) {
    f_support[i] = image_support(f, representative_object(f.source, s_elems[i]));
    for (Mask t : t_elems) {
      c.basic_preimages &= subset(s_elems[i], pull(images, t)) == subset(f_support[i], t);
    }
  }

  const auto zs = zariski_locale(f.source);
  const auto zt = zariski_locale(f.target);
  c.zariski = true;
  for (Mask u : zs.frame.elements()) {
    Mask pre = 0;
    for (std::size_t j = 0; j < t_elems.size(); ++j) {
      if (u & bit(src.frame().index_of(pull(images, t_elems[j])))) pre |= bit(j);
    }
    c.zariski &= zt.frame.contains(pre);
  }

  c.ziegler = true;
  if (s_elems.size() > 16) throw SizeError("too many basic opens for the exhaustive intersection check");
  for (Mask family = 0; family < bit(s_elems.size()); ++family) {
    for (Mask t : t_elems) {
      bool in_pre = true, in_images = true;
      for_each_bit(family, [&](std::size_t i) {
        in_pre &= subset(s_elems[i], pull(images, t));
        in_images &= subset(f_support[i], t);
      });
      c.ziegler &= in_pre == in_images;
    }
  }
  return c;
}

ExactFunctorModel example_inclusion_functor() {
  auto q = std::make_shared<const BoundQuiver>(std::vector<std::string>{"1", "2"},
                                               std::vector<Arrow>{{"a", 0, 1}}, std::vector<Relation>{}, 2);
  FpMatrix one(1, 1);
  one << 1;
  const auto p1 = make_representation(q, {1, 1}, {one});
  return inclusion_functor(ExactSubModel::make(LengthModel{q}, {"P1"}, {p1}));
}

ExactFunctorModel example_composite_functor() {
  auto q = std::make_shared<const BoundQuiver>(std::vector<std::string>{"0", "1", "2"},
                                               std::vector<Arrow>{{"a", 1, 0}, {"b", 2, 0}},
                                               std::vector<Relation>{}, 2);
  FpMatrix one(1, 1);
  one << 1;
  const auto p1 = make_representation(q, {1, 1, 0}, {one, FpMatrix(1, 0)});
  const auto p2 = make_representation(q, {1, 0, 1}, {FpMatrix(1, 0), one});
  const auto sub = ExactSubModel::make(LengthModel{q}, {"P1", "P2"}, {p1, p2});
  const SerreSub killed{bit(1) | bit(2)};
  return compose(inclusion_functor(sub), quotient_functor(LengthModel{q}, killed));
}

}  // namespace serreloc
