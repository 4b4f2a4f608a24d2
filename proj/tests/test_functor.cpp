#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "serreloc/errors.hpp"
#include "serreloc/functor.hpp"

using namespace serreloc;
using namespace serreloc::testing;

namespace {

// Pullback computed from the definition: scan every source object of the representative
// family and keep the Serre subcategory generated by those landing in T.
Mask pullback_by_objects(const ExactFunctorModel& f, SerreSub t) {
  Mask out = 0;
  for (const auto& s : serre_lattice(f.source).elements()) {
    const auto a = representative_object(f.source, s.element);
    if (subset(object_support(f.target, f(a)), t.element)) out |= s.element;
  }
  return out;
}

std::vector<ExactFunctorModel> functor_fixtures() {
  std::vector<ExactFunctorModel> out{example_inclusion_functor(), example_composite_functor(),
                                     identity_functor(SpectralModel{diamond()})};
  out.push_back(quotient_functor(SpectralModel{diamond()}, {bit(3)}));
  out.push_back(quotient_functor(LengthModel{a3_sink_quiver()}, {bit(0)}));
  return out;
}

}  // namespace

TEST(Pullback, InclusionExample) {
  const auto f = example_inclusion_functor();
  validate(f);
  const SerreSub s1{bit(0)}, s2{bit(1)};
  EXPECT_EQ(ser_pullback(f, s1).element, Mask{0});
  EXPECT_EQ(ser_pullback(f, s2).element, Mask{0});
  EXPECT_EQ(ser_pullback(f, {s1.element | s2.element}).element, Mask{1});
  const auto r = pullback_report(f);
  EXPECT_TRUE(r.preserves_order);
  EXPECT_TRUE(r.preserves_meets);
  ASSERT_FALSE(r.join_failures.empty());
  EXPECT_EQ(r.join_failures[0].left, s1);
  EXPECT_EQ(r.join_failures[0].right, s2);
  EXPECT_EQ(r.join_failures[0].witness, "P1");
  const auto c = continuity_check(f);
  EXPECT_TRUE(c.basic_preimages && c.zariski && c.ziegler);
}

TEST(Pullback, CompositeExample) {
  const auto f = example_composite_functor();
  validate(f);
  EXPECT_EQ(serre_lattice(f.target).frame().size(), 2u);
  EXPECT_EQ(ser_pullback(f, {0}).element, Mask{0});
  EXPECT_FALSE(is_prime(serre_lattice(f.source).frame(), 0));
  const auto r = pullback_report(f);
  ASSERT_EQ(r.sp_failures.size(), 1u);
  EXPECT_EQ(r.sp_failures[0].element, Mask{0});
  const auto c = continuity_check(f);
  EXPECT_TRUE(c.basic_preimages && c.zariski && c.ziegler);
  // <fP1> and <fP2> meet in the single remaining vertex.
  const auto gens = generator_objects(f.source);
  EXPECT_EQ(object_support(f.target, f(gens[0])) & object_support(f.target, f(gens[1])), Mask{1});
}

TEST(Pullback, IdentityIsIdentity) {
  const auto f = identity_functor(SpectralModel{diamond()});
  for (const auto& t : serre_lattice(f.target).elements()) EXPECT_EQ(ser_pullback(f, t), t);
  const auto r = pullback_report(f);
  EXPECT_TRUE(r.join_failures.empty());
  EXPECT_TRUE(r.sp_failures.empty());
}

TEST(Pullback, AgreesWithObjectScan) {
  for (const auto& f : functor_fixtures()) {
    validate(f);
    for (const auto& t : serre_lattice(f.target).elements()) {
      EXPECT_EQ(ser_pullback(f, t).element, pullback_by_objects(f, t)) << to_string(f.kind);
    }
    const auto r = pullback_report(f);
    EXPECT_TRUE(r.preserves_order && r.preserves_meets);
    const auto c = continuity_check(f);
    EXPECT_TRUE(c.basic_preimages && c.zariski && c.ziegler);
  }
}

TEST(Pullback, CompositionIsContravariant) {
  const auto q = a3_sink_quiver();
  const auto sub = ExactSubModel::make(LengthModel{q}, {"P1", "P2"}, {a3_p1(q), a3_p2(q)});
  const auto f = inclusion_functor(sub);
  const auto g = quotient_functor(LengthModel{q}, {bit(1) | bit(2)});
  const auto gf = compose(f, g);
  for (const auto& t : serre_lattice(g.target).elements()) {
    EXPECT_EQ(ser_pullback(gf, t), ser_pullback(f, ser_pullback(g, t)));
  }
  const auto d = SpectralModel{diamond()};
  const auto h = quotient_functor(d, {bit(3)});
  const auto k = quotient_functor(h.target, {0b110});
  const auto kh = compose(h, k);
  for (const auto& t : serre_lattice(k.target).elements()) {
    EXPECT_EQ(ser_pullback(kh, t), ser_pullback(h, ser_pullback(k, t)));
  }
}

TEST(Pullback, Mismatches) {
  const auto f = example_inclusion_functor();
  EXPECT_THROW(compose(f, identity_functor(SpectralModel{chain2()})), ValidationError);
  EXPECT_THROW(ser_pullback(f, {bit(5)}), ValidationError);
}

TEST(Pullback, ValidatorRejectsBadMap) {
  auto f = identity_functor(SpectralModel{chain2()});
  f.object_map = [](const ModelObject&) -> ModelObject { return SpectralObject{1}; };
  EXPECT_THROW(validate(f), ValidationError);
}
