#include <gtest/gtest.h>

#include <set>

#include "fixtures.hpp"
#include "serreloc/errors.hpp"
#include "serreloc/serre.hpp"
#include "serreloc/subquotient.hpp"

using namespace serreloc;
using namespace serreloc::testing;

namespace {

// Literal prime test: b & c <= a implies b <= a or c <= a, a != top.
bool literal_prime(const Frame& f, Mask a) {
  if (a == f.top()) return false;
  for (Mask b : f.elements()) {
    for (Mask c : f.elements()) {
      if (subset(b & c, a) && !subset(b, a) && !subset(c, a)) return false;
    }
  }
  return true;
}

std::vector<CategoryModel> model_fixtures() {
  std::vector<CategoryModel> out;
  for (auto& p : poset_fixtures()) out.push_back(SpectralModel{p});
  out.push_back(LengthModel{a2_quiver()});
  out.push_back(LengthModel{a3_sink_quiver()});
  const auto q = a3_sink_quiver();
  out.push_back(ExactSubModel::make(LengthModel{q}, {"P1", "P2"}, {a3_p1(q), a3_p2(q)}));
  return out;
}

Representation simple_at(const QuiverPtr& q, const std::string& v) { return simple(q, *q->vertex_index(v)); }

}  // namespace

TEST(SerreLattice, SpectralChain2IsThreeChain) {
  const auto l = serre_lattice(SpectralModel{chain2()});
  ASSERT_EQ(l.frame().size(), 3u);
  const auto e = l.elements();
  EXPECT_TRUE(subset(e[0].element, e[1].element) && subset(e[1].element, e[2].element));
  EXPECT_EQ(l.decode(e[1]), std::vector<std::string>{"m"});
}

TEST(SerreLattice, FanCounts) {
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(serre_lattice(SpectralModel{fan(n)}).frame().size(), (1u << n) + 1) << n;
}

TEST(SerreLattice, LengthA3SinkIsPowerset) {
  EXPECT_EQ(serre_lattice(LengthModel{a3_sink_quiver()}).frame().size(), 8u);
}

TEST(SerreLattice, DecodeRejectsForeignElement) {
  const auto l = serre_lattice(SpectralModel{chain2()});
  EXPECT_THROW(l.decode({bit(0)}), ValidationError);
}

TEST(SerreGenerated, Examples) {
  const auto q = a2_quiver();
  const CategoryModel m = LengthModel{q};
  EXPECT_EQ(serre_generated(m, {a2_p1(q)}).element, Mask{3});
  EXPECT_EQ(serre_generated(m, {}).element, Mask{0});
  const auto q3 = a3_sink_quiver();
  const CategoryModel m3 = LengthModel{q3};
  const auto s = serre_generated(m3, {simple_at(q3, "1"), simple_at(q3, "2")});
  EXPECT_FALSE(s.element & bit(*q3->vertex_index("0")));
  EXPECT_THROW(serre_generated(m3, {a2_p1(q)}), ValidationError);
}

TEST(SerreGenerated, AgreesWithChainOracle) {
  for (const auto& q : {a2_quiver(), a3_sink_quiver()}) {
    const CategoryModel m = LengthModel{q};
    const int bound = q->vertices().size() == 2 ? 5 : 3;
    const auto reps = isomorphism_classes(enumerate_representations(q, bound));
    for (const auto& gen : reps) {
      if (gen.total_dim() > 2) continue;
      const Mask s = serre_generated(m, {gen}).element;
      for (const auto& a : reps) {
        EXPECT_EQ(subset(a.support(), s), serre_membership_chain(a, {gen}, bound).has_value());
      }
    }
  }
}

TEST(Sp, SpectralBijectionAndOrderReversal) {
  for (const auto& p : poset_fixtures()) {
    const auto r = sp(SpectralModel{p});
    ASSERT_TRUE(r.order_reversing.has_value());
    EXPECT_TRUE(*r.order_reversing);
    EXPECT_EQ(r.primes.size(), p.size());
    const Frame f = upset_frame(p);
    std::size_t literal = 0;
    for (Mask e : f.elements()) literal += literal_prime(f, e);
    EXPECT_EQ(literal, p.size());
    for (const auto& s : r.primes) EXPECT_TRUE(literal_prime(f, s.element));
  }
}

TEST(Sp, Chain2AndLength) {
  const auto p = chain2();
  const auto r = sp(SpectralModel{p});
  const auto g = *p.index_of("g"), m = *p.index_of("m");
  EXPECT_EQ(r.point_prime[g].element, bit(m));
  EXPECT_EQ(r.point_prime[m].element, Mask{0});
  const auto rl = sp(LengthModel{a3_sink_quiver()});
  ASSERT_EQ(rl.primes.size(), 3u);
  for (const auto& s : rl.primes) EXPECT_EQ(popcount(s.element), 2);
  EXPECT_FALSE(rl.order_reversing.has_value());
}

TEST(ClassifyLocal, Examples) {
  const auto c = classify_local(SpectralModel{chain2()});
  ASSERT_TRUE(std::holds_alternative<LocalCase1>(c));
  EXPECT_EQ(std::get<LocalCase1>(c).simple, "m");
  EXPECT_EQ(std::get<LocalCase1>(c).minimal_serre.element, bit(1));

  const auto p = fan3();
  const auto n = classify_local(SpectralModel{p});
  ASSERT_TRUE(std::holds_alternative<NotLocal>(n));
  const auto& w = *std::get<NotLocal>(n).witness;
  EXPECT_EQ(w.first.element, bit(*p.index_of("p1")));
  EXPECT_EQ(w.second.element, bit(*p.index_of("p2")));
  EXPECT_EQ(w.first.element & w.second.element, Mask{0});

  auto one = std::make_shared<const BoundQuiver>(std::vector<std::string>{"v"}, std::vector<Arrow>{},
                                                 std::vector<Relation>{}, 2);
  EXPECT_TRUE(std::holds_alternative<LocalCase1>(classify_local(LengthModel{one})));
}

TEST(ClassifyLocal, MatchesZeroPrime) {
  for (const auto& m : model_fixtures()) {
    const auto l = serre_lattice(m);
    const bool zero_prime = literal_prime(l.frame(), 0);
    EXPECT_EQ(!std::holds_alternative<NotLocal>(classify_local(m)), zero_prime) << kind_name(m);
  }
}

TEST(Quotient, LengthA3SinkBySimples) {
  const auto q = a3_sink_quiver();
  const CategoryModel m = LengthModel{q};
  const auto s = serre_generated(m, {simple_at(q, "1"), simple_at(q, "2")});
  const auto r = quotient_model(m, s);
  EXPECT_EQ(std::get<LengthModel>(r.model).quiver->vertices(), std::vector<std::string>{"0"});
  EXPECT_EQ(serre_lattice(r.model).frame().size(), 2u);
  const auto cert = certify_quotient(m, s);
  EXPECT_TRUE(cert.interval_isomorphism);
  EXPECT_TRUE(cert.zariski_topologies_agree);
}

TEST(Quotient, ByZeroIsIdentity) {
  const CategoryModel m = SpectralModel{diamond()};
  const auto r = quotient_model(m, {0});
  EXPECT_EQ(std::get<SpectralModel>(r.model).spec, diamond());
}

TEST(Quotient, DiamondByTop) {
  const auto p = diamond();
  const CategoryModel m = SpectralModel{p};
  const SerreSub s{bit(*p.index_of("m"))};
  const auto r = quotient_model(m, s);
  EXPECT_EQ(std::get<SpectralModel>(r.model).spec.sorted_labels(std::get<SpectralModel>(r.model).spec.full()),
            (std::vector<std::string>{"g", "p1", "p2"}));
  EXPECT_EQ(serre_lattice(r.model).frame().size(), 5u);
}

TEST(Quotient, CertificatesOnAllFixtures) {
  for (const auto& m : model_fixtures()) {
    const auto l = serre_lattice(m);
    if (l.frame().size() > kMaxFrameBase) continue;
    for (const auto& s : l.elements()) {
      const auto c = certify_quotient(m, s);
      EXPECT_TRUE(c.interval_isomorphism && c.zariski_topologies_agree) << kind_name(m) << " " << l.format(s);
    }
  }
}

TEST(Quotient, RejectsForeignElement) {
  EXPECT_THROW(quotient_model(SpectralModel{chain2()}, {bit(0)}), ValidationError);
}

TEST(Zariski, Chain2BasicOpens) {
  const CategoryModel m = SpectralModel{chain2()};
  const auto z = zariski_locale(m);
  const auto l = serre_lattice(m);
  const auto e = l.elements();
  EXPECT_EQ(z.basic_open(e[0]), Mask{0b111});
  EXPECT_EQ(z.basic_open(e[1]), Mask{0b110});
  EXPECT_EQ(z.basic_open(e[2]), Mask{0b100});
  EXPECT_EQ(z.frame.size(), 4u);
}

TEST(Zariski, SizesOfSmallCases) {
  EXPECT_EQ(zariski_locale(SpectralModel{antichain2()}).frame.size(), 6u);
  EXPECT_EQ(zariski_locale(SpectralModel{FinitePoset::antichain({})}).frame.size(), 2u);
  EXPECT_THROW(zariski_locale(SpectralModel{fan(5)}), SizeError);
}

TEST(SerreLocal, LengthExamples) {
  const auto q = a2_quiver();
  const CategoryModel m = LengthModel{q};
  EXPECT_TRUE(is_serre_local(m, simple_at(q, "1")));
  EXPECT_FALSE(is_serre_local(m, a2_p1(q)));
  const auto c = serre_local_check(m, a2_p1(q));
  ASSERT_TRUE(c.chain_test.has_value());
  EXPECT_FALSE(*c.chain_test);
  EXPECT_FALSE(is_serre_local(m, zero_representation(q)));
}

TEST(SerreLocal, SpectralBasicsArePrincipal) {
  for (const auto& p : poset_fixtures()) {
    const CategoryModel m = SpectralModel{p};
    std::set<Mask> principal;
    for (std::size_t x = 0; x < p.size(); ++x) principal.insert(p.up(x));
    std::set<Mask> found;
    for (const auto& s : serre_local_basics(m)) found.insert(s.element);
    EXPECT_EQ(found, principal);
  }
}

TEST(SerreLocal, ZariskiPrimeOnAllObjects) {
  for (const auto& q : {a2_quiver(), a3_sink_quiver()}) {
    const CategoryModel m = LengthModel{q};
    const auto z = zariski_locale(m);
    for (const auto& a : isomorphism_classes(enumerate_representations(q, 3))) {
      const auto c = serre_local_check(m, a);
      EXPECT_EQ(c.local(), literal_prime(z.frame, z.basic_open({a.support()})));
      EXPECT_TRUE(c.chain_test.has_value());
    }
  }
}

TEST(SSimple, Examples) {
  const auto q = a2_quiver();
  const CategoryModel m = LengthModel{q};
  const SerreSub s2{bit(*q->vertex_index("2"))};
  const auto c = s_simple_check(m, a2_p1(q), s2);
  EXPECT_TRUE(c.by_support);
  EXPECT_TRUE(c.by_enumeration);
  EXPECT_TRUE(no_intermediate_check(m, a2_p1(q), s2));

  const auto s1 = simple_at(q, "1");
  const auto ss = direct_sum(s1, s1);
  EXPECT_TRUE(is_serre_local(m, ss));
  EXPECT_FALSE(is_quasisimple(m, ss));
  EXPECT_TRUE(is_quasisimple(m, s1));
  EXPECT_TRUE(no_intermediate_check(m, s1, {0}));
  EXPECT_THROW(no_intermediate_check(m, ss, {0}), PreconditionError);
  EXPECT_THROW(is_quasisimple(SpectralModel{chain2()}, s1), PreconditionError);
}

TEST(SSimple, QuasisimpleIffSimple) {
  for (const auto& q : {a2_quiver(), a3_sink_quiver()}) {
    const CategoryModel m = LengthModel{q};
    for (const auto& a : isomorphism_classes(enumerate_representations(q, 3))) {
      const bool qs = is_quasisimple(m, a);
      EXPECT_EQ(qs, a.total_dim() == 1);
      if (qs) EXPECT_TRUE(is_serre_local(m, a));
    }
  }
}

TEST(MaximalAvoiding, A3SinkS0) {
  const auto q = a3_sink_quiver();
  const CategoryModel m = LengthModel{q};
  const auto r = maximal_avoiding(m, simple_at(q, "0"));
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0].element, bit(*q->vertex_index("1")) | bit(*q->vertex_index("2")));
}

TEST(ZieglerZariski, Bijections) {
  for (const auto& p : {diamond(), FinitePoset::chain({"x"}), fan3()}) {
    const auto r = ziegler_zariski_primes(SpectralModel{p});
    EXPECT_TRUE(r.certified);
    EXPECT_EQ(r.pairs.size(), p.size());
  }
}

TEST(ExactSub, Validation) {
  const auto q = a2_quiver();
  const auto s1 = simple_at(q, "1");
  EXPECT_THROW(ExactSubModel::make(LengthModel{q}, {"x", "y"}, {s1, s1}), ValidationError);
  EXPECT_THROW(ExactSubModel::make(LengthModel{q}, {"x"}, {direct_sum(s1, s1)}), ValidationError);
  EXPECT_THROW(ExactSubModel::make(LengthModel{q}, {"x"}, {zero_representation(q)}), ValidationError);
  EXPECT_NO_THROW(ExactSubModel::make(LengthModel{q}, {"P1"}, {a2_p1(q)}));
}
