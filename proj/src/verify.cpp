#include "serreloc/verify.hpp"

#include <functional>
#include <random>
#include <set>

#include "serreloc/errors.hpp"
#include "serreloc/subquotient.hpp"

namespace serreloc {

namespace {

using Outcome = std::pair<bool, std::string>;

class Recorder {
 public:
  explicit Recorder(std::vector<CheckResult>& out) : out_(out) {}

  void run(const std::string& id, const std::string& subject, const std::function<Outcome()>& fn) {
    CheckResult r{id, subject, false, ""};
    try {
      std::tie(r.passed, r.detail) = fn();
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    out_.push_back(std::move(r));
  }

 private:
  std::vector<CheckResult>& out_;
};

Outcome ok_if(bool b, std::string detail = {}) { return {b, std::move(detail)}; }

std::vector<Mask> down_sets(const FinitePoset& p) {
  const Frame f = upset_frame(p.opposite());
  return {f.elements().begin(), f.elements().end()};
}

void frame_checks(Recorder& rec, const std::string& subject, const CategoryModel& model) {
  const auto lattice = serre_lattice(model);
  const Frame& f = lattice.frame();
  if (f.size() <= 16) {
    rec.run("frame.cha_laws", subject, [&] {
      const auto v = cha_law_violations(f);
      return ok_if(v == 0, std::to_string(v) + " violations over " + std::to_string(f.size()) + " elements");
    });
  }
  rec.run("frame.birkhoff_roundtrip", subject, [&] {
    const auto dual = birkhoff_poset(f);
    const Frame back = upset_frame(dual.poset);
    const FrameMap iso(f, back, birkhoff_isomorphism(f, dual));
    return ok_if(iso.is_frame_morphism() && iso.is_bijective());
  });
  rec.run("frame.prime_characterizations", subject, [&] {
    std::set<Mask> literal;
    for (Mask a : f.elements()) {
      if (prime_check(f, a).prime) literal.insert(a);
    }
    const auto fast = primes(f);
    return ok_if(literal == std::set<Mask>(fast.begin(), fast.end()), std::to_string(fast.size()) + " primes");
  });
  rec.run("serre.locality_matches_zero_prime", subject, [&] {
    const auto v = classify_local(model);
    const bool zero_prime = prime_check(f, 0).prime;
    return ok_if(std::holds_alternative<NotLocal>(v) != zero_prime && !std::holds_alternative<LocalCase3>(v),
                 verdict_name(v));
  });
  if (f.size() <= kMaxFrameBase) {
    rec.run("serre.quotient_interval", subject, [&] {
      for (const auto& s : lattice.elements()) {
        const auto c = certify_quotient(model, s);
        if (!c.interval_isomorphism || !c.zariski_topologies_agree) return ok_if(false, "fails at " + lattice.format(s));
      }
      return ok_if(true, std::to_string(f.size()) + " quotients");
    });
    rec.run("serre.local_iff_zariski_prime", subject, [&] {
      const auto z = zariski_locale(model);
      for (const auto& s : lattice.elements()) {
        const auto obj = representative_object(model, s.element);
        const auto c = serre_local_check(model, obj);
        if (c.local() != prime_check(z.frame, z.basic_open(s)).prime) return ok_if(false, "fails at " + lattice.format(s));
      }
      return ok_if(true);
    });
  }
}

void length_checks(Recorder& rec, const Fixture& fx, const LengthModel& m, const VerifyOptions& o) {
  const CategoryModel model = m;
  const auto reps = isomorphism_classes(enumerate_representations(m.quiver, o.dim_bound));
  std::vector<Representation> gens;
  for (const auto& r : reps) {
    if (r.total_dim() <= 2 && !r.is_zero()) gens.push_back(r);
  }
  const std::string subject = fx.name;
  rec.run("quiverrep.chain_vs_support", subject, [&] {
    std::size_t n = 0;
    for (const auto& a : reps) {
      for (const auto& g : gens) {
        const bool chain = serre_membership_chain(a, {g}, o.dim_bound).has_value();
        if (chain != serre_membership_support(a, {g})) return ok_if(false, "disagreement on " + describe(model, a));
        if (chain != subset(a.support(), serre_generated(model, {g}).element)) return ok_if(false, "generated mismatch");
        ++n;
      }
    }
    return ok_if(true, std::to_string(n) + " membership queries over " + std::to_string(reps.size()) + " classes");
  });
  rec.run("quiverrep.common_subquotient", subject, [&] {
    for (const auto& a : gens) {
      for (const auto& b : gens) {
        const auto w = common_subquotient(a, b);
        const bool meet = (a.support() & b.support()) != 0;
        if (w.has_value() != meet) return ok_if(false, "witness presence mismatch");
        if (w && (!is_subquotient(*w, a).has_value() || !is_subquotient(*w, b).has_value())) {
          return ok_if(false, "witness is not a common subquotient");
        }
      }
    }
    return ok_if(true);
  });
  rec.run("quiverrep.succeeds_implies_membership", subject, [&] {
    for (const auto& a : gens) {
      for (const auto& b : gens) {
        for (int n = 1; n <= 2; ++n) {
          if (n * b.total_dim() > kExtendedDimBound) continue;
          if (succeeds(b, a, n) && !serre_membership_chain(a, {b}, o.dim_bound).has_value()) {
            return ok_if(false, "succeeds without membership");
          }
        }
      }
    }
    return ok_if(true);
  });
  const auto lattice = serre_lattice(model);
  rec.run("serre.s_simple_criteria", subject, [&] {
    std::size_t simple_pairs = 0;
    for (const auto& a : reps) {
      for (const auto& s : lattice.elements()) {
        const auto c = s_simple_check(model, a, s, o.dim_bound);
        if (c.by_support != c.by_enumeration) return ok_if(false, "criteria disagree on " + describe(model, a));
        if (c.by_support) {
          ++simple_pairs;
          if (!no_intermediate_check(model, a, s, o.dim_bound)) return ok_if(false, "intermediate Serre subcategory");
        }
      }
    }
    return ok_if(true, std::to_string(simple_pairs) + " S-simple pairs");
  });
  rec.run("serre.quasisimple_iff_simple", subject, [&] {
    for (const auto& a : reps) {
      const bool qs = is_quasisimple(model, a, o.dim_bound);
      if (qs != (a.total_dim() == 1)) return ok_if(false, describe(model, a));
      if (qs && !is_serre_local(model, a)) return ok_if(false, "quasisimple but not Serre-local");
    }
    return ok_if(true);
  });
  rec.run("serre.local_objects_all_characterizations", subject, [&] {
    for (const auto& a : reps) serre_local_check(model, a, o.dim_bound);
    for (const auto& [name, obj] : fx.objects) serre_local_check(model, obj, o.dim_bound);
    return ok_if(true, std::to_string(reps.size()) + " objects");
  });
  rec.run("serre.maximal_avoiding_prime", subject, [&] {
    for (const auto& a : reps) {
      if (!a.is_zero() && maximal_avoiding(model, a).empty()) return ok_if(false, "no maximal avoiding subcategory");
    }
    return ok_if(true);
  });
}

void spectral_checks(Recorder& rec, const Fixture& fx) {
  const auto& sp = *fx.spectral;
  const auto& spec = sp.spec();
  const CategoryModel model = SpectralModel{spec};
  const std::string subject = fx.name;
  rec.run("serre.sp_order_reversing", subject, [&] {
    const auto r = serreloc::sp(model);
    return ok_if(r.order_reversing.value_or(false) && r.primes.size() == spec.size());
  });
  rec.run("serre.local_basics_principal", subject, [&] {
    std::set<Mask> principal, found;
    for (std::size_t x = 0; x < spec.size(); ++x) principal.insert(spec.up(x));
    for (const auto& s : serre_local_basics(model)) found.insert(s.element);
    return ok_if(principal == found);
  });
  rec.run("serre.ziegler_zariski_primes", subject, [&] { return ok_if(ziegler_zariski_primes({spec}).certified); });
  rec.run("topology.specialisation_order", subject, [&] {
    const auto t = alexandrov(spec);
    const auto order = specialisation(t);
    bool ok = true;
    for (std::size_t x = 0; x < spec.size(); ++x) ok &= order.up(x) == spec.up(x);
    std::set<Mask> from_primes, irreducible;
    for (Mask u : prime_opens(t)) from_primes.insert(t.full() & ~u);
    for (Mask c : irreducible_closeds(t)) irreducible.insert(c);
    return ok_if(ok && from_primes == irreducible);
  });
  rec.run("commspec.ser_is_ziegler_opens", subject, [&] {
    const auto lattice = serre_lattice(model);
    const auto elems = lattice.frame().elements();
    return ok_if(ziegler_type_topology(sp, IdealFlag::All).opens() == std::vector<Mask>(elems.begin(), elems.end()));
  });
  rec.run("commspec.prime_bijection", subject, [&] { return ok_if(prime_bijection(sp).certified()); });
  rec.run("commspec.torsion_roundtrip", subject, [&] {
    const auto downs = down_sets(spec);
    for (Mask x : downs) {
      const auto tau = torsion_from_x(sp, x);
      if (d_tau(sp, tau) != x) return ok_if(false, "D_tau differs at " + spec.format(x));
      const auto again = torsion_from_x(sp, d_tau(sp, tau));
      if (again.torsion_supports != tau.torsion_supports) return ok_if(false, "torsion theory not recovered");
    }
    return ok_if(true, std::to_string(downs.size()) + " cogenerating sets");
  });
  rec.run("commspec.topology_families", subject, [&] {
    if (sp.has_full_families()) {
      const auto r = spectrum_correspondence_check(sp);
      return ok_if(r.certified(), std::to_string(r.primes) + " primes, " + std::to_string(r.points) + " points");
    }
    const auto fg = ziegler_type_topology(sp, IdealFlag::FG);
    const auto pp = ziegler_type_topology(sp, IdealFlag::PP);
    const auto all = ziegler_type_topology(sp, IdealFlag::All);
    const auto a = compare_topologies(fg, pp), b = compare_topologies(pp, all);
    const auto coarser = [](TopologyOrder t) { return t == TopologyOrder::Equal || t == TopologyOrder::StrictlyCoarser; };
    return ok_if(coarser(a) && coarser(b), "FG vs PP " + to_string(a) + ", PP vs ALL " + to_string(b));
  });
  rec.run("commspec.duality", subject, [&] {
    bool ok = true;
    for (auto f : {IdealFlag::All, IdealFlag::PP, IdealFlag::FG}) ok &= topologies_dual(sp, f);
    return ok_if(ok);
  });
  rec.run("commspec.generic_points", subject, [&] {
    const auto r = generic_point_check(sp);
    return ok_if(r.irreducibles_have_generic_points && r.primes_match_points_opposite);
  });
  rec.run("commspec.local_isolated_point", subject, [&] {
    const bool unique_max = popcount(spec.maximal(spec.full())) == 1;
    const bool case1 = std::holds_alternative<LocalCase1>(classify_local(model));
    if (unique_max != case1) return ok_if(false, "locality differs from unique maximal prime");
    if (!case1) return ok_if(true, "not local");
    const auto r = local_isolated_point_check(sp);
    return ok_if(r.isolated && r.open_of_simple && r.dense, "isolated point " + spec.label(r.point));
  });
  rec.run("commspec.thomason", subject, [&] {
    const auto t = thomason_bijection(sp);
    return ok_if(t.certified, std::to_string(t.finite_type.size()) + " finite-type torsion theories");
  });
}

void functor_checks(Recorder& rec, const Fixture& fx) {
  const auto& f = *fx.functor;
  const std::string subject = fx.name;
  const auto report = pullback_report(f);
  rec.run("functor.order_and_meets", subject, [&] { return ok_if(report.preserves_order && report.preserves_meets); });
  rec.run("functor.continuity", subject, [&] {
    const auto c = continuity_check(f);
    return ok_if(c.basic_preimages && c.zariski && c.ziegler);
  });
  rec.run("functor.composition", subject, [&] {
    for (const auto& s : serre_lattice(f.target).elements()) {
      const auto g = quotient_functor(f.target, s);
      const auto gf = compose(f, g);
      for (const auto& t : serre_lattice(g.target).elements()) {
        if (ser_pullback(gf, t) != ser_pullback(f, ser_pullback(g, t))) return ok_if(false, "composite pullback differs");
      }
    }
    return ok_if(true);
  });
  if (fx.name == "ex51") {
    rec.run("functor.join_failure", subject, [&] {
      return ok_if(!report.join_failures.empty(), std::to_string(report.join_failures.size()) + " join failures");
    });
  }
  if (fx.name == "ex53") {
    rec.run("functor.sp_failure_at_zero", subject, [&] {
      bool at_zero = false;
      for (const auto& t : report.sp_failures) at_zero |= t.element == 0;
      return ok_if(at_zero && ser_pullback(f, {0}).element == 0);
    });
  }
  frame_checks(rec, subject + ":target", f.target);
}

}  // namespace

std::size_t cha_law_violations(const Frame& frame) {
  const auto elems = frame.elements();
  const std::size_t n = elems.size();
  if (n > 16) throw SizeError("exhaustive frame-law check allows at most 16 elements");
  std::size_t bad = 0;
  for (Mask a : elems) {
    for (Mask b : elems) {
      const Mask imp = frame.implies(a, b);
      for (Mask c : elems) {
        if (frame.meet(a, frame.join(b, c)) != frame.join(frame.meet(a, b), frame.meet(a, c))) ++bad;
        if (frame.join(a, frame.meet(b, c)) != frame.meet(frame.join(a, b), frame.join(a, c))) ++bad;
        if (frame.leq(c, imp) != frame.leq(frame.meet(a, c), b)) ++bad;
      }
    }
  }
  std::vector<Mask> family;
  for (Mask chosen = 0; chosen < bit(n); ++chosen) {
    family.clear();
    for_each_bit(chosen, [&](std::size_t i) { family.push_back(elems[i]); });
    const Mask joined = frame.join_all(family);
    if (!frame.contains(joined)) ++bad;
    for (Mask a : elems) {
      std::vector<Mask> meets;
      for (Mask s : family) meets.push_back(frame.meet(a, s));
      if (frame.meet(a, joined) != frame.join_all(meets)) ++bad;
    }
  }
  return bad;
}

std::vector<CheckResult> run_verify_suite(const std::vector<Fixture>& fixtures, const VerifyOptions& options) {
  std::vector<CheckResult> out;
  Recorder rec(out);
  for (const auto& fx : fixtures) {
    frame_checks(rec, fx.name, fx.model);
    if (fx.functor) {
      functor_checks(rec, fx);
    } else if (const auto* m = std::get_if<LengthModel>(&fx.model)) {
      length_checks(rec, fx, *m, options);
    } else if (fx.spectral) {
      spectral_checks(rec, fx);
    }
  }
  rec.run("frame.random_prime_bijection", "random posets", [&] {
    std::mt19937 rng(options.seed);
    for (int i = 0; i < options.random_posets; ++i) {
      const auto n = std::uniform_int_distribution<std::size_t>(1, options.random_max_size)(rng);
      const auto p = random_poset(n, rng);
      const Frame f = upset_frame(p);
      std::set<Mask> literal;
      for (Mask a : f.elements()) {
        if (prime_check(f, a).prime) literal.insert(a);
      }
      std::set<Mask> expected;
      for (std::size_t x = 0; x < p.size(); ++x) expected.insert(p.full() & ~p.down(x));
      if (literal != expected || expected.size() != p.size()) return ok_if(false, "poset " + std::to_string(i));
    }
    return ok_if(true, std::to_string(options.random_posets) + " posets, seed " + std::to_string(options.seed));
  });
  return out;
}

Json verify_report(const std::vector<CheckResult>& results) {
  Json checks = Json::array();
  std::size_t failed = 0;
  for (const auto& r : results) {
    checks.push_back({{"id", r.id}, {"subject", r.subject}, {"passed", r.passed}, {"detail", r.detail}});
    failed += !r.passed;
  }
  return {{"checks", checks}, {"total", results.size()}, {"failed", failed}};
}

}  // namespace serreloc
