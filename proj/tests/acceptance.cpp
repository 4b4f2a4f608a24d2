// One line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>

#include "serreloc/commspec.hpp"
#include "serreloc/errors.hpp"
#include "serreloc/functor.hpp"
#include "serreloc/report.hpp"
#include "serreloc/subquotient.hpp"

using namespace serreloc;

namespace {

const std::string kFixtures = SERRELOC_FIXTURE_DIR;

struct Outcome {
  bool passed;
  std::string detail;
};

int failures = 0;

void criterion(int number, const char* title, double seconds_limit, const std::function<Outcome()>& fn) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o{false, ""};
  try {
    o = fn();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs > seconds_limit) {
    o.passed = false;
    o.detail += " (over time limit " + std::to_string(seconds_limit) + " s)";
  }
  std::printf("[%s] criterion %2d: %s | %.3f s | %s\n", o.passed ? "PASS" : "FAIL", number, title, secs,
              o.detail.c_str());
  std::fflush(stdout);
  failures += !o.passed;
}

FinitePoset fan(int n) {
  std::vector<std::string> labels{"g"};
  std::vector<std::pair<std::string, std::string>> covers;
  for (int i = 1; i <= n; ++i) {
    labels.push_back("p" + std::to_string(i));
    covers.emplace_back("g", labels.back());
  }
  return FinitePoset::from_covers(labels, covers);
}

// Prime in the literal sense: b & c <= a forces b <= a or c <= a, and a is not the top.
bool literal_prime(const Frame& f, Mask a) {
  if (a == f.top()) return false;
  for (Mask b : f.elements()) {
    for (Mask c : f.elements()) {
      if (subset(b & c, a) && !subset(b, a) && !subset(c, a)) return false;
    }
  }
  return true;
}

std::vector<Mask> all_subsets_closed_down(const FinitePoset& p) {
  std::vector<Mask> out;
  for (Mask m = 0; m <= p.full(); ++m) {
    bool closed = true;
    for (std::size_t x = 0; x < p.size(); ++x) {
      if ((m & bit(x)) && !subset(p.down(x), m)) closed = false;
    }
    if (closed) out.push_back(m);
  }
  return out;
}

std::vector<Fixture> bundled() { return load_fixture_dir(kFixtures); }

Fixture bundled(const std::string& name) { return load_fixture(kFixtures + "/" + name + ".json"); }

}  // namespace

int main() {
  criterion(1, "chain2 spectral lattice: 3-element chain, basic opens all / top two / top", 1.0, [] {
    const Json r = lattice_report(bundled("chain2"));
    const Json chain = Json::array({Json::array(), Json::array({"m"}), Json::array({"g", "m"})});
    const bool lattice_ok = r["size"] == 3 && r["elements"] == chain &&
                            r["hasse"] == Json::array({Json::array({0, 1}), Json::array({1, 2})});
    const auto& b = r["zariski"]["basic_opens"];
    const bool opens_ok = b.size() == 3 && b[0]["basic_open"] == chain &&
                          b[1]["basic_open"] == Json::array({chain[1], chain[2]}) &&
                          b[2]["basic_open"] == Json::array({chain[2]});
    return Outcome{lattice_ok && opens_ok, "elements " + r["elements"].dump()};
  });

  criterion(2, "fan(n), n = 1..6: |Ser| = 2^n + 1, atoms meet in 0, unique coatom = join of atoms", 1.0, [] {
    std::string sizes;
    for (int n = 1; n <= 6; ++n) {
      const auto p = fan(n);
      const auto l = serre_lattice(SpectralModel{p});
      const Frame& f = l.frame();
      sizes += std::to_string(f.size()) + " ";
      if (f.size() != (std::size_t{1} << n) + 1) return Outcome{false, "n=" + std::to_string(n) + " size mismatch"};
      std::vector<Mask> atoms;
      for (Mask e : f.elements()) {
        if (popcount(e) == 1) {
          bool minimal_nonzero = true;
          for (Mask o : f.elements()) minimal_nonzero &= !(o != 0 && o != e && subset(o, e));
          if (minimal_nonzero) atoms.push_back(e);
        }
      }
      if (atoms.size() != static_cast<std::size_t>(n)) return Outcome{false, "atom count"};
      Mask join = 0;
      for (std::size_t i = 0; i < atoms.size(); ++i) {
        join |= atoms[i];
        for (std::size_t j = i + 1; j < atoms.size(); ++j) {
          if ((atoms[i] & atoms[j]) != 0) return Outcome{false, "atoms meet"};
        }
      }
      std::vector<Mask> maximal_proper;
      for (Mask e : f.elements()) {
        if (e == f.top()) continue;
        bool maximal = true;
        for (Mask o : f.elements()) maximal &= !(o != f.top() && o != e && subset(e, o));
        if (maximal) maximal_proper.push_back(e);
      }
      if (maximal_proper.size() != 1 || maximal_proper[0] != join) return Outcome{false, "coatom"};
    }
    return Outcome{true, "sizes " + sizes};
  });

  criterion(3, "200 random posets (<= 7 points, seeded): primes of up-set frame reverse-biject with points", 30.0,
            [] {
              std::mt19937 rng(20240601);
              int agreed = 0;
              for (int i = 0; i < 200; ++i) {
                const auto n = std::uniform_int_distribution<std::size_t>(1, 7)(rng);
                const auto p = random_poset(n, rng);
                const Frame f = upset_frame(p);
                std::set<Mask> literal;
                for (Mask a : f.elements()) {
                  if (literal_prime(f, a)) literal.insert(a);
                }
                const auto fast = primes(f);
                if (literal != std::set<Mask>(fast.begin(), fast.end())) continue;
                std::vector<Mask> of_point;
                for (std::size_t x = 0; x < p.size(); ++x) of_point.push_back(p.full() & ~p.down(x));
                bool bijective = literal == std::set<Mask>(of_point.begin(), of_point.end()) && literal.size() == n;
                for (std::size_t x = 0; x < n; ++x) {
                  for (std::size_t y = 0; y < n; ++y) bijective &= p.leq(x, y) == subset(of_point[y], of_point[x]);
                }
                agreed += bijective;
              }
              return Outcome{agreed == 200, std::to_string(agreed) + "/200 agree"};
            });

  criterion(4, "chain oracle vs support criterion on A2 and central-sink A3 over F_2, total dim <= 4", 300.0, [] {
    std::size_t queries = 0, disagreements = 0, classes = 0;
    for (const char* name : {"a2-quiver", "a3-sink"}) {
      const auto fx = bundled(name);
      const auto q = std::get<LengthModel>(fx.model).quiver;
      const auto reps = isomorphism_classes(enumerate_representations(q, 4));
      classes += reps.size();
      std::vector<std::vector<Representation>> gen_sets;
      const auto simple_list = simples(q);
      for (Mask chosen = 0; chosen < bit(simple_list.size()); ++chosen) {
        std::vector<Representation> g;
        for_each_bit(chosen, [&](std::size_t v) { g.push_back(simple_list[v]); });
        gen_sets.push_back(g);
      }
      for (const auto& r : reps) gen_sets.push_back({r});
      for (const auto& a : reps) {
        for (const auto& g : gen_sets) {
          ++queries;
          disagreements += serre_membership_chain(a, g, 4).has_value() != serre_membership_support(a, g);
        }
      }
    }
    return Outcome{disagreements == 0, std::to_string(classes) + " classes, " + std::to_string(queries) +
                                           " queries, " + std::to_string(disagreements) + " disagreements"};
  });

  criterion(5, "inclusion of add(P1) into A2 modules: join failure, order/meets kept, continuous", 1.0, [] {
    const auto fx = bundled("ex51");
    const auto& f = *fx.functor;
    const auto tgt = serre_lattice(f.target);
    const auto q = std::get<LengthModel>(f.target).quiver;
    const SerreSub s1{bit(*q->vertex_index("1"))}, s2{bit(*q->vertex_index("2"))};
    const SerreSub top{serre_lattice(f.source).frame().top()};
    const bool pulls = ser_pullback(f, s1).element == 0 && ser_pullback(f, s2).element == 0 &&
                       ser_pullback(f, {s1.element | s2.element}) == top;
    const auto r = pullback_report(f);
    bool join_found = false;
    for (const auto& j : r.join_failures) join_found |= (j.left == s1 && j.right == s2) || (j.left == s2 && j.right == s1);
    const auto c = continuity_check(f);
    return Outcome{pulls && join_found && r.preserves_order && r.preserves_meets && c.basic_preimages && c.zariski &&
                       c.ziegler,
                   std::to_string(r.join_failures.size()) + " join failures"};
  });

  criterion(6, "central-sink A3 composite: Ser(B) 2-chain, pullback of 0 is 0, 0 not prime in source", 1.0, [] {
    const auto fx = bundled("ex53");
    const auto& f = *fx.functor;
    const auto src = serre_lattice(f.source);
    const auto tgt = serre_lattice(f.target);
    const auto gens = generator_objects(f.source);
    const Mask p1 = serre_generated(f.source, {gens[0]}).element;
    const Mask p2 = serre_generated(f.source, {gens[1]}).element;
    const bool two_chain = tgt.frame().size() == 2;
    const bool zero_to_zero = ser_pullback(f, {0}).element == 0;
    const bool not_prime = !literal_prime(src.frame(), 0);
    const bool witness = p1 != 0 && p2 != 0 && (p1 & p2) == 0;
    const auto r = pullback_report(f);
    bool recorded = false;
    for (const auto& t : r.sp_failures) recorded |= t.element == 0;
    return Outcome{two_chain && zero_to_zero && not_prime && witness && recorded,
                   "|Ser(B)| = " + std::to_string(tgt.frame().size())};
  });

  criterion(7, "frame laws on bundled frames (base <= 6): distributivity, all-subfamily distributivity, Heyting",
            60.0, [] {
              std::size_t frames = 0, violations = 0;
              std::vector<CategoryModel> models;
              for (const auto& fx : bundled()) {
                models.push_back(fx.model);
                if (fx.functor) models.push_back(fx.functor->target);
              }
              for (const auto& m : models) {
                const auto l = serre_lattice(m);
                const Frame& f = l.frame();
                if (f.base().size() > 6) continue;
                ++frames;
                const auto e = f.elements();
                for (Mask a : e) {
                  for (Mask b : e) {
                    // Heyting implication by direct search for the largest c with a & c <= b.
                    Mask largest = 0;
                    for (Mask c : e) {
                      if (subset(a & c, b)) largest |= c;
                    }
                    violations += f.implies(a, b) != largest || !subset(a & largest, b);
                    for (Mask c : e) {
                      violations += f.meet(a, f.join(b, c)) != f.join(f.meet(a, b), f.meet(a, c));
                      violations += f.leq(c, f.implies(a, b)) != f.leq(f.meet(a, c), b);
                    }
                  }
                }
                for (Mask family = 0; family < bit(e.size()); ++family) {
                  Mask joined = 0;
                  for_each_bit(family, [&](std::size_t i) { joined |= e[i]; });
                  violations += !f.contains(joined);
                  for (Mask a : e) {
                    Mask pieces = 0;
                    for_each_bit(family, [&](std::size_t i) { pieces |= a & e[i]; });
                    violations += (a & joined) != pieces;
                  }
                }
              }
              return Outcome{violations == 0 && frames > 0,
                             std::to_string(frames) + " frames, " + std::to_string(violations) + " violations"};
            });

  criterion(8, "spectral fixtures: isolated dense point when local; Sp is opposite of points mod indistinguishable",
            8.0, [] {
              std::string detail;
              bool ok = true;
              for (const auto& fx : bundled()) {
                if (!fx.spectral) continue;
                const auto& sp = *fx.spectral;
                const auto& spec = sp.spec();
                const auto g = generic_point_check(sp);
                ok &= g.irreducibles_have_generic_points && g.primes_match_points_opposite;
                if (popcount(spec.maximal(spec.full())) == 1) {
                  const auto r = local_isolated_point_check(sp);
                  const auto zg = ziegler_space(sp);
                  // Closure of N computed directly: the smallest down-set containing it.
                  ok &= r.isolated && r.open_of_simple && r.dense && spec.down(r.point) == spec.full() &&
                        zg.is_open(bit(r.point));
                  detail += fx.name + ":N=" + spec.label(r.point) + " ";
                } else {
                  detail += fx.name + ":not-local ";
                }
              }
              return Outcome{ok, detail};
            });

  criterion(9, "full families: three Ziegler-type topologies equal the up-set topology; restricted FG on fan3 coarser",
            1.0, [] {
              bool ok = true;
              for (const auto& fx : bundled()) {
                if (!fx.spectral) continue;
                const auto& sp = *fx.spectral;
                const auto up = alexandrov(sp.spec());
                for (auto flag : {IdealFlag::All, IdealFlag::PP, IdealFlag::FG}) {
                  ok &= compare_topologies(ziegler_type_topology(sp, flag), up) == TopologyOrder::Equal;
                }
              }
              const auto p = bundled("fan3").spectral->spec();
              const SpectralPoset restricted(p, std::vector<Mask>{p.up_closure(bit(*p.index_of("p1"))), p.full()});
              const auto order = compare_topologies(ziegler_type_topology(restricted, IdealFlag::FG),
                                                    ziegler_type_topology(restricted, IdealFlag::All));
              return Outcome{ok && order == TopologyOrder::StrictlyCoarser, "restricted FG is " + to_string(order)};
            });

  criterion(10, "torsion theories: X -> tau -> D_tau is identity; finite-type theories biject with Thomason opens",
            1.0, [] {
              std::size_t sets = 0;
              bool ok = true;
              for (const auto& fx : bundled()) {
                if (!fx.spectral) continue;
                const auto& sp = *fx.spectral;
                for (Mask x : all_subsets_closed_down(sp.spec())) {
                  ++sets;
                  const auto tau = torsion_from_x(sp, x);
                  ok &= d_tau(sp, tau) == x;
                  ok &= torsion_from_x(sp, d_tau(sp, tau)).torsion_supports == tau.torsion_supports;
                }
                const auto t = thomason_bijection(sp);
                ok &= t.certified && t.finite_type.size() == t.opens.size();
              }
              return Outcome{ok, std::to_string(sets) + " generalisation-closed sets"};
            });

  criterion(11, "S-simplicity: support vs subobject enumeration (dim <= 4), no intermediate, quasisimple iff simple",
            120.0, [] {
              std::size_t pairs = 0, simple_pairs = 0;
              bool ok = true;
              for (const auto& fx : bundled()) {
                const auto* m = std::get_if<LengthModel>(&fx.model);
                if (!m || fx.functor) continue;
                const CategoryModel model = *m;
                const auto l = serre_lattice(model);
                for (const auto& a : isomorphism_classes(enumerate_representations(m->quiver, 4))) {
                  for (const auto& s : l.elements()) {
                    ++pairs;
                    const auto c = s_simple_check(model, a, s, 4);
                    ok &= c.by_support == c.by_enumeration;
                    if (c.by_support) {
                      ++simple_pairs;
                      ok &= no_intermediate_check(model, a, s, 4);
                    }
                  }
                  ok &= is_quasisimple(model, a, 4) == (a.total_dim() == 1);
                }
              }
              return Outcome{ok, std::to_string(pairs) + " pairs, " + std::to_string(simple_pairs) + " S-simple"};
            });

  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
