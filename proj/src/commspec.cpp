#include "serreloc/commspec.hpp"

#include <algorithm>
#include <set>

#include "serreloc/errors.hpp"
#include "serreloc/model.hpp"
#include "serreloc/serre.hpp"

namespace serreloc {

namespace {

std::vector<Mask> normalize_family(const FinitePoset& spec, std::vector<Mask> family, const char* name) {
  for (Mask m : family) {
    if (!subset(m, spec.full()) || !spec.is_up_set(m)) {
      throw ValidationError(std::string(name) + " family member " + spec.format(m) + " is not an up-set");
    }
  }
  family.push_back(0);
  family.push_back(spec.full());
  sort_by_size(family);
  family.erase(std::unique(family.begin(), family.end()), family.end());
  return family;
}

bool contains_all(const std::vector<Mask>& big, const std::vector<Mask>& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end(),
                       [](Mask a, Mask b) { return popcount(a) != popcount(b) ? popcount(a) < popcount(b) : a < b; });
}

TopologySpace space_from(const FinitePoset& spec, const std::vector<Mask>& family) {
  return topology_from_subbasis(spec.labels(), family);
}

}  // namespace

std::string to_string(IdealFlag flag) {
  switch (flag) {
    case IdealFlag::All: return "ALL";
    case IdealFlag::PP: return "PP";
    default: return "FG";
  }
}

IdealFlag parse_flag(const std::string& text) {
  if (text == "ALL") return IdealFlag::All;
  if (text == "PP") return IdealFlag::PP;
  if (text == "FG") return IdealFlag::FG;
  throw ValidationError("unknown ideal family '" + text + "' (expected ALL, PP or FG)");
}

SpectralPoset::SpectralPoset(FinitePoset spec, std::optional<std::vector<Mask>> fg, std::optional<std::vector<Mask>> pp)
    : spec_(std::move(spec)) {
  const Frame f = upset_frame(spec_);
  all_.assign(f.elements().begin(), f.elements().end());
  fg_ = normalize_family(spec_, fg ? *fg : all_, "FG");
  pp_ = normalize_family(spec_, pp ? *pp : fg_, "PP");
  if (!contains_all(pp_, fg_)) throw ValidationError("FG family is not contained in the PP family");
}

const std::vector<Mask>& SpectralPoset::family(IdealFlag flag) const {
  switch (flag) {
    case IdealFlag::All: return all_;
    case IdealFlag::PP: return pp_;
    default: return fg_;
  }
}

bool SpectralPoset::has_full_families() const { return fg_ == all_ && pp_ == all_; }

ClosedSet v_of(const SpectralPoset& sp, Mask gens) {
  const auto& spec = sp.spec();
  if (!subset(gens, spec.full())) throw ValidationError("generators outside the spectrum");
  ClosedSet out;
  out.normalized = spec.minimal(gens) != gens;
  out.v = spec.up_closure(gens);
  out.d = spec.full() & ~out.v;
  return out;
}

Mask d_of(const SpectralPoset& sp, Mask gens) { return v_of(sp, gens).d; }

TorsionTheoryModel torsion_from_supports(const SpectralPoset& sp, Mask y) {
  const auto& spec = sp.spec();
  if (!subset(y, spec.full()) || !spec.is_up_set(y)) throw ValidationError("torsion supports must form an up-set");
  TorsionTheoryModel t;
  t.torsion_supports = y;
  t.cogenerating = spec.full() & ~y;
  for (Mask v : sp.family(IdealFlag::All)) {
    if (subset(v, y)) t.gabriel_filter.push_back(v);
  }
  return t;
}

TorsionTheoryModel torsion_from_x(const SpectralPoset& sp, Mask x) {
  const auto& spec = sp.spec();
  if (!subset(x, spec.full()) || !spec.is_down_set(x)) {
    throw ValidationError("cogenerating set must be closed under smaller primes");
  }
  // R/Q is torsion iff Q lies below no prime of x.
  return torsion_from_supports(sp, spec.full() & ~spec.down_closure(x));
}

Mask d_tau(const SpectralPoset& sp, const TorsionTheoryModel& tau) {
  Mask out = sp.spec().full();
  for (Mask v : tau.gabriel_filter) out &= sp.spec().full() & ~v;
  return out;
}

PrimeBijection prime_bijection(const SpectralPoset& sp) {
  const auto& spec = sp.spec();
  const Frame f = upset_frame(spec);
  PrimeBijection out;
  out.all_prime = true;
  for (std::size_t x = 0; x < spec.size(); ++x) {
    out.prime_of_point.push_back(spec.full() & ~spec.down(x));
    out.all_prime &= prime_check(f, out.prime_of_point.back()).prime;
  }
  const auto found = primes(f);
  out.exhaustive = std::set<Mask>(found.begin(), found.end()) ==
                       std::set<Mask>(out.prime_of_point.begin(), out.prime_of_point.end()) &&
                   found.size() == spec.size();
  out.order_reversing = true;
  for (std::size_t x = 0; x < spec.size(); ++x) {
    for (std::size_t y = 0; y < spec.size(); ++y) {
      out.order_reversing &= spec.leq(x, y) == subset(out.prime_of_point[y], out.prime_of_point[x]);
    }
  }
  return out;
}

TopologySpace ziegler_space(const SpectralPoset& sp) { return alexandrov(sp.spec()); }

GenericPointReport generic_point_check(const SpectralPoset& sp) {
  const auto zg = ziegler_space(sp);
  GenericPointReport r;
  r.irreducibles_have_generic_points = true;
  for (Mask c : irreducible_closeds(zg)) r.irreducibles_have_generic_points &= generic_point(zg, c).has_value();

  const auto t0 = t0_quotient(zg);
  const auto order = specialisation(t0.space);
  const auto pb = prime_bijection(sp);
  bool ok = pb.certified();
  for (std::size_t x = 0; x < sp.spec().size(); ++x) {
    for (std::size_t y = 0; y < sp.spec().size(); ++y) {
      const bool below = order.leq(t0.class_of[x], t0.class_of[y]);
      ok &= below == subset(pb.prime_of_point[y], pb.prime_of_point[x]);
    }
  }
  r.primes_match_points_opposite = ok;
  return r;
}

IsolatedPointReport local_isolated_point_check(const SpectralPoset& sp) {
  const auto& spec = sp.spec();
  const auto verdict = classify_local(SpectralModel{spec});
  const auto* c1 = std::get_if<LocalCase1>(&verdict);
  if (!c1) throw PreconditionError("spectrum has no unique maximal prime");
  const auto zg = ziegler_space(sp);
  IsolatedPointReport r;
  r.point = *spec.index_of(c1->simple);
  const Mask simple_open = object_support(SpectralModel{spec}, SpectralObject{bit(r.point)});
  r.isolated = zg.is_open(bit(r.point));
  r.open_of_simple = simple_open == bit(r.point) && c1->minimal_serre.element == simple_open;
  r.dense = zg.closure(bit(r.point)) == zg.full();
  return r;
}

TopologySpace ziegler_type_topology(const SpectralPoset& sp, IdealFlag flag) {
  return space_from(sp.spec(), sp.family(flag));
}

TopologySpace zariski_type_topology(const SpectralPoset& sp, IdealFlag flag) {
  std::vector<Mask> complements;
  for (Mask v : sp.family(flag)) complements.push_back(sp.spec().full() & ~v);
  return space_from(sp.spec(), complements);
}

bool topologies_dual(const SpectralPoset& sp, IdealFlag flag) {
  const auto zg = ziegler_type_topology(sp, flag);
  const auto zr = zariski_type_topology(sp, flag);
  bool ok = true;
  for (Mask v : sp.family(flag)) {
    const Mask d = sp.spec().full() & ~v;
    ok &= zg.is_open(v) && zr.is_closed(v) && zr.is_open(d) && zg.is_closed(d);
  }
  return ok;
}

ThomasonBijection thomason_bijection(const SpectralPoset& sp) {
  ThomasonBijection out;
  const auto& fg = sp.family(IdealFlag::FG);
  for (Mask y : sp.family(IdealFlag::All)) {
    Mask covered = 0;
    for (Mask v : fg) {
      if (subset(v, y)) covered |= v;
    }
    if (covered == y) out.finite_type.push_back(y);
  }
  const auto space = ziegler_type_topology(sp, IdealFlag::FG);
  out.opens = space.opens();
  bool ok = out.finite_type == out.opens;
  for (Mask u : out.opens) {
    const auto tau = torsion_from_supports(sp, u);
    Mask back = 0;
    for (Mask v : fg) {
      if (subset(v, tau.torsion_supports)) back |= v;
    }
    ok &= back == u;
  }
  out.certified = ok;
  return out;
}

SpectrumCorrespondence spectrum_correspondence_check(const SpectralPoset& sp) {
  if (!sp.has_full_families()) throw PreconditionError("spectrum correspondence needs full ideal families");
  SpectrumCorrespondence r;
  const auto pb = prime_bijection(sp);
  r.points = sp.spec().size();
  r.primes = primes(upset_frame(sp.spec())).size();
  r.bijection = pb.certified();
  const auto all = ziegler_type_topology(sp, IdealFlag::All);
  r.ziegler_types_equal = compare_topologies(all, ziegler_type_topology(sp, IdealFlag::PP)) == TopologyOrder::Equal &&
                          compare_topologies(all, ziegler_type_topology(sp, IdealFlag::FG)) == TopologyOrder::Equal;
  const auto zall = zariski_type_topology(sp, IdealFlag::All);
  r.zariski_types_equal = compare_topologies(zall, zariski_type_topology(sp, IdealFlag::PP)) == TopologyOrder::Equal &&
                          compare_topologies(zall, zariski_type_topology(sp, IdealFlag::FG)) == TopologyOrder::Equal;
  r.ziegler_is_alexandrov = compare_topologies(all, alexandrov(sp.spec())) == TopologyOrder::Equal;
  return r;
}

}  // namespace serreloc
