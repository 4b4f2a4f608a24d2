#include "serreloc/serre.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "serreloc/errors.hpp"
#include "serreloc/subquotient.hpp"

namespace serreloc {

namespace {

const LengthModel& require_length(const CategoryModel& model, const char* op) {
  const auto* m = std::get_if<LengthModel>(&model);
  if (!m) throw PreconditionError(std::string(op) + " needs a length model, got " + kind_name(model));
  return *m;
}

Mask lift(const std::vector<std::size_t>& index, Mask m) {
  Mask out = 0;
  for_each_bit(m, [&](std::size_t k) { out |= bit(index[k]); });
  return out;
}

// A bad chain ends at 0 and has no factor generating the same Serre subcategory as A.
std::optional<bool> local_by_chains(const Representation& a, int dim_bound) {
  if (a.total_dim() > dim_bound) return std::nullopt;
  const Mask target = a.support();
  const auto subs = subrepresentations(a, dim_bound);
  const int p = a.quiver().characteristic();
  std::vector<char> bad(subs.size(), 0);
  for (std::size_t i = 0; i < subs.size(); ++i) {
    const auto di = tuple_dims(subs[i]);
    if (std::all_of(di.begin(), di.end(), [](int d) { return d == 0; })) {
      bad[i] = 1;
      continue;
    }
    for (std::size_t j = 0; j < i && !bad[i]; ++j) {
      if (!bad[j] || !tuple_contained(subs[j], subs[i], p)) continue;
      const auto dj = tuple_dims(subs[j]);
      Mask factor = 0;
      for (std::size_t v = 0; v < di.size(); ++v) {
        if (di[v] != dj[v]) factor |= bit(v);
      }
      if (factor != target) bad[i] = 1;
    }
  }
  return !bad.back();
}

}  // namespace

SerreLattice::SerreLattice(CategoryModel model) : model_(std::move(model)), frame_(serre_base(model_)) {}

void SerreLattice::check(SerreSub s) const {
  if (!frame_.contains(s.element)) {
    throw ValidationError("not a Serre subcategory of this " + kind_name(model_) + " model");
  }
}

std::vector<std::string> SerreLattice::decode(SerreSub s) const {
  check(s);
  return frame_.base().sorted_labels(s.element);
}

std::vector<SerreSub> SerreLattice::elements() const {
  std::vector<SerreSub> out;
  for (Mask e : frame_.elements()) out.push_back({e});
  return out;
}

SerreLattice serre_lattice(const CategoryModel& model) { return SerreLattice(model); }

SerreSub serre_generated(const CategoryModel& model, const std::vector<ModelObject>& objects) {
  Mask out = 0;
  for (const auto& o : objects) out |= object_support(model, o);
  return {out};
}

SpResult sp(const CategoryModel& model) {
  const auto lattice = serre_lattice(model);
  SpResult out;
  for (Mask m : primes(lattice.frame())) out.primes.push_back({m});
  const auto* spectral = std::get_if<SpectralModel>(&model);
  if (!spectral) return out;
  const auto& spec = spectral->spec;
  std::set<Mask> expected;
  for (std::size_t x = 0; x < spec.size(); ++x) {
    out.point_prime.push_back({spec.full() & ~spec.down(x)});
    expected.insert(out.point_prime.back().element);
  }
  std::set<Mask> found;
  for (const auto& s : out.primes) found.insert(s.element);
  if (found != expected || expected.size() != spec.size()) {
    throw InvariantError("prime Serre subcategories do not match the points of the spectrum");
  }
  bool reversing = true;
  for (std::size_t x = 0; x < spec.size(); ++x) {
    for (std::size_t y = 0; y < spec.size(); ++y) {
      reversing &= spec.leq(x, y) == subset(out.point_prime[y].element, out.point_prime[x].element);
    }
  }
  out.order_reversing = reversing;
  return out;
}

std::string verdict_name(const LocalityVerdict& v) {
  switch (v.index()) {
    case 0: return "not_local";
    case 1: return "case1";
    case 2: return "case2";
    default: return "case3";
  }
}

LocalityVerdict classify_local(const CategoryModel& model) {
  const auto lattice = serre_lattice(model);
  const Frame& f = lattice.frame();
  const auto atoms = f.upper_covers(0);
  if (f.top() == 0 || atoms.size() != 1) {
    if (atoms.size() >= 2) return NotLocal{std::make_pair(SerreSub{atoms[0]}, SerreSub{atoms[1]})};
    return NotLocal{};
  }
  const Mask atom = atoms.front();
  // In every finite model the unique atom is generated by a simple object: a vertex simple,
  // R/m for the unique closed point m, or the one declared simple.
  const FinitePoset base = serre_base(model);
  const Mask simples_at = base.maximal(base.full());
  if (popcount(simples_at) != 1 || simples_at != atom) {
    throw InvariantError("local model without a unique simple object");
  }
  return LocalCase1{base.label(members(atom).front()), SerreSub{atom}};
}

SerreSub QuotientModel::embed(SerreSub q) const { return {killed.element | lift(base_index, q.element)}; }

QuotientModel quotient_model(const CategoryModel& model, SerreSub s) {
  serre_lattice(model).check(s);
  QuotientModel out{model, s, {}};
  if (const auto* m = std::get_if<LengthModel>(&model)) {
    auto q = std::make_shared<const BoundQuiver>(m->quiver->without_vertices(s.element, &out.base_index));
    out.model = LengthModel{q};
  } else if (const auto* m = std::get_if<SpectralModel>(&model)) {
    out.model = SpectralModel{m->spec.restrict(m->spec.full() & ~s.element, &out.base_index)};
  } else {
    const auto& ex = std::get<ExactSubModel>(model);
    ExactSubModel q{ex.ambient, {}, {}};
    for (std::size_t i = 0; i < ex.simples.size(); ++i) {
      if (s.element & bit(i)) continue;
      out.base_index.push_back(i);
      q.labels.push_back(ex.labels[i]);
      q.simples.push_back(ex.simples[i]);
    }
    out.model = std::move(q);
  }
  return out;
}

QuotientCertificate certify_quotient(const CategoryModel& model, SerreSub s) {
  const auto big = serre_lattice(model);
  const auto q = quotient_model(model, s);
  const auto small = serre_lattice(q.model);
  QuotientCertificate cert;

  std::set<Mask> interval;
  for (Mask e : big.frame().elements()) {
    if (subset(s.element, e)) interval.insert(e);
  }
  std::vector<Mask> image;
  for (Mask e : small.frame().elements()) image.push_back(q.embed({e}).element);
  bool ok = std::set<Mask>(image.begin(), image.end()) == interval && image.size() == interval.size();
  for (std::size_t i = 0; ok && i < image.size(); ++i) {
    for (std::size_t j = 0; j < image.size(); ++j) {
      const Mask a = small.frame().elements()[i], b = small.frame().elements()[j];
      ok &= subset(a, b) == subset(image[i], image[j]);
    }
  }
  cert.interval_isomorphism = ok;
  if (!ok) return cert;

  const auto zbig = zariski_locale(model);
  const auto zsmall = zariski_locale(q.model);
  std::vector<std::size_t> position(image.size());
  for (std::size_t k = 0; k < image.size(); ++k) position[k] = big.frame().index_of(image[k]);
  std::set<Mask> induced;
  for (Mask u : zbig.frame.elements()) {
    Mask pulled = 0;
    for (std::size_t k = 0; k < position.size(); ++k) {
      if (u & bit(position[k])) pulled |= bit(k);
    }
    induced.insert(pulled);
  }
  const TopologySpace induced_space(zsmall.ser_poset.labels(), {induced.begin(), induced.end()});
  cert.zariski_topologies_agree =
      compare_topologies(induced_space, alexandrov(zsmall.ser_poset)) == TopologyOrder::Equal;
  return cert;
}

Mask ZariskiLocale::basic_open(SerreSub s) const {
  for (std::size_t i = 0; i < ser_elements.size(); ++i) {
    if (ser_elements[i] == s.element) return ser_poset.up(i);
  }
  throw ValidationError("not an element of the Serre lattice");
}

ZariskiLocale zariski_locale(const CategoryModel& model) {
  const auto lattice = serre_lattice(model);
  const auto elems = lattice.frame().elements();
  if (elems.size() > kMaxFrameBase) {
    throw SizeError("Serre lattice has " + std::to_string(elems.size()) + " elements; the Zariski locale allows at most " +
                    std::to_string(kMaxFrameBase));
  }
  std::vector<std::string> labels;
  std::vector<Mask> up(elems.size(), 0);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    labels.push_back(lattice.frame().format(elems[i]));
    for (std::size_t j = 0; j < elems.size(); ++j) {
      if (subset(elems[i], elems[j])) up[i] |= bit(j);
    }
  }
  auto poset = FinitePoset::from_up_sets(std::move(labels), std::move(up));
  Frame frame = upset_frame(poset);
  return ZariskiLocale{std::move(poset), std::move(frame), {elems.begin(), elems.end()}};
}

Mask basic_open(const ZariskiLocale& locale, const CategoryModel& model, const ModelObject& object) {
  return locale.basic_open({object_support(model, object)});
}

SerreSub serre_below(const CategoryModel& model, const ModelObject& object) {
  const auto lattice = serre_lattice(model);
  const Mask g = object_support(model, object);
  Mask join = 0;
  for (Mask e : lattice.frame().elements()) {
    if (e != g && subset(e, g)) join |= e;
  }
  return {join};
}

SerreLocalCheck serre_local_check(const CategoryModel& model, const ModelObject& object, int dim_bound) {
  const auto lattice = serre_lattice(model);
  const Frame& f = lattice.frame();
  const Mask g = object_support(model, object);
  SerreLocalCheck out;
  out.join_below = serre_below(model, object).element != g;

  std::vector<Mask> avoiding;
  for (Mask e : f.elements()) {
    if (!subset(g, e)) avoiding.push_back(e);
  }
  std::size_t maximal = 0;
  for (Mask e : avoiding) {
    bool is_max = true;
    for (Mask o : avoiding) is_max &= !(o != e && subset(e, o));
    maximal += is_max;
  }
  out.unique_maximal_avoiding = maximal == 1;

  if (f.size() <= kMaxFrameBase) {
    const auto z = zariski_locale(model);
    out.zariski_prime = is_prime(z.frame, z.basic_open({g}));
  }
  if (const auto* rep = std::get_if<Representation>(&object)) out.chain_test = local_by_chains(*rep, dim_bound);

  const bool agree = out.unique_maximal_avoiding == out.join_below &&
                     out.zariski_prime.value_or(out.join_below) == out.join_below &&
                     out.chain_test.value_or(out.join_below) == out.join_below;
  if (!agree) throw InvariantError("characterizations of Serre-locality disagree for " + describe(model, object));
  return out;
}

bool is_serre_local(const CategoryModel& model, const ModelObject& object) {
  return serre_local_check(model, object).local();
}

std::vector<SerreSub> serre_local_basics(const CategoryModel& model) {
  std::vector<SerreSub> out;
  for (const auto& s : serre_lattice(model).elements()) {
    if (is_serre_local(model, representative_object(model, s.element))) out.push_back(s);
  }
  return out;
}

SSimpleCheck s_simple_check(const CategoryModel& model, const Representation& a, SerreSub s, int dim_bound) {
  require_length(model, "S-simplicity");
  serre_lattice(model).check(s);
  object_support(model, a);
  SSimpleCheck out;
  int outside = 0;
  for (std::size_t v = 0; v < a.dims().size(); ++v) {
    if (!(s.element & bit(v))) outside += a.dim(v);
  }
  out.by_support = outside == 1;

  const auto in_s = [&](const std::vector<int>& dims) {
    for (std::size_t v = 0; v < dims.size(); ++v) {
      if (dims[v] != 0 && !(s.element & bit(v))) return false;
    }
    return true;
  };
  bool ok = !in_s(a.dims());
  if (ok) {
    for (const auto& sub : subrepresentations(a, dim_bound)) {
      auto d1 = tuple_dims(sub);
      auto d2 = a.dims();
      for (std::size_t v = 0; v < d2.size(); ++v) d2[v] -= d1[v];
      if (in_s(d1) == in_s(d2)) {
        ok = false;
        break;
      }
    }
  }
  out.by_enumeration = ok;
  return out;
}

bool is_s_simple(const CategoryModel& model, const Representation& a, SerreSub s, int dim_bound) {
  const auto c = s_simple_check(model, a, s, dim_bound);
  if (c.by_support != c.by_enumeration) throw InvariantError("S-simplicity criteria disagree");
  return c.by_support;
}

bool is_quasisimple(const CategoryModel& model, const Representation& a, int dim_bound) {
  require_length(model, "quasisimplicity");
  return is_s_simple(model, a, serre_below(model, a), dim_bound);
}

std::vector<SerreSub> maximal_avoiding(const CategoryModel& model, const ModelObject& object) {
  const auto lattice = serre_lattice(model);
  const Mask g = object_support(model, object);
  std::vector<Mask> avoiding;
  for (Mask e : lattice.frame().elements()) {
    if (!subset(g, e)) avoiding.push_back(e);
  }
  std::vector<SerreSub> out;
  for (Mask e : avoiding) {
    bool is_max = true;
    for (Mask o : avoiding) is_max &= !(o != e && subset(e, o));
    if (!is_max) continue;
    if (!is_prime(lattice.frame(), e)) throw InvariantError("maximal Serre subcategory avoiding an object is not prime");
    out.push_back({e});
  }
  return out;
}

bool no_intermediate_check(const CategoryModel& model, const Representation& a, SerreSub s, int dim_bound) {
  if (!is_s_simple(model, a, s, dim_bound)) throw PreconditionError("object is not simple relative to the Serre subcategory");
  const Mask upper = s.element | a.support();
  const auto lattice = serre_lattice(model);
  for (Mask e : lattice.frame().elements()) {
    if (e != s.element && e != upper && subset(s.element, e) && subset(e, upper)) return false;
  }
  return true;
}

ZieglerZariskiPrimes ziegler_zariski_primes(const SpectralModel& model) {
  const auto& spec = model.spec;
  const auto ziegler = alexandrov(spec);
  const auto zariski = alexandrov(spec.opposite());
  const std::size_t n = spec.size();
  std::map<std::size_t, Mask> zg_of, zr_of;
  bool ok = true;
  const auto collect = [&](const TopologySpace& t, std::map<std::size_t, Mask>& into) {
    for (Mask u : prime_opens(t)) {
      const Mask closed = t.full() & ~u;
      const auto x = generic_point(t, closed);
      if (!x || into.contains(*x) || t.closure(bit(*x)) != closed) {
        ok = false;
        continue;
      }
      into[*x] = u;
    }
  };
  collect(ziegler, zg_of);
  collect(zariski, zr_of);
  ZieglerZariskiPrimes out;
  ok &= zg_of.size() == n && zr_of.size() == n;
  for (std::size_t x = 0; x < n; ++x) {
    if (zg_of.contains(x) && zr_of.contains(x)) out.pairs.push_back({x, zg_of[x], zr_of[x]});
  }
  out.certified = ok && out.pairs.size() == n;
  return out;
}

}  // namespace serreloc
