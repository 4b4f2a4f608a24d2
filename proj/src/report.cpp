#include "serreloc/report.hpp"

#include <algorithm>
#include <sstream>

#include "serreloc/errors.hpp"

namespace serreloc {

namespace {

Json sub_labels(const SerreLattice& l, SerreSub s) { return l.decode(s); }

const SpectralPoset& spectral_of(const Fixture& fx) {
  if (!fx.spectral) throw ValidationError("fixture '" + fx.name + "' is not a spectral model");
  return *fx.spectral;
}

}  // namespace

std::vector<std::pair<std::size_t, std::size_t>> frame_hasse(const Frame& frame) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const auto elems = frame.elements();
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (Mask up : frame.upper_covers(elems[i])) out.emplace_back(i, frame.index_of(up));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string frame_dot(const std::string& graph_name, const Frame& frame) {
  std::ostringstream os;
  os << "digraph \"" << graph_name << "\" {\n  rankdir=BT;\n";
  const auto elems = frame.elements();
  for (std::size_t i = 0; i < elems.size(); ++i) os << "  n" << i << " [label=\"" << frame.format(elems[i]) << "\"];\n";
  for (const auto& [lo, hi] : frame_hasse(frame)) os << "  n" << lo << " -> n" << hi << ";\n";
  os << "}\n";
  return os.str();
}

Json lattice_report(const Fixture& fx) {
  const auto l = serre_lattice(fx.model);
  Json elements = Json::array();
  for (const auto& s : l.elements()) elements.push_back(sub_labels(l, s));
  Json hasse = Json::array();
  for (const auto& [lo, hi] : frame_hasse(l.frame())) hasse.push_back({lo, hi});
  Json out{{"fixture", fx.name}, {"model", kind_name(fx.model)}, {"size", l.frame().size()},
           {"elements", elements}, {"hasse", hasse}};
  if (l.frame().size() <= kMaxFrameBase) {
    const auto z = zariski_locale(fx.model);
    Json basics = Json::array();
    for (const auto& s : l.elements()) {
      Json open = Json::array();
      for_each_bit(z.basic_open(s), [&](std::size_t k) { open.push_back(sub_labels(l, {z.ser_elements[k]})); });
      basics.push_back({{"element", sub_labels(l, s)}, {"basic_open", open}});
    }
    out["zariski"] = {{"opens", z.frame.size()}, {"basic_opens", basics}};
  }
  return out;
}

Json primes_report(const Fixture& fx) {
  const auto l = serre_lattice(fx.model);
  const auto r = sp(fx.model);
  Json primes = Json::array(), order = Json::array();
  for (const auto& s : r.primes) primes.push_back(sub_labels(l, s));
  for (std::size_t i = 0; i < r.primes.size(); ++i) {
    for (std::size_t j = 0; j < r.primes.size(); ++j) {
      if (i != j && subset(r.primes[i].element, r.primes[j].element)) order.push_back({i, j});
    }
  }
  Json out{{"fixture", fx.name}, {"model", kind_name(fx.model)}, {"primes", primes}, {"inclusions", order}};
  if (r.order_reversing) {
    const auto base = serre_base(fx.model);
    Json points = Json::object();
    for (std::size_t x = 0; x < base.size(); ++x) points[base.label(x)] = sub_labels(l, r.point_prime[x]);
    out["points"] = points;
    out["order_reversing"] = *r.order_reversing;
  }
  return out;
}

Json local_report(const Fixture& fx) {
  const auto l = serre_lattice(fx.model);
  const auto v = classify_local(fx.model);
  Json out{{"fixture", fx.name}, {"model", kind_name(fx.model)}, {"verdict", verdict_name(v)}};
  if (const auto* n = std::get_if<NotLocal>(&v)) {
    out["witness"] = n->witness ? Json::array({sub_labels(l, n->witness->first), sub_labels(l, n->witness->second)})
                                : Json(nullptr);
  } else if (const auto* c = std::get_if<LocalCase1>(&v)) {
    out["simple"] = c->simple;
    out["minimal_serre"] = sub_labels(l, c->minimal_serre);
  } else if (const auto* c2 = std::get_if<LocalCase2>(&v)) {
    out["minimal_serre"] = sub_labels(l, c2->minimal_serre);
  }
  return out;
}

Json quotient_report(const Fixture& fx, const std::vector<std::string>& kill) {
  const auto l = serre_lattice(fx.model);
  const FinitePoset base = serre_base(fx.model);
  const SerreSub s{base.up_closure(labels_to_mask(base, Json(kill)))};
  const auto q = quotient_model(fx.model, s);
  const auto ql = serre_lattice(q.model);
  Json embedding = Json::array();
  for (const auto& e : ql.elements()) {
    embedding.push_back({{"quotient", sub_labels(ql, e)}, {"ambient", sub_labels(l, q.embed(e))}});
  }
  const auto cert = certify_quotient(fx.model, s);
  if (!cert.interval_isomorphism || !cert.zariski_topologies_agree) {
    throw InvariantError("quotient.interval_embedding failed for " + l.format(s));
  }
  return {{"fixture", fx.name},
          {"killed", sub_labels(l, s)},
          {"quotient_model", model_to_json(q.model)},
          {"embedding", embedding},
          {"certificate",
           {{"interval_isomorphism", cert.interval_isomorphism},
            {"zariski_topologies_agree", cert.zariski_topologies_agree}}}};
}

Json pullback_json(const Fixture& fx) {
  if (!fx.functor) throw ValidationError("fixture '" + fx.name + "' does not describe a functor");
  const auto& f = *fx.functor;
  const auto src = serre_lattice(f.source);
  const auto tgt = serre_lattice(f.target);
  Json pullbacks = Json::array();
  for (const auto& t : tgt.elements()) {
    pullbacks.push_back({{"target", sub_labels(tgt, t)}, {"pullback", sub_labels(src, ser_pullback(f, t))}});
  }
  const auto r = pullback_report(f);
  Json joins = Json::array();
  for (const auto& jf : r.join_failures) {
    joins.push_back({{"left", sub_labels(tgt, jf.left)}, {"right", sub_labels(tgt, jf.right)}, {"witness", jf.witness}});
  }
  Json sps = Json::array();
  for (const auto& t : r.sp_failures) sps.push_back(sub_labels(tgt, t));
  const auto c = continuity_check(f);
  return {{"fixture", fx.name},
          {"functor", to_string(f.kind)},
          {"source", kind_name(f.source)},
          {"target", kind_name(f.target)},
          {"pullbacks", pullbacks},
          {"preserves_order", r.preserves_order},
          {"preserves_meets", r.preserves_meets},
          {"join_failures", joins},
          {"sp_failures", sps},
          {"continuity", {{"basic_preimages", c.basic_preimages}, {"zariski", c.zariski}, {"ziegler", c.ziegler}}}};
}

Json topologies_report(const Fixture& fx, std::optional<IdealFlag> flag) {
  const auto& sp = spectral_of(fx);
  std::vector<std::pair<std::string, TopologySpace>> spaces;
  for (auto f : {IdealFlag::All, IdealFlag::PP, IdealFlag::FG}) {
    spaces.emplace_back("ziegler_" + to_string(f), ziegler_type_topology(sp, f));
  }
  for (auto f : {IdealFlag::All, IdealFlag::PP, IdealFlag::FG}) {
    spaces.emplace_back("zariski_" + to_string(f), zariski_type_topology(sp, f));
  }
  spaces.emplace_back("alexandrov_up", alexandrov(sp.spec()));
  Json names = Json::array(), matrix = Json::array();
  for (const auto& [name, t] : spaces) {
    names.push_back(name);
    Json row = Json::array();
    for (const auto& [other, u] : spaces) row.push_back(to_string(compare_topologies(t, u)));
    matrix.push_back(row);
  }
  Json dual = Json::object();
  for (auto f : {IdealFlag::All, IdealFlag::PP, IdealFlag::FG}) dual[to_string(f)] = topologies_dual(sp, f);
  Json out{{"fixture", fx.name}, {"topologies", names}, {"comparison", matrix}, {"dual", dual}};
  if (flag) {
    const auto opens = [&](const TopologySpace& t) {
      Json o = Json::array();
      for (Mask m : t.opens()) o.push_back(mask_to_labels(sp.spec(), m));
      return o;
    };
    out["flag"] = to_string(*flag);
    out["ziegler_opens"] = opens(ziegler_type_topology(sp, *flag));
    out["zariski_opens"] = opens(zariski_type_topology(sp, *flag));
  }
  return out;
}

std::string topology_dot(const std::string& graph_name, const TopologySpace& t) {
  const auto q = t0_quotient(t);
  const auto order = specialisation(q.space);
  std::vector<Mask> up;
  for (std::size_t i = 0; i < order.size(); ++i) up.push_back(order.up(i));
  return hasse_dot(graph_name, FinitePoset::from_up_sets(order.labels(), up));
}

}  // namespace serreloc
