#include "serreloc/subquotient.hpp"

#include <cstdint>
#include <random>

#include "serreloc/errors.hpp"

namespace serreloc {

namespace {

bool dims_leq(const std::vector<int>& a, const std::vector<int>& b) {
  for (std::size_t v = 0; v < a.size(); ++v) {
    if (a[v] > b[v]) return false;
  }
  return true;
}

void check_bound(const Representation& x, int dim_bound) {
  if (x.total_dim() > dim_bound) {
    throw SizeError("representation of total dimension " + std::to_string(x.total_dim()) +
                    " exceeds the bound " + std::to_string(dim_bound));
  }
}

void check_same_quiver(const Representation& a, const Representation& b) {
  if (a.quiver_ptr() != b.quiver_ptr() && !(a.quiver() == b.quiver())) {
    throw ValidationError("representations belong to different quivers");
  }
}

SubspaceTuple zero_tuple(const Representation& x) {
  SubspaceTuple t;
  for (int d : x.dims()) t.push_back(FpMatrix(d, 0));
  return t;
}

constexpr double kExhaustiveHomLimit = double(1 << 18);
constexpr int kSampledHomCandidates = 1 << 18;

}  // namespace

std::vector<int> tuple_dims(const SubspaceTuple& t) {
  std::vector<int> d;
  for (const auto& b : t) d.push_back(static_cast<int>(b.cols()));
  return d;
}

bool tuple_contained(const SubspaceTuple& inner, const SubspaceTuple& outer, int p) {
  for (std::size_t v = 0; v < inner.size(); ++v) {
    if (!fp::column_space_contained(inner[v], outer[v], p)) return false;
  }
  return true;
}

std::vector<SubspaceTuple> subrepresentations(const Representation& x, int dim_bound) {
  check_bound(x, dim_bound);
  const auto& q = x.quiver();
  const int p = x.characteristic();
  const std::size_t n = q.vertex_count();
  std::vector<const std::vector<FpMatrix>*> choices;
  for (std::size_t v = 0; v < n; ++v) choices.push_back(&fp::all_subspaces(x.dim(v), p));

  // Arrows whose later endpoint is v are checked once v is assigned.
  std::vector<std::vector<std::size_t>> check_at(n);
  for (std::size_t a = 0; a < q.arrows().size(); ++a) {
    const auto& arr = q.arrows()[a];
    check_at[std::max(arr.source, arr.target)].push_back(a);
  }

  std::vector<SubspaceTuple> out;
  SubspaceTuple cur(n);
  auto rec = [&](auto&& self, std::size_t v) -> void {
    if (v == n) {
      out.push_back(cur);
      return;
    }
    for (const auto& u : *choices[v]) {
      cur[v] = u;
      bool ok = true;
      for (auto a : check_at[v]) {
        const auto& arr = q.arrows()[a];
        if (!fp::column_space_contained(fp::multiply(x.map(a), cur[arr.source], p), cur[arr.target], p)) {
          ok = false;
          break;
        }
      }
      if (ok) self(self, v + 1);
    }
  };
  rec(rec, 0);
  std::stable_sort(out.begin(), out.end(), [](const SubspaceTuple& a, const SubspaceTuple& b) {
    int da = 0, db = 0;
    for (const auto& m : a) da += static_cast<int>(m.cols());
    for (const auto& m : b) db += static_cast<int>(m.cols());
    return da < db;
  });
  return out;
}

Representation subquotient(const Representation& x, const SubspaceTuple& y, const SubspaceTuple& z) {
  const int p = x.characteristic();
  const auto& q = x.quiver();
  const std::size_t n = q.vertex_count();
  std::vector<FpMatrix> coords(n);   // [Z_v | C_v]
  std::vector<int> zdim(n), qdim(n);
  for (std::size_t v = 0; v < n; ++v) {
    FpMatrix current = z[v];
    std::vector<Eigen::Index> picked;
    for (Eigen::Index c = 0; c < y[v].cols(); ++c) {
      if (!fp::column_space_contained(y[v].col(c), current, p)) {
        FpMatrix next(current.rows(), current.cols() + 1);
        next << current, y[v].col(c);
        current = std::move(next);
        picked.push_back(c);
      }
    }
    if (current.cols() != y[v].cols()) throw ValidationError("kernel tuple is not contained in the subobject");
    zdim[v] = static_cast<int>(z[v].cols());
    qdim[v] = static_cast<int>(picked.size());
    coords[v] = std::move(current);
  }
  std::vector<FpMatrix> maps;
  for (std::size_t a = 0; a < q.arrows().size(); ++a) {
    const auto& arr = q.arrows()[a];
    const FpMatrix comp = coords[arr.source].rightCols(qdim[arr.source]);
    const FpMatrix img = fp::multiply(x.map(a), comp, p);
    const auto sol = fp::solve(coords[arr.target], img, p);
    if (!sol) throw ValidationError("subobject is not stable under arrow '" + arr.name + "'");
    maps.push_back(sol->bottomRows(qdim[arr.target]));
  }
  return Representation(x.quiver_ptr(), qdim, std::move(maps));
}

FpMatrix hom_space(const Representation& m, const Representation& n) {
  check_same_quiver(m, n);
  const int p = m.characteristic();
  const auto& q = m.quiver();
  const std::size_t nv = q.vertex_count();
  std::vector<Eigen::Index> offset(nv + 1, 0);
  for (std::size_t v = 0; v < nv; ++v) offset[v + 1] = offset[v] + n.dim(v) * m.dim(v);
  const Eigen::Index vars = offset[nv];
  auto var = [&](std::size_t v, int i, int k) { return offset[v] + i * m.dim(v) + k; };

  Eigen::Index rows = 0;
  for (const auto& arr : q.arrows()) rows += n.dim(arr.target) * m.dim(arr.source);
  FpMatrix eq = FpMatrix::Zero(rows, vars);
  Eigen::Index r = 0;
  for (std::size_t a = 0; a < q.arrows().size(); ++a) {
    const auto& arr = q.arrows()[a];
    const auto& ma = m.map(a);
    const auto& na = n.map(a);
    for (int i = 0; i < n.dim(arr.target); ++i) {
      for (int j = 0; j < m.dim(arr.source); ++j, ++r) {
        // (phi_t M_a)(i,j) - (N_a phi_s)(i,j) = 0
        for (int k = 0; k < m.dim(arr.target); ++k) eq(r, var(arr.target, i, k)) += ma(k, j);
        for (int k = 0; k < n.dim(arr.source); ++k) eq(r, var(arr.source, k, j)) -= na(i, k);
      }
    }
  }
  return fp::nullspace(fp::reduce(eq, p), p);
}

int hom_dimension(const Representation& m, const Representation& n) {
  return static_cast<int>(hom_space(m, n).cols());
}

std::optional<std::vector<FpMatrix>> find_isomorphism(const Representation& m, const Representation& n) {
  check_same_quiver(m, n);
  if (m.dims() != n.dims()) return std::nullopt;
  const int p = m.characteristic();
  const std::size_t nv = m.quiver().vertex_count();
  const FpMatrix basis = hom_space(m, n);
  const auto h = basis.cols();
  if (h != hom_dimension(m, m) || h != hom_dimension(n, n)) return std::nullopt;

  auto unpack = [&](const FpMatrix& flat) {
    std::vector<FpMatrix> phi(nv);
    Eigen::Index off = 0;
    for (std::size_t v = 0; v < nv; ++v) {
      const int d = m.dim(v);
      phi[v] = FpMatrix(d, d);
      for (int i = 0; i < d; ++i) {
        for (int k = 0; k < d; ++k) phi[v](i, k) = flat(off + i * d + k, 0);
      }
      off += d * d;
    }
    return phi;
  };
  auto try_coeffs = [&](const FpMatrix& c) -> std::optional<std::vector<FpMatrix>> {
    auto phi = unpack(fp::multiply(basis, c, p));
    for (const auto& f : phi) {
      if (!fp::invertible(f, p)) return std::nullopt;
    }
    return phi;
  };

  if (m.is_zero()) return unpack(FpMatrix::Zero(0, 1));
  double combos = 1;
  for (Eigen::Index i = 0; i < h; ++i) combos *= p;
  FpMatrix c = FpMatrix::Zero(h, 1);
  if (combos <= kExhaustiveHomLimit) {
    while (true) {
      if (auto phi = try_coeffs(c)) return phi;
      Eigen::Index i = 0;
      while (i < h && ++c(i, 0) == p) c(i++, 0) = 0;
      if (i == h) break;
    }
    return std::nullopt;
  }
  std::mt19937 rng(0x5e77e);
  std::uniform_int_distribution<int> digit(0, p - 1);
  for (int t = 0; t < kSampledHomCandidates; ++t) {
    for (Eigen::Index i = 0; i < h; ++i) c(i, 0) = digit(rng);
    if (auto phi = try_coeffs(c)) return phi;
  }
  return std::nullopt;
}

bool isomorphic(const Representation& m, const Representation& n) { return find_isomorphism(m, n).has_value(); }

std::vector<Representation> isomorphism_classes(const std::vector<Representation>& reps) {
  std::vector<Representation> out;
  for (const auto& r : reps) {
    bool seen = false;
    for (const auto& c : out) {
      if (c.dims() == r.dims() && isomorphic(c, r)) {
        seen = true;
        break;
      }
    }
    if (!seen) out.push_back(r);
  }
  return out;
}

std::optional<SubquotientWitness> is_subquotient(const Representation& a, const Representation& x, int dim_bound) {
  check_same_quiver(a, x);
  check_bound(a, dim_bound);
  check_bound(x, dim_bound);
  if (a.is_zero()) {
    return SubquotientWitness{zero_tuple(x), zero_tuple(x), std::vector<FpMatrix>(a.dims().size(), FpMatrix(0, 0))};
  }
  if (!dims_leq(a.dims(), x.dims())) return std::nullopt;
  const int p = x.characteristic();
  const auto subs = subrepresentations(x, dim_bound);
  std::vector<std::vector<int>> dims;
  for (const auto& s : subs) dims.push_back(tuple_dims(s));
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (!dims_leq(a.dims(), dims[i])) continue;
    for (std::size_t j = 0; j < subs.size(); ++j) {
      bool fits = true;
      for (std::size_t v = 0; v < dims[i].size() && fits; ++v) fits = dims[i][v] - dims[j][v] == a.dim(v);
      if (!fits || !tuple_contained(subs[j], subs[i], p)) continue;
      const auto quot = subquotient(x, subs[i], subs[j]);
      if (auto iso = find_isomorphism(quot, a)) return SubquotientWitness{subs[i], subs[j], std::move(*iso)};
    }
  }
  return std::nullopt;
}

std::optional<MembershipChain> serre_membership_chain(const Representation& a, const std::vector<Representation>& gens,
                                                      int dim_bound) {
  check_bound(a, dim_bound);
  for (const auto& g : gens) {
    check_same_quiver(a, g);
    check_bound(g, dim_bound);
  }
  const int p = a.characteristic();
  const auto subs = subrepresentations(a, dim_bound);
  std::vector<int> total(subs.size(), 0);
  for (std::size_t i = 0; i < subs.size(); ++i) {
    for (int d : tuple_dims(subs[i])) total[i] += d;
  }
  // reach[i]: subobject i has a chain down to 0 with admissible factors.
  std::vector<bool> reach(subs.size(), false);
  std::vector<std::pair<std::size_t, std::size_t>> pred(subs.size(), {SIZE_MAX, SIZE_MAX});
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (total[i] == 0) {
      reach[i] = true;
      continue;
    }
    for (std::size_t j = 0; j < i && !reach[i]; ++j) {
      if (!reach[j] || total[j] >= total[i] || !tuple_contained(subs[j], subs[i], p)) continue;
      const auto factor = subquotient(a, subs[i], subs[j]);
      for (std::size_t g = 0; g < gens.size(); ++g) {
        if (!dims_leq(factor.dims(), gens[g].dims())) continue;
        if (is_subquotient(factor, gens[g], dim_bound)) {
          reach[i] = true;
          pred[i] = {j, g};
          break;
        }
      }
    }
  }
  const std::size_t top = subs.size() - 1;  // a itself is the unique largest subobject
  if (!reach[top]) return std::nullopt;
  MembershipChain chain;
  std::size_t cur = top;
  chain.chain.push_back(subs[cur]);
  while (total[cur] != 0) {
    chain.factor_generator.push_back(pred[cur].second);
    cur = pred[cur].first;
    chain.chain.push_back(subs[cur]);
  }
  return chain;
}

bool serre_membership_support(const Representation& a, const std::vector<Representation>& gens) {
  Mask allowed = 0;
  for (const auto& g : gens) allowed |= g.support();
  return subset(a.support(), allowed);
}

std::optional<Representation> common_subquotient(const Representation& a, const Representation& b) {
  check_same_quiver(a, b);
  const Mask shared = a.support() & b.support();
  if (shared == 0) return std::nullopt;
  return simple(a.quiver_ptr(), members(shared).front());
}

bool succeeds(const Representation& b, const Representation& a, int n, int dim_bound) {
  if (n < 1) throw PreconditionError("succeeds needs n >= 1");
  if (n * b.total_dim() > dim_bound) {
    throw SizeError("B^n has total dimension " + std::to_string(n * b.total_dim()) + " above the bound " +
                    std::to_string(dim_bound));
  }
  return is_subquotient(a, power(b, n), dim_bound).has_value();
}

bool is_quasifinal(const Representation& a, const std::vector<Representation>& objects, int n, int dim_bound) {
  if (a.is_zero()) return false;
  for (const auto& b : objects) {
    if (!b.is_zero() && !succeeds(b, a, n, dim_bound)) return false;
  }
  return true;
}

}  // namespace serreloc
