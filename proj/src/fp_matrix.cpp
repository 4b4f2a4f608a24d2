#include "serreloc/fp_matrix.hpp"

#include <map>
#include <mutex>
#include <utility>

#include "serreloc/errors.hpp"

namespace serreloc::fp {

int inverse(int a, int p) {
  a = mod(a, p);
  if (a == 0) throw PreconditionError("zero has no inverse");
  for (int x = 1; x < p; ++x) {
    if (mod(static_cast<long long>(a) * x, p) == 1) return x;
  }
  throw PreconditionError("modulus is not prime");
}

Echelon row_echelon(FpMatrix m, int p) {
  m = reduce(m, p);
  Echelon e;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index piv = row;
    while (piv < m.rows() && m(piv, col) == 0) ++piv;
    if (piv == m.rows()) continue;
    m.row(row).swap(m.row(piv));
    const int inv = inverse(m(row, col), p);
    m.row(row) = reduce(m.row(row) * inv, p);
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (r != row && m(r, col) != 0) {
        const int f = m(r, col);
        m.row(r) = reduce(m.row(r) - f * m.row(row), p);
      }
    }
    e.pivots.push_back(col);
    ++row;
  }
  e.rref = std::move(m);
  return e;
}

Eigen::Index rank(const FpMatrix& m, int p) {
  if (m.size() == 0) return 0;
  return static_cast<Eigen::Index>(row_echelon(m, p).pivots.size());
}

FpMatrix nullspace(const FpMatrix& m, int p) {
  const Eigen::Index n = m.cols();
  const auto e = row_echelon(m, p);
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (auto c : e.pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<Eigen::Index> free;
  for (Eigen::Index c = 0; c < n; ++c) {
    if (!is_pivot[static_cast<std::size_t>(c)]) free.push_back(c);
  }
  FpMatrix basis = FpMatrix::Zero(n, static_cast<Eigen::Index>(free.size()));
  for (std::size_t k = 0; k < free.size(); ++k) {
    const auto f = free[k];
    const auto col = static_cast<Eigen::Index>(k);
    basis(f, col) = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      basis(e.pivots[r], col) = mod(-e.rref(static_cast<Eigen::Index>(r), f), p);
    }
  }
  return basis;
}

std::optional<FpMatrix> solve(const FpMatrix& a, const FpMatrix& b, int p) {
  const Eigen::Index n = a.cols();
  FpMatrix aug(a.rows(), n + b.cols());
  aug << a, b;
  const auto e = row_echelon(aug, p);
  FpMatrix x = FpMatrix::Zero(n, b.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] >= n) return std::nullopt;
    x.row(e.pivots[r]) = e.rref.row(static_cast<Eigen::Index>(r)).tail(b.cols());
  }
  return x;
}

std::optional<FpMatrix> inverse(const FpMatrix& m, int p) {
  if (m.rows() != m.cols()) return std::nullopt;
  if (!invertible(m, p)) return std::nullopt;
  return solve(m, FpMatrix::Identity(m.rows(), m.cols()), p);
}

FpMatrix canonical_basis(const FpMatrix& m, int p) {
  if (m.cols() == 0) return FpMatrix(m.rows(), 0);
  const auto e = row_echelon(m.transpose(), p);
  const auto k = static_cast<Eigen::Index>(e.pivots.size());
  return e.rref.topRows(k).transpose();
}

bool column_space_contained(const FpMatrix& a, const FpMatrix& b, int p) {
  if (a.cols() == 0) return true;
  FpMatrix both(b.rows(), b.cols() + a.cols());
  both << b, a;
  return rank(both, p) == rank(b, p);
}

namespace {

void emit_rref(int n, int p, int k, std::vector<FpMatrix>& out) {
  // Choose pivot columns, then fill the free entries of every row.
  std::vector<int> piv(static_cast<std::size_t>(k));
  auto rec_pivots = [&](auto&& self, int idx, int start) -> void {
    if (idx == k) {
      std::vector<std::pair<int, int>> free_cells;
      for (int r = 0; r < k; ++r) {
        for (int c = piv[static_cast<std::size_t>(r)] + 1; c < n; ++c) {
          bool is_piv = false;
          for (int q : piv) is_piv |= (q == c);
          if (!is_piv) free_cells.emplace_back(r, c);
        }
      }
      const std::size_t cells = free_cells.size();
      std::vector<int> digits(cells, 0);
      while (true) {
        FpMatrix rows = FpMatrix::Zero(k, n);
        for (int r = 0; r < k; ++r) rows(r, piv[static_cast<std::size_t>(r)]) = 1;
        for (std::size_t i = 0; i < cells; ++i) rows(free_cells[i].first, free_cells[i].second) = digits[i];
        out.push_back(rows.transpose());
        std::size_t i = 0;
        while (i < cells && ++digits[i] == p) digits[i++] = 0;
        if (i == cells) break;
      }
      return;
    }
    for (int c = start; c < n; ++c) {
      piv[static_cast<std::size_t>(idx)] = c;
      self(self, idx + 1, c + 1);
    }
  };
  rec_pivots(rec_pivots, 0, 0);
}

}  // namespace

const std::vector<FpMatrix>& all_subspaces(int n, int p) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::vector<FpMatrix>> cache;
  std::lock_guard lock(mu);
  auto [it, inserted] = cache.try_emplace({n, p});
  if (inserted) {
    for (int k = 0; k <= n; ++k) emit_rref(n, p, k, it->second);
  }
  return it->second;
}

FpMatrix complement_basis(const FpMatrix& basis, int n, int p) {
  FpMatrix current = basis;
  std::vector<Eigen::Index> added;
  for (Eigen::Index i = 0; i < n; ++i) {
    FpMatrix e = FpMatrix::Zero(n, 1);
    e(i, 0) = 1;
    if (!column_space_contained(e, current, p)) {
      FpMatrix next(n, current.cols() + 1);
      next << current, e;
      current = std::move(next);
      added.push_back(i);
    }
  }
  FpMatrix out = FpMatrix::Zero(n, static_cast<Eigen::Index>(added.size()));
  for (std::size_t k = 0; k < added.size(); ++k) out(added[k], static_cast<Eigen::Index>(k)) = 1;
  return out;
}

}  // namespace serreloc::fp
