#include "detcount/linalg.hpp"

#include <algorithm>

namespace detcount {

Integer determinant(Matrix a) {
  std::size_t n = a.size();
  for (const auto& r : a)
    if (r.size() != n) throw Error("determinant of a non-square matrix");
  if (n == 0) return 1;
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(a[k][k]) == 0) {
      std::size_t s = k + 1;
      while (s < n && sgn(a[s][k]) == 0) ++s;
      if (s == n) return 0;
      std::swap(a[k], a[s]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  Integer d = a[n - 1][n - 1];
  return sign < 0 ? Integer(-d) : d;
}

namespace {

// Fraction-free echelon form in place; returns pivot columns.
std::vector<std::size_t> echelon(Matrix& a) {
  std::vector<std::size_t> piv;
  if (a.empty()) return piv;
  std::size_t m = a.size(), n = a[0].size();
  std::size_t r = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t s = r;
    while (s < m && sgn(a[s][c]) == 0) ++s;
    if (s == m) continue;
    std::swap(a[r], a[s]);
    for (std::size_t i = r + 1; i < m; ++i) {
      for (std::size_t j = c + 1; j < n; ++j) {
        Integer t = a[i][j] * a[r][c] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    piv.push_back(c);
    ++r;
  }
  return piv;
}

}  // namespace

std::size_t rank(Matrix a) { return echelon(a).size(); }

std::size_t rank_mod_p(Matrix a, const Integer& p) {
  if (!is_prime(p)) throw Error("modulus is not prime");
  for (auto& row : a)
    for (auto& x : row) x = mod_pos(x, p);
  std::size_t cols = a.empty() ? 0 : a[0].size();
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < a.size(); ++c) {
    std::size_t s = row;
    while (s < a.size() && sgn(a[s][c]) == 0) ++s;
    if (s == a.size()) continue;
    std::swap(a[row], a[s]);
    Integer inv;
    mpz_invert(inv.get_mpz_t(), a[row][c].get_mpz_t(), p.get_mpz_t());
    for (std::size_t j = c; j < cols; ++j) a[row][j] = mod_pos(a[row][j] * inv, p);
    for (std::size_t i = row + 1; i < a.size(); ++i) {
      if (sgn(a[i][c]) == 0) continue;
      Integer f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] = mod_pos(a[i][j] - f * a[row][j], p);
    }
    ++row;
  }
  return row;
}

std::vector<std::vector<Integer>> nullspace(const Matrix& a, std::size_t cols) {
  std::vector<std::vector<Rational>> r(a.size(), std::vector<Rational>(cols));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != cols) throw Error("ragged matrix");
    for (std::size_t j = 0; j < cols; ++j) r[i][j] = a[i][j];
  }
  // Reduced row echelon over Q.
  std::vector<std::size_t> piv;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < r.size(); ++c) {
    std::size_t s = row;
    while (s < r.size() && sgn(r[s][c]) == 0) ++s;
    if (s == r.size()) continue;
    std::swap(r[row], r[s]);
    Rational inv = 1 / r[row][c];
    for (std::size_t j = c; j < cols; ++j) r[row][j] *= inv;
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i == row || sgn(r[i][c]) == 0) continue;
      Rational f = r[i][c];
      for (std::size_t j = c; j < cols; ++j)
        if (sgn(r[row][j]) != 0) r[i][j] -= f * r[row][j];
    }
    piv.push_back(c);
    ++row;
  }
  std::vector<bool> is_piv(cols, false);
  for (auto c : piv) is_piv[c] = true;
  std::vector<std::vector<Integer>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_piv[f]) continue;
    std::vector<Rational> v(cols);
    v[f] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -r[i][f];
    Integer l = 1;
    for (const auto& x : v) l = lcm(l, Integer(x.get_den()));
    std::vector<Integer> iv(cols);
    for (std::size_t j = 0; j < cols; ++j) {
      Rational t = v[j] * l;
      iv[j] = t.get_num();
    }
    basis.push_back(primitive_vector(std::move(iv)));
  }
  return basis;
}

std::vector<std::vector<Integer>> lattice_kernel(const Matrix& a,
                                                 std::size_t cols) {
  // Column operations on [A; I]; columns whose A-part vanishes at the end
  // carry a kernel basis in their I-part.
  std::size_t m = a.size();
  std::vector<std::vector<Integer>> c(cols, std::vector<Integer>(m + cols));
  for (std::size_t j = 0; j < cols; ++j) {
    for (std::size_t i = 0; i < m; ++i) c[j][i] = a[i][j];
    c[j][m + j] = 1;
  }
  std::size_t done = 0;
  for (std::size_t i = 0; i < m && done < cols; ++i) {
    // Euclid across columns [done, cols) on row i.
    for (;;) {
      std::size_t best = cols;
      for (std::size_t j = done; j < cols; ++j)
        if (sgn(c[j][i]) != 0 &&
            (best == cols || cmpabs(c[j][i], c[best][i]) < 0))
          best = j;
      if (best == cols) break;
      std::swap(c[done], c[best]);
      bool reduced = false;
      for (std::size_t j = done + 1; j < cols; ++j) {
        if (sgn(c[j][i]) == 0) continue;
        Integer q = c[j][i] / c[done][i];
        for (std::size_t k = 0; k < m + cols; ++k) c[j][k] -= q * c[done][k];
        if (sgn(c[j][i]) != 0) reduced = true;
      }
      if (!reduced) {
        ++done;
        break;
      }
    }
  }
  std::vector<std::vector<Integer>> out;
  for (std::size_t j = done; j < cols; ++j)
    out.emplace_back(c[j].begin() + static_cast<long>(m), c[j].end());
  return out;
}

Integer dot(const std::vector<Integer>& a, const std::vector<Integer>& b) {
  if (a.size() != b.size()) throw Error("dot product length mismatch");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

namespace {

void make_primitive(SparseEchelon::Row& r) {
  Integer g = 0;
  for (const auto& [c, v] : r) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) return;
  }
  if (g > 1)
    for (auto& [c, v] : r) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

// r := lead(p) * r - r[col] * p, then drop zeros and divide out content.
void eliminate(SparseEchelon::Row& r, std::size_t col,
               const SparseEchelon::Row& p) {
  const Integer& pl = p.begin()->second;
  Integer f = r.at(col);
  Integer g = gcd(pl, f);
  Integer a = pl / g, b = f / g;
  if (a != 1)
    for (auto& [c, v] : r) v *= a;
  for (const auto& [c, v] : p) {
    auto it = r.find(c);
    if (it == r.end()) {
      r.emplace(c, -b * v);
    } else {
      it->second -= b * v;
      if (sgn(it->second) == 0) r.erase(it);
    }
  }
  if (a != 1) make_primitive(r);
}

}  // namespace

SparseEchelon::Row SparseEchelon::reduce(Row r) const {
  auto it = r.begin();
  while (it != r.end()) {
    auto pit = rows_.find(it->first);
    if (pit == rows_.end()) {
      ++it;
      continue;
    }
    std::size_t col = it->first;
    eliminate(r, col, pit->second);
    it = r.upper_bound(col);
  }
  return r;
}

bool SparseEchelon::insert(Row r) {
  for (;;) {
    if (r.empty()) return false;
    auto pit = rows_.find(r.begin()->first);
    if (pit == rows_.end()) break;
    eliminate(r, r.begin()->first, pit->second);
  }
  make_primitive(r);
  rows_.emplace(r.begin()->first, std::move(r));
  return true;
}

}  // namespace detcount
