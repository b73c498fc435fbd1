#include "detcount/irreducible.hpp"

#include <random>

#include "detcount/graded.hpp"
#include "detcount/linalg.hpp"

namespace detcount {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes:
      return "Yes";
    case Verdict::No:
      return "No";
    case Verdict::Unknown:
      break;
  }
  return "Unknown";
}

std::size_t quadric_rank(const IntPoly& q) {
  if (!q.is_homogeneous() || q.degree() != 2) throw Error("quadric_rank needs a quadratic form");
  std::size_t n = q.num_vars();
  Matrix m(n, std::vector<Integer>(n));
  for (const auto& [e, c] : q.terms()) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      for (unsigned k = 0; k < e[i]; ++k) idx.push_back(i);
    if (idx[0] == idx[1]) {
      m[idx[0]][idx[0]] += 2 * c;
    } else {
      m[idx[0]][idx[1]] += c;
      m[idx[1]][idx[0]] += c;
    }
  }
  return rank(std::move(m));
}

std::size_t essential_variables(const IntPoly& F) {
  if (F.is_zero() || !F.is_homogeneous()) throw Error("essential_variables needs a nonzero form");
  int d = F.degree();
  std::size_t n = F.num_vars();
  if (d == 0) return 0;
  Matrix rows;
  for (const auto& alpha : monomials_of_degree(n, static_cast<unsigned>(d - 1))) {
    IntPoly g = F;
    for (std::size_t i = 0; i < n && !g.is_zero(); ++i)
      for (unsigned k = 0; k < alpha[i] && !g.is_zero(); ++k) g = g.derivative(i);
    if (g.is_zero()) continue;
    std::vector<Integer> row(n);
    for (const auto& [e, c] : g.terms())
      for (std::size_t i = 0; i < n; ++i)
        if (e[i]) row[i] = c;
    rows.push_back(std::move(row));
  }
  return rank(std::move(rows));
}

bool is_nonsingular_plane_curve(const IntPoly& G) {
  if (G.num_vars() != 3 || !G.is_homogeneous() || G.degree() < 1)
    throw Error("plane curve must be a ternary form of positive degree");
  int d = G.degree();
  if (d == 1) return true;
  std::vector<IntPoly> partials;
  for (std::size_t i = 0; i < 3; ++i) partials.push_back(G.derivative(i));
  return graded_piece_basis(partials, {}, 3 * d - 5).dimension() == 0;
}

namespace {

// Enumerates primitive integer vectors with entries in [-h, h] and canonical
// sign, calling f until it returns true.
template <class Fn>
bool for_each_small_vector(std::size_t n, int h, Fn&& f) {
  std::vector<int> v(n, -h);
  for (;;) {
    std::vector<Integer> w(v.begin(), v.end());
    Integer g = gcd_of(w);
    if (g == 1) {
      int s = 0;
      for (int x : v)
        if ((s = (x > 0) - (x < 0)) != 0) break;
      if (s > 0 && f(w)) return true;
    }
    std::size_t i = 0;
    while (i < n && v[i] == h) v[i++] = -h;
    if (i == n) return false;
    ++v[i];
  }
}

IntPoly linear_form(const std::vector<Integer>& a) {
  IntPoly l(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    Exponents e(a.size(), 0);
    e[i] = 1;
    l.add_term(e, a[i]);
  }
  return l;
}

}  // namespace

IrreducibilityResult is_absolutely_irreducible(const IntPoly& F0,
                                               const IrreducibilityOptions& opt) {
  if (F0.is_zero() || F0.degree() < 1) throw Error("irreducibility needs a nonconstant polynomial");
  IntPoly F = F0.is_homogeneous() ? F0 : homogenize(F0, F0.degree());
  F = F.primitive_part();
  std::size_t n = F.num_vars();
  int d = F.degree();
  IrreducibilityResult res;

  if (d == 1) {
    res.verdict = Verdict::Yes;
    res.certificate = "degree 1";
    return res;
  }
  if (d == 2) {
    std::size_t r = quadric_rank(F);
    res.verdict = r >= 3 ? Verdict::Yes : Verdict::No;
    res.certificate = "quadric rank " + std::to_string(r);
    if (r >= 3) return res;
  }
  if (res.verdict != Verdict::No) {
    std::size_t ess = essential_variables(F);
    if (ess <= 2) {
      res.verdict = Verdict::No;
      res.certificate = "binary form in " + std::to_string(ess) + " essential variables";
    }
  }
  // A rational linear factor is an explicit witness; look for one even when
  // a structural certificate already says No.
  bool found = for_each_small_vector(n, opt.factor_height, [&](const std::vector<Integer>& a) {
    IntPoly l = linear_form(a);
    if (divides(l, F)) {
      res.factor = l;
      return true;
    }
    return false;
  });
  if (found) {
    res.verdict = Verdict::No;
    if (res.certificate.empty()) res.certificate = "linear factor";
    return res;
  }
  if (res.verdict == Verdict::No) return res;
  if (n < 3) return res;

  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<int> dist(-opt.section_height, opt.section_height);
  for (int attempt = 0; attempt < opt.sections; ++attempt) {
    Matrix L(n, std::vector<Integer>(3));
    if (attempt == 0 && n == 3) {
      for (std::size_t i = 0; i < 3; ++i) L[i][i] = 1;
    } else {
      for (auto& row : L)
        for (auto& x : row) x = dist(rng);
    }
    if (rank(L) < 3) continue;
    std::vector<IntPoly> images;
    for (std::size_t i = 0; i < n; ++i) images.push_back(linear_form(L[i]));
    IntPoly G = F.compose(images);
    if (G.is_zero() || G.degree() != d) continue;
    if (is_nonsingular_plane_curve(G)) {
      res.verdict = Verdict::Yes;
      res.certificate = "nonsingular plane section";
      return res;
    }
  }
  return res;
}

}  // namespace detcount
