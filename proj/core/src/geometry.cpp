#include "detcount/geometry.hpp"

#include <algorithm>
#include <set>

#include "detcount/enumeration.hpp"
#include "detcount/irreducible.hpp"

namespace detcount {

std::string to_string(PointClass c) {
  switch (c) {
    case PointClass::Singular:
      return "Singular";
    case PointClass::InU:
      return "InU";
    case PointClass::NotInU:
      break;
  }
  return "NotInU";
}

namespace {

std::vector<std::vector<Integer>> spanning_vectors(const std::vector<Integer>& g) {
  std::size_t n = g.size();
  std::vector<std::vector<Integer>> ys;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      std::vector<Integer> y(n, 0);
      y[i] = g[j];
      y[j] = -g[i];
      ys.push_back(std::move(y));
    }
  return ys;
}

// Hasse second derivative: d_i d_j F for i != j, d_i^2 F / 2 for i == j.
IntPoly hasse2(const IntPoly& F, std::size_t i, std::size_t j) {
  if (i != j) return F.derivative(i).derivative(j);
  IntPoly r(F.num_vars());
  for (const auto& [e, c] : F.terms()) {
    if (e[i] < 2) continue;
    Exponents f = e;
    f[i] -= 2;
    r.add_term(f, c * (static_cast<unsigned long>(e[i]) * (e[i] - 1) / 2));
  }
  return r;
}

}  // namespace

TangentData tangent_data(const IntPoly& F, const std::vector<Integer>& x) {
  if (F.num_vars() != 4) throw Error("tangent data is defined for surfaces in P^3");
  TangentData t;
  t.gradient.resize(4);
  for (std::size_t i = 0; i < 4; ++i) t.gradient[i] = F.derivative(i).eval(x);
  t.hessian.assign(4, std::vector<Integer>(4));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      t.hessian[i][j] = F.derivative(i).derivative(j).eval(x);
  auto ys = spanning_vectors(t.gradient);
  for (std::size_t k = 0; k < 6; ++k) {
    t.y[k] = ys[k];
    Integer s = 0;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) s += ys[k][i] * t.hessian[i][j] * ys[k][j];
    t.twoQ[k] = s;
  }
  return t;
}

PointClass classify_point(const IntPoly& F, const std::vector<Integer>& x,
                          const std::optional<Integer>& p) {
  std::size_t n = F.num_vars();
  if (x.size() != n) throw Error("point has the wrong number of coordinates");
  auto reduce = [&](Integer v) { return p ? mod_pos(v, *p) : v; };
  auto value = [&](const IntPoly& G) { return p ? G.eval_mod(x, *p) : G.eval(x); };
  if (p && !is_prime(*p)) throw Error("modulus is not prime");
  if (sgn(value(F)) != 0) throw Error("point not on surface");
  std::vector<Integer> g(n);
  bool singular = true;
  for (std::size_t i = 0; i < n; ++i) {
    g[i] = value(F.derivative(i));
    if (sgn(g[i]) != 0) singular = false;
  }
  if (singular) return PointClass::Singular;
  Matrix H(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) H[i][j] = value(hasse2(F, i, j));
  auto Q = [&](const std::vector<Integer>& y) {
    Integer s = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) s += H[i][j] * y[i] * y[j];
    return reduce(s);
  };
  auto ys = spanning_vectors(g);
  for (std::size_t a = 0; a < ys.size(); ++a) {
    if (sgn(Q(ys[a])) != 0) return PointClass::InU;
    for (std::size_t b = a + 1; b < ys.size(); ++b) {
      std::vector<Integer> s(n);
      for (std::size_t i = 0; i < n; ++i) s[i] = ys[a][i] + ys[b][i];
      if (sgn(Q(s)) != 0) return PointClass::InU;
    }
  }
  return PointClass::NotInU;
}

std::vector<std::vector<Integer>> points_of_height(std::size_t n1, unsigned long h) {
  std::vector<std::vector<Integer>> out;
  if (h == 0 || n1 == 0) return out;
  long H = static_cast<long>(h);
  std::vector<long> v(n1, -H);
  for (;;) {
    long mx = 0;
    for (long x : v) mx = std::max(mx, std::labs(x));
    int first = 0;
    for (long x : v)
      if (x != 0) {
        first = x > 0 ? 1 : -1;
        break;
      }
    if (mx == H && first > 0) {
      std::vector<Integer> w(v.begin(), v.end());
      if (gcd_of(w) == 1) out.push_back(std::move(w));
    }
    std::size_t i = n1;
    while (i > 0 && v[i - 1] == H) v[--i] = -H;
    if (i == 0) break;
    ++v[i - 1];
  }
  auto nz = [](const std::vector<Integer>& w) {
    return std::count_if(w.begin(), w.end(), [](const Integer& x) { return sgn(x) != 0; });
  };
  std::stable_sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    auto na = nz(a), nb = nz(b);
    if (na != nb) return na < nb;
    return a > b;
  });
  return out;
}

std::optional<ProjPoint> find_U_point(const IntPoly& F, unsigned long cap) {
  if (!F.is_homogeneous() || F.degree() < 2) throw Error("find_U_point needs a form of degree >= 2");
  for (unsigned long h = 1; h <= cap; ++h)
    for (const auto& x : points_of_height(F.num_vars(), h))
      if (sgn(F.eval(x)) == 0 && classify_point(F, x) == PointClass::InU)
        return normalize_primitive(x);
  return std::nullopt;
}

std::pair<Matrix, Matrix> unimodular_with_last_row(const std::vector<Integer>& a) {
  std::size_t n = a.size();
  if (gcd_of(a) != 1) throw Error("hyperplane vector must be primitive");
  std::vector<Integer> row = a;
  Matrix V(n, std::vector<Integer>(n)), W(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i) V[i][i] = W[i][i] = 1;
  // Column operations on the row vector; V accumulates them and W their
  // inverse, so that row * V = e_0 and W = V^{-1}.
  auto col_sub = [&](std::size_t j, std::size_t k, const Integer& q) {
    row[j] -= q * row[k];
    for (std::size_t r = 0; r < n; ++r) V[r][j] -= q * V[r][k];
    for (std::size_t c = 0; c < n; ++c) W[k][c] += q * W[j][c];
  };
  auto col_swap = [&](std::size_t j, std::size_t k) {
    std::swap(row[j], row[k]);
    for (std::size_t r = 0; r < n; ++r) std::swap(V[r][j], V[r][k]);
    std::swap(W[j], W[k]);
  };
  for (;;) {
    std::size_t best = n;
    for (std::size_t j = 0; j < n; ++j)
      if (sgn(row[j]) != 0 && (best == n || cmpabs(row[j], row[best]) < 0)) best = j;
    if (best != 0) col_swap(0, best);
    bool more = false;
    for (std::size_t j = 1; j < n; ++j) {
      if (sgn(row[j]) == 0) continue;
      col_sub(j, 0, row[j] / row[0]);
      if (sgn(row[j]) != 0) more = true;
    }
    if (!more) break;
  }
  if (row[0] == -1) {
    row[0] = 1;
    for (std::size_t r = 0; r < n; ++r) V[r][0] = -V[r][0];
    for (auto& x : W[0]) x = -x;
  }
  Matrix U, Uinv(n, std::vector<Integer>(n));
  for (std::size_t i = 1; i < n; ++i) U.push_back(W[i]);
  U.push_back(W[0]);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 1; c < n; ++c) Uinv[r][c - 1] = V[r][c];
    Uinv[r][n - 1] = V[r][0];
  }
  return {U, Uinv};
}

SectionSearch find_integral_section(const IntPoly& F, unsigned long cap) {
  if (!F.is_homogeneous()) throw Error("find_integral_section needs a form");
  if (F.degree() < 2) throw Error("find_integral_section needs degree >= 2");
  std::size_t n = F.num_vars();
  if (n < 3) throw Error("hyperplane sections need at least three variables");
  SectionSearch out;
  for (unsigned long h = 1; h <= cap; ++h) {
    for (const auto& a : points_of_height(n, h)) {
      ++out.tried;
      auto [U, Uinv] = unimodular_with_last_row(a);
      std::vector<IntPoly> images;
      for (std::size_t i = 0; i < n; ++i) {
        IntPoly l(n);
        for (std::size_t j = 0; j < n; ++j) {
          Exponents e(n, 0);
          e[j] = 1;
          l.add_term(e, Uinv[i][j]);
        }
        images.push_back(std::move(l));
      }
      IntPoly G = F.compose(images).eliminate_var(n - 1, 0);
      if (G.is_zero()) {
        ++out.reducible;
        continue;
      }
      auto verdict = is_absolutely_irreducible(G);
      if (verdict.verdict == Verdict::Yes && G.degree() == F.degree()) {
        out.section = IntegralSection{a, U, Uinv, G, verdict.certificate};
        return out;
      }
      if (verdict.verdict == Verdict::No)
        ++out.reducible;
      else
        ++out.unknown;
    }
  }
  return out;
}

ProjectionSetup make_projection(const std::vector<std::vector<Integer>>& h0) {
  ProjectionSetup s;
  if (h0.empty()) {
    s.lambda = 1;
    s.c = 1;
    return s;
  }
  std::size_t n1 = h0[0].size();
  s.N = n1 - 1;
  for (const auto& v : h0) {
    if (v.size() != n1) throw Error("centre points have different lengths");
    s.h.push_back(primitive_vector(v));
  }
  if (rank(s.h) != s.h.size()) throw Error("centre points are dependent");
  std::size_t k = s.h.size();
  for (std::size_t i = 0; i < k; ++i) {
    Matrix others;
    for (std::size_t j = 0; j < k; ++j)
      if (j != i) others.push_back(s.h[j]);
    auto ns = nullspace(others, n1);
    std::optional<std::vector<Integer>> best;
    for (auto& v : ns) {
      if (sgn(dot(v, s.h[i])) == 0) continue;
      if (!best || cmpabs(max_abs(v), max_abs(*best)) < 0) best = v;
    }
    if (!best) throw Error("no dual vector for centre point");
    s.g.push_back(primitive_vector(*best));
  }
  s.lambda = 1;
  for (std::size_t i = 0; i < k; ++i) s.lambda *= dot(s.g[i], s.h[i]);
  s.c = abs(s.lambda);
  for (std::size_t j = 0; j < k; ++j) {
    Integer lj = 1;
    for (std::size_t i = 0; i < k; ++i)
      if (i != j) lj *= dot(s.g[i], s.h[i]);
    s.lambda_j.push_back(lj);
    s.c += Integer(static_cast<unsigned long>(n1)) * abs(lj) * max_abs(s.g[j]) * max_abs(s.h[j]);
  }
  return s;
}

bool in_center(const ProjectionSetup& s, const std::vector<Integer>& x) {
  if (s.h.empty()) return false;
  Matrix m = s.h;
  m.push_back(x);
  return rank(m) == s.h.size();
}

ProjPoint project_point(const ProjectionSetup& s, const ProjPoint& x) {
  std::vector<Integer> v(x.coords().begin(), x.coords().end());
  if (!s.h.empty() && v.size() != s.h[0].size()) throw Error("point has the wrong dimension");
  for (auto& c : v) c *= s.lambda;
  for (std::size_t i = 0; i < s.h.size(); ++i) {
    Integer f = s.lambda_j[i] * dot(s.g[i], x.coords());
    for (std::size_t k = 0; k < v.size(); ++k) v[k] -= f * s.h[i][k];
  }
  bool zero = std::all_of(v.begin(), v.end(), [](const Integer& c) { return sgn(c) == 0; });
  if (zero) throw Error("center of projection");
  return normalize_primitive(std::move(v));
}

std::optional<ProjectionSetup> find_projection(const std::vector<IntPoly>& gens,
                                               std::size_t m, unsigned long cap) {
  if (gens.empty()) throw Error("variety needs generators");
  std::size_t n1 = gens[0].num_vars();
  if (m + 2 > n1) throw Error("variety dimension too large for the ambient space");
  std::size_t k = n1 - m - 2;
  std::vector<std::vector<Integer>> chosen;
  for (unsigned long h = 1; h <= cap && chosen.size() < k; ++h) {
    for (const auto& x : points_of_height(n1, h)) {
      if (chosen.size() == k) break;
      bool on = std::all_of(gens.begin(), gens.end(),
                            [&](const IntPoly& G) { return sgn(G.eval(x)) == 0; });
      if (on) continue;
      Matrix t = chosen;
      t.push_back(x);
      if (rank(t) != t.size()) continue;
      chosen.push_back(x);
    }
  }
  if (chosen.size() < k) return std::nullopt;
  ProjectionSetup s = make_projection(chosen);
  s.N = n1 - 1;
  return s;
}

BirationalityReport sample_birationality_check(const ProjectionSetup& s,
                                               const std::vector<ProjPoint>& points,
                                               std::size_t degree) {
  BirationalityReport r;
  std::map<ProjPoint, std::size_t> fibres;
  for (const auto& x : points) {
    if (in_center(s, x.coords())) {
      ++r.skipped_center;
      continue;
    }
    ProjPoint y = project_point(s, x);
    ++r.points;
    ++fibres[y];
    Integer hx = x.height(), hy = y.height();
    if (hy > s.c * hx) r.height_ok = false;
    if (hy * r.max_ratio_den > r.max_ratio_num * hx) {
      r.max_ratio_num = hy;
      r.max_ratio_den = hx;
    }
  }
  std::size_t crowded = 0;
  for (const auto& [y, n] : fibres) {
    ++r.histogram[n];
    if (n > 1) crowded += n;
    if (n > degree && !r.bad_fibre) {
      r.ok = false;
      r.bad_fibre = y;
    }
  }
  r.collapsed = 2 * crowded > r.points;
  Integer g = gcd(r.max_ratio_num, r.max_ratio_den);
  if (g > 1) {
    r.max_ratio_num /= g;
    r.max_ratio_den /= g;
  }
  return r;
}

std::vector<ProjPoint> variety_points(const std::vector<IntPoly>& gens, const Integer& B) {
  if (gens.empty()) throw Error("variety needs generators");
  EnumOptions opt;
  opt.collect_points = true;
  auto res = count_projective(gens[0], B, opt);
  std::set<ProjPoint> out;
  for (const auto& p : res.points) {
    bool on = true;
    for (std::size_t i = 1; i < gens.size() && on; ++i) on = sgn(gens[i].eval(p)) == 0;
    if (on) out.insert(normalize_primitive(p));
  }
  return {out.begin(), out.end()};
}

std::optional<std::vector<Integer>> containing_hyperplane(const std::vector<ProjPoint>& points,
                                                          std::size_t n1) {
  Matrix m;
  for (const auto& p : points) m.push_back(p.coords());
  auto ns = nullspace(m, n1);
  if (ns.empty()) return std::nullopt;
  return ns[0];
}

ProjPoint drop_coordinate(const ProjPoint& x, std::size_t i) {
  std::vector<Integer> v;
  for (std::size_t k = 0; k < x.size(); ++k)
    if (k != i) v.push_back(x[k]);
  return normalize_primitive(std::move(v));
}

}  // namespace detcount
