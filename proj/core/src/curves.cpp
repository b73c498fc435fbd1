#include "detcount/curves.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "detcount/linalg.hpp"

namespace detcount {

LineResult line_points(const ProjPoint& p1, const ProjPoint& p2,
                       const Integer& B) {
  if (p1.size() != 4 || p2.size() != 4) throw Error("line_points works in P^3");
  if (p1 == p2) throw Error("points coincide; they do not span a line");
  Matrix span{p1.coords(), p2.coords()};
  auto normals = nullspace(span, 4);
  auto basis = lattice_kernel(normals, 4);
  if (basis.size() != 2) throw Error("points do not span a line");
  const auto& u = basis[0];
  const auto& v = basis[1];
  LineResult res;
  Integer x, y;
  Integer g = ext_gcd(u[0], v[0], x, y);
  if (g != 1) {
    res.at_most_one = true;
    return res;
  }
  std::vector<Integer> s(4), t(4);
  for (std::size_t i = 0; i < 4; ++i) {
    s[i] = v[0] * u[i] - u[0] * v[i];
    t[i] = x * u[i] + y * v[i];
  }
  s = primitive_vector(std::move(s));
  // Reduce the base point along the first nonzero step coordinate.
  std::size_t k = 1;
  while (sgn(s[k]) == 0) ++k;
  Integer n0 = floor_div(t[k], s[k]);
  for (std::size_t i = 0; i < 4; ++i) t[i] -= n0 * s[i];

  LineParam lp;
  for (std::size_t i = 0; i < 3; ++i) {
    lp.base[i] = t[i + 1];
    lp.step[i] = s[i + 1];
  }
  res.param = lp;

  bool empty = false;
  Integer lo, hi;
  bool bounded = false;
  for (std::size_t i = 0; i < 3; ++i) {
    const Integer& si = lp.step[i];
    const Integer& ti = lp.base[i];
    if (sgn(si) == 0) {
      if (cmpabs(ti, B) > 0) empty = true;
      continue;
    }
    Integer a = -B - ti, b = B - ti;
    Integer l = sgn(si) > 0 ? ceil_div(a, si) : ceil_div(b, si);
    Integer h = sgn(si) > 0 ? floor_div(b, si) : floor_div(a, si);
    if (!bounded) {
      lo = l;
      hi = h;
      bounded = true;
    } else {
      lo = std::max(lo, l);
      hi = std::min(hi, h);
    }
  }
  if (!empty && lo <= hi) {
    for (Integer n = lo; n <= hi; ++n) {
      Point3 p;
      for (std::size_t i = 0; i < 3; ++i) p[i] = lp.base[i] + n * lp.step[i];
      res.points.push_back(p);
    }
  }
  std::sort(res.points.begin(), res.points.end());
  res.count = static_cast<unsigned long>(res.points.size());
  res.at_most_one = res.count <= 1;
  return res;
}

std::optional<std::array<Integer, 4>> plane_through(const Point3& x,
                                                    const Point3& y,
                                                    const Point3& z) {
  Matrix m{{1, x[0], x[1], x[2]}, {1, y[0], y[1], y[2]}, {1, z[0], z[1], z[2]}};
  auto ns = nullspace(m, 4);
  if (ns.size() != 1) return std::nullopt;
  // n0 X0 + n1 X1 + n2 X2 + n3 X3 = 0  <=>  -n0 X0 = n1 X1 + n2 X2 + n3 X3
  auto n = ns[0];
  std::array<Integer, 4> a{-n[0], n[1], n[2], n[3]};
  std::vector<Integer> v(a.begin(), a.end());
  v = primitive_vector(std::move(v));
  return std::array<Integer, 4>{v[0], v[1], v[2], v[3]};
}

std::array<std::size_t, 2> PlaneConicData::kept() const {
  std::array<std::size_t, 2> k{};
  std::size_t j = 0;
  for (std::size_t i = 1; i <= 3; ++i)
    if (i != eliminated) k[j++] = i;
  return k;
}

namespace {

Integer gram_det3(const IntPoly& q) {
  Matrix m(3, std::vector<Integer>(3));
  for (const auto& [e, c] : q.terms()) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < 3; ++i)
      for (unsigned k = 0; k < e[i]; ++k) idx.push_back(i);
    if (idx.size() != 2) throw Error("expected a ternary quadratic form");
    if (idx[0] == idx[1]) {
      m[idx[0]][idx[0]] += 2 * c;
    } else {
      m[idx[0]][idx[1]] += c;
      m[idx[1]][idx[0]] += c;
    }
  }
  return determinant(m);
}

}  // namespace

PlaneConicData plane_eliminate(const std::array<Integer, 4>& plane,
                               const IntPoly& Q) {
  if (Q.num_vars() != 4 || !Q.is_homogeneous() || Q.degree() != 2)
    throw Error("conic quadric must be a quadratic form in x0..x3");
  PlaneConicData out;
  out.plane = plane;
  if (sgn(plane[3]) != 0)
    out.eliminated = 3;
  else if (sgn(plane[2]) != 0)
    out.eliminated = 2;
  else if (sgn(plane[1]) != 0)
    out.eliminated = 1;
  else
    throw Error("plane is X0=0; conic lies at infinity");
  std::size_t i = out.eliminated;
  auto kept = out.kept();
  // a_i X_i = a0 X0 - a_j X_j - a_k X_k; substitute a_i X_i and scale by a_i^2.
  std::vector<IntPoly> images(4, IntPoly(3));
  const Integer& ai = plane[i];
  images[0] = IntPoly::variable(3, 0) * ai;
  images[kept[0]] = IntPoly::variable(3, 1) * ai;
  images[kept[1]] = IntPoly::variable(3, 2) * ai;
  images[i] = IntPoly::variable(3, 0) * plane[0] -
              IntPoly::variable(3, 1) * plane[kept[0]] -
              IntPoly::variable(3, 2) * plane[kept[1]];
  IntPoly q = Q.compose(images);
  if (q.is_zero()) throw Error("quadric contains the plane");
  out.q = q.primitive_part();
  out.nonsingular = sgn(gram_det3(out.q)) != 0;
  return out;
}

std::size_t tangency_rank(const IntPoly& q) {
  if (q.num_vars() != 3) throw Error("tangency_rank needs a ternary form");
  if (q.is_zero()) throw Error("zero conic");
  Integer A = q.coeff({0, 2, 0}), Bx = q.coeff({0, 1, 1}), C = q.coeff({0, 0, 2});
  Matrix m{{2 * A, Bx}, {Bx, 2 * C}};
  return rank(m);
}

namespace {

using RatQuad = std::array<Rational, 3>;  // c0 + c1 Y + c2 Y^2

Rational eval(const RatQuad& p, const Rational& y) {
  return p[0] + y * (p[1] + y * p[2]);
}

bool is_integral(const Rational& r) { return r.get_den() == 1; }

RatQuad shift(const RatQuad& p, const Integer& y0) {
  return {eval(p, Rational(y0)), p[1] + 2 * p[2] * y0, p[2]};
}

IntPoly two_r(const RatQuad& Qi, const Integer& Z, const Integer& Dl) {
  RatQuad r{eval(Qi, Rational(Z)), (Qi[1] + 2 * Qi[2] * Z) * Dl, Qi[2] * Dl * Dl};
  IntPoly out(1);
  for (unsigned k = 0; k < 3; ++k) {
    Rational t = 2 * r[k];
    if (!is_integral(t)) throw Error("class quadratic is not half-integral");
    out.add_term({k}, t.get_num());
  }
  return out;
}

}  // namespace

std::variant<ConicParam, EmptyParam> conic_parameterize(
    const PlaneConicData& data, const Integer& B) {
  const IntPoly& q = data.q;
  if (!data.nonsingular) throw Error("conic is singular");
  if (tangency_rank(q) != 1) throw Error("conic is not tangent to X0=0");
  ConicParam P;
  Integer A = q.coeff({0, 2, 0}), Bx = q.coeff({0, 1, 1}), C = q.coeff({0, 0, 2});
  std::vector<Integer> ab = sgn(A) != 0 || sgn(Bx) != 0
                                ? std::vector<Integer>{2 * A, Bx}
                                : std::vector<Integer>{Bx, 2 * C};
  ab = primitive_vector(std::move(ab));
  P.alpha = ab[0];
  P.beta = ab[1];
  P.a = sgn(P.alpha) != 0 ? Integer(A / (P.alpha * P.alpha)) : Integer(C / (P.beta * P.beta));
  if (P.a * P.alpha * P.alpha != A || 2 * P.a * P.alpha * P.beta != Bx ||
      P.a * P.beta * P.beta != C)
    throw Error("binary part is not a multiple of a square");
  auto [g, d] = unimodular_complete(P.alpha, P.beta);
  P.gamma = g;
  P.delta = d;

  IntPoly Y0 = IntPoly::variable(3, 0), Y1 = IntPoly::variable(3, 1),
          Y2 = IntPoly::variable(3, 2);
  P.qprime = q.compose({Y0, Y1 * P.delta - Y2 * P.beta, Y2 * P.alpha - Y1 * P.gamma});
  for (const auto& [e, c] : P.qprime.terms()) {
    if (e == Exponents{0, 2, 0})
      ;
    else if (e == Exponents{1, 1, 0})
      P.e = c;
    else if (e == Exponents{1, 0, 1})
      P.f = c;
    else if (e == Exponents{2, 0, 0})
      P.dhat = c;
    else
      throw Error("substituted conic has an unexpected term");
  }
  if (P.qprime.coeff({0, 2, 0}) != P.a) throw Error("substitution changed the square coefficient");
  if (sgn(P.f) == 0) throw Error("degenerate conic: pair of lines");

  // With Y0 = 1: Y2 = -(a Y^2 + e Y + dhat)/f.
  Rational fr(P.f);
  RatQuad y2{-Rational(P.dhat) / fr, -Rational(P.e) / fr, -Rational(P.a) / fr};
  auto kept = data.kept();
  std::size_t i = data.eliminated;
  std::array<RatQuad, 4> x;  // x[1..3]
  for (unsigned k = 0; k < 3; ++k) {
    x[kept[0]][k] = -Rational(P.beta) * y2[k];
    x[kept[1]][k] = Rational(P.alpha) * y2[k];
  }
  x[kept[0]][1] += P.delta;
  x[kept[1]][1] -= P.gamma;
  const auto& pl = data.plane;
  for (unsigned k = 0; k < 3; ++k) {
    Rational v = (k == 0 ? Rational(pl[0]) : Rational(0)) -
                 Rational(pl[kept[0]]) * x[kept[0]][k] -
                 Rational(pl[kept[1]]) * x[kept[1]][k];
    x[i][k] = v / Rational(pl[i]);
  }

  // Base solution: any point of height <= B has |Y| = |alpha x_j + beta x_k|
  // <= (|alpha| + |beta|) B.
  Integer window = (abs(P.alpha) + abs(P.beta)) * B;
  std::optional<Integer> ystar;
  for (Integer r = 0; r <= window && !ystar; ++r) {
    for (int sgnr : {1, -1}) {
      if (r == 0 && sgnr < 0) continue;
      Integer y = sgnr * r;
      bool ok = true;
      for (std::size_t c = 1; c <= 3 && ok; ++c) {
        Rational v = eval(x[c], Rational(y));
        ok = is_integral(v) && cmpabs(v.get_num(), B) <= 0;
      }
      if (ok) {
        ystar = y;
        break;
      }
    }
  }
  if (!ystar) return EmptyParam{"no integral point of height <= " + B.get_str()};
  P.Ystar = *ystar;

  std::array<RatQuad, 3> Qz;
  Integer D = 1;
  for (std::size_t c = 0; c < 3; ++c) {
    Qz[c] = shift(x[c + 1], P.Ystar);
    for (const auto& v : Qz[c]) D = lcm(D, Integer(v.get_den()));
  }
  P.D = D;
  Integer fa = P.f * pl[i];
  if (!mpz_divisible_p(fa.get_mpz_t(), D.get_mpz_t()))
    throw Error("denominator does not divide f * a_i");
  P.kappa = D > 1 && B > 1 ? log_abs(D) / log_abs(B) : 0.0;

  std::array<Integer, 3> Bi, Ci;
  for (std::size_t c = 0; c < 3; ++c) {
    Rational b = Qz[c][1] * D, cc = Qz[c][2] * D;
    Bi[c] = b.get_num();
    Ci[c] = cc.get_num();
  }
  for (const auto& lambda : divisors(D)) {
    Integer mu = D / lambda;
    Integer W = 0, L = 1;
    bool empty = false;
    for (std::size_t c = 0; c < 3 && !empty; ++c) {
      Integer cl = Ci[c] * lambda;
      Integer Di = gcd(mu, cl);
      if (!mpz_divisible_p(Bi[c].get_mpz_t(), Di.get_mpz_t())) {
        empty = true;
        break;
      }
      Integer mui = mu / Di;
      Integer Wi = 0;
      if (mui > 1) {
        Integer inv, base = mod_pos(cl / Di, mui);
        mpz_invert(inv.get_mpz_t(), base.get_mpz_t(), mui.get_mpz_t());
        Wi = mod_pos(-(Bi[c] / Di) * inv, mui);
      }
      auto cr = crt_pair(W, L, Wi, mui);
      if (!cr) {
        empty = true;
        break;
      }
      W = cr->first;
      L = cr->second;
    }
    if (empty) continue;
    // The lambda-part needs some W = W_lambda (mod L) coprime to mu.
    for (const auto& [r, ex] : factorize(mu)) {
      if (mpz_divisible_p(L.get_mpz_t(), r.get_mpz_t()) &&
          mpz_divisible_p(W.get_mpz_t(), r.get_mpz_t()))
        empty = true;
    }
    if (mu == 1) empty = false;
    if (empty) continue;
    ConicClass cls;
    cls.lambda = lambda;
    cls.D_lambda = lambda * L;
    cls.Z_lambda = mod_pos(lambda * W, cls.D_lambda);
    for (std::size_t c = 0; c < 3; ++c) cls.twoR[c] = two_r(Qz[c], cls.Z_lambda, cls.D_lambda);
    P.classes.push_back(std::move(cls));
  }
  return P;
}

namespace {

// Visits every t with |2R_c(t)| <= 2B for all c; returns the count.
template <class Fn>
Integer sweep_class(const std::array<IntPoly, 3>& twoR, const Integer& B, Fn&& visit) {
  Integer T = 2 * B;
  std::array<UniPoly, 3> u;
  for (std::size_t c = 0; c < 3; ++c) u[c] = to_univariate(twoR[c]);
  auto inside = [&](const Integer& t) {
    for (const auto& p : u)
      if (cmpabs(p.eval(t), T) > 0) return false;
    return true;
  };
  std::vector<Integer> bp;
  for (const auto& p : u) {
    if (p.degree() < 1) continue;
    for (int s : {-1, 1}) {
      UniPoly shifted = p;
      shifted.c[0] += s * T;
      shifted.trim();
      auto b = root_breakpoints(shifted);
      bp.insert(bp.end(), b.begin(), b.end());
    }
  }
  if (bp.empty()) {
    // Every coordinate is constant: one point, or none.
    if (inside(0)) {
      visit(Integer(0));
      return 1;
    }
    return 0;
  }
  std::sort(bp.begin(), bp.end());
  bp.erase(std::unique(bp.begin(), bp.end()), bp.end());
  Integer count = 0;
  for (std::size_t k = 0; k < bp.size(); ++k) {
    if (inside(bp[k])) {
      ++count;
      visit(bp[k]);
    }
    if (k + 1 < bp.size() && bp[k + 1] - bp[k] >= 2 && inside(bp[k] + 1)) {
      count += bp[k + 1] - bp[k] - 1;
      for (Integer t = bp[k] + 1; t < bp[k + 1]; ++t) visit(t);
    }
  }
  return count;
}

Point3 class_point(const std::array<IntPoly, 3>& twoR, const Integer& t) {
  Point3 p;
  for (std::size_t c = 0; c < 3; ++c) {
    Integer v = twoR[c].eval(std::vector<Integer>{t});
    p[c] = v / 2;
  }
  return p;
}

}  // namespace

ClassCount count_class_points(const std::array<IntPoly, 3>& twoR, const Integer& B) {
  ClassCount out;
  out.exact = sweep_class(twoR, B, [](const Integer&) {});
  const IntPoly* dom = nullptr;
  for (const auto& p : twoR) {
    if (p.degree() < 1) continue;
    if (!dom || p.degree() > dom->degree() ||
        (p.degree() == dom->degree() &&
         cmpabs(to_univariate(p).lead(), to_univariate(*dom).lead()) > 0))
      dom = &p;
  }
  out.bound = dom ? root_count_bound(to_univariate(*dom), 2 * B) : 1.0;
  return out;
}

std::vector<Point3> class_points(const std::array<IntPoly, 3>& twoR, const Integer& B) {
  std::vector<Point3> pts;
  sweep_class(twoR, B, [&](const Integer& t) { pts.push_back(class_point(twoR, t)); });
  return pts;
}

std::vector<Point3> conic_points(const ConicParam& param, const Integer& B) {
  std::set<Point3> all;
  for (const auto& cls : param.classes)
    for (auto& p : class_points(cls.twoR, B)) all.insert(std::move(p));
  return {all.begin(), all.end()};
}

std::vector<Point3> conic_points_brute(const std::array<Integer, 4>& plane,
                                       const IntPoly& Q, const Integer& B) {
  if (Q.num_vars() != 4) throw Error("quadric must live in x0..x3");
  std::size_t i = sgn(plane[3]) != 0 ? 3 : sgn(plane[2]) != 0 ? 2 : sgn(plane[1]) != 0 ? 1 : 0;
  if (i == 0) throw Error("plane is X0=0; conic lies at infinity");
  std::size_t j = i == 1 ? 2 : 1;
  std::size_t k = 6 - i - j;
  const Integer &ai = plane[i], &ak = plane[k];
  Integer u, v;
  Integer g = ext_gcd(ai, ak, u, v);
  Integer di = ak / g, dk = -(ai / g);  // x_i += di*s, x_k += dk*s
  std::vector<Point3> out;
  for (Integer xj = -B; xj <= B; ++xj) {
    Integer r = plane[0] - plane[j] * xj;
    if (!mpz_divisible_p(r.get_mpz_t(), g.get_mpz_t())) continue;
    Integer xi0 = u * (r / g), xk0 = v * (r / g);
    // s-range from |x_k| <= B; dk != 0 since a_i != 0.
    Integer lo, hi;
    if (sgn(dk) > 0) {
      lo = ceil_div(-B - xk0, dk);
      hi = floor_div(B - xk0, dk);
    } else {
      lo = ceil_div(B - xk0, dk);
      hi = floor_div(-B - xk0, dk);
    }
    if (lo > hi) continue;
    std::vector<IntPoly> images(4, IntPoly(1));
    IntPoly s = IntPoly::variable(1, 0);
    images[0] = IntPoly::constant(1, 1);
    images[j] = IntPoly::constant(1, xj);
    images[i] = IntPoly::constant(1, xi0) + s * di;
    images[k] = IntPoly::constant(1, xk0) + s * dk;
    IntPoly h = Q.compose(images);
    std::vector<Integer> ss;
    if (h.is_zero()) {
      for (Integer t = lo; t <= hi; ++t) ss.push_back(t);
    } else {
      ss = integer_roots(to_univariate(h), lo, hi);
    }
    for (const auto& t : ss) {
      Point3 p;
      p[j - 1] = xj;
      p[i - 1] = xi0 + di * t;
      p[k - 1] = xk0 + dk * t;
      if (cmpabs(p[i - 1], B) <= 0 && cmpabs(p[k - 1], B) <= 0) out.push_back(p);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace detcount
