#include "detcount/detmethod.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <thread>

#include "detcount/enumeration.hpp"
#include "detcount/graded.hpp"

namespace detcount {

namespace {

PrimeWindow window_at(const Integer& B, double exponent, double epsilon, std::size_t min_count,
                      const std::optional<Integer>& exclude) {
  PrimeWindow w;
  w.B = B;
  w.exponent = exponent;
  w.epsilon = epsilon;
  w.excluded = exclude;
  double start = std::exp((exponent + epsilon) * log_abs(B));
  double r = std::round(start);
  if (std::fabs(start - r) < 1e-9 * std::max(1.0, start)) start = r;
  Integer lo(std::ceil(start));
  if (lo < 2) lo = 2;
  if (min_count == 0) min_count = 1;
  for (double C = 2;; C *= 2) {
    Integer hi(std::floor(C * std::max(start, 1.0)));
    if (hi < lo) hi = lo;
    std::vector<Integer> ps;
    for (auto& q : primes_in(lo, hi))
      if (!exclude || q != *exclude) ps.push_back(q);
    if (ps.size() >= min_count) {
      w.lo = lo;
      w.hi = hi;
      w.primes = std::move(ps);
      return w;
    }
  }
}

}  // namespace

PrimeWindow prime_window(const Integer& B, unsigned d, double epsilon, std::size_t min_count) {
  if (B < 2) throw Error("prime window needs B >= 2");
  if (d < 3) throw Error("prime window needs d >= 3");
  return window_at(B, 1.0 / std::sqrt(double(d)), epsilon, min_count, std::nullopt);
}

PrimeWindow second_prime_window(const Integer& B, unsigned d, unsigned e, const Integer& exclude,
                                std::size_t min_count) {
  if (e <= 2) throw Error("second prime window needs curve degree e >= 3");
  if (B < 2) throw Error("prime window needs B >= 2");
  if (d < 3) throw Error("prime window needs d >= 3");
  double a = 1.0 / e - 1.0 / ((e - 1) * std::sqrt(double(d)));
  return window_at(B, a, 0, min_count, exclude);
}

std::vector<ResidueClass> partition_by_residue(const std::vector<std::vector<Integer>>& points,
                                               const Integer& p, const IntPoly& F) {
  if (!is_prime(p)) throw Error("modulus is not prime");
  std::map<std::vector<Integer>, std::vector<std::vector<Integer>>> groups;
  for (const auto& x : points) {
    if (x.size() != F.num_vars() || x[0] != 1) throw Error("points must be affine [1, x1, ...]");
    std::vector<Integer> key(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) key[i] = mod_pos(x[i], p);
    groups[key].push_back(x);
  }
  std::vector<ResidueClass> out;
  for (auto& [key, pts] : groups) {
    ResidueClass c;
    c.key = key;
    c.points = std::move(pts);
    c.type = classify_point(F, key, p);
    out.push_back(std::move(c));
  }
  return out;
}

MonomialSelection select_monomials(const std::vector<IntPoly>& J, unsigned e, std::size_t k) {
  if (J.empty()) throw Error("curve ideal needs generators");
  if (e == 0 || k == 0) throw Error("selection needs e >= 1 and k >= 1");
  std::size_t n = J[0].num_vars();
  for (const auto& g : J)
    if (g.num_vars() != n || !g.is_homogeneous()) throw Error("curve ideal must be homogeneous");
  MonomialSelection s;
  s.ideal = J;
  s.e = e;
  s.k = k;
  IntPoly x0 = IntPoly::variable(n, 0);
  std::vector<std::pair<unsigned, Exponents>> chosen;
  for (unsigned delta = 0; chosen.size() < k; ++delta) {
    auto basis = graded_piece_basis(J, {x0}, static_cast<int>(delta));
    if (basis.dimension() == 0 || basis.dimension() > e)
      throw Error("ideal does not define a curve of degree " + std::to_string(e) +
                  " meeting X0 = 0 properly (h(" + std::to_string(delta) +
                  ") = " + std::to_string(basis.dimension()) + ")");
    for (const auto& m : basis.monomials) {
      if (chosen.size() == k) break;
      chosen.emplace_back(delta, m);
    }
    s.D = delta;
  }
  for (auto& [delta, m] : chosen) {
    Exponents M = m;
    M[0] += s.D - delta;
    s.monomials.push_back(M);
    s.degrees.push_back(delta);
    s.degree_sum += delta;
  }
  std::vector<IntPoly> polys;
  for (const auto& M : s.monomials) polys.push_back(IntPoly::monomial(M));
  if (!independent_modulo(J, polys, static_cast<int>(s.D)))
    throw Error("selected monomials are dependent modulo the ideal");
  double kk = double(k);
  s.c_sel = std::max(0.0, (double(s.degree_sum) - kk * kk / (2.0 * e)) / kk);
  return s;
}

DetCertificate build_determinant(const std::vector<std::vector<Integer>>& points,
                                 const MonomialSelection& sel, const DetOptions& opt) {
  std::size_t k = sel.monomials.size();
  if (points.size() != k) throw Error("need exactly k points for a k x k determinant");
  DetCertificate c;
  c.points = points;
  c.beta = k * (k - 1) / 2;
  std::set<std::vector<Integer>> seen(points.begin(), points.end());
  c.duplicate = seen.size() != points.size();
  Matrix m(k, std::vector<Integer>(k));
  Integer hmax = 2;
  for (std::size_t j = 0; j < k; ++j) {
    const auto& x = points[j];
    if (x.empty() || x[0] != 1) throw Error("points must be affine [1, x1, ...]");
    for (const auto& v : x)
      if (abs(v) > hmax) hmax = abs(v);
    for (std::size_t i = 0; i < k; ++i) m[i][j] = IntPoly::monomial(sel.monomials[i]).eval(x);
  }
  c.delta = c.duplicate ? Integer(0) : determinant(m);
  if (sgn(c.delta) != 0) {
    if (opt.p) c.v_p = valuation(c.delta, *opt.p);
    if (opt.q) c.v_q = valuation(c.delta, *opt.q);
    c.log_delta = log_abs(c.delta);
  }
  Integer B = opt.B ? *opt.B : hmax;
  double logB = log_abs(B);
  double kk = double(k);
  c.c_d1 = opt.c_d1 ? *opt.c_d1 : sel.c_sel;
  c.d1_bound = kk * std::log(kk) + kk * kk / (2.0 * sel.e) * logB + c.c_d1 * kk * logB;
  c.d1_holds = sgn(c.delta) == 0 || c.log_delta <= c.d1_bound + 1e-9 * std::max(1.0, c.d1_bound);
  return c;
}

DivisibilityVerdict divisibility_check(const DetCertificate& cert, const Integer& q,
                                       const std::vector<IntPoly>& J,
                                       const std::vector<Integer>& omega) {
  if (!is_prime(q)) throw Error("modulus is not prime");
  if (J.empty()) throw Error("curve ideal needs generators");
  std::size_t n = omega.size();
  for (const auto& x : cert.points) {
    if (x.size() != n) throw Error("point and omega differ in length");
    for (std::size_t i = 0; i < n; ++i)
      if (mod_pos(x[i] - omega[i], q) != 0) throw Error("points do not all reduce to omega");
  }
  for (const auto& g : J)
    if (g.eval_mod(omega, q) != 0) throw Error("omega is not on the curve mod q");
  DivisibilityVerdict v;
  v.threshold = cert.beta;
  if (sgn(cert.delta) != 0) v.v_q = valuation(cert.delta, q);
  Matrix jac;
  for (const auto& g : J) {
    std::vector<Integer> row(n);
    for (std::size_t i = 0; i < n; ++i) row[i] = g.derivative(i).eval_mod(omega, q);
    jac.push_back(std::move(row));
  }
  // A curve in P^{n-1} has codimension n - 2.
  v.applicable = rank_mod_p(jac, q) == n - 2;
  if (!v.applicable) return v;
  v.pass = !v.v_q || *v.v_q >= v.threshold;
  return v;
}

std::string to_string(Vanishing v) { return v == Vanishing::Zero ? "Zero" : "Unknown"; }

namespace {

std::pair<double, double> vanishing_sides(double logB, double logp, double logq, double k,
                                          unsigned e, const VanishingConstants& c) {
  double alpha = 0;
  if (e >= 2) alpha = std::max(0.0, k * k / (2.0 * (e - 1)) - c.c_alpha * k);
  double beta = k * (k - 1) / 2;
  double lhs = alpha * logp + beta * logq;
  double rhs = k * std::log(k) + k * k / (2.0 * e) * logB + c.c_d1 * k * logB;
  return {lhs, rhs};
}

}  // namespace

VanishingPrediction vanishing_test(const Integer& B, const Integer& p, const Integer& q,
                                   std::size_t k, unsigned e, unsigned d,
                                   const VanishingConstants& c) {
  if (B < 1 || p < 2 || q < 2 || k == 0 || e == 0 || d == 0)
    throw Error("vanishing test needs positive parameters");
  double logB = log_abs(B), logp = log_abs(p), logq = log_abs(q);
  VanishingPrediction r;
  auto [lhs, rhs] = vanishing_sides(logB, logp, logq, double(k), e, c);
  r.lhs = lhs;
  r.rhs = rhs;
  r.verdict = lhs > rhs ? Vanishing::Zero : Vanishing::Unknown;
  std::optional<std::size_t> last_unknown;
  for (std::size_t j = 1; j <= c.k_limit; ++j) {
    auto [l, u] = vanishing_sides(logB, logp, logq, double(j), e, c);
    if (!(l > u)) last_unknown = j;
  }
  std::size_t t = last_unknown ? *last_unknown + 1 : 1;
  if (t <= c.k_limit) r.threshold = t;
  return r;
}

AuxiliaryResult extract_auxiliary_form(const std::vector<std::vector<Integer>>& points,
                                       const std::vector<Exponents>& basis, const IntPoly& F) {
  if (points.empty()) throw Error("auxiliary form needs at least one point");
  if (basis.empty()) throw Error("empty monomial basis");
  Matrix m;
  for (const auto& x : points) {
    std::vector<Integer> row;
    for (const auto& e : basis) row.push_back(IntPoly::monomial(e).eval(x));
    m.push_back(std::move(row));
  }
  AuxiliaryResult r;
  r.basis_size = basis.size();
  auto ns = nullspace(m, basis.size());
  r.rank = basis.size() - ns.size();
  if (ns.empty()) return r;
  for (const auto& v : ns) {
    IntPoly G(basis[0].size());
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (sgn(v[i]) != 0) G.add_term(basis[i], v[i]);
    G = G.primitive_part();
    if (divides(F, G)) continue;
    AuxiliaryForm a;
    a.G = std::move(G);
    a.D = total_degree(basis[0]);
    a.rank = r.rank;
    a.basis_size = r.basis_size;
    r.form = std::move(a);
    return r;
  }
  throw Error("class lies in a smaller locus than basis captures; increase D");
}

AuxiliaryResult extract_auxiliary_form(const std::vector<std::vector<Integer>>& points,
                                       unsigned D, const IntPoly& F) {
  if (points.empty()) throw Error("auxiliary form needs at least one point");
  return extract_auxiliary_form(points, monomials_of_degree(points[0].size(), D), F);
}

AuxiliaryForm auxiliary_form_for_class(const ResidueClass& cls, const Integer& p,
                                       const IntPoly& F, unsigned max_D) {
  for (unsigned D = 1; D <= max_D; ++D) {
    try {
      auto r = extract_auxiliary_form(cls.points, D, F);
      if (!r.form) continue;
      r.form->p = p;
      r.form->key = cls.key;
      return *r.form;
    } catch (const Error&) {
      if (D == max_D) throw;
    }
  }
  throw Error("class lies in a smaller locus than basis captures; increase D");
}

Integer theta_exponent(unsigned d, unsigned n) {
  if (d < 2 || n < 2) throw Error("theta exponent needs d >= 2 and n >= 2");
  return Integer(d) * binomial(d + n, n);
}

Integer bezout_bound(const Integer& e, const Integer& degG) {
  if (e <= 0 || degG <= 0) throw Error("Bezout bound needs positive degrees");
  return e * degG;
}

namespace {

ClassRecord process_class(const ResidueClass& cls, const Integer& p, const IntPoly& F,
                          unsigned max_D) {
  ClassRecord rec;
  rec.p = p;
  rec.key = cls.key;
  rec.type = cls.type;
  rec.size = cls.points.size();
  try {
    auto a = auxiliary_form_for_class(cls, p, F, max_D);
    rec.D = a.D;
    rec.rank = a.rank;
    rec.G = a.G;
  } catch (const Error& e) {
    rec.error = e.what();
    rec.D = max_D;
    auto basis = monomials_of_degree(F.num_vars(), max_D);
    Matrix m;
    for (const auto& x : cls.points) {
      std::vector<Integer> row;
      for (const auto& b : basis) row.push_back(IntPoly::monomial(b).eval(x));
      m.push_back(std::move(row));
    }
    rec.rank = rank(m);
    rec.rank_full = rec.rank == basis.size();
  }
  auto basis = monomials_of_degree(F.num_vars(), rec.D);
  std::size_t k = std::min(basis.size(), cls.points.size());
  rec.det_k = k;
  Matrix m(k, std::vector<Integer>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) m[i][j] = IntPoly::monomial(basis[i]).eval(cls.points[j]);
  rec.delta = determinant(m);
  if (sgn(rec.delta) != 0) rec.v_p = valuation(rec.delta, p);
  return rec;
}

}  // namespace

PipelineReport run_detmethod(const IntPoly& F, const Integer& B, const PipelineOptions& opt) {
  if (!F.is_homogeneous() || F.num_vars() != 4) throw Error("detmethod needs a surface form in P^3");
  PipelineReport rep;
  rep.window = prime_window(B, static_cast<unsigned>(std::max(3, F.degree())), opt.epsilon,
                            opt.min_primes);
  EnumOptions eo;
  eo.collect_points = true;
  eo.threads = opt.threads;
  auto pts = count_affine_surface(F, B, {}, eo).points;
  rep.points = pts.size();
  std::vector<std::pair<Integer, ResidueClass>> work;
  for (const auto& p : rep.window.primes)
    for (auto& c : partition_by_residue(pts, p, F))
      if (c.points.size() >= opt.min_class_size) work.emplace_back(p, std::move(c));
  rep.classes.resize(work.size());
  unsigned nt = std::max(1u, std::min<unsigned>(resolve_threads(opt.threads),
                                                static_cast<unsigned>(work.size())));
  std::vector<std::thread> pool;
  std::vector<std::string> errors(nt);
  for (unsigned t = 0; t < nt; ++t)
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i = t; i < work.size(); i += nt)
          rep.classes[i] = process_class(work[i].second, work[i].first, F, opt.max_D);
      } catch (const std::exception& e) {
        errors[t] = e.what();
      }
    });
  for (auto& th : pool) th.join();
  for (const auto& e : errors)
    if (!e.empty()) throw Error(e);
  return rep;
}

}  // namespace detcount
