#include "detcount/roots.hpp"

#include <algorithm>
#include <cmath>

namespace detcount {

UniPoly::UniPoly(std::vector<Integer> coeffs) : c(std::move(coeffs)) { trim(); }

void UniPoly::trim() {
  while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
}

Integer UniPoly::eval(const Integer& x) const {
  Integer r = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    r *= x;
    r += *it;
  }
  return r;
}

UniPoly UniPoly::derivative() const {
  std::vector<Integer> d;
  for (std::size_t i = 1; i < c.size(); ++i) d.push_back(c[i] * static_cast<unsigned long>(i));
  return UniPoly(std::move(d));
}

UniPoly to_univariate(const IntPoly& p) {
  if (p.num_vars() != 1) throw Error("expected a univariate polynomial");
  std::vector<Integer> c(static_cast<std::size_t>(std::max(p.degree() + 1, 0)));
  for (const auto& [e, v] : p.terms()) c[e[0]] = v;
  return UniPoly(std::move(c));
}

IntPoly to_intpoly(const UniPoly& p) {
  IntPoly r(1);
  for (std::size_t i = 0; i < p.c.size(); ++i)
    r.add_term({static_cast<unsigned>(i)}, p.c[i]);
  return r;
}

namespace {

UniPoly primitive(UniPoly p) {
  Integer g = 0;
  for (const auto& x : p.c) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g > 1)
    for (auto& x : p.c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return p;
}

// Remainder of a by b scaled by a positive constant.
UniPoly positive_prem(UniPoly a, const UniPoly& b) {
  Integer l = abs(b.lead());
  int sb = sgn(b.lead());
  while (!a.is_zero() && a.degree() >= b.degree()) {
    std::size_t shift = static_cast<std::size_t>(a.degree() - b.degree());
    Integer f = a.lead();
    if (sb < 0) f = -f;
    for (auto& x : a.c) x *= l;
    for (std::size_t i = 0; i < b.c.size(); ++i) a.c[i + shift] -= f * b.c[i];
    a.trim();
    a = primitive(std::move(a));
  }
  return a;
}

UniPoly poly_gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = positive_prem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return primitive(std::move(a));
}

// Exact quotient a / b over Q, scaled to a primitive integer polynomial.
UniPoly exact_quotient(const UniPoly& a, const UniPoly& b) {
  std::vector<Rational> r(a.c.begin(), a.c.end());
  std::size_t db = static_cast<std::size_t>(b.degree());
  std::vector<Rational> q(a.c.size() - db);
  for (std::size_t i = q.size(); i-- > 0;) {
    q[i] = r[i + db] / Rational(b.lead());
    for (std::size_t j = 0; j <= db; ++j) r[i + j] -= q[i] * b.c[j];
  }
  Integer l = 1;
  for (const auto& x : q) l = lcm(l, Integer(x.get_den()));
  std::vector<Integer> out;
  for (const auto& x : q) {
    Rational t = x * l;
    out.push_back(t.get_num());
  }
  return primitive(UniPoly(std::move(out)));
}

UniPoly squarefree_part(const UniPoly& p) {
  if (p.degree() <= 1) return primitive(p);
  UniPoly g = poly_gcd(p, p.derivative());
  if (g.degree() == 0) return primitive(p);
  return exact_quotient(p, g);
}

struct Sturm {
  std::vector<UniPoly> seq;

  explicit Sturm(const UniPoly& s) {
    seq.push_back(s);
    seq.push_back(primitive(s.derivative()));
    while (seq.back().degree() > 0) {
      UniPoly r = positive_prem(seq[seq.size() - 2], seq.back());
      if (r.is_zero()) break;
      for (auto& x : r.c) x = -x;
      seq.push_back(std::move(r));
    }
  }

  int variations(const Integer& x) const {
    int v = 0, last = 0;
    for (const auto& p : seq) {
      int s = sgn(p.eval(x));
      if (s == 0) continue;
      if (last != 0 && s != last) ++v;
      last = s;
    }
    return v;
  }
};

Integer cauchy_bound(const UniPoly& p) {
  Integer m = 0;
  for (std::size_t i = 0; i + 1 < p.c.size(); ++i)
    if (cmpabs(p.c[i], m) > 0) m = abs(p.c[i]);
  return 1 + ceil_div(m, abs(p.lead()));
}

void isolate(const Sturm& st, const Integer& a, int va, const Integer& b, int vb,
             std::vector<Integer>& out) {
  if (va - vb <= 0) return;
  if (b - a == 1) {
    out.push_back(a);
    out.push_back(b);
    return;
  }
  Integer m = floor_div(a + b, 2);
  int vm = st.variations(m);
  isolate(st, a, va, m, vm, out);
  isolate(st, m, vm, b, vb, out);
}

}  // namespace

std::vector<Integer> root_breakpoints(const UniPoly& p) {
  if (p.degree() < 1) throw Error("breakpoints of a constant polynomial");
  UniPoly s = squarefree_part(p);
  Sturm st(s);
  Integer R = cauchy_bound(s);
  Integer lo = -R - 1, hi = R;
  std::vector<Integer> out;
  isolate(st, lo, st.variations(lo), hi, st.variations(hi), out);
  return out;
}

std::vector<Integer> integer_roots(const UniPoly& p0, const Integer& lo,
                                   const Integer& hi) {
  if (p0.is_zero()) throw Error("integer roots of the zero polynomial");
  std::vector<Integer> out;
  if (lo > hi || p0.degree() == 0) return out;
  UniPoly p = p0;
  std::size_t low = 0;
  while (sgn(p.c[low]) == 0) ++low;
  if (low > 0) {
    if (lo <= 0 && hi >= 0) out.emplace_back(0);
    p.c.erase(p.c.begin(), p.c.begin() + static_cast<long>(low));
  }
  auto keep = [&](const Integer& x) {
    if (x >= lo && x <= hi && sgn(x) != 0) out.push_back(x);
  };
  int d = p.degree();
  if (d == 0) {
  } else if (d == 1) {
    if (mpz_divisible_p(p.c[0].get_mpz_t(), p.c[1].get_mpz_t())) keep(-p.c[0] / p.c[1]);
  } else if (d == 2) {
    Integer disc = p.c[1] * p.c[1] - 4 * p.c[2] * p.c[0];
    if (sgn(disc) >= 0 && mpz_perfect_square_p(disc.get_mpz_t())) {
      Integer r = sqrt(disc), den = 2 * p.c[2];
      for (Integer num : {Integer(-p.c[1] + r), Integer(-p.c[1] - r)})
        if (mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) keep(num / den);
    }
  } else if (std::all_of(p.c.begin() + 1, p.c.end() - 1,
                         [](const Integer& x) { return sgn(x) == 0; })) {
    // c_d x^d + c_0
    Integer num = -p.c[0];
    if (mpz_divisible_p(num.get_mpz_t(), p.lead().get_mpz_t())) {
      Integer q = num / p.lead();
      if (auto r = exact_root(q, static_cast<unsigned long>(d))) {
        keep(*r);
        if (d % 2 == 0) keep(-*r);
      }
    }
  } else if (hi - lo <= 64) {
    for (Integer x = lo; x <= hi; ++x)
      if (sgn(x) != 0 && sgn(p.eval(x)) == 0) out.push_back(x);
  } else {
    auto bp = root_breakpoints(p);
    for (std::size_t i = 1; i < bp.size(); i += 2)
      if (sgn(p.eval(bp[i])) == 0) keep(bp[i]);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

double root_count_bound(const UniPoly& p, const Integer& T) {
  double d = p.degree();
  double ratio = std::exp(log_abs(T) - log_abs(p.lead()));
  return d * (3.0 + 2.0 * std::pow(ratio, 1.0 / d));
}

BoundedRootCount count_roots_bounded(const UniPoly& p, const Integer& T) {
  if (p.degree() < 1) throw Error("count_roots_bounded needs a nonconstant polynomial");
  if (T < 0) throw Error("negative bound");
  UniPoly lo = p, hi = p;
  lo.c[0] -= T;
  hi.c[0] += T;
  std::vector<Integer> bp = root_breakpoints(lo);
  auto more = root_breakpoints(hi);
  bp.insert(bp.end(), more.begin(), more.end());
  std::sort(bp.begin(), bp.end());
  bp.erase(std::unique(bp.begin(), bp.end()), bp.end());

  auto inside = [&](const Integer& t) { return cmpabs(p.eval(t), T) <= 0; };
  BoundedRootCount res;
  res.exact = 0;
  for (std::size_t i = 0; i < bp.size(); ++i) {
    if (inside(bp[i])) ++res.exact;
    if (i + 1 < bp.size() && bp[i + 1] - bp[i] >= 2 && inside(bp[i] + 1))
      res.exact += bp[i + 1] - bp[i] - 1;
  }
  res.bound = T > 0 ? root_count_bound(p, T) : static_cast<double>(p.degree()) * 3.0;
  return res;
}

}  // namespace detcount
