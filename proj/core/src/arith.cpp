#include "detcount/arith.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace detcount {

ProjPoint normalize_primitive(std::vector<Integer> v) {
  bool any = std::any_of(v.begin(), v.end(),
                         [](const Integer& x) { return sgn(x) != 0; });
  if (!any) throw Error("zero vector has no projective point");
  ProjPoint p;
  p.coords_ = primitive_vector(std::move(v));
  return p;
}

Integer ProjPoint::height() const { return max_abs(coords_); }

std::string ProjPoint::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ",";
    s += coords_[i].get_str();
  }
  return s + "]";
}

Integer height(const ProjPoint& x) { return x.height(); }

Integer ext_gcd(const Integer& a, const Integer& b, Integer& x, Integer& y) {
  Integer g;
  mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(),
             b.get_mpz_t());
  return g;
}

std::pair<Integer, Integer> unimodular_complete(const Integer& a,
                                                const Integer& b) {
  Integer g = gcd(a, b);
  if (g != 1) throw Error("not coprime");
  if (sgn(b) == 0) return {Integer(0), a};  // a = +-1, a*a = 1
  Integer m = abs(b);
  Integer d;
  if (m == 1) {
    d = 0;
  } else {
    Integer am = mod_pos(a, m);
    mpz_invert(d.get_mpz_t(), am.get_mpz_t(), m.get_mpz_t());
  }
  Integer num = a * d - 1;
  Integer gg = num / b;
  return {gg, d};
}

Integer gcd_of(const std::vector<Integer>& v) {
  Integer g = 0;
  for (const auto& x : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Integer max_abs(const std::vector<Integer>& v) {
  Integer m = 0;
  for (const auto& x : v)
    if (cmpabs(x, m) > 0) m = abs(x);
  return m;
}

std::vector<Integer> primitive_vector(std::vector<Integer> v) {
  Integer g = gcd_of(v);
  if (g == 0) return v;
  int s = 0;
  for (const auto& x : v)
    if ((s = sgn(x)) != 0) break;
  if (s < 0) g = -g;
  if (g != 1)
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return v;
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

Integer next_prime(const Integer& n) {
  Integer r;
  mpz_nextprime(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

std::vector<Integer> primes_in(const Integer& lo, const Integer& hi) {
  std::vector<Integer> out;
  Integer p = lo < 2 ? Integer(2) : Integer(lo);
  if (!is_prime(p)) p = next_prime(p);
  while (p <= hi) {
    out.push_back(p);
    p = next_prime(p);
  }
  return out;
}

namespace {

Integer pollard_brent(const Integer& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    Integer y = 2, x, q = 1, g = 1, ys;
    unsigned long r = 1, m = 128;
    auto f = [&](const Integer& v) {
      Integer t = v * v + c;
      mpz_mod(t.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
      return t;
    };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = q * abs(x - y);
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        g = gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = gcd(abs(x - ys), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(const Integer& n, std::vector<Integer>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  Integer d = pollard_brent(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

std::vector<std::pair<Integer, unsigned>> factorize(const Integer& n) {
  if (sgn(n) == 0) throw Error("cannot factor zero");
  Integer m = abs(n);
  std::vector<Integer> ps;
  for (unsigned long p : {2UL, 3UL, 5UL, 7UL, 11UL, 13UL}) {
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      ps.emplace_back(p);
      m /= p;
    }
  }
  for (unsigned long p = 17; p < 10000 && m > 1; p += 2) {
    if (Integer(p) * p > m) break;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      ps.emplace_back(p);
      m /= p;
    }
  }
  factor_into(m, ps);
  std::sort(ps.begin(), ps.end());
  std::vector<std::pair<Integer, unsigned>> out;
  for (const auto& p : ps) {
    if (!out.empty() && out.back().first == p)
      ++out.back().second;
    else
      out.emplace_back(p, 1);
  }
  return out;
}

std::vector<Integer> divisors(const Integer& n) {
  std::vector<Integer> ds{1};
  for (const auto& [p, e] : factorize(n)) {
    std::size_t base = ds.size();
    Integer pk = 1;
    for (unsigned i = 0; i < e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) ds.push_back(ds[j] * pk);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

std::optional<unsigned long> valuation(const Integer& n, const Integer& p) {
  if (sgn(n) == 0) return std::nullopt;
  if (p < 2) throw Error("valuation base must be >= 2");
  Integer m = n;
  return mpz_remove(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
}

Integer iroot_floor(const Integer& x, unsigned long k) {
  Integer r, a = abs(x);
  mpz_root(r.get_mpz_t(), a.get_mpz_t(), k);
  return r;
}

std::optional<Integer> exact_root(const Integer& x, unsigned long k) {
  if (sgn(x) < 0 && k % 2 == 0) return std::nullopt;
  Integer r, a = abs(x);
  if (mpz_root(r.get_mpz_t(), a.get_mpz_t(), k) == 0) return std::nullopt;
  if (sgn(x) < 0) r = -r;
  return r;
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer ceil_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer mod_pos(const Integer& a, const Integer& m) {
  Integer r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

std::optional<std::pair<Integer, Integer>> crt_pair(const Integer& r1,
                                                    const Integer& m1,
                                                    const Integer& r2,
                                                    const Integer& m2) {
  Integer u, v;
  Integer g = ext_gcd(m1, m2, u, v);
  Integer diff = r2 - r1;
  if (!mpz_divisible_p(diff.get_mpz_t(), g.get_mpz_t())) return std::nullopt;
  Integer l = m1 / g * m2;
  Integer t = mod_pos(diff / g * u, m2 / g);
  Integer x = mod_pos(r1 + m1 * t, l);
  return std::make_pair(x, l);
}

double log_abs(const Integer& x) {
  if (sgn(x) == 0) throw Error("log of zero");
  long e;
  double m = mpz_get_d_2exp(&e, x.get_mpz_t());
  return std::log(std::fabs(m)) + static_cast<double>(e) * std::log(2.0);
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

std::string to_string(const std::vector<Integer>& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

}  // namespace detcount
