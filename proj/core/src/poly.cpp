#include "detcount/poly.hpp"

#include <algorithm>
#include <numeric>

namespace detcount {

unsigned total_degree(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), 0u);
}

bool GradedLess::operator()(const Exponents& a, const Exponents& b) const {
  unsigned da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  return a < b;
}

std::string var_name(std::size_t i, VarStyle style) {
  return style == VarStyle::X ? "x" + std::to_string(i)
                              : "t" + std::to_string(i + 1);
}

IntPoly IntPoly::constant(std::size_t num_vars, const Integer& c) {
  IntPoly p(num_vars);
  p.add_term(Exponents(num_vars, 0), c);
  return p;
}

IntPoly IntPoly::variable(std::size_t num_vars, std::size_t i) {
  if (i >= num_vars) throw Error("variable index out of range");
  Exponents e(num_vars, 0);
  e[i] = 1;
  return monomial(std::move(e));
}

IntPoly IntPoly::monomial(Exponents e, const Integer& c) {
  IntPoly p(e.size());
  p.add_term(e, c);
  return p;
}

int IntPoly::degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(total_degree(terms_.rbegin()->first));
}

int IntPoly::degree_in(std::size_t var) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[var]));
  return d;
}

bool IntPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  return total_degree(terms_.begin()->first) ==
         total_degree(terms_.rbegin()->first);
}

bool IntPoly::is_constant() const { return degree() <= 0; }

Integer IntPoly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

void IntPoly::add_term(const Exponents& e, const Integer& c) {
  if (e.size() != nvars_) throw Error("exponent length mismatch");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.nvars_ != nvars_) throw Error("ring mismatch in addition");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.nvars_ != nvars_) throw Error("ring mismatch in subtraction");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

IntPoly& IntPoly::operator*=(const Integer& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.nvars_ != b.nvars_) throw Error("ring mismatch in multiplication");
  IntPoly r(a.nvars_);
  Exponents e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

IntPoly IntPoly::pow(unsigned k) const {
  IntPoly r = constant(nvars_, 1), b = *this;
  while (k) {
    if (k & 1) r = r * b;
    k >>= 1;
    if (k) b = b * b;
  }
  return r;
}

Integer IntPoly::eval(const std::vector<Integer>& x) const {
  if (x.size() != nvars_) throw Error("evaluation point has wrong length");
  Integer s = 0, t, pw;
  for (const auto& [e, c] : terms_) {
    t = c;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      mpz_pow_ui(pw.get_mpz_t(), x[i].get_mpz_t(), e[i]);
      t *= pw;
    }
    s += t;
  }
  return s;
}

Rational IntPoly::eval(const std::vector<Rational>& x) const {
  if (x.size() != nvars_) throw Error("evaluation point has wrong length");
  Rational s = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < nvars_; ++i)
      for (unsigned k = 0; k < e[i]; ++k) t *= x[i];
    s += t;
  }
  return s;
}

Integer IntPoly::eval_mod(const std::vector<Integer>& x,
                          const Integer& m) const {
  if (x.size() != nvars_) throw Error("evaluation point has wrong length");
  Integer s = 0, t, pw;
  for (const auto& [e, c] : terms_) {
    t = c;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      Integer base = mod_pos(x[i], m);
      mpz_powm_ui(pw.get_mpz_t(), base.get_mpz_t(), e[i], m.get_mpz_t());
      t *= pw;
    }
    s += t;
  }
  return mod_pos(s, m);
}

IntPoly IntPoly::substitute(std::size_t var, const Integer& value) const {
  if (var >= nvars_) throw Error("variable index out of range");
  IntPoly r(nvars_);
  Integer pw;
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    f[var] = 0;
    mpz_pow_ui(pw.get_mpz_t(), value.get_mpz_t(), e[var]);
    r.add_term(f, c * pw);
  }
  return r;
}

IntPoly IntPoly::eliminate_var(std::size_t var, const Integer& value) const {
  if (var >= nvars_) throw Error("variable index out of range");
  IntPoly r(nvars_ - 1);
  Integer pw;
  for (const auto& [e, c] : terms_) {
    Exponents f;
    f.reserve(nvars_ - 1);
    for (std::size_t i = 0; i < nvars_; ++i)
      if (i != var) f.push_back(e[i]);
    mpz_pow_ui(pw.get_mpz_t(), value.get_mpz_t(), e[var]);
    r.add_term(f, c * pw);
  }
  return r;
}

IntPoly IntPoly::compose(const std::vector<IntPoly>& images) const {
  if (images.size() != nvars_) throw Error("compose needs one image per variable");
  std::size_t m = images.empty() ? 0 : images[0].num_vars();
  for (const auto& g : images)
    if (g.num_vars() != m) throw Error("compose images live in different rings");
  std::vector<std::vector<IntPoly>> powers(nvars_);
  IntPoly r(m);
  for (const auto& [e, c] : terms_) {
    IntPoly t = constant(m, c);
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(constant(m, 1));
      while (pw.size() <= e[i]) pw.push_back(pw.back() * images[i]);
      t = t * pw[e[i]];
    }
    r += t;
  }
  return r;
}

IntPoly IntPoly::derivative(std::size_t var) const {
  IntPoly r(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents f = e;
    --f[var];
    r.add_term(f, c * e[var]);
  }
  return r;
}

IntPoly IntPoly::extend(std::size_t num_vars, std::size_t shift) const {
  if (num_vars < nvars_ + shift) throw Error("cannot shrink a ring by extend");
  IntPoly r(num_vars);
  for (const auto& [e, c] : terms_) {
    Exponents f(num_vars, 0);
    std::copy(e.begin(), e.end(), f.begin() + static_cast<long>(shift));
    r.add_term(f, c);
  }
  return r;
}

Integer IntPoly::content() const {
  Integer g = 0;
  for (const auto& [e, c] : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return *this;
  Integer g = content();
  if (sgn(terms_.rbegin()->second) < 0) g = -g;
  IntPoly r = *this;
  if (g != 1)
    for (auto& [e, c] : r.terms_)
      mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return r;
}

Integer IntPoly::coeff_height() const {
  Integer h = 0;
  for (const auto& [e, c] : terms_)
    if (cmpabs(c, h) > 0) h = abs(c);
  return h;
}

namespace {

std::string format_terms(const IntPoly::Terms& terms, VarStyle style) {
  if (terms.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto& [e, c] = *it;
    bool neg = sgn(c) < 0;
    Integer a = abs(c);
    if (first)
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += var_name(i, style);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty())
      s += a.get_str();
    else if (a == 1)
      s += mono;
    else
      s += a.get_str() + "*" + mono;
  }
  return s;
}

}  // namespace

std::string IntPoly::to_string(VarStyle style) const {
  return format_terms(terms_, style);
}

IntPoly homogenize(const IntPoly& f, int delta) {
  if (f.is_zero()) throw Error("cannot homogenize the zero polynomial");
  if (delta < f.degree()) throw Error("homogenizing degree below polynomial degree");
  IntPoly r(f.num_vars() + 1);
  for (const auto& [e, c] : f.terms()) {
    Exponents g(e.size() + 1);
    g[0] = static_cast<unsigned>(delta) - total_degree(e);
    std::copy(e.begin(), e.end(), g.begin() + 1);
    r.add_term(g, c);
  }
  return r;
}

IntPoly dehomogenize(const IntPoly& F) { return F.eliminate_var(0, 1); }

IntPoly leading_form(const IntPoly& g) {
  if (g.is_zero()) throw Error("leading form of the zero polynomial");
  unsigned d = static_cast<unsigned>(g.degree());
  IntPoly r(g.num_vars());
  for (const auto& [e, c] : g.terms())
    if (total_degree(e) == d) r.add_term(e, c);
  return r;
}

Integer coeff_height(const IntPoly& g) { return g.coeff_height(); }

IntPoly slice(const IntPoly& F, const Integer& b) {
  if (F.num_vars() == 0) throw Error("cannot slice a polynomial without variables");
  return F.eliminate_var(0, b);
}

bool divides(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero()) return g.is_zero();
  if (f.num_vars() != g.num_vars()) throw Error("ring mismatch in division");
  if (g.is_zero()) return true;
  using RTerms = std::map<Exponents, Rational, GradedLess>;
  RTerms r;
  for (const auto& [e, c] : g.terms()) r.emplace(e, Rational(c));
  const auto& [lf_e, lf_c] = *f.terms().rbegin();
  std::size_t n = f.num_vars();
  while (!r.empty()) {
    auto top = std::prev(r.end());
    Exponents q(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (top->first[i] < lf_e[i]) return false;
      q[i] = top->first[i] - lf_e[i];
    }
    Rational factor = top->second / Rational(lf_c);
    for (const auto& [e, c] : f.terms()) {
      Exponents m(n);
      for (std::size_t i = 0; i < n; ++i) m[i] = e[i] + q[i];
      auto [it, ins] = r.emplace(m, Rational(0));
      it->second -= factor * c;
      if (sgn(it->second) == 0) r.erase(it);
    }
  }
  return true;
}

int FpPoly::degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(total_degree(terms_.rbegin()->first));
}

void FpPoly::add_term(const Exponents& e, const Integer& c) {
  if (e.size() != nvars_) throw Error("exponent length mismatch");
  Integer v = mod_pos(c, p_);
  if (sgn(v) == 0) return;
  auto [it, inserted] = terms_.emplace(e, v);
  if (!inserted) {
    it->second = mod_pos(it->second + v, p_);
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Integer FpPoly::eval(const std::vector<Integer>& x) const {
  return lift().eval_mod(x, p_);
}

IntPoly FpPoly::lift() const {
  IntPoly r(nvars_);
  for (const auto& [e, c] : terms_) r.add_term(e, c);
  return r;
}

std::string FpPoly::to_string(VarStyle style) const {
  return format_terms(terms_, style);
}

FpPoly reduce_mod_p(const IntPoly& F, const Integer& p) {
  if (!is_prime(p)) throw Error("modulus " + p.get_str() + " is not prime");
  FpPoly r(F.num_vars(), p);
  for (const auto& [e, c] : F.terms()) r.add_term(e, c);
  return r;
}

FpPoly reduce_mod_p(const FpPoly& F, const Integer& p) {
  return reduce_mod_p(F.lift(), p);
}

std::vector<Exponents> monomials_of_degree(std::size_t n, unsigned deg) {
  std::vector<Exponents> out;
  if (n == 0) {
    if (deg == 0) out.emplace_back();
    return out;
  }
  Exponents e(n, 0);
  auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
    if (i + 1 == n) {
      e[i] = left;
      out.push_back(e);
      return;
    }
    for (unsigned v = left + 1; v-- > 0;) {
      e[i] = v;
      self(self, i + 1, left - v);
    }
  };
  rec(rec, 0, deg);
  return out;
}

}  // namespace detcount
