#include "detcount/enumeration.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <thread>

namespace detcount {

unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("DETCOUNT_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

std::optional<std::size_t> solve_variable(const IntPoly& f) {
  std::optional<std::size_t> best;
  int best_deg = 0;
  for (std::size_t i = 0; i < f.num_vars(); ++i) {
    int d = f.degree_in(i);
    if (d <= 0) continue;
    if (!best || d <= best_deg) {
      best = i;
      best_deg = d;
    }
  }
  return best;
}

namespace {

struct Progression {
  Integer first = 0;
  Integer step = 1;
  long count = 0;

  bool contains(const Integer& x) const {
    Integer d = x - first;
    if (!mpz_divisible_p(d.get_mpz_t(), step.get_mpz_t())) return false;
    d /= step;
    return sgn(d) >= 0 && d < count;
  }
};

Progression full_range(const Integer& B) {
  Integer c = 2 * B + 1;
  return {-B, 1, c.get_si()};
}

Progression fixed(const Integer& v) { return {v, 1, 1}; }

Progression residue_range(const Integer& B, const Integer& r, const Integer& M) {
  Progression p;
  p.step = M;
  p.first = -B + mod_pos(r + B, M);
  if (p.first > B) {
    p.count = 0;
  } else {
    Integer c = (B - p.first) / M + 1;
    p.count = c.get_si();
  }
  return p;
}

struct Box {
  std::vector<Progression> ranges;
  bool primitive = false;
};

struct Accum {
  Integer count = 0;
  std::vector<std::vector<Integer>> points;
};

// Specializes f one loop variable at a time. The state at level L holds, for
// every distinct exponent suffix over (v_L, ..., v_{m-1}, y), the coefficient
// obtained after fixing v_0..v_{L-1}; the final level is dense in y.
class NestedEvaluator {
 public:
  NestedEvaluator(const IntPoly& f, const std::vector<std::size_t>& loop,
                  std::size_t solve)
      : m_(loop.size()) {
    using Key = std::vector<unsigned>;
    std::map<Key, Integer> level0;
    unsigned dy = 0;
    for (const auto& [e, c] : f.terms()) {
      Key k;
      for (auto v : loop) k.push_back(e[v]);
      k.push_back(e[solve]);
      dy = std::max(dy, e[solve]);
      level0[k] += c;
    }
    std::vector<Key> keys;
    vals_.emplace_back();
    for (auto& [k, c] : level0) {
      keys.push_back(k);
      vals_[0].push_back(c);
    }
    for (std::size_t L = 0; L < m_; ++L) {
      std::map<Key, std::vector<int>> groups;
      std::vector<Key> next_keys;
      bool last = L + 1 == m_;
      for (std::size_t i = 0; i < keys.size(); ++i) {
        Key tail(keys[i].begin() + 1, keys[i].end());
        auto& g = groups[tail];
        unsigned k = keys[i][0];
        if (g.size() <= k) g.resize(k + 1, -1);
        g[k] = static_cast<int>(i);
      }
      std::vector<std::vector<int>> level_groups;
      if (last) {
        level_groups.resize(dy + 1);
        for (auto& [tail, g] : groups) level_groups[tail[0]] = g;
        for (unsigned j = 0; j <= dy; ++j) next_keys.push_back({j});
      } else {
        for (auto& [tail, g] : groups) {
          next_keys.push_back(tail);
          level_groups.push_back(g);
        }
      }
      groups_.push_back(std::move(level_groups));
      vals_.emplace_back(next_keys.size());
      keys = std::move(next_keys);
    }
    if (m_ == 0) {
      std::vector<Integer> dense(dy + 1);
      for (std::size_t i = 0; i < keys.size(); ++i) dense[keys[i][0]] = vals_[0][i];
      vals_[0] = std::move(dense);
    }
  }

  void descend(std::size_t L, const Integer& a) {
    auto& out = vals_[L + 1];
    const auto& in = vals_[L];
    const auto& gs = groups_[L];
    bool zero = sgn(a) == 0;
    for (std::size_t j = 0; j < gs.size(); ++j) {
      const auto& g = gs[j];
      mpz_ptr v = out[j].get_mpz_t();
      if (g.empty()) {
        mpz_set_ui(v, 0);
        continue;
      }
      if (zero) {
        if (g[0] >= 0)
          mpz_set(v, in[static_cast<std::size_t>(g[0])].get_mpz_t());
        else
          mpz_set_ui(v, 0);
        continue;
      }
      mpz_set_ui(v, 0);
      for (std::size_t k = g.size(); k-- > 0;) {
        mpz_mul(v, v, a.get_mpz_t());
        if (g[k] >= 0) mpz_add(v, v, in[static_cast<std::size_t>(g[k])].get_mpz_t());
      }
    }
  }

  const std::vector<Integer>& residual() const { return vals_[m_]; }

 private:
  std::size_t m_;
  std::vector<std::vector<Integer>> vals_;
  std::vector<std::vector<std::vector<int>>> groups_;
};

// #{y : |y| <= B, gcd(g, y) = 1} for g >= 1.
Integer count_coprime(const Integer& g, const Integer& B) {
  if (g == 1) return 2 * B + 1;
  std::vector<Integer> primes;
  for (const auto& [p, e] : factorize(g)) primes.push_back(p);
  Integer total = 0;
  std::size_t n = primes.size();
  for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
    Integer d = 1;
    int bits = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1UL << i)) {
        d *= primes[i];
        ++bits;
      }
    Integer c = B / d;
    total += bits % 2 ? Integer(-c) : c;
  }
  return 2 * total;
}

class SolveLastRunner {
 public:
  SolveLastRunner(const IntPoly& f, const Box& box, std::size_t solve,
                  bool collect)
      : f_(f), box_(box), solve_(solve), collect_(collect) {
    for (std::size_t i = 0; i < f.num_vars(); ++i)
      if (i != solve) loop_.push_back(i);
    ev_.emplace(f, loop_, solve);
    cur_.assign(f.num_vars(), 0);
    g_.assign(loop_.size() + 1, 0);
  }

  void run(Accum& out, long offset, long stride) {
    out_ = &out;
    offset_ = offset;
    stride_ = stride;
    if (loop_.empty()) {
      if (offset == 0) finish(g_[0]);
      return;
    }
    level(0);
  }

 private:
  void level(std::size_t L) {
    if (L == loop_.size()) {
      finish(g_[L]);
      return;
    }
    const Progression& pr = box_.ranges[loop_[L]];
    long k0 = L == 0 ? offset_ : 0, dk = L == 0 ? stride_ : 1;
    Integer a = pr.first + pr.step * k0;
    Integer da = pr.step * dk;
    for (long k = k0; k < pr.count; k += dk, a += da) {
      cur_[loop_[L]] = a;
      ev_->descend(L, a);
      if (box_.primitive) mpz_gcd(g_[L + 1].get_mpz_t(), g_[L].get_mpz_t(), a.get_mpz_t());
      level(L + 1);
    }
  }

  void accept(const Integer& y, const Integer& g) {
    const Progression& yr = box_.ranges[solve_];
    if (!yr.contains(y)) return;
    if (box_.primitive) {
      mpz_gcd(tmp_.get_mpz_t(), g.get_mpz_t(), y.get_mpz_t());
      if (tmp_ != 1) return;
    }
    ++out_->count;
    if (collect_) {
      cur_[solve_] = y;
      out_->points.push_back(cur_);
    }
  }

  void finish(const Integer& g) {
    const auto& c = ev_->residual();
    int d = static_cast<int>(c.size()) - 1;
    while (d >= 0 && sgn(c[static_cast<std::size_t>(d)]) == 0) --d;
    const Progression& yr = box_.ranges[solve_];
    if (d < 0) {
      degenerate(g);
      return;
    }
    if (d == 0) return;
    std::size_t low = 0;
    while (sgn(c[low]) == 0) ++low;
    if (d == 1) {
      // c1 y + c0 = 0
      if (mpz_divisible_p(c[0].get_mpz_t(), c[1].get_mpz_t())) {
        mpz_divexact(tmp2_.get_mpz_t(), c[0].get_mpz_t(), c[1].get_mpz_t());
        mpz_neg(tmp2_.get_mpz_t(), tmp2_.get_mpz_t());
        accept(tmp2_, g);
      }
      return;
    }
    bool binomial = true;
    for (int i = static_cast<int>(low) + 1; i < d; ++i)
      if (sgn(c[static_cast<std::size_t>(i)]) != 0) binomial = false;
    if (binomial) {
      if (low > 0) accept(Integer(0), g);
      if (low == static_cast<std::size_t>(d)) return;
      // c_d y^(d-low) = -c_low
      const Integer& cl = c[low];
      const Integer& cd = c[static_cast<std::size_t>(d)];
      if (!mpz_divisible_p(cl.get_mpz_t(), cd.get_mpz_t())) return;
      mpz_divexact(tmp2_.get_mpz_t(), cl.get_mpz_t(), cd.get_mpz_t());
      mpz_neg(tmp2_.get_mpz_t(), tmp2_.get_mpz_t());
      unsigned long k = static_cast<unsigned long>(d) - low;
      if (auto r = exact_root(tmp2_, k)) {
        accept(*r, g);
        if (k % 2 == 0 && sgn(*r) != 0) accept(Integer(-*r), g);
      }
      return;
    }
    UniPoly p(std::vector<Integer>(c.begin(), c.begin() + d + 1));
    Integer lo = yr.first;
    Integer hi = yr.first + yr.step * (yr.count - 1);
    for (const auto& y : integer_roots(p, lo, hi)) accept(y, g);
  }

  void degenerate(const Integer& g) {
    const Progression& yr = box_.ranges[solve_];
    if (yr.count == 0) return;
    if (!collect_ && box_.primitive && sgn(g) != 0 && yr.step == 1 &&
        yr.first == -(yr.first + yr.count - 1)) {
      out_->count += count_coprime(g, -yr.first);
      return;
    }
    if (!collect_ && !box_.primitive) {
      out_->count += yr.count;
      return;
    }
    Integer y = yr.first;
    for (long k = 0; k < yr.count; ++k, y += yr.step) accept(y, g);
  }

  const IntPoly& f_;
  const Box& box_;
  std::size_t solve_;
  bool collect_;
  std::vector<std::size_t> loop_;
  std::optional<NestedEvaluator> ev_;
  std::vector<Integer> cur_;
  std::vector<Integer> g_;
  Integer tmp_, tmp2_;
  Accum* out_ = nullptr;
  long offset_ = 0, stride_ = 1;
};

void full_loop(const IntPoly& f, const Box& box, bool collect, Accum& out,
               long offset, long stride) {
  std::size_t n = f.num_vars();
  for (const auto& r : box.ranges)
    if (r.count == 0) return;
  std::vector<long> idx(n, 0);
  std::vector<Integer> x(n);
  if (n == 0) {
    if (offset == 0 && sgn(f.eval(x)) == 0) ++out.count;
    return;
  }
  idx[0] = offset;
  if (idx[0] >= box.ranges[0].count) return;
  for (;;) {
    for (std::size_t i = 0; i < n; ++i)
      x[i] = box.ranges[i].first + box.ranges[i].step * idx[i];
    bool ok = true;
    if (box.primitive) ok = gcd_of(x) == 1;
    if (ok && sgn(f.eval(x)) == 0) {
      ++out.count;
      if (collect) out.points.push_back(x);
    }
    std::size_t i = n;
    for (;;) {
      if (i == 0) return;
      --i;
      long step = i == 0 ? stride : 1;
      idx[i] += step;
      if (idx[i] < box.ranges[i].count) break;
      if (i == 0) return;
      idx[i] = 0;
    }
  }
}

Accum run_box(const IntPoly& f, const Box& box, const EnumOptions& opt) {
  unsigned threads = resolve_threads(opt.threads);
  std::optional<std::size_t> solve;
  if (opt.strategy == Strategy::SolveLast) solve = solve_variable(f);
  std::vector<Accum> parts(threads);
  auto work = [&](unsigned w) {
    if (solve) {
      SolveLastRunner r(f, box, *solve, opt.collect_points);
      r.run(parts[w], w, threads);
    } else {
      full_loop(f, box, opt.collect_points, parts[w], w, threads);
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  Accum total;
  for (auto& p : parts) {
    total.count += p.count;
    for (auto& pt : p.points) total.points.push_back(std::move(pt));
  }
  return total;
}

void finalize(Accum& a, CountResult& out) {
  std::sort(a.points.begin(), a.points.end());
  out.count = a.count;
  out.points = std::move(a.points);
}

}  // namespace

CountResult count_projective(const IntPoly& F, const Integer& B,
                             const EnumOptions& opt) {
  if (F.is_zero()) throw Error("zero form");
  if (!F.is_homogeneous()) throw Error("count_projective needs a homogeneous form");
  if (B < 1) throw Error("height bound must be >= 1");
  std::size_t n = F.num_vars();
  CountResult res;
  if (F.degree() == 0) return res;

  if (opt.strategy == Strategy::FullLoop) {
    Box box;
    box.primitive = true;
    box.ranges.assign(n, full_range(B));
    Accum a = run_box(F, box, opt);
    finalize(a, res);
    return res;
  }

  // x and -x pair up: count points whose first nonzero loop coordinate is
  // positive, then double.
  std::size_t s = *solve_variable(F);
  std::vector<std::size_t> loop;
  for (std::size_t i = 0; i < n; ++i)
    if (i != s) loop.push_back(i);
  Accum total;
  for (std::size_t L = 0; L < loop.size(); ++L) {
    Box box;
    box.primitive = true;
    box.ranges.assign(n, full_range(B));
    for (std::size_t i = 0; i < L; ++i) box.ranges[loop[i]] = fixed(0);
    box.ranges[loop[L]] = {1, 1, B.get_si()};
    Accum a = run_box(F, box, opt);
    total.count += a.count;
    for (auto& p : a.points) total.points.push_back(std::move(p));
  }
  total.count *= 2;
  if (opt.collect_points) {
    std::size_t half = total.points.size();
    for (std::size_t i = 0; i < half; ++i) {
      auto q = total.points[i];
      for (auto& x : q) x = -x;
      total.points.push_back(std::move(q));
    }
  }
  std::vector<Integer> e(n, 0);
  e[s] = 1;
  if (sgn(F.eval(e)) == 0) {
    total.count += 2;
    if (opt.collect_points) {
      total.points.push_back(e);
      e[s] = -1;
      total.points.push_back(e);
    }
  }
  finalize(total, res);
  return res;
}

namespace {

CountResult count_in_box(const IntPoly& f, Box box, const EnumOptions& opt) {
  CountResult res;
  std::size_t n = f.num_vars();
  std::vector<std::size_t> present, absent;
  for (std::size_t i = 0; i < n; ++i)
    (f.degree_in(i) > 0 ? present : absent).push_back(i);
  for (const auto& r : box.ranges)
    if (r.count == 0) return res;
  if (f.is_constant()) {
    if (!f.is_zero()) return res;
  }
  if (!opt.collect_points && !absent.empty()) {
    IntPoly g(present.size());
    for (const auto& [e, c] : f.terms()) {
      Exponents h;
      for (auto i : present) h.push_back(e[i]);
      g.add_term(h, c);
    }
    Box sub;
    for (auto i : present) sub.ranges.push_back(box.ranges[i]);
    Integer mult = 1;
    for (auto i : absent) mult *= box.ranges[i].count;
    if (present.empty()) {
      res.count = g.is_zero() ? mult : Integer(0);
      return res;
    }
    Accum a = run_box(g, sub, opt);
    res.count = a.count * mult;
    return res;
  }
  Accum a = run_box(f, box, opt);
  finalize(a, res);
  return res;
}

}  // namespace

CountResult count_affine(const IntPoly& f, const Integer& B,
                         const EnumOptions& opt) {
  if (f.is_zero()) throw Error("zero polynomial");
  if (B < 0) throw Error("negative box bound");
  Box box;
  box.ranges.assign(f.num_vars(), full_range(B));
  return count_in_box(f, std::move(box), opt);
}

CountResult count_affine_surface(const IntPoly& F, const Integer& B,
                                 const std::vector<ResidueFilter>& filters,
                                 const EnumOptions& opt) {
  if (F.is_zero()) throw Error("zero form");
  if (!F.is_homogeneous()) throw Error("count_affine_surface needs a homogeneous form");
  if (F.num_vars() < 2) throw Error("need at least one affine coordinate");
  if (B < 1) throw Error("height bound must be >= 1");
  std::size_t n = F.num_vars() - 1;
  std::vector<Integer> r(n, 0), M(n, 1);
  CountResult res;
  for (const auto& flt : filters) {
    if (flt.residues.size() != n) throw Error("filter has the wrong number of residues");
    if (flt.p < 2) throw Error("filter modulus must be >= 2");
    for (std::size_t i = 0; i < n; ++i) {
      auto c = crt_pair(r[i], M[i], mod_pos(flt.residues[i], flt.p), flt.p);
      if (!c) return res;
      r[i] = c->first;
      M[i] = c->second;
    }
  }
  IntPoly f = dehomogenize(F);
  Box box;
  for (std::size_t i = 0; i < n; ++i) box.ranges.push_back(residue_range(B, r[i], M[i]));
  res = count_in_box(f, std::move(box), opt);
  for (auto& p : res.points) p.insert(p.begin(), Integer(1));
  return res;
}

SlicingCheck verify_slicing(const IntPoly& F, const Integer& B,
                            const EnumOptions& opt) {
  SlicingCheck out;
  EnumOptions o = opt;
  o.collect_points = false;
  out.lhs = count_projective(F, B, o).count;
  out.rhs = 0;
  std::size_t n = F.num_vars() - 1;
  for (Integer b = -B; b <= B; ++b) {
    IntPoly fb = slice(F, b);
    if (fb.is_zero()) {
      Integer side = 2 * B + 1, all = 1;
      for (std::size_t i = 0; i < n; ++i) all *= side;
      out.rhs += all;
    } else {
      out.rhs += count_affine(fb, B, o).count;
    }
  }
  return out;
}

}  // namespace detcount
