#include "detcount/graded.hpp"

#include <map>

#include "detcount/linalg.hpp"

namespace detcount {

namespace {

// The ideal restricted to a degree: variables killed by single-variable
// generators are substituted away and the rest span a sparse echelon over
// the monomials of the surviving variables.
class DegreeSlice {
 public:
  DegreeSlice(const std::vector<IntPoly>& gens, int delta) {
    if (delta < 0) throw Error("negative degree");
    if (gens.empty()) throw Error("graded piece needs a ring; pass at least one generator");
    n_ = gens[0].num_vars();
    killed_.assign(n_, false);
    for (const auto& g : gens) {
      if (g.num_vars() != n_) throw Error("generators live in different rings");
      if (!g.is_homogeneous()) throw Error("generators must be homogeneous");
      if (g.num_terms() == 1 && g.degree() == 1) {
        const auto& e = g.terms().begin()->first;
        for (std::size_t i = 0; i < n_; ++i)
          if (e[i]) killed_[i] = true;
      }
    }
    for (std::size_t i = 0; i < n_; ++i)
      if (!killed_[i]) live_.push_back(i);
    cols_ = monomials_of_degree(live_.size(), static_cast<unsigned>(delta));
    for (std::size_t i = 0; i < cols_.size(); ++i) index_.emplace(cols_[i], i);

    for (const auto& g : gens) {
      IntPoly r = restrict(g);
      if (r.is_zero()) continue;
      if (r.is_constant()) {
        unit_ideal_ = true;
        continue;
      }
      int dg = r.degree();
      if (dg > delta) continue;
      for (const auto& m : monomials_of_degree(live_.size(),
                                               static_cast<unsigned>(delta - dg))) {
        SparseEchelon::Row row;
        for (const auto& [e, c] : r.terms()) {
          Exponents f(live_.size());
          for (std::size_t i = 0; i < f.size(); ++i) f[i] = e[i] + m[i];
          row.emplace(index_.at(f), c);
        }
        ech_.insert(std::move(row));
      }
    }
  }

  // Polynomial in the live variables only.
  IntPoly restrict(const IntPoly& p) const {
    IntPoly r(live_.size());
    for (const auto& [e, c] : p.terms()) {
      bool dead = false;
      for (std::size_t i = 0; i < n_; ++i)
        if (killed_[i] && e[i]) dead = true;
      if (dead) continue;
      Exponents f(live_.size());
      for (std::size_t i = 0; i < live_.size(); ++i) f[i] = e[live_[i]];
      r.add_term(f, c);
    }
    return r;
  }

  Exponents lift(const Exponents& f) const {
    Exponents e(n_, 0);
    for (std::size_t i = 0; i < live_.size(); ++i) e[live_[i]] = f[i];
    return e;
  }

  bool unit() const { return unit_ideal_; }
  const std::vector<Exponents>& cols() const { return cols_; }
  const SparseEchelon& echelon() const { return ech_; }
  SparseEchelon& echelon() { return ech_; }
  std::size_t column(const Exponents& f) const { return index_.at(f); }

 private:
  std::size_t n_ = 0;
  std::vector<bool> killed_;
  std::vector<std::size_t> live_;
  std::vector<Exponents> cols_;
  std::map<Exponents, std::size_t> index_;
  SparseEchelon ech_;
  bool unit_ideal_ = false;
};

}  // namespace

GradedPieceBasis graded_piece_basis(const std::vector<IntPoly>& ideal_gens,
                                    const std::vector<IntPoly>& extra_gens,
                                    int delta) {
  if (delta < 0) throw Error("negative degree");
  std::vector<IntPoly> gens = ideal_gens;
  gens.insert(gens.end(), extra_gens.begin(), extra_gens.end());
  GradedPieceBasis out;
  out.degree = delta;
  out.generators = gens;
  if (gens.empty()) throw Error("graded piece needs a ring; pass at least one generator");
  DegreeSlice s(gens, delta);
  if (s.unit()) return out;
  for (std::size_t i = 0; i < s.cols().size(); ++i)
    if (!s.echelon().is_pivot(i)) out.monomials.push_back(s.lift(s.cols()[i]));
  return out;
}

std::size_t hilbert_function(const std::vector<IntPoly>& gens, int delta) {
  return graded_piece_basis(gens, {}, delta).dimension();
}

bool independent_modulo(const std::vector<IntPoly>& gens,
                        const std::vector<IntPoly>& polys, int delta) {
  DegreeSlice s(gens, delta);
  if (s.unit()) return polys.empty();
  std::size_t before = s.echelon().rank();
  for (const auto& p : polys) {
    if (!p.is_zero() && (!p.is_homogeneous() || p.degree() != delta))
      throw Error("independence test needs forms of the slice degree");
    IntPoly r = s.restrict(p);
    SparseEchelon::Row row;
    for (const auto& [e, c] : r.terms()) row.emplace(s.column(e), c);
    if (!s.echelon().insert(std::move(row))) return false;
  }
  return s.echelon().rank() == before + polys.size();
}

}  // namespace detcount
