#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "detcount/geometry.hpp"
#include "detcount/linalg.hpp"
#include "detcount/poly.hpp"

namespace detcount {

struct PrimeWindow {
  Integer B;
  double exponent = 0;  // a, or 1/sqrt(d) for the first window
  double epsilon = 0;
  std::vector<Integer> primes;
  Integer lo, hi;  // closed interval actually searched
  std::optional<Integer> excluded;
};

/// Primes in [B^{1/sqrt(d)+eps}, C B^{1/sqrt(d)+eps}], C = 2, 4, 8, ...
/// until at least min_count primes are found.
PrimeWindow prime_window(const Integer& B, unsigned d, double epsilon,
                         std::size_t min_count);

/// Window at exponent 1/e - 1/((e-1) sqrt(d)), never containing `exclude`.
PrimeWindow second_prime_window(const Integer& B, unsigned d, unsigned e,
                                const Integer& exclude, std::size_t min_count);

struct ResidueClass {
  std::vector<Integer> key;  // [1, pi1, pi2, pi3] with entries in [0, p)
  std::vector<std::vector<Integer>> points;
  PointClass type = PointClass::NotInU;
};

/// Groups affine points [1,x1,x2,x3] of F = 0 by their reduction mod p.
/// Classes are sorted by key.
std::vector<ResidueClass> partition_by_residue(const std::vector<std::vector<Integer>>& points,
                                               const Integer& p, const IntPoly& F);

struct MonomialSelection {
  std::vector<IntPoly> ideal;
  unsigned e = 0;
  std::size_t k = 0;
  unsigned D = 0;
  std::vector<Exponents> monomials;  // M_i = X0^{D - deg m_i} m_i
  std::vector<unsigned> degrees;     // deg m_i
  unsigned long degree_sum = 0;
  /// Smallest C with degree_sum <= k^2/(2e) + C k (clamped at 0).
  double c_sel = 0;
};

/// Lowest-degree monomials in X1..X3 independent modulo (J, X0).
MonomialSelection select_monomials(const std::vector<IntPoly>& J, unsigned e, std::size_t k);

struct DetCertificate {
  std::vector<std::vector<Integer>> points;
  Integer delta;
  bool duplicate = false;
  /// nullopt when delta = 0 (valuation +infinity) or no prime was given.
  std::optional<unsigned long> v_p, v_q;
  unsigned long beta = 0;  // k(k-1)/2
  double log_delta = 0;
  double c_d1 = 0;
  double d1_bound = 0;
  bool d1_holds = true;
};

struct DetOptions {
  std::optional<Integer> p, q;
  /// Height bound entering the (D1) bound; defaults to the largest
  /// coordinate among the points (at least 2).
  std::optional<Integer> B;
  /// Constant of the k log B term; defaults to the selection's c_sel.
  std::optional<double> c_d1;
};

DetCertificate build_determinant(const std::vector<std::vector<Integer>>& points,
                                 const MonomialSelection& sel, const DetOptions& opt = {});

struct DivisibilityVerdict {
  bool applicable = false;  // false: omega singular on Y mod q
  bool pass = false;
  std::optional<unsigned long> v_q;
  unsigned long threshold = 0;
};

DivisibilityVerdict divisibility_check(const DetCertificate& cert, const Integer& q,
                                       const std::vector<IntPoly>& J,
                                       const std::vector<Integer>& omega);

enum class Vanishing { Zero, Unknown };
std::string to_string(Vanishing v);

struct VanishingPrediction {
  Vanishing verdict = Vanishing::Unknown;
  double lhs = 0;  // alpha_lb log p + beta log q
  double rhs = 0;  // (D1) upper bound
  /// Smallest k0 <= k_limit with Zero for every k in [k0, k_limit].
  std::optional<std::size_t> threshold;
};

struct VanishingConstants {
  double c_alpha = 0;
  double c_d1 = 0;
  std::size_t k_limit = 100000;
};

VanishingPrediction vanishing_test(const Integer& B, const Integer& p, const Integer& q,
                                   std::size_t k, unsigned e, unsigned d,
                                   const VanishingConstants& c = {});

struct AuxiliaryForm {
  Integer p;
  std::vector<Integer> key;
  IntPoly G;
  unsigned D = 0;
  std::size_t rank = 0;
  std::size_t basis_size = 0;
};

struct AuxiliaryResult {
  std::optional<AuxiliaryForm> form;  // empty means RankFull
  std::size_t rank = 0;
  std::size_t basis_size = 0;
};

/// Form of degree D through all points, not divisible by F. Throws when
/// every form through the points is a multiple of F.
AuxiliaryResult extract_auxiliary_form(const std::vector<std::vector<Integer>>& points,
                                       unsigned D, const IntPoly& F);
AuxiliaryResult extract_auxiliary_form(const std::vector<std::vector<Integer>>& points,
                                       const std::vector<Exponents>& basis, const IntPoly& F);

/// Tries D = 1, ..., max_D and returns the first form found.
AuxiliaryForm auxiliary_form_for_class(const ResidueClass& cls, const Integer& p,
                                       const IntPoly& F, unsigned max_D = 6);

Integer theta_exponent(unsigned d, unsigned n);
Integer bezout_bound(const Integer& e, const Integer& degG);

struct ClassRecord {
  Integer p;
  std::vector<Integer> key;
  PointClass type = PointClass::NotInU;
  std::size_t size = 0;
  unsigned D = 0;
  std::size_t rank = 0;
  std::optional<IntPoly> G;
  bool rank_full = false;
  std::string error;
  // Determinant of the first min(size, basis) points against the first
  // monomials of the degree-D basis.
  std::size_t det_k = 0;
  Integer delta;
  std::optional<unsigned long> v_p;
};

struct PipelineOptions {
  double epsilon = 0.05;
  std::size_t min_primes = 1;
  unsigned max_D = 6;
  std::size_t min_class_size = 2;
  unsigned threads = 0;
};

struct PipelineReport {
  PrimeWindow window;
  std::size_t points = 0;
  std::vector<ClassRecord> classes;  // sorted by (p, key)
};

/// Enumerates the affine points of F of height <= B and, for each prime of
/// the first window, fits an auxiliary form to every residue class.
PipelineReport run_detmethod(const IntPoly& F, const Integer& B, const PipelineOptions& opt = {});

}  // namespace detcount
