#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ugdual/errors.hpp"
#include "ugdual/ncpoly.hpp"
#include "ugdual/rational.hpp"

namespace ugdual::km {

/// Symmetrizable generalized Cartan matrix with a symmetrizer D (DA
/// symmetric, least positive integers on each connected component) and
/// optional extra coweights beyond the span of the h_i.
class Gcm {
 public:
  [[nodiscard]] std::size_t size() const { return static_cast<std::size_t>(a_.rows()); }
  [[nodiscard]] long a(std::size_t i, std::size_t j) const {
    return a_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }
  [[nodiscard]] const IntMatrix& matrix() const { return a_; }
  [[nodiscard]] const std::vector<long>& symmetrizer() const { return d_; }
  /// (α_i|α_j) = d_i a_ij.
  [[nodiscard]] long form(std::size_t i, std::size_t j) const { return d_[i] * a(i, j); }
  /// Each extra coweight is given by its values α_j(h) on the simple roots;
  /// it takes the value 0 on the highest weight.
  [[nodiscard]] const std::vector<std::vector<long>>& extra_coweights() const { return extra_; }

 private:
  friend Gcm validate_gcm(const IntMatrix& a, std::vector<std::vector<long>> extra_coweights);
  IntMatrix a_;
  std::vector<long> d_;
  std::vector<std::vector<long>> extra_;
};

/// Checks a_ii = 2, a_ij <= 0, a_ij = 0 ⇔ a_ji = 0, and symmetrizability.
Gcm validate_gcm(const IntMatrix& a, std::vector<std::vector<long>> extra_coweights = {});

/// Offset of a weight below the highest weight: λ = Λ - Σ k_i α_i, k_i >= 0.
using Depth = std::vector<int>;

[[nodiscard]] int level(const Depth& k);

/// λ(h_i) for λ = Λ - Σ k_j α_j.
std::vector<long> weight_coords(const Gcm& gcm, const std::vector<long>& highest, const Depth& k);

/// Depth vector of the weight with the given h-coordinates, when it is
/// determined (A nonsingular) and lies in Λ - Q+.
std::optional<Depth> depth_of(const Gcm& gcm, const std::vector<long>& highest, const std::vector<long>& coords);

/// Weight-graded vector of a truncated module: coordinates per weight in the
/// module's chosen basis. Zero components are not stored.
class WeightVector {
 public:
  WeightVector() = default;
  [[nodiscard]] const std::map<Depth, Vector>& components() const { return parts_; }
  [[nodiscard]] Vector component(const Depth& k, std::size_t dim) const;
  [[nodiscard]] bool is_zero() const { return parts_.empty(); }
  [[nodiscard]] int max_level() const;
  void add(const Depth& k, const Vector& v);

  WeightVector& operator+=(const WeightVector& o);
  WeightVector& operator*=(const Rational& s);
  friend WeightVector operator+(WeightVector a, const WeightVector& b) { return a += b; }
  friend WeightVector operator-(WeightVector a, WeightVector b) { return a += (b *= Rational(-1)); }
  friend WeightVector operator*(const Rational& s, WeightVector a) { return a *= s; }
  friend bool operator==(const WeightVector&, const WeightVector&) = default;

 private:
  std::map<Depth, Vector> parts_;
};

/// Standard pairing of coordinate vectors, weight by weight.
Rational pair(const WeightVector& covector, const WeightVector& v);

struct Chevalley {
  enum class Type { E, F, H };
  Type type;
  std::size_t index;
  static Chevalley e(std::size_t i) { return {Type::E, i}; }
  static Chevalley f(std::size_t i) { return {Type::F, i}; }
  static Chevalley h(std::size_t i) { return {Type::H, i}; }
};

/// Target weight lies outside the current truncation.
class OutOfTruncation : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

struct IrrTruncOptions {
  std::size_t depth_cap = 24;
  std::size_t dim_cap = 100000;
  /// Build the weight spaces of one level concurrently; results are merged
  /// in key order so the module is identical to the sequential build.
  bool parallel = false;
};

/// L(Λ) truncated to weights Λ - Σ k_i α_i with Σ k_i <= depth.
///
/// Each weight space is the quotient of the span of Verma monomials
/// f_{i1}⋯f_{ip} v_Λ by the radical of the contravariant form. The spanning
/// monomials at a weight are f_i applied to the basis monomials one level
/// up; their Gram matrix is computed from the form and the e-action one level
/// up, and a maximal independent set of them is kept as the basis.
///
/// Copies share one cache. Depth extension is guarded by a mutex, so the
/// module can be queried from several threads.
class IrrTrunc {
 public:
  IrrTrunc(Gcm gcm, std::vector<long> highest, std::size_t depth, IrrTruncOptions options = {});

  [[nodiscard]] const Gcm& gcm() const;
  [[nodiscard]] const std::vector<long>& highest_weight() const;
  [[nodiscard]] const IrrTruncOptions& options() const;
  [[nodiscard]] std::size_t depth() const;
  /// Builds all levels up to `depth`; throws CapExceeded past the depth cap
  /// or the dimension cap.
  void extend_to(std::size_t depth) const;

  /// All weight offsets of level <= depth() with nonzero multiplicity.
  [[nodiscard]] std::vector<Depth> weights() const;
  [[nodiscard]] std::size_t multiplicity(const Depth& k) const;
  [[nodiscard]] std::size_t dimension() const;
  [[nodiscard]] std::vector<long> coords(const Depth& k) const;
  /// Gram matrix of the contravariant form on the chosen basis.
  [[nodiscard]] Matrix gram(const Depth& k) const;
  /// Gram matrix on the full spanning monomial set at k.
  [[nodiscard]] Matrix spanning_gram(const Depth& k) const;
  /// Basis monomials as index sequences (i1, ..., ip) for f_{i1}⋯f_{ip} v_Λ.
  [[nodiscard]] std::vector<std::vector<std::size_t>> basis_monomials(const Depth& k) const;
  /// e_i : L_k → L_{k - e_i} (zero rows when k_i = 0).
  [[nodiscard]] Matrix raise(std::size_t i, const Depth& k) const;
  /// f_i : L_k → L_{k + e_i}; extends the truncation if needed.
  [[nodiscard]] Matrix lower(std::size_t i, const Depth& k) const;

  [[nodiscard]] WeightVector highest_weight_vector() const;
  [[nodiscard]] WeightVector basis_vector(const Depth& k, std::size_t j) const;

  /// Applies a generator. With extend = false an F whose target level exceeds
  /// depth() throws OutOfTruncation.
  [[nodiscard]] WeightVector apply(const Chevalley& g, const WeightVector& v, bool extend) const;

 private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
};

IrrTrunc build_irr_trunc(const Gcm& gcm, const std::vector<long>& highest, std::size_t depth,
                         IrrTruncOptions options = {});

/// Strict action: an F leaving the truncation throws OutOfTruncation.
WeightVector act_chevalley(const IrrTrunc& m, const Chevalley& g, const WeightVector& v);

/// Symbolic left-nested bracket [⋯[e_{i1}, e_{i2}], …, e_{ip}] acting through
/// its expansion as a polynomial in the e_i.
struct RootVector {
  std::vector<std::size_t> seq;
  NcPoly expansion;  // letters are generator indices
};

RootVector multibracket_rootvector(const Gcm& gcm, const std::vector<std::size_t>& seq);
WeightVector act_root_vector(const IrrTrunc& m, const RootVector& x, const WeightVector& v);
/// True when x kills every basis vector of the current truncation.
bool acts_as_zero(const IrrTrunc& m, const RootVector& x);

/// h = Σ c_i h_i (+ the extra coweight `extra`, if set).
struct Coweight {
  std::vector<long> h_coeffs;
  std::optional<std::size_t> extra;
};

/// λ(h) for the weight at offset k.
long coweight_value(const IrrTrunc& m, const Coweight& h, const Depth& k);

struct KMFactor {
  struct ExpE { std::size_t index; Rational t; };
  struct ExpF { std::size_t index; Rational t; };
  struct ExpRoot { RootVector x; Rational t; };
  struct Torus { Coweight h; Rational s; };
  std::variant<ExpE, ExpF, ExpRoot, Torus> factor;
};

/// Leftmost factor acts last.
using KMGroupWord = std::vector<KMFactor>;

/// exp(t x) v as a finite series (extending the truncation on demand), or
/// s^h v_λ = s^{λ(h)} v_λ.
WeightVector exp_action(const IrrTrunc& m, const KMFactor& factor, const WeightVector& v);
WeightVector act_km_group(const IrrTrunc& m, const KMGroupWord& g, const WeightVector& v);

/// θ_Λ(g) = φ_Λ(g·v_Λ), φ_Λ dual to the highest-weight line.
Rational theta_eval(const IrrTrunc& m, const KMGroupWord& g);

/// Gram rank at k.
std::size_t weight_multiplicity(const IrrTrunc& m, const Depth& k);

/// Multiplicities of positive roots up to the given height, by Peterson's
/// recursion on the symmetrized form.
std::map<Depth, Rational> root_multiplicities(const Gcm& gcm, int max_height);

/// mult of Λ - Σ k_i α_i in L(Λ) by Freudenthal's recursion, independent of
/// any module construction.
std::size_t freudenthal_oracle(const Gcm& gcm, const std::vector<long>& highest, const Depth& k);

/// Whether v⊗v lies in the submodule of L(Λ)⊗L(Λ) generated by v_Λ⊗v_Λ
/// (a copy of L(2Λ)). `doubled` is L(2Λ), used to cross-check the component
/// dimension weight by weight.
bool kostant_cone_test(const IrrTrunc& m, const IrrTrunc& doubled, const WeightVector& v);

struct KMMatrixCoefficient {
  IrrTrunc module;
  WeightVector phi;
  WeightVector v;
};

Rational eval_coefficient(const KMMatrixCoefficient& c, const KMGroupWord& g);

/// Rank of [f_{φ_j v_j}(g_k)].
std::size_t peter_weyl_rank(const std::vector<KMMatrixCoefficient>& coefficients, const std::vector<KMGroupWord>& sample);

struct RelationReport {
  bool ok = true;
  std::size_t checked = 0;
  std::size_t skipped = 0;
  std::vector<std::string> failures;
};

/// Chevalley and Serre relations on every basis vector of the truncation.
RelationReport check_relations(const IrrTrunc& m);
/// f_i^k v = 0 for some k <= λ(h_i) + k_i + 1, per basis vector.
RelationReport check_integrability(const IrrTrunc& m);
/// Spanning Gram matrices symmetric; basis Gram nonsingular with size equal
/// to the spanning rank.
RelationReport check_contravariance(const IrrTrunc& m);

}  // namespace ugdual::km
