#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "ugdual/ncpoly.hpp"
#include "ugdual/rep.hpp"

namespace ugdual {

/// Σ c_w φ_w with φ_w(w̃) = δ_{w w̃}. Stored as the coefficient map.
struct FiniteFunctional {
  NcPoly coeffs;
  friend bool operator==(const FiniteFunctional&, const FiniteFunctional&) = default;
};

/// x ↦ phi(x·v) for a module vector v and covector phi.
class MatrixCoefficient {
 public:
  MatrixCoefficient(std::shared_ptr<const RepSpec> rep, Vector phi, Vector v);
  MatrixCoefficient(const RepSpec& rep, Vector phi, Vector v)
      : MatrixCoefficient(std::make_shared<const RepSpec>(rep), std::move(phi), std::move(v)) {}

  [[nodiscard]] const RepSpec& rep() const { return *rep_; }
  [[nodiscard]] const std::shared_ptr<const RepSpec>& rep_ptr() const { return rep_; }
  [[nodiscard]] const Vector& phi() const { return phi_; }
  [[nodiscard]] const Vector& v() const { return v_; }

 private:
  std::shared_ptr<const RepSpec> rep_;
  Vector phi_;
  Vector v_;
};

using Functional = std::variant<FiniteFunctional, MatrixCoefficient>;

/// Delta functional φ_w.
FiniteFunctional phi(const Word& w);

FiniteFunctional shuffle_product(const FiniteFunctional& h1, const FiniteFunctional& h2);

Rational evaluate(const Functional& h, const NcPoly& x);
Rational evaluate(const Functional& h, const Word& w);

/// x▷h : y ↦ h(yx).
Functional right_translate(const NcPoly& x, const Functional& h);
/// x◁h : y ↦ h(xy).
Functional left_translate(const NcPoly& x, const Functional& h);

/// φ = Σ c_w φ_w as the matrix coefficient (Σ c_w b_w*, b_∅) on V_N(J),
/// N the longest word and J the letters used (J = {first letter} if empty).
MatrixCoefficient realize(const FiniteFunctional& h, const Alphabet& alphabet,
                          std::size_t dim_cap = kDefaultDimCap);

/// Product dual to the coproduct: (h1·h2)(x) = (h1⊗h2)(Δx). Two finite
/// functionals give their shuffle product; otherwise the result is the matrix
/// coefficient on the tensor module, realizing a finite factor on V_N(J).
Functional product(const Functional& h1, const Functional& h2);

/// h ∘ ρ_e = Σ c_k η_1^{k_1} ⊗ ⋯ ⊗ η_p^{k_p}: η = τ for locally nilpotent
/// letters (k ≥ 0, c_k = h(e^k)/k!), η = exp(τ) for diagonalizable letters
/// (k = integer eigenvalue).
struct RhoExpansion {
  std::vector<Letter> tuple;
  std::vector<GeneratorKind> kinds;
  std::map<std::vector<long>, Rational> coeffs;
  friend bool operator==(const RhoExpansion&, const RhoExpansion&) = default;
};

/// Raised when an expansion does not terminate (the backing module is not
/// integrable along a tuple letter) or a finite functional is not regular
/// along a diagonalizable letter.
class NotRegular : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Kinds of tuple letters come from the backing module's alphabet (matrix
/// coefficients) or from `alphabet` (finite functionals).
RhoExpansion expand_rho(const Functional& h, const std::vector<Letter>& tuple, const Alphabet& alphabet);
RhoExpansion expand_rho(const MatrixCoefficient& h, const std::vector<Letter>& tuple);

struct TupleBound {
  std::vector<Letter> tuple;
  std::vector<long> max_abs_index;  // per position; empty expansion gives zeros
};

struct RegularityCertificate {
  bool regular = true;
  std::vector<TupleBound> bounds;
  std::string reason;
};

inline constexpr std::size_t kDefaultTupleHorizon = 3;
inline constexpr std::size_t kDefaultShuffleSlack = 5;

/// Expands h along every tuple of alphabet letters of length 1..max_tuple.
RegularityCertificate is_regular(const Functional& h, const Alphabet& alphabet,
                                 std::size_t max_tuple = kDefaultTupleHorizon);

struct FfrMembership {
  bool member = true;       // U(g)▷h finite-dimensional and integrable
  bool integrable = true;
  std::size_t dim = 0;      // dim U(g)▷h
};

FfrMembership membership_ffr(const Functional& h);

/// Semi-decision: true iff h vanishes on every word of length in
/// (n, n + slack]. The alphabet of a finite functional is irrelevant.
bool in_shuffle_span(const Functional& h, std::size_t n, std::size_t slack = kDefaultShuffleSlack);

/// Additive submonoid of ℤ generated by a finite set of integers.
class ZMonoid {
 public:
  explicit ZMonoid(std::set<long> generators);
  [[nodiscard]] const std::set<long>& generators() const { return generators_; }
  [[nodiscard]] bool contains(long n) const;
  /// Members in [lo, hi].
  [[nodiscard]] std::vector<long> elements(long lo, long hi) const;

 private:
  std::set<long> generators_;  // nonzero generators
  long gcd_ = 0;
  bool has_positive_ = false;
  bool has_negative_ = false;
};

/// Monoid generated by the diagonal eigenvalues of a diagonalizable letter
/// across the given modules.
ZMonoid z_monoid(Letter e, const std::vector<RepSpec>& reps);

/// Evaluation equality on all words of length <= max_length over the first
/// `letters` letters.
bool agree_on_words(const Functional& a, const Functional& b, std::size_t letters, std::size_t max_length);

}  // namespace ugdual
