#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ugdual/ncpoly.hpp"
#include "ugdual/rational.hpp"
#include "ugdual/word.hpp"

namespace ugdual {

inline constexpr std::size_t kDefaultDimCap = 4096;

/// Finite-dimensional module of the free Lie algebra: one exact matrix per
/// alphabet letter. Letter kinds come from the alphabet. A RepSpec may be
/// built from arbitrary data; validate_integrable() says whether it is an
/// integrable module. The library constructors only produce integrable ones.
class RepSpec {
 public:
  RepSpec() = default;
  RepSpec(Alphabet alphabet, std::size_t dim, std::vector<Matrix> action,
          std::vector<std::string> labels = {});

  [[nodiscard]] const Alphabet& alphabet() const { return alphabet_; }
  [[nodiscard]] std::size_t dim() const { return dim_; }
  [[nodiscard]] const Matrix& matrix(Letter l) const;
  [[nodiscard]] const std::vector<Matrix>& matrices() const { return action_; }
  [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }
  [[nodiscard]] GeneratorKind kind(Letter l) const { return alphabet_.kind(l); }
  /// Index of the basis vector with this label; unlabelled modules use b0, b1, ...
  [[nodiscard]] std::optional<std::size_t> label_index(const std::string& label) const;
  [[nodiscard]] Vector basis_vector(std::size_t i) const;
  [[nodiscard]] Vector zero_vector() const { return Vector::Zero(static_cast<Eigen::Index>(dim_)); }

  friend bool operator==(const RepSpec& a, const RepSpec& b);

 private:
  Alphabet alphabet_;
  std::size_t dim_ = 0;
  std::vector<Matrix> action_;
  std::vector<std::string> labels_;
};

struct Violation {
  Letter letter;
  std::string message;
};

struct ValidationReport {
  bool ok = true;
  std::vector<Violation> violations;
  /// Eigenvalues of each diagonalizable letter whose matrix passed.
  std::map<Letter, std::set<long>> eigenvalues;
  /// Diagonalizable letters must be given already diagonal; non-diagonal but
  /// diagonalizable input is rejected and reported with this note.
  std::vector<std::string> notes;
};

ValidationReport validate_integrable(const RepSpec& r);

/// (x1 x2 ⋯ xk)·v = x1(x2(⋯(xk v))).
Vector act_word(const RepSpec& r, const Word& w, const Vector& v);
Vector act_poly(const RepSpec& r, const NcPoly& x, const Vector& v);
/// Matrix by which x acts.
Matrix poly_matrix(const RepSpec& r, const NcPoly& x);

/// Tensor product; letters act as x⊗1 + 1⊗x. Basis index (i, j) ↦ i*dim2 + j.
RepSpec tensor(const RepSpec& r1, const RepSpec& r2);
/// Kronecker product of coordinate vectors matching tensor()'s basis order.
Vector tensor_vector(const Vector& a, const Vector& b);

/// Transposed matrices: a module for g^op.
RepSpec dual_rep(const RepSpec& r);

/// Reduced-echelon basis of the smallest subspace containing v that is closed
/// under every letter matrix.
std::vector<Vector> submodule_generated(const RepSpec& r, const Vector& v);

/// V_N(J): basis b_w for l(w) <= N and supp(w) ⊆ J, with e·b_w = b_{ew} while
/// the length stays <= N. Basis in shortlex order, labels "b_<word>".
RepSpec make_VNJ(const Alphabet& alphabet, std::size_t n, const std::set<Letter>& j,
                 std::size_t dim_cap = kDefaultDimCap);

/// V(e1 e2 ⋯ ep): basis b0..bp with e_k b_{k-1} = b_k and every other
/// generator action zero. Adjacent letters must differ.
RepSpec make_chain(const Alphabet& alphabet, const std::vector<Letter>& seq);

/// Two-dimensional module with e1 b2 = b1 and e2 b1 = b2 (all other actions
/// zero). Its matrix coefficient at b1 is not finitely supported.
RepSpec make_alternating_pair(const Alphabet& alphabet, Letter e1, Letter e2);

/// One-dimensional module on which every letter acts by zero.
RepSpec make_trivial(const Alphabet& alphabet);

/// Letters acting by a nonzero matrix.
std::set<Letter> support(const RepSpec& r);

}  // namespace ugdual
