#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "ugdual/functional.hpp"
#include "ugdual/group.hpp"
#include "ugdual/rational.hpp"
#include "ugdual/word.hpp"

/// Reference computations used only to cross-check the library. Each one
/// takes a different route from the code it checks.
namespace ugdual::oracle {

/// Seeded generator with platform-independent draws.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  /// Uniform integer in [lo, hi].
  long range(long lo, long hi);
  bool coin() { return range(0, 1) == 1; }
  /// p/q with p in [-num, num], q in [1, den].
  Rational rational(long num, long den);
  Rational nonzero_rational(long num, long den);
  Word word(std::size_t letters, std::size_t length);

 private:
  std::mt19937_64 gen_;
};

/// Shuffles by choosing the positions of w1 among l1 + l2 slots.
std::map<Word, std::uint64_t> shuffles_by_positions(const Word& w1, const Word& w2);

/// φ(g·v) with each exp(tM) summed as a dense power series and torus factors
/// applied as s^{M_ii} on the diagonal.
Rational eval_group_dense(const RepSpec& r, const GroupWord& g, const Vector& phi, const Vector& v);

/// (h1·h2)(w) = Σ over position subsets S of h1(w_S) h2(w_{S^c}).
Rational product_by_subsets(const Functional& h1, const Functional& h2, const Word& w);

/// Explicit L(m) for sl2 on v_0..v_m with f v_k = (k+1) v_{k+1},
/// e v_k = (m-k+1) v_{k-1}, h v_k = (m-2k) v_k.
Matrix sl2_e(long m);
Matrix sl2_f(long m);
Matrix sl2_h(long m);
/// Dense exp of a nilpotent matrix.
Matrix nilpotent_exp(const Matrix& x);
/// v_0*(exp(bE) exp(aF) v_0).
Rational sl2_theta(long m, const Rational& b, const Rational& a);

/// Weyl dimension of the A2 module with highest weight aΛ1 + bΛ2.
long weyl_dim_a2(long a, long b);

/// Whether v⊗v lies in the Casimir eigenspace of L(2m) inside L(m)⊗L(m),
/// with v given in the explicit basis above.
bool sl2_cone_by_casimir(long m, const Vector& v);

/// Sums of generators (with repetition) lying in [lo, hi], by breadth-first
/// search over partial sums.
std::set<long> monoid_closure(const std::set<long>& generators, long lo, long hi);

}  // namespace ugdual::oracle
