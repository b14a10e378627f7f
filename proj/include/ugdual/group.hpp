#pragma once

#include <vector>

#include "ugdual/functional.hpp"
#include "ugdual/multipoly.hpp"
#include "ugdual/rep.hpp"

namespace ugdual {

/// exp(t·e) for a locally nilpotent letter, or the torus element s^e for a
/// diagonalizable one (s ≠ 0).
struct OneParamFactor {
  enum class Type { Exp, Torus };
  Letter letter;
  Rational param;
  Type type = Type::Exp;

  static OneParamFactor exp(Letter l, Rational t) { return {l, std::move(t), Type::Exp}; }
  static OneParamFactor torus(Letter l, Rational s) { return {l, std::move(s), Type::Torus}; }
  friend bool operator==(const OneParamFactor&, const OneParamFactor&) = default;
};

/// Product of factors, leftmost first. The rightmost factor acts first.
using GroupWord = std::vector<OneParamFactor>;

/// f(g) = phi(g·v), the group-side function of a matrix coefficient.
struct RegularFunction {
  MatrixCoefficient mc;
};

Vector act_factor(const RepSpec& r, const OneParamFactor& f, const Vector& v);
Vector act_group(const RepSpec& r, const GroupWord& g, const Vector& v);

Rational eval_regular(const RegularFunction& f, const GroupWord& g);

/// Σ_k h(e1^{k1}⋯ep^{kp}) t^k / k!, the function k ↦ Ξ(h)(exp(t1 e1)⋯exp(tp ep)).
/// Every tuple letter must be locally nilpotent.
MultiPoly taylor_expand(const Functional& h, const std::vector<Letter>& tuple, const Alphabet& alphabet);

/// Φ(f)(x) = (x▷f)(1): the matrix coefficient with the same data.
Functional phi_map(const RegularFunction& f);
/// Ξ(h): finite functionals are first realized on V_N(J) over `alphabet`.
RegularFunction xi_map(const Functional& h, const Alphabet& alphabet);
RegularFunction xi_map(const MatrixCoefficient& h);

/// Value of the coordinate function f_w on exp(t1 e1)⋯exp(tp ep):
/// Σ over exponent tuples with e1^{k1}⋯ep^{kp} = w of t^k/k!.
Rational f_w(const Word& w, const GroupWord& g);

/// e▷f: derivative of t ↦ f(g·exp(t e)) at t = 0, or of s ↦ f(g·s^e) at s = 1.
RegularFunction derive_right(Letter e, const RegularFunction& f);

/// Pointwise product of group functions; realized on the tensor module.
RegularFunction multiply(const RegularFunction& f1, const RegularFunction& f2);

struct Witness {
  RepSpec rep;
  Vector v;
  Vector image;
};

/// (V_N(J), b_∅, x·b_∅) with N the longest term and J the letters of x.
Witness faithfulness_witness(const NcPoly& x, const Alphabet& alphabet);

/// For a reduced g = exp(t_p e_p)⋯exp(t_1 e_1): (V(e1⋯ep), b0, g·b0), whose
/// b_p coordinate is t_1⋯t_p.
Witness group_faithfulness_witness(const GroupWord& g, const Alphabet& alphabet);

}  // namespace ugdual
