#include "ugdual/group.hpp"

#include "ugdual/linalg.hpp"

namespace ugdual {

Vector act_factor(const RepSpec& r, const OneParamFactor& f, const Vector& v) {
  const Matrix& m = r.matrix(f.letter);
  const std::string& name = r.alphabet().name(f.letter);
  if (f.type == OneParamFactor::Type::Exp) {
    if (r.kind(f.letter) != GeneratorKind::LocallyNilpotent) {
      throw ValidationError("exp factor on diagonalizable letter '" + name + "'");
    }
    // exp(t e) v = Σ_k t^k e^k v / k!, a finite sum on an integrable module.
    Vector out = v;
    Vector term = v;
    for (std::size_t k = 1;; ++k) {
      term = (m * term).eval() * (f.param / Rational(static_cast<long>(k)));
      if (linalg::is_zero(term)) break;
      if (k > r.dim()) throw ValidationError("exp factor: letter '" + name + "' is not nilpotent");
      out += term;
    }
    return out;
  }
  if (r.kind(f.letter) != GeneratorKind::DiagonalizableInteger) {
    throw ValidationError("torus factor on locally nilpotent letter '" + name + "'");
  }
  if (f.param.is_zero()) throw ValidationError("torus factor on '" + name + "' with zero parameter");
  Vector out = v;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    for (Eigen::Index j = 0; j < v.size(); ++j) {
      if (i != j && !m(i, j).is_zero()) throw ValidationError("letter '" + name + "' is not diagonal");
    }
    if (!m(i, i).is_integer()) throw ValidationError("letter '" + name + "' has a non-integer eigenvalue");
    if (!out(i).is_zero()) out(i) *= pow(f.param, m(i, i).to_long());
  }
  return out;
}

Vector act_group(const RepSpec& r, const GroupWord& g, const Vector& v) {
  if (static_cast<std::size_t>(v.size()) != r.dim()) throw ValidationError("act_group: vector length mismatch");
  Vector out = v;
  for (auto it = g.rbegin(); it != g.rend(); ++it) out = act_factor(r, *it, out);
  return out;
}

Rational eval_regular(const RegularFunction& f, const GroupWord& g) {
  const Vector gv = act_group(f.mc.rep(), g, f.mc.v());
  Rational s = 0;
  for (Eigen::Index i = 0; i < gv.size(); ++i) s += f.mc.phi()(i) * gv(i);
  return s;
}

MultiPoly taylor_expand(const Functional& h, const std::vector<Letter>& tuple, const Alphabet& alphabet) {
  const Alphabet& kinds = std::holds_alternative<MatrixCoefficient>(h)
                              ? std::get<MatrixCoefficient>(h).rep().alphabet()
                              : alphabet;
  for (const Letter e : tuple) {
    if (kinds.kind(e) != GeneratorKind::LocallyNilpotent) {
      throw ValidationError("taylor_expand: letter '" + kinds.name(e) +
                            "' is diagonalizable; evaluate the group function directly");
    }
  }
  // For nilpotent letters the ρ-expansion coefficients are h(e^k)/k!.
  const RhoExpansion ex = expand_rho(h, tuple, kinds);
  MultiPoly out(tuple.size());
  for (const auto& [k, c] : ex.coeffs) out.add_term(k, c);
  return out;
}

Functional phi_map(const RegularFunction& f) { return f.mc; }

RegularFunction xi_map(const MatrixCoefficient& h) { return RegularFunction{h}; }

RegularFunction xi_map(const Functional& h, const Alphabet& alphabet) {
  if (const auto* m = std::get_if<MatrixCoefficient>(&h)) return RegularFunction{*m};
  return RegularFunction{realize(std::get<FiniteFunctional>(h), alphabet)};
}

Rational f_w(const Word& w, const GroupWord& g) {
  for (const auto& f : g) {
    if (f.type != OneParamFactor::Type::Exp) throw ValidationError("f_w: group word has a torus factor");
  }
  const std::size_t len = w.length();
  const std::size_t p = g.size();
  // table[j][pos]: contribution of factors j.. to the suffix of w from pos.
  std::vector<std::vector<Rational>> table(p + 1, std::vector<Rational>(len + 1, Rational(0)));
  table[p][len] = 1;
  for (std::size_t j = p; j-- > 0;) {
    for (std::size_t pos = 0; pos <= len; ++pos) {
      Rational sum = table[j + 1][pos];
      Rational power = 1;
      for (std::size_t k = 1; pos + k <= len && w[pos + k - 1] == g[j].letter; ++k) {
        power *= g[j].param / Rational(static_cast<long>(k));
        sum += power * table[j + 1][pos + k];
      }
      table[j][pos] = sum;
    }
  }
  return table[0][0];
}

RegularFunction derive_right(Letter e, const RegularFunction& f) {
  // Both d/dt exp(te)|_{t=0} and d/ds s^e|_{s=1} act on v as e itself.
  const auto& mc = f.mc;
  return RegularFunction{MatrixCoefficient(mc.rep_ptr(), mc.phi(), mc.rep().matrix(e) * mc.v())};
}

RegularFunction multiply(const RegularFunction& f1, const RegularFunction& f2) {
  return RegularFunction{std::get<MatrixCoefficient>(product(f1.mc, f2.mc))};
}

Witness faithfulness_witness(const NcPoly& x, const Alphabet& alphabet) {
  if (x.is_zero()) throw ValidationError("faithfulness_witness: zero polynomial");
  RepSpec rep = x.max_length() == 0 ? make_trivial(alphabet) : make_VNJ(alphabet, x.max_length(), x.support());
  Vector v = rep.basis_vector(0);  // b_∅ comes first in shortlex order
  Vector image = act_poly(rep, x, v);
  return Witness{std::move(rep), std::move(v), std::move(image)};
}

Witness group_faithfulness_witness(const GroupWord& g, const Alphabet& alphabet) {
  if (g.empty()) throw ValidationError("group_faithfulness_witness: empty group word");
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i].type != OneParamFactor::Type::Exp) {
      throw ValidationError("group_faithfulness_witness: factor " + std::to_string(i) + " is not an exp factor");
    }
    if (g[i].param.is_zero()) {
      throw ValidationError("group_faithfulness_witness: factor " + std::to_string(i) + " has zero parameter");
    }
    if (i > 0 && g[i].letter == g[i - 1].letter) {
      throw ValidationError("group_faithfulness_witness: factors " + std::to_string(i - 1) + " and " +
                            std::to_string(i) + " share a letter (word not reduced)");
    }
  }
  std::vector<Letter> seq;
  for (auto it = g.rbegin(); it != g.rend(); ++it) seq.push_back(it->letter);
  RepSpec rep = make_chain(alphabet, seq);
  Vector v = rep.basis_vector(0);
  Vector image = act_group(rep, g, v);
  return Witness{std::move(rep), std::move(v), std::move(image)};
}

}  // namespace ugdual
