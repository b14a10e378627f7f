#include <doctest.h>

#include "helpers.hpp"
#include "ugdual/group.hpp"
#include "ugdual/oracles/oracles.hpp"

using namespace ugdual;
using namespace testing;

namespace {

const Alphabet kAb = standard_alphabet(2);
// e1, e2 nilpotent; h diagonal.
const Alphabet kMixed({"e1", "e2", "h"},
                      {GeneratorKind::LocallyNilpotent, GeneratorKind::LocallyNilpotent,
                       GeneratorKind::DiagonalizableInteger});

using F = OneParamFactor;

RegularFunction theta() {
  const RepSpec c = make_chain(kAb, {e1, e2});
  return RegularFunction{MatrixCoefficient(c, vec({0, 0, 1}), c.basis_vector(0))};
}

RepSpec random_mixed_module(oracle::Rng& rng, long dim) {
  std::vector<Matrix> act(3, Matrix::Zero(dim, dim));
  for (int l = 0; l < 2; ++l) {
    for (long i = 0; i < dim; ++i) {
      for (long j = 0; j < i; ++j) {
        if (rng.coin()) act[l](i, j) = rng.rational(2, 2);
      }
    }
  }
  for (long i = 0; i < dim; ++i) act[2](i, i) = rng.range(-2, 2);
  return RepSpec(kMixed, static_cast<std::size_t>(dim), act);
}

Vector random_vector(oracle::Rng& rng, long dim) {
  Vector v(dim);
  for (long i = 0; i < dim; ++i) v(i) = rng.rational(3, 2);
  return v;
}

GroupWord random_group_word(oracle::Rng& rng, std::size_t letters, bool torus) {
  GroupWord g;
  for (long i = rng.range(0, 4); i > 0; --i) {
    const Letter l{static_cast<std::uint32_t>(rng.range(0, static_cast<long>(letters) - 1))};
    if (torus && l.id == 2) {
      g.push_back(F::torus(l, rng.nonzero_rational(3, 2)));
    } else {
      g.push_back(F::exp(l, rng.rational(3, 2)));
    }
  }
  return g;
}

}  // namespace

TEST_CASE("group words act on chains") {
  const RepSpec c = make_chain(kAb, {e1, e2});
  const Rational t1(2, 3), t2(-5);
  const Vector out = act_group(c, {F::exp(e2, t2), F::exp(e1, t1)}, c.basis_vector(0));
  CHECK(out == vec({1, 0, 0}) + t1 * c.basis_vector(1) + t1 * t2 * c.basis_vector(2));
  CHECK(act_group(c, {}, c.basis_vector(1)) == c.basis_vector(1));
  // Reversed order: e2 sees b0 first and does nothing.
  CHECK(act_group(c, {F::exp(e1, t1), F::exp(e2, t2)}, c.basis_vector(0)) == vec({1, 0, 0}) + t1 * c.basis_vector(1));

  const Alphabet h({"h"}, {GeneratorKind::DiagonalizableInteger});
  const RepSpec d(h, 1, {Matrix::Constant(1, 1, Rational(2))});
  CHECK(act_group(d, {F::torus(Letter{0}, 3)}, vec({1})) == vec({9}));
  CHECK(act_group(d, {F::torus(Letter{0}, Rational(1, 2))}, vec({1})) == vec({1}) / Rational(4));
  CHECK_THROWS_AS(act_group(d, {F::torus(Letter{0}, 0)}, vec({1})), ValidationError);
  CHECK_THROWS_AS(act_group(d, {F::exp(Letter{0}, 1)}, vec({1})), ValidationError);
}

TEST_CASE("regular function values") {
  CHECK(eval_regular(theta(), {F::exp(e2, 1), F::exp(e1, 1)}) == Rational(1));
  CHECK(eval_regular(theta(), {F::exp(e1, 1), F::exp(e2, 1)}) == Rational(0));
  const RepSpec c = make_chain(kAb, {e1, e2});
  const RegularFunction f{MatrixCoefficient(c, vec({2, 1, 0}), vec({3, 0, 0}))};
  CHECK(eval_regular(f, {}) == Rational(6));
  const RepSpec one = make_chain(standard_alphabet(2), {e1});
  const RegularFunction g{MatrixCoefficient(one, vec({1, 1}), vec({0, 4}))};
  CHECK(eval_regular(g, {F::exp(e2, 7)}) == Rational(4));
}

TEST_CASE("action agrees with the dense series oracle") {
  oracle::Rng rng(31);
  for (int t = 0; t < 40; ++t) {
    const RepSpec r = random_mixed_module(rng, 4);
    const Vector phi = random_vector(rng, 4);
    const Vector v = random_vector(rng, 4);
    const GroupWord g = random_group_word(rng, 3, true);
    CHECK(eval_regular(RegularFunction{MatrixCoefficient(r, phi, v)}, g) == oracle::eval_group_dense(r, g, phi, v));
  }
}

TEST_CASE("action is a monoid homomorphism") {
  oracle::Rng rng(5);
  for (int t = 0; t < 30; ++t) {
    const RepSpec r = random_mixed_module(rng, 4);
    const Vector v = random_vector(rng, 4);
    const GroupWord g1 = random_group_word(rng, 3, true);
    const GroupWord g2 = random_group_word(rng, 3, true);
    GroupWord g = g1;
    g.insert(g.end(), g2.begin(), g2.end());
    CHECK(act_group(r, g, v) == act_group(r, g1, act_group(r, g2, v)));
  }
}

TEST_CASE("one-parameter subgroups") {
  oracle::Rng rng(9);
  for (int t = 0; t < 30; ++t) {
    const RepSpec r = random_mixed_module(rng, 4);
    const Vector v = random_vector(rng, 4);
    const Rational a = rng.nonzero_rational(3, 2);
    const Rational b = rng.nonzero_rational(3, 2);
    for (const Letter l : {e1, e2}) {
      CHECK(act_group(r, {F::exp(l, a + b)}, v) == act_group(r, {F::exp(l, a), F::exp(l, b)}, v));
      CHECK(act_group(r, {F::exp(l, a), F::exp(l, -a)}, v) == v);
    }
    const Letter h{2};
    CHECK(act_group(r, {F::torus(h, a * b)}, v) == act_group(r, {F::torus(h, a), F::torus(h, b)}, v));
    CHECK(act_group(r, {F::torus(h, 1)}, v) == v);
  }
}

TEST_CASE("taylor expansions") {
  const MultiPoly a = taylor_expand(Functional(phi(Word{0, 1})), {e1, e2}, kAb);
  CHECK(a.str() == "t1*t2");
  CHECK(taylor_expand(Functional(phi(Word{})), {e1}, kAb).str() == "1");
  CHECK(taylor_expand(Functional(phi(Word{0, 0})), {e1}, kAb).str() == "1/2*t1^2");
  const RepSpec d = make_trivial(kMixed);
  CHECK_THROWS(taylor_expand(Functional(MatrixCoefficient(d, vec({1}), vec({1}))), {Letter{2}}, kMixed));
}

TEST_CASE("taylor expansion matches group evaluation") {
  const RepSpec p = make_alternating_pair(kAb, e1, e2);
  const MatrixCoefficient g(p, vec({1, 1}), p.basis_vector(0));
  const std::vector<Letter> tuple{e2, e1, e2};
  const MultiPoly poly_t = taylor_expand(Functional(g), tuple, kAb);
  CHECK(poly_t.coeff({0, 0, 0}) == Rational(1));
  CHECK(poly_t.coeff({1, 0, 0}) == Rational(1));
  oracle::Rng rng(77);
  const RegularFunction f = xi_map(g);
  for (int t = 0; t < 20; ++t) {
    std::vector<Rational> pt;
    GroupWord gw;
    for (const Letter l : tuple) {
      pt.push_back(rng.rational(5, 3));
      gw.push_back(F::exp(l, pt.back()));
    }
    CHECK(poly_t.evaluate(pt) == eval_regular(f, gw));
  }

  oracle::Rng rng2(78);
  const RepSpec v = make_VNJ(kAb, 3, {e1, e2});
  for (int t = 0; t < 100; ++t) {
    Vector phi_v(v.dim()), vv(v.dim());
    for (Eigen::Index i = 0; i < phi_v.size(); ++i) phi_v(i) = rng2.rational(2, 1);
    vv = v.basis_vector(static_cast<std::size_t>(rng2.range(0, 2)));
    const MatrixCoefficient h(v, phi_v, vv);
    std::vector<Letter> tup;
    for (long i = rng2.range(1, 3); i > 0; --i) tup.push_back(Letter{static_cast<std::uint32_t>(rng2.range(0, 1))});
    std::vector<Rational> pt;
    GroupWord gw;
    for (const Letter l : tup) {
      pt.push_back(rng2.rational(3, 2));
      gw.push_back(F::exp(l, pt.back()));
    }
    CHECK(taylor_expand(Functional(h), tup, kAb).evaluate(pt) == eval_regular(xi_map(h), gw));
  }
}

TEST_CASE("coordinate functions") {
  const Rational a(3, 2), b(-4);
  CHECK(f_w(Word{0, 1}, {F::exp(e1, a), F::exp(e2, b)}) == a * b);
  CHECK(f_w(Word{}, {F::exp(e1, a), F::exp(e2, b)}) == Rational(1));
  CHECK(f_w(Word{}, {}) == Rational(1));
  CHECK(f_w(Word{0, 0}, {F::exp(e1, a)}) == a * a / 2);
  CHECK(f_w(Word{1, 0}, {F::exp(e1, a), F::exp(e2, b)}) == Rational(0));
  // exp(a e1) exp(b e1) = exp((a+b) e1).
  CHECK(f_w(Word{0, 0, 0}, {F::exp(e1, a), F::exp(e1, b)}) == (a + b) * (a + b) * (a + b) / 6);
}

TEST_CASE("coordinate functions are the images of delta functionals") {
  oracle::Rng rng(41);
  for (const auto& w : words_up_to(2, 3)) {
    const RegularFunction f = xi_map(Functional(phi(w)), kAb);
    for (int t = 0; t < 5; ++t) {
      const GroupWord g = random_group_word(rng, 2, false);
      CHECK(eval_regular(f, g) == f_w(w, g));
    }
  }
}

TEST_CASE("coordinate functions multiply by shuffles") {
  oracle::Rng rng(43);
  for (int t = 0; t < 20; ++t) {
    const Word w1 = rng.word(2, static_cast<std::size_t>(rng.range(0, 3)));
    const Word w2 = rng.word(2, static_cast<std::size_t>(rng.range(0, 3)));
    const GroupWord g = random_group_word(rng, 2, false);
    Rational s = 0;
    for (const auto& [u, n] : shuffles(w1, w2)) s += Rational(static_cast<long>(n)) * f_w(u, g);
    CHECK(f_w(w1, g) * f_w(w2, g) == s);
  }
}

TEST_CASE("Phi and Xi") {
  const Functional h = phi_map(theta());
  CHECK(evaluate(h, Word{1, 0}) == Rational(1));
  CHECK(evaluate(h, Word{0, 1}) == Rational(0));
  CHECK(evaluate(h, Word{}) == Rational(0));

  const RepSpec c = make_chain(kAb, {e1});
  const Functional k = phi_map(RegularFunction{MatrixCoefficient(c, vec({2, 5}), c.basis_vector(1))});
  CHECK(agree_on_words(k, Functional(FiniteFunctional{NcPoly::constant(5)}), 2, 4));

  const RegularFunction one = xi_map(Functional(phi(Word{})), kAb);
  oracle::Rng rng(3);
  for (int t = 0; t < 10; ++t) CHECK(eval_regular(one, random_group_word(rng, 2, false)) == Rational(1));
}

TEST_CASE("Phi and Xi round trips") {
  oracle::Rng rng(47);
  for (int t = 0; t < 50; ++t) {
    const RepSpec r = random_mixed_module(rng, 3);
    const MatrixCoefficient h(r, random_vector(rng, 3), random_vector(rng, 3));
    CHECK(agree_on_words(phi_map(xi_map(h)), Functional(h), 3, 3));
    const RegularFunction f{h};
    const RegularFunction back = xi_map(std::get<MatrixCoefficient>(phi_map(f)));
    for (int s = 0; s < 2; ++s) {
      const GroupWord g = random_group_word(rng, 3, true);
      CHECK(eval_regular(back, g) == eval_regular(f, g));
    }
  }
}

TEST_CASE("right derivations") {
  const RegularFunction d = derive_right(e1, theta());
  CHECK(eval_regular(d, {F::exp(e2, 1)}) == Rational(1));
  CHECK(eval_regular(d, {}) == Rational(0));

  const Alphabet ab3 = standard_alphabet(3);
  const RepSpec c = make_chain(ab3, {e1, e2});
  const RegularFunction f{MatrixCoefficient(c, vec({1, 1, 1}), c.basis_vector(0))};
  const RegularFunction z = derive_right(e3, f);
  oracle::Rng rng(2);
  for (int t = 0; t < 10; ++t) CHECK(eval_regular(z, random_group_word(rng, 3, false)) == Rational(0));
}

TEST_CASE("Phi intertwines derivations and right translation") {
  oracle::Rng rng(53);
  for (int t = 0; t < 20; ++t) {
    const RepSpec r = random_mixed_module(rng, 3);
    const RegularFunction f{MatrixCoefficient(r, random_vector(rng, 3), random_vector(rng, 3))};
    for (std::uint32_t l = 0; l < 3; ++l) {
      const Letter e{l};
      CHECK(agree_on_words(phi_map(derive_right(e, f)), right_translate(NcPoly::letter(e), phi_map(f)), 3, 4));
    }
  }
}

TEST_CASE("derivations obey the Leibniz rule on products") {
  oracle::Rng rng(59);
  for (int t = 0; t < 15; ++t) {
    const RepSpec r1 = random_mixed_module(rng, 2);
    const RepSpec r2 = random_mixed_module(rng, 3);
    const RegularFunction f1{MatrixCoefficient(r1, random_vector(rng, 2), random_vector(rng, 2))};
    const RegularFunction f2{MatrixCoefficient(r2, random_vector(rng, 3), random_vector(rng, 3))};
    const RegularFunction p = multiply(f1, f2);
    for (std::uint32_t l = 0; l < 3; ++l) {
      const Letter e{l};
      const RegularFunction lhs = derive_right(e, p);
      const RegularFunction a = multiply(derive_right(e, f1), f2);
      const RegularFunction b = multiply(f1, derive_right(e, f2));
      for (int s = 0; s < 3; ++s) {
        const GroupWord g = random_group_word(rng, 3, true);
        CHECK(eval_regular(p, g) == eval_regular(f1, g) * eval_regular(f2, g));
        CHECK(eval_regular(lhs, g) == eval_regular(a, g) + eval_regular(b, g));
      }
    }
  }
}

TEST_CASE("translations are exchanged by the antipode") {
  oracle::Rng rng(61);
  for (int t = 0; t < 10; ++t) {
    const RepSpec r = random_mixed_module(rng, 3);
    const MatrixCoefficient h(r, random_vector(rng, 3), random_vector(rng, 3));
    const NcPoly x(rng.word(3, static_cast<std::size_t>(rng.range(1, 2))), rng.nonzero_rational(2, 1));
    const Functional sx = right_translate(antipode(x), Functional(h));
    for (const auto& y : words_up_to(3, 3)) {
      // (x◁(h∘S))(y) = h(S(xy)) = (S(x)▷h)(S(y))
      CHECK(evaluate(Functional(h), antipode(NcPoly(x) * NcPoly(y))) == evaluate(sx, antipode(NcPoly(y))));
    }
  }
}

TEST_CASE("faithfulness witnesses for polynomials") {
  const auto w = faithfulness_witness(poly({{Word{0, 1}, 1}, {Word{1, 0}, -1}}), kAb);
  CHECK(w.rep.dim() == 7);
  long nonzero = 0;
  for (Eigen::Index i = 0; i < w.image.size(); ++i) {
    if (w.image(i) != 0) {
      ++nonzero;
      CHECK((w.image(i) == Rational(1) || w.image(i) == Rational(-1)));
    }
  }
  CHECK(nonzero == 2);
  CHECK(w.image == act_poly(w.rep, poly({{Word{0, 1}, 1}, {Word{1, 0}, -1}}), w.v));

  const auto one = faithfulness_witness(NcPoly::constant(1), kAb);
  CHECK(one.image == one.v);

  const auto three = faithfulness_witness(NcPoly(Word{0}, 3), kAb);
  long nz = 0;
  for (Eigen::Index i = 0; i < three.image.size(); ++i) {
    if (three.image(i) != 0) {
      ++nz;
      CHECK(three.image(i) == Rational(3));
    }
  }
  CHECK(nz == 1);
  CHECK_THROWS_AS(faithfulness_witness(NcPoly(), kAb), ValidationError);
}

TEST_CASE("faithfulness witnesses for group words") {
  const auto a = group_faithfulness_witness({F::exp(e2, 2), F::exp(e1, 3)}, kAb);
  CHECK(a.rep.dim() == 3);
  CHECK(a.image(2) == Rational(6));
  const auto b = group_faithfulness_witness({F::exp(e1, 1)}, kAb);
  CHECK(b.image(1) == Rational(1));
  const auto c = group_faithfulness_witness({F::exp(e1, 5), F::exp(e2, 7), F::exp(e1, 11)}, kAb);
  CHECK(c.image(3) == Rational(385));
  CHECK(c.image == act_group(c.rep, {F::exp(e1, 5), F::exp(e2, 7), F::exp(e1, 11)}, c.v));
  CHECK_THROWS_AS(group_faithfulness_witness({F::exp(e1, 1), F::exp(e1, 2)}, kAb), ValidationError);
  CHECK_THROWS_AS(group_faithfulness_witness({F::exp(e1, 0)}, kAb), ValidationError);
}
