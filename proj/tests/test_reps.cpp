#include <doctest.h>

#include "helpers.hpp"
#include "ugdual/linalg.hpp"
#include "ugdual/oracles/oracles.hpp"

using namespace ugdual;
using namespace testing;

namespace {
const Alphabet kAb = standard_alphabet(2);

RepSpec diagonal_module(std::initializer_list<long> eigen) {
  const Alphabet a({"h"}, {GeneratorKind::DiagonalizableInteger});
  const auto n = static_cast<Eigen::Index>(eigen.size());
  Matrix d = Matrix::Zero(n, n);
  Eigen::Index i = 0;
  for (const long x : eigen) {
    d(i, i) = Rational(x);
    ++i;
  }
  return RepSpec(a, eigen.size(), {d});
}
}  // namespace

TEST_CASE("integrability validation") {
  CHECK(validate_integrable(make_chain(kAb, {e1, e2})).ok);

  const Alphabet one = standard_alphabet(1);
  const RepSpec bad(one, 1, {Matrix::Constant(1, 1, Rational(1))});
  const auto report = validate_integrable(bad);
  CHECK_FALSE(report.ok);
  REQUIRE(report.violations.size() == 1);
  CHECK(report.violations[0].letter == e1);

  const auto diag = validate_integrable(diagonal_module({1, -1}));
  CHECK(diag.ok);
  CHECK(diag.eigenvalues.at(Letter{0}) == std::set<long>{-1, 1});

  const Alphabet h({"h"}, {GeneratorKind::DiagonalizableInteger});
  Matrix nd(2, 2);
  nd << 1, 1, 0, 2;
  CHECK_FALSE(validate_integrable(RepSpec(h, 2, {nd})).ok);
  Matrix half = Matrix::Zero(1, 1);
  half(0, 0) = Rational(1, 2);
  CHECK_FALSE(validate_integrable(RepSpec(h, 1, {half})).ok);
}

TEST_CASE("word action on the chain module") {
  const RepSpec c = make_chain(kAb, {e1, e2});
  const Vector b0 = c.basis_vector(0);
  CHECK(act_word(c, Word{1, 0}, b0) == c.basis_vector(2));
  CHECK(linalg::is_zero(act_word(c, Word{0, 1}, b0)));
  CHECK(act_word(c, Word{}, b0) == b0);
  CHECK(act_poly(c, poly({{Word{0, 1}, 1}, {Word{1, 0}, -1}}), b0) == Vector(-c.basis_vector(2)));
  CHECK(linalg::is_zero(act_poly(c, NcPoly(), b0)));
  CHECK(act_poly(c, NcPoly::constant(1), b0) == b0);
  CHECK_THROWS_AS(act_word(c, Word{0}, vec({1, 0})), ValidationError);
}

TEST_CASE("word action composes") {
  oracle::Rng rng(11);
  const RepSpec r = make_VNJ(kAb, 3, {e1, e2});
  for (int t = 0; t < 40; ++t) {
    const Word a = rng.word(2, static_cast<std::size_t>(rng.range(0, 4)));
    const Word b = rng.word(2, static_cast<std::size_t>(rng.range(0, 4)));
    Vector v(static_cast<Eigen::Index>(r.dim()));
    for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = rng.rational(3, 2);
    CHECK(act_word(r, concat(a, b), v) == act_word(r, a, act_word(r, b, v)));
  }
}

TEST_CASE("tensor products") {
  const Alphabet one = standard_alphabet(1);
  const RepSpec v1 = make_chain(one, {e1});
  const RepSpec sq = tensor(v1, v1);
  CHECK(sq.dim() == 4);
  const Matrix& m = sq.matrix(e1);
  CHECK_FALSE(linalg::is_zero(m * m));
  CHECK(linalg::is_zero(m * m * m));

  const RepSpec triv = make_trivial(one);
  CHECK(tensor(triv, v1).matrices() == v1.matrices());

  const RepSpec t = tensor(diagonal_module({1}), diagonal_module({2}));
  CHECK(t.matrix(Letter{0})(0, 0) == Rational(3));

  const Alphabet mixed({"e1"}, {GeneratorKind::DiagonalizableInteger});
  CHECK_THROWS_AS(tensor(v1, RepSpec(mixed, 1, {Matrix::Zero(1, 1)})), ValidationError);
}

TEST_CASE("tensor action is the Leibniz rule") {
  oracle::Rng rng(5);
  const RepSpec a = make_chain(kAb, {e1, e2});
  const RepSpec b = make_VNJ(kAb, 1, {e1, e2});
  const RepSpec t = tensor(a, b);
  for (int trial = 0; trial < 10; ++trial) {
    Vector x(3), y(3);
    for (Eigen::Index i = 0; i < 3; ++i) {
      x(i) = rng.rational(4, 3);
      y(i) = rng.rational(4, 3);
    }
    for (const Letter l : {e1, e2}) {
      const Vector lhs = t.matrix(l) * tensor_vector(x, y);
      const Vector rhs = tensor_vector(a.matrix(l) * x, y) + tensor_vector(x, b.matrix(l) * y);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("dual modules") {
  const Alphabet one = standard_alphabet(1);
  const RepSpec v1 = make_chain(one, {e1});
  const RepSpec d = dual_rep(v1);
  CHECK(d.matrix(e1) == v1.matrix(e1).transpose());
  CHECK(d.matrix(e1)(0, 1) == Rational(1));
  const RepSpec diag = diagonal_module({2, -3});
  CHECK(dual_rep(diag).matrices() == diag.matrices());
  CHECK(dual_rep(dual_rep(v1)).matrices() == v1.matrices());
}

TEST_CASE("generated submodules") {
  const RepSpec c = make_chain(kAb, {e1, e2});
  CHECK(submodule_generated(c, c.basis_vector(0)).size() == 3);
  CHECK(submodule_generated(c, c.zero_vector()).empty());
  const auto top = submodule_generated(c, c.basis_vector(2));
  REQUIRE(top.size() == 1);
  CHECK(top[0] == c.basis_vector(2));

  const RepSpec r = make_VNJ(kAb, 2, {e1, e2});
  Vector v = r.zero_vector();
  v(1) = 1;
  v(2) = -2;
  const auto basis = submodule_generated(r, v);
  Matrix span(static_cast<Eigen::Index>(r.dim()), static_cast<Eigen::Index>(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i) span.col(static_cast<Eigen::Index>(i)) = basis[i];
  for (const auto& b : basis) {
    for (const Letter l : {e1, e2}) CHECK(linalg::in_column_span(span, Vector(r.matrix(l) * b)));
  }
}

TEST_CASE("free modules V_N(J)") {
  const Alphabet one = standard_alphabet(1);
  const RepSpec a = make_VNJ(one, 1, {e1});
  CHECK(a.dim() == 2);
  CHECK(a.matrix(e1)(1, 0) == Rational(1));
  CHECK(make_VNJ(kAb, 0, {e1}).dim() == 1);
  const RepSpec b = make_VNJ(kAb, 2, {e1, e2});
  CHECK(b.dim() == 7);
  CHECK(validate_integrable(b).ok);
  CHECK(b.labels().front() == "b_1");
  CHECK(b.label_index("b_e2.e1").has_value());
  CHECK_THROWS_AS(make_VNJ(kAb, 12, {e1, e2}), CapExceeded);
  CHECK_THROWS_AS(make_VNJ(kAb, 2, {}), ValidationError);
}

TEST_CASE("chain modules") {
  CHECK(make_chain(kAb, {e1, e2}).dim() == 3);
  const RepSpec one = make_chain(kAb, {e1});
  CHECK(one.dim() == 2);
  const RepSpec c = make_chain(kAb, {e1, e2, e1});
  CHECK(c.dim() == 4);
  CHECK(c.matrix(e1)(1, 0) == Rational(1));
  CHECK(c.matrix(e1)(3, 2) == Rational(1));
  CHECK(validate_integrable(c).ok);
  CHECK_THROWS_AS(make_chain(kAb, {e1, e1}), ValidationError);
}

TEST_CASE("alternating pair module") {
  const RepSpec p = make_alternating_pair(kAb, e1, e2);
  CHECK(p.dim() == 2);
  CHECK(act_word(p, Word{1}, p.basis_vector(0)) == p.basis_vector(1));
  CHECK(act_word(p, Word{0}, p.basis_vector(1)) == p.basis_vector(0));
  CHECK(linalg::is_zero(act_word(p, Word{0}, p.basis_vector(0))));
  CHECK(validate_integrable(p).ok);
}

TEST_CASE("module support") {
  CHECK(support(make_chain(kAb, {e1, e2})) == std::set<Letter>{e1, e2});
  CHECK(support(make_trivial(kAb)).empty());
  CHECK(support(make_VNJ(kAb, 2, {e1})) == std::set<Letter>{e1});
}

TEST_CASE("polynomials act faithfully on V_N(J)") {
  oracle::Rng rng(3);
  for (int t = 0; t < 100; ++t) {
    NcPoly x;
    const long terms = rng.range(1, 5);
    for (long i = 0; i < terms; ++i) x.add_term(rng.word(2, static_cast<std::size_t>(rng.range(0, 4))), rng.nonzero_rational(3, 2));
    if (x.is_zero()) continue;
    const RepSpec r = x.max_length() == 0 ? make_trivial(kAb) : make_VNJ(kAb, x.max_length(), x.support());
    CHECK_FALSE(linalg::is_zero(act_poly(r, x, r.basis_vector(0))));
  }
}
