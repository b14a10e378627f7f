#include <doctest.h>

#include <future>
#include <thread>

#include "helpers.hpp"
#include "ugdual/kacmoody.hpp"
#include "ugdual/linalg.hpp"
#include "ugdual/oracles/oracles.hpp"

using namespace ugdual;
using namespace ugdual::km;
using namespace testing;

namespace {

Gcm gcm_of(std::initializer_list<std::initializer_list<long>> rows) {
  const auto n = static_cast<Eigen::Index>(rows.size());
  IntMatrix a(n, n);
  Eigen::Index i = 0;
  for (const auto& r : rows) {
    Eigen::Index j = 0;
    for (const long x : r) a(i, j++) = x;
    ++i;
  }
  return validate_gcm(a);
}

const Gcm& sl2() {
  static const Gcm g = gcm_of({{2}});
  return g;
}
const Gcm& a2() {
  static const Gcm g = gcm_of({{2, -1}, {-1, 2}});
  return g;
}
const Gcm& affine() {
  static const Gcm g = gcm_of({{2, -2}, {-2, 2}});
  return g;
}

KMFactor exp_e(std::size_t i, Rational t) { return {KMFactor::ExpE{i, std::move(t)}}; }
KMFactor exp_f(std::size_t i, Rational t) { return {KMFactor::ExpF{i, std::move(t)}}; }
KMFactor torus(std::vector<long> h, Rational s) { return {KMFactor::Torus{Coweight{std::move(h), std::nullopt}, std::move(s)}}; }

KMGroupWord random_word(oracle::Rng& rng, std::size_t rank, long max_len) {
  KMGroupWord g;
  for (long i = rng.range(0, max_len); i > 0; --i) {
    const auto idx = static_cast<std::size_t>(rng.range(0, static_cast<long>(rank) - 1));
    switch (rng.range(0, 2)) {
      case 0: g.push_back(exp_e(idx, rng.rational(3, 2))); break;
      case 1: g.push_back(exp_f(idx, rng.rational(3, 2))); break;
      default: {
        std::vector<long> h(rank, 0);
        h[idx] = 1;
        g.push_back(torus(h, rng.nonzero_rational(3, 2)));
      }
    }
  }
  return g;
}

Rational lookup(const std::map<Depth, Rational>& m, const Depth& k) {
  const auto it = m.find(k);
  return it == m.end() ? Rational(0) : it->second;
}

}  // namespace

TEST_CASE("generalized Cartan matrices") {
  CHECK(sl2().symmetrizer() == std::vector<long>{1});
  CHECK(a2().symmetrizer() == std::vector<long>{1, 1});
  CHECK(affine().symmetrizer() == std::vector<long>{1, 1});
  CHECK(gcm_of({{2, -2}, {-1, 2}}).symmetrizer() == std::vector<long>{1, 2});
  CHECK(gcm_of({{2, -2}, {-1, 2}}).form(0, 1) == gcm_of({{2, -2}, {-1, 2}}).form(1, 0));
  CHECK_THROWS_AS(gcm_of({{3}}), ValidationError);
  CHECK_THROWS_AS(gcm_of({{2, 1}, {-1, 2}}), ValidationError);
  CHECK_THROWS_AS(gcm_of({{2, 0}, {-1, 2}}), ValidationError);
  CHECK_THROWS_AS(gcm_of({{2, -1, -1}, {-2, 2, -1}, {-1, -1, 2}}), ValidationError);
}

TEST_CASE("weight coordinates") {
  CHECK(weight_coords(a2(), {1, 0}, {1, 0}) == std::vector<long>{-1, 1});
  CHECK(weight_coords(a2(), {1, 0}, {1, 1}) == std::vector<long>{0, -1});
  CHECK(depth_of(a2(), {1, 0}, {0, -1}) == Depth{1, 1});
  CHECK_FALSE(depth_of(a2(), {1, 0}, {2, -1}).has_value());
  CHECK_FALSE(depth_of(affine(), {1, 0}, {1, 0}).has_value());
  CHECK(level({2, 3}) == 5);
}

TEST_CASE("sl2 modules") {
  for (long m = 0; m <= 6; ++m) {
    const IrrTrunc mod = build_irr_trunc(sl2(), {m}, static_cast<std::size_t>(m + 2));
    CHECK(mod.dimension() == static_cast<std::size_t>(m + 1));
    for (int k = 0; k <= m + 2; ++k) CHECK(mod.multiplicity({k}) == (k <= m ? 1U : 0U));
  }
  const IrrTrunc zero = build_irr_trunc(a2(), {2, 1}, 0);
  CHECK(zero.dimension() == 1);
  CHECK(zero.weights() == std::vector<Depth>{{0, 0}});
}

TEST_CASE("sl2 action matches the explicit matrices") {
  for (long m = 1; m <= 4; ++m) {
    const IrrTrunc mod(sl2(), {m}, static_cast<std::size_t>(m));
    const Matrix e = oracle::sl2_e(m), f = oracle::sl2_f(m), h = oracle::sl2_h(m);
    for (int k = 0; k <= m; ++k) {
      // Basis vector at depth k is k! v_k.
      const Rational scale = factorial(static_cast<unsigned>(k));
      const WeightVector b = mod.basis_vector({k}, 0);
      const Vector x = scale * Vector::Unit(m + 1, k);
      auto coords = [&](const WeightVector& v) {
        Vector out = Vector::Zero(m + 1);
        for (const auto& [d, c] : v.components()) out(d[0]) = c(0) * factorial(static_cast<unsigned>(d[0]));
        return out;
      };
      CHECK(coords(act_chevalley(mod, Chevalley::e(0), b)) == e * x);
      CHECK(coords(act_chevalley(mod, Chevalley::h(0), b)) == h * x);
      if (k < m) CHECK(coords(act_chevalley(mod, Chevalley::f(0), b)) == f * x);
    }
  }
}

TEST_CASE("Chevalley generators on the highest weight vector") {
  const IrrTrunc mod(sl2(), {2}, 3);
  const WeightVector v = mod.highest_weight_vector();
  const WeightVector fv = act_chevalley(mod, Chevalley::f(0), v);
  CHECK_FALSE(fv.is_zero());
  const WeightVector f3 = act_chevalley(mod, Chevalley::f(0), act_chevalley(mod, Chevalley::f(0), fv));
  CHECK(f3.is_zero());
  CHECK(act_chevalley(mod, Chevalley::h(0), v) == Rational(2) * v);
  CHECK(act_chevalley(mod, Chevalley::e(0), v).is_zero());

  const IrrTrunc small(sl2(), {5}, 1);
  CHECK_THROWS_AS(act_chevalley(small, Chevalley::f(0), act_chevalley(small, Chevalley::f(0), small.highest_weight_vector())),
                  OutOfTruncation);

  const IrrTrunc m2(a2(), {1, 1}, 3);
  const WeightVector w = m2.highest_weight_vector();
  CHECK(act_chevalley(m2, Chevalley::h(1), w) == w);
  CHECK(act_chevalley(m2, Chevalley::e(1), w).is_zero());
}

TEST_CASE("exponential factors") {
  const IrrTrunc mod(sl2(), {1}, 1);
  const WeightVector v = mod.highest_weight_vector();
  const Rational t(3, 7);
  CHECK(exp_action(mod, exp_f(0, t), v) == v + t * act_chevalley(mod, Chevalley::f(0), v));
  CHECK(exp_action(mod, exp_f(0, 0), v) == v);
  CHECK(exp_action(mod, exp_e(0, t), v) == v);

  const IrrTrunc a(a2(), {2, 1}, 2);
  const WeightVector b = a.basis_vector({1, 1}, 0);
  // λ(h) = Σ c_i λ(h_i) for h = 2h_1 - h_2.
  const auto lam = a.coords({1, 1});
  const Rational s(2, 3);
  CHECK(exp_action(a, torus({2, -1}, s), b) == pow(s, 2 * lam[0] - lam[1]) * b);
  CHECK_THROWS_AS(exp_action(a, torus({1, 0}, 0), b), ValidationError);
}

TEST_CASE("exponentials of lowering operators extend the truncation") {
  const IrrTrunc mod(sl2(), {3}, 0);
  const WeightVector v = exp_action(mod, exp_f(0, 1), mod.highest_weight_vector());
  CHECK(v.components().size() == 4);
  CHECK(mod.depth() >= 3);
}

TEST_CASE("theta on sl2") {
  oracle::Rng rng(3);
  for (long m = 0; m <= 4; ++m) {
    const IrrTrunc mod(sl2(), {m}, static_cast<std::size_t>(m));
    CHECK(theta_eval(mod, {}) == Rational(1));
    for (int t = 0; t < 5; ++t) {
      const Rational a = rng.rational(5, 3), b = rng.rational(5, 3);
      CHECK(theta_eval(mod, {exp_f(0, a)}) == Rational(1));
      CHECK(theta_eval(mod, {exp_e(0, b), exp_f(0, a)}) == pow(Rational(1) + a * b, m));
      CHECK(theta_eval(mod, {exp_e(0, b), exp_f(0, a)}) == oracle::sl2_theta(m, b, a));
    }
  }
  const IrrTrunc two(sl2(), {2}, 2);
  CHECK(theta_eval(two, {exp_e(0, 1), exp_f(0, 2)}) == Rational(9));
  CHECK(theta_eval(two, {torus({1}, 3)}) == Rational(9));
}

TEST_CASE("theta is multiplicative on sl2 highest weights") {
  oracle::Rng rng(11);
  for (long m1 = 0; m1 <= 2; ++m1) {
    for (long m2 = 0; m2 <= 2; ++m2) {
      const IrrTrunc a(sl2(), {m1}, 0), b(sl2(), {m2}, 0), ab(sl2(), {m1 + m2}, 0);
      for (int t = 0; t < 5; ++t) {
        const KMGroupWord g = random_word(rng, 1, 4);
        CHECK(theta_eval(ab, g) == theta_eval(a, g) * theta_eval(b, g));
      }
    }
  }
}

TEST_CASE("torus conjugation rescales lowering exponentials") {
  oracle::Rng rng(19);
  const IrrTrunc mod(a2(), {1, 1}, 4);
  for (int trial = 0; trial < 10; ++trial) {
    const std::vector<long> h{rng.range(-2, 2), rng.range(-2, 2)};
    const Rational s = rng.nonzero_rational(3, 2);
    const Rational t = rng.rational(3, 2);
    const auto i = static_cast<std::size_t>(rng.range(0, 1));
    const long alpha_h = h[0] * a2().a(0, i) + h[1] * a2().a(1, i);
    const WeightVector v = mod.basis_vector({1, 0}, 0) + mod.highest_weight_vector();
    const WeightVector lhs = act_km_group(mod, {torus(h, s), exp_f(i, t), torus(h, 1 / s)}, v);
    const WeightVector rhs = exp_action(mod, exp_f(i, t * pow(s, -alpha_h)), v);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("weight multiplicities") {
  CHECK(weight_multiplicity(IrrTrunc(sl2(), {4}, 2), {2}) == 1);
  const IrrTrunc rho(a2(), {1, 1}, 2);
  CHECK(weight_multiplicity(rho, {1, 1}) == 2);
  CHECK(freudenthal_oracle(a2(), {1, 1}, {1, 1}) == 2);
  CHECK(freudenthal_oracle(a2(), {1, 1}, {3, 0}) == 0);

  const IrrTrunc aff(affine(), {1, 0}, 5);
  for (int a = 0; a <= 5; ++a) {
    for (int b = 0; a + b <= 5; ++b) CHECK(aff.multiplicity({a, b}) == freudenthal_oracle(affine(), {1, 0}, {a, b}));
  }

  for (long p = 0; p <= 2; ++p) {
    for (long q = 0; q <= 2; ++q) {
      std::size_t total = 0;
      for (int a = 0; a <= 8; ++a) {
        for (int b = 0; b <= 8; ++b) total += freudenthal_oracle(a2(), {p, q}, {a, b});
      }
      CHECK(total == static_cast<std::size_t>(oracle::weyl_dim_a2(p, q)));
    }
  }
}

TEST_CASE("gram matrices") {
  const IrrTrunc mod(a2(), {1, 1}, 2);
  const Matrix g = mod.gram({1, 1});
  CHECK(g == g.transpose());
  CHECK(linalg::rank(g) == 2);
  const Matrix s = mod.spanning_gram({1, 1});
  CHECK(s == s.transpose());
  CHECK(linalg::rank(s) == 2);
  CHECK(mod.basis_monomials({0, 0}) == std::vector<std::vector<std::size_t>>{{}});
}

TEST_CASE("root multiplicities") {
  const auto fin = root_multiplicities(a2(), 3);
  CHECK(lookup(fin, {1, 0}) == Rational(1));
  CHECK(lookup(fin, {0, 1}) == Rational(1));
  CHECK(lookup(fin, {1, 1}) == Rational(1));
  CHECK(lookup(fin, {2, 0}) == Rational(0));
  CHECK(lookup(fin, {2, 1}) == Rational(0));
  const auto aff = root_multiplicities(affine(), 6);
  for (int n = 1; n <= 3; ++n) CHECK(lookup(aff, {n, n}) == Rational(1));
  for (int n = 0; n <= 2; ++n) {
    CHECK(lookup(aff, {n + 1, n}) == Rational(1));
    CHECK(lookup(aff, {n, n + 1}) == Rational(1));
  }
  CHECK(lookup(aff, {2, 0}) == Rational(0));
}

TEST_CASE("finite types have the expected number of positive roots") {
  for (const auto& [g, count] : std::vector<std::pair<Gcm, long>>{
           {a2(), 3}, {gcm_of({{2, -2}, {-1, 2}}), 4}, {gcm_of({{2, -1}, {-3, 2}}), 6},
           {gcm_of({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}), 6}}) {
    Rational total = 0;
    for (const auto& [beta, m] : root_multiplicities(g, 8)) {
      CHECK((m == Rational(0) || m == Rational(1)));
      total += m;
    }
    CHECK(total == Rational(count));
  }
}

TEST_CASE("root vectors") {
  const RootVector one = multibracket_rootvector(a2(), {0});
  CHECK(one.expansion == NcPoly::letter(Letter{0}));
  const IrrTrunc rho(a2(), {1, 1}, 4);
  const RootVector r12 = multibracket_rootvector(a2(), {0, 1});
  CHECK_FALSE(acts_as_zero(rho, r12));
  CHECK(act_root_vector(rho, r12, rho.basis_vector({1, 1}, 0)).components().count({0, 0}) == 1);
  const RootVector r11 = multibracket_rootvector(a2(), {0, 0});
  CHECK(r11.expansion.is_zero());
  CHECK(acts_as_zero(rho, r11));
  // [[e1,e2],e2] is a Serre element and vanishes on any integrable module.
  CHECK(acts_as_zero(rho, multibracket_rootvector(a2(), {0, 1, 1})));
  CHECK_THROWS_AS(multibracket_rootvector(a2(), {2}), ValidationError);
}

TEST_CASE("relation checks") {
  for (const auto& [g, hw, depth] : std::vector<std::tuple<Gcm, std::vector<long>, std::size_t>>{
           {sl2(), {3}, 4}, {a2(), {1, 1}, 4}, {a2(), {2, 0}, 4}, {affine(), {1, 0}, 4}, {affine(), {1, 1}, 3}}) {
    const IrrTrunc mod(g, hw, depth);
    for (const auto& rep : {check_relations(mod), check_integrability(mod), check_contravariance(mod)}) {
      CHECK(rep.ok);
      CHECK(rep.checked > 0);
      CHECK(rep.failures.empty());
    }
  }
}

TEST_CASE("Kostant cone") {
  for (long m = 1; m <= 2; ++m) {
    const IrrTrunc mod(sl2(), {m}, static_cast<std::size_t>(m));
    const IrrTrunc doubled(sl2(), {2 * m}, static_cast<std::size_t>(2 * m));
    CHECK(kostant_cone_test(mod, doubled, mod.highest_weight_vector()));
  }
  const IrrTrunc m1(sl2(), {1}, 1), d1(sl2(), {2}, 2);
  oracle::Rng rng(23);
  for (int t = 0; t < 10; ++t) {
    WeightVector v;
    v.add({0}, Vector::Constant(1, rng.rational(3, 2)));
    v.add({1}, Vector::Constant(1, rng.rational(3, 2)));
    CHECK(kostant_cone_test(m1, d1, v));
  }
  const IrrTrunc m2(sl2(), {2}, 2), d2(sl2(), {4}, 4);
  CHECK_FALSE(kostant_cone_test(m2, d2, m2.highest_weight_vector() + m2.basis_vector({1}, 0)));
  CHECK(kostant_cone_test(m2, d2, m2.basis_vector({2}, 0)));
  const WeightVector orbit = act_km_group(m2, {exp_e(0, 2), exp_f(0, Rational(-1, 3))}, m2.highest_weight_vector());
  CHECK(kostant_cone_test(m2, d2, orbit));
  CHECK_THROWS(kostant_cone_test(m2, m1, orbit));
}

TEST_CASE("Kostant cone on A2") {
  const IrrTrunc mod(a2(), {1, 0}, 2);
  const IrrTrunc doubled(a2(), {2, 0}, 4);
  const WeightVector v = act_km_group(mod, {exp_f(1, 3), exp_f(0, 2)}, mod.highest_weight_vector());
  CHECK(kostant_cone_test(mod, doubled, v));
  // Every vector of the standard module lies in the cone of its symmetric square.
  CHECK(kostant_cone_test(mod, doubled, mod.basis_vector({1, 0}, 0) + mod.basis_vector({1, 1}, 0)));
  const IrrTrunc adj(a2(), {1, 1}, 4), adj2(a2(), {2, 2}, 8);
  CHECK_FALSE(kostant_cone_test(adj, adj2, adj.basis_vector({1, 1}, 0)));
}

TEST_CASE("Peter-Weyl ranks") {
  const IrrTrunc l1(sl2(), {1}, 1), l2(sl2(), {2}, 2);
  oracle::Rng rng(29);
  std::vector<KMGroupWord> sample;
  for (int t = 0; t < 20; ++t) sample.push_back(random_word(rng, 1, 4));
  const std::vector<KMMatrixCoefficient> four{
      {l1, l1.highest_weight_vector(), l1.highest_weight_vector()},
      {l1, l1.basis_vector({1}, 0), l1.highest_weight_vector()},
      {l2, l2.highest_weight_vector(), l2.highest_weight_vector()},
      {l2, l2.basis_vector({2}, 0), l2.highest_weight_vector()}};
  CHECK(peter_weyl_rank(four, sample) == 4);
  CHECK(peter_weyl_rank({four[0]}, sample) == 1);
  CHECK(peter_weyl_rank({four[0], four[1], four[1]}, sample) == 2);
  for (const auto& c : four) {
    for (const auto& g : sample) CHECK(eval_coefficient(c, g) == pair(c.phi, act_km_group(c.module, g, c.v)));
  }
}

TEST_CASE("extra coweights") {
  IntMatrix a(2, 2);
  a << 2, -2, -2, 2;
  const Gcm g = validate_gcm(a, {{1, 0}});
  const IrrTrunc mod(g, {1, 0}, 3);
  CHECK(coweight_value(mod, Coweight{{0, 0}, 0}, {0, 0}) == 0);
  CHECK(coweight_value(mod, Coweight{{0, 0}, 0}, {2, 1}) == -2);
  CHECK(coweight_value(mod, Coweight{{1, 0}, 0}, {1, 1}) == 1 - 2 + 2 - 1);
  const KMFactor d{KMFactor::Torus{Coweight{{0, 0}, 0}, Rational(2)}};
  const WeightVector v = mod.basis_vector({1, 0}, 0);
  CHECK(exp_action(mod, d, v) == Rational(1, 2) * v);
  CHECK_THROWS_AS(validate_gcm(a, {{1}}), ValidationError);
}

TEST_CASE("parallel construction matches the sequential one") {
  for (const auto& [g, hw, depth] : std::vector<std::tuple<Gcm, std::vector<long>, std::size_t>>{
           {a2(), {2, 1}, 6}, {affine(), {1, 0}, 6}}) {
    const IrrTrunc seq(g, hw, depth);
    const IrrTrunc par(g, hw, depth, IrrTruncOptions{24, 100000, true});
    REQUIRE(seq.weights() == par.weights());
    for (const auto& k : seq.weights()) {
      CHECK(seq.gram(k) == par.gram(k));
      CHECK(seq.basis_monomials(k) == par.basis_monomials(k));
      for (std::size_t i = 0; i < g.size(); ++i) CHECK(seq.raise(i, k) == par.raise(i, k));
    }
  }
}

TEST_CASE("concurrent queries on a shared module") {
  const IrrTrunc shared(affine(), {1, 0}, 0);
  std::vector<std::future<std::vector<std::size_t>>> jobs;
  for (int t = 0; t < 4; ++t) {
    jobs.push_back(std::async(std::launch::async, [&shared, t] {
      std::vector<std::size_t> out;
      for (int a = 0; a <= 5; ++a) {
        for (int b = 0; a + b <= 5; ++b) out.push_back(shared.multiplicity({(a + t) % 6 <= 5 - b ? (a + t) % 6 : a, b}));
      }
      return out;
    }));
  }
  const IrrTrunc fresh(affine(), {1, 0}, 5);
  for (int t = 0; t < 4; ++t) {
    const auto got = jobs[static_cast<std::size_t>(t)].get();
    std::size_t i = 0;
    for (int a = 0; a <= 5; ++a) {
      for (int b = 0; a + b <= 5; ++b) {
        const int aa = (a + t) % 6 <= 5 - b ? (a + t) % 6 : a;
        CHECK(got[i++] == fresh.multiplicity({aa, b}));
      }
    }
  }
}

TEST_CASE("caps and invalid input") {
  const IrrTrunc mod(affine(), {1, 0}, 2, IrrTruncOptions{3, 100000, false});
  CHECK_NOTHROW(mod.extend_to(3));
  CHECK_THROWS_AS(mod.extend_to(4), CapExceeded);
  const IrrTrunc tiny(affine(), {1, 0}, 1, IrrTruncOptions{24, 5, false});
  CHECK_THROWS_AS(tiny.extend_to(6), CapExceeded);
  CHECK_THROWS_AS(IrrTrunc(a2(), {-1, 0}, 2), ValidationError);
  CHECK_THROWS_AS(IrrTrunc(a2(), {1}, 2), ValidationError);
}
