#include "ugdual/acceptance/suites.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include "ugdual/functional.hpp"
#include "ugdual/group.hpp"
#include "ugdual/kacmoody.hpp"
#include "ugdual/linalg.hpp"
#include "ugdual/oracles/oracles.hpp"

namespace ugdual::acceptance {

namespace {

using oracle::Rng;

class Tally {
 public:
  explicit Tally(SuiteResult& r) : r_(r) {}
  void check(bool ok, const std::function<std::string()>& what) {
    ++r_.total;
    if (ok) {
      ++r_.passed;
    } else if (r_.failures.size() < 5) {
      r_.failures.push_back(what());
    }
  }

 private:
  SuiteResult& r_;
};

RepSpec random_nilpotent_rep(Rng& rng, const Alphabet& a, std::size_t dim) {
  const auto n = static_cast<Eigen::Index>(dim);
  Matrix p = Matrix::Identity(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < i; ++j) p(i, j) = Rational(rng.range(-1, 1));
  }
  const Matrix pinv = *linalg::inverse(p);
  std::vector<Matrix> mats;
  for (std::size_t l = 0; l < a.size(); ++l) {
    Matrix x = Matrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = i + 1; j < n; ++j) x(i, j) = Rational(rng.range(-2, 2));
    }
    mats.push_back(p * x * pinv);
  }
  return RepSpec(a, dim, std::move(mats));
}

Vector random_vector(Rng& rng, std::size_t dim) {
  Vector v(static_cast<Eigen::Index>(dim));
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = Rational(rng.range(-3, 3));
  return v;
}

MatrixCoefficient random_coefficient(Rng& rng, const Alphabet& a, std::size_t max_dim) {
  const auto dim = static_cast<std::size_t>(rng.range(1, static_cast<long>(max_dim)));
  auto rep = std::make_shared<const RepSpec>(random_nilpotent_rep(rng, a, dim));
  return MatrixCoefficient(rep, random_vector(rng, dim), random_vector(rng, dim));
}

NcPoly random_poly(Rng& rng, std::size_t letters, std::size_t max_terms, std::size_t max_len) {
  NcPoly p;
  const long terms = rng.range(1, static_cast<long>(max_terms));
  for (long t = 0; t < terms; ++t) {
    const auto len = static_cast<std::size_t>(rng.range(0, static_cast<long>(max_len)));
    p.add_term(rng.word(letters, len), rng.nonzero_rational(4, 3));
  }
  return p;
}

GroupWord random_group_word(Rng& rng, std::size_t letters, std::size_t max_len) {
  GroupWord g;
  const long len = rng.range(1, static_cast<long>(max_len));
  for (long i = 0; i < len; ++i) {
    g.push_back(OneParamFactor::exp(Letter{static_cast<std::uint32_t>(rng.range(0, static_cast<long>(letters) - 1))},
                                    rng.rational(3, 3)));
  }
  return g;
}

std::string show(const Alphabet& a, const Word& w) { return a.format(w); }

void suite_shuffle(Rng& rng, Tally& t) {
  const Alphabet a = standard_alphabet(2);
  for (std::size_t n = 0; n <= 8; ++n) {
    for (std::size_t l1 = 0; l1 <= n; ++l1) {
      for (const auto& w1 : words_of_length(2, l1)) {
        for (const auto& w2 : words_of_length(2, n - l1)) {
          const auto s = shuffles(w1, w2);
          std::uint64_t total = 0;
          for (const auto& [w, c] : s) total += c;
          t.check(Rational(static_cast<long>(total)) == binomial(static_cast<unsigned>(n), static_cast<unsigned>(l1)),
                  [&] { return "multiplicity total of " + show(a, w1) + " ш " + show(a, w2); });
          t.check(s == oracle::shuffles_by_positions(w1, w2),
                  [&] { return "positional shuffle mismatch for " + show(a, w1) + " ш " + show(a, w2); });
        }
      }
    }
  }
  for (int trial = 0; trial < 200; ++trial) {
    const Word u = rng.word(2, static_cast<std::size_t>(rng.range(0, 4)));
    const Word v = rng.word(2, static_cast<std::size_t>(rng.range(0, 4)));
    const Word w = rng.word(2, static_cast<std::size_t>(rng.range(0, 4)));
    const auto pu = phi(u);
    const auto pv = phi(v);
    const auto pw = phi(w);
    t.check(shuffle_product(pu, pv) == shuffle_product(pv, pu),
            [&] { return "commutativity fails for " + show(a, u) + ", " + show(a, v); });
    t.check(shuffle_product(shuffle_product(pu, pv), pw) == shuffle_product(pu, shuffle_product(pv, pw)),
            [&] { return "associativity fails for " + show(a, u) + ", " + show(a, v) + ", " + show(a, w); });
  }
}

void suite_hopf(Rng&, Tally& t) {
  const Alphabet a = standard_alphabet(2);
  const auto words = words_up_to(2, 4);
  for (const auto& u : words) {
    for (const auto& v : words) {
      const NcPoly pu(u);
      const NcPoly pv(v);
      t.check(coproduct(pu * pv) == coproduct(pu) * coproduct(pv),
              [&] { return "Δ not multiplicative on " + show(a, u) + "·" + show(a, v); });
    }
  }
  for (const auto& w : words) {
    const auto d = coproduct(NcPoly(w));
    NcPoly left;
    NcPoly right;
    for (const auto& [k, c] : d.terms()) {
      left += c * (antipode(NcPoly(k.first)) * NcPoly(k.second));
      right += c * (NcPoly(k.first) * antipode(NcPoly(k.second)));
    }
    const NcPoly unit = w.empty() ? NcPoly::constant(1) : NcPoly();
    t.check(left == unit, [&] { return "m(S⊗id)Δ ≠ ε on " + show(a, w); });
    t.check(right == unit, [&] { return "m(id⊗S)Δ ≠ ε on " + show(a, w); });
  }
}

void suite_duality(Rng& rng, Tally& t) {
  for (int trial = 0; trial < 50; ++trial) {
    const auto letters = static_cast<std::size_t>(rng.range(1, 3));
    const Alphabet a = standard_alphabet(letters);
    const MatrixCoefficient mc = random_coefficient(rng, a, 5);
    const RegularFunction f{mc};
    const Functional h = phi_map(f);
    const RegularFunction back = xi_map(h, a);
    for (int k = 0; k < 100; ++k) {
      const GroupWord g = random_group_word(rng, letters, 4);
      const Rational direct = eval_regular(f, g);
      std::vector<Letter> tuple;
      std::vector<Rational> point;
      for (const auto& factor : g) {
        tuple.push_back(factor.letter);
        point.push_back(factor.param);
      }
      const Rational series = taylor_expand(h, tuple, a).evaluate(point);
      const Rational dense = oracle::eval_group_dense(mc.rep(), g, mc.phi(), mc.v());
      t.check(eval_regular(back, g) == direct && series == direct && dense == direct,
              [&] { return "Ξ(Φ(f)) differs from f in trial " + std::to_string(trial); });
    }
    const RegularFunction xi = xi_map(h, a);
    const Functional phi_xi = phi_map(xi);
    for (const auto& w : words_up_to(letters, 5)) {
      RegularFunction d = xi;
      for (std::size_t p = w.length(); p-- > 0;) d = derive_right(w[p], d);
      const Rational expected = evaluate(h, w);
      t.check(eval_regular(d, {}) == expected && evaluate(phi_xi, w) == expected,
              [&] { return "Φ(Ξ(h)) differs from h at " + show(a, w) + " in trial " + std::to_string(trial); });
    }
  }
}

void suite_product(Rng& rng, Tally& t) {
  const Alphabet a = standard_alphabet(2);
  const auto words = words_up_to(2, 6);
  for (int trial = 0; trial < 30; ++trial) {
    const int mode = trial % 3;  // 0: both matrix coefficients, 1: both finite, 2: mixed
    Functional h1 = mode == 1 ? Functional(FiniteFunctional{random_poly(rng, 2, 3, 3)}) : Functional(random_coefficient(rng, a, 3));
    Functional h2 = mode == 0 ? Functional(random_coefficient(rng, a, 3)) : Functional(FiniteFunctional{random_poly(rng, 2, 3, 3)});
    const Functional p = product(h1, h2);
    auto as_mc = [&](const Functional& h) {
      if (const auto* f = std::get_if<FiniteFunctional>(&h)) return realize(*f, a);
      return std::get<MatrixCoefficient>(h);
    };
    const MatrixCoefficient m1 = as_mc(h1);
    const MatrixCoefficient m2 = as_mc(h2);
    const MatrixCoefficient tensor_mc(tensor(m1.rep(), m2.rep()), tensor_vector(m1.phi(), m2.phi()),
                                      tensor_vector(m1.v(), m2.v()));
    if (mode == 1) {
      const auto* f = std::get_if<FiniteFunctional>(&p);
      t.check(f && *f == shuffle_product(std::get<FiniteFunctional>(h1), std::get<FiniteFunctional>(h2)),
              [&] { return "product of finite functionals is not their shuffle product, trial " + std::to_string(trial); });
    }
    for (const auto& w : words) {
      const Rational expected = oracle::product_by_subsets(h1, h2, w);
      t.check(evaluate(p, w) == expected && evaluate(Functional(tensor_mc), w) == expected,
              [&] { return "product mismatch at " + show(a, w) + ", trial " + std::to_string(trial); });
    }
  }
}

void suite_translation(Rng& rng, Tally& t) {
  const Alphabet a = standard_alphabet(2);
  const auto words = words_up_to(2, 4);
  for (int trial = 0; trial < 100; ++trial) {
    const NcPoly x = random_poly(rng, 2, 3, 3);
    const NcPoly y = random_poly(rng, 2, 3, 3);
    const Functional h = trial % 2 ? Functional(FiniteFunctional{random_poly(rng, 2, 6, 7)}) : Functional(random_coefficient(rng, a, 4));
    const Functional lhs = right_translate(x, left_translate(y, h));
    const Functional rhs = left_translate(y, right_translate(x, h));
    for (const auto& w : words) {
      const Rational direct = evaluate(h, y * NcPoly(w) * x);
      t.check(evaluate(lhs, w) == direct && evaluate(rhs, w) == direct,
              [&] { return "x▷(y◁h) ≠ y◁(x▷h) at " + show(a, w) + ", trial " + std::to_string(trial); });
    }
  }
}

void suite_counterexample(Rng&, Tally& t) {
  const Alphabet a = standard_alphabet(2);
  const Letter e1{0};
  const Letter e2{1};
  const RepSpec r = make_alternating_pair(a, e1, e2);
  const Vector eta = Vector::Constant(2, Rational(1));
  const Functional g = MatrixCoefficient(r, eta, r.basis_vector(0));
  std::vector<Letter> letters;
  for (std::size_t len = 1; len <= 25; ++len) {
    letters.insert(letters.begin(), len % 2 ? e2 : e1);
    const Word w(letters);
    t.check(evaluate(g, w) == Rational(1), [&] { return "value on " + show(a, w) + " is not 1"; });
  }
  for (std::size_t n = 0; n <= 20; ++n) {
    t.check(!in_shuffle_span(g, n), [&] { return "reported inside the shuffle span for N = " + std::to_string(n); });
  }
}

void suite_faithfulness(Rng& rng, Tally& t) {
  const Alphabet a = standard_alphabet(3);
  for (int trial = 0; trial < 100; ++trial) {
    const NcPoly x = random_poly(rng, 3, 4, 3);
    if (x.terms().empty()) {
      t.check(false, [] { return "generator produced a zero polynomial"; });
      continue;
    }
    const Witness w = faithfulness_witness(x, a);
    bool coords = true;
    for (const auto& [word, c] : x.terms()) {
      // A constant polynomial is witnessed on the trivial module.
      const auto idx = x.max_length() == 0 ? std::optional<std::size_t>(0) : w.rep.label_index("b_" + a.format(word));
      coords = coords && idx && w.image(static_cast<Eigen::Index>(*idx)) == c;
    }
    t.check(!linalg::is_zero(w.image) && coords, [&] { return "polynomial witness failed, trial " + std::to_string(trial); });
  }
  for (int trial = 0; trial < 100; ++trial) {
    GroupWord g;
    const long len = rng.range(1, 5);
    long prev = -1;
    Rational prod = 1;
    for (long i = 0; i < len; ++i) {
      long l;
      do l = rng.range(0, 2);
      while (l == prev);
      prev = l;
      const Rational p = rng.nonzero_rational(4, 3);
      prod *= p;
      g.push_back(OneParamFactor::exp(Letter{static_cast<std::uint32_t>(l)}, p));
    }
    const Witness w = group_faithfulness_witness(g, a);
    const auto top = static_cast<Eigen::Index>(len);
    const auto dim = static_cast<Eigen::Index>(w.rep.dim());
    Matrix total = Matrix::Identity(dim, dim);
    for (const auto& f : g) total = total * oracle::nilpotent_exp(f.param * w.rep.matrix(f.letter));
    t.check(w.image != w.v && w.image(top) == prod && total * w.v == w.image,
            [&] { return "group witness failed, trial " + std::to_string(trial); });
  }
}

km::KMGroupWord sl2_word(const Rational& b, const Rational& a) {
  return {km::KMFactor{km::KMFactor::ExpE{0, b}}, km::KMFactor{km::KMFactor::ExpF{0, a}}};
}

void suite_sl2(Rng& rng, Tally& t) {
  IntMatrix cm(1, 1);
  cm << 2;
  const km::Gcm gcm = km::validate_gcm(cm);
  for (long m = 0; m <= 6; ++m) {
    const km::IrrTrunc mod(gcm, {m}, static_cast<std::size_t>(m + 1));
    t.check(mod.dimension() == static_cast<std::size_t>(m + 1), [&] { return "dim L(" + std::to_string(m) + ") wrong"; });
    for (int k = 0; k <= m + 1; ++k) {
      const std::size_t want = k <= m ? 1 : 0;
      t.check(mod.multiplicity({k}) == want,
              [&] { return "multiplicity at depth " + std::to_string(k) + " of L(" + std::to_string(m) + ")"; });
    }
    for (int p = 0; p < 20; ++p) {
      const Rational b = rng.rational(5, 4);
      const Rational a = rng.rational(5, 4);
      const Rational got = km::theta_eval(mod, sl2_word(b, a));
      t.check(got == oracle::sl2_theta(m, b, a) && got == pow(Rational(1) + a * b, m),
              [&] { return "θ_" + std::to_string(m) + " at (" + b.str() + "," + a.str() + ")"; });
    }
  }
}

void suite_a2(Rng&, Tally& t) {
  IntMatrix cm(2, 2);
  cm << 2, -1, -1, 2;
  const km::Gcm gcm = km::validate_gcm(cm);
  for (const auto& [hw, depth] : std::vector<std::pair<std::vector<long>, std::size_t>>{
           {{1, 0}, 6}, {{1, 1}, 6}, {{0, 1}, 6}, {{2, 0}, 6}, {{2, 1}, 8}}) {
    const km::IrrTrunc mod(gcm, hw, depth);
    const std::string name = "L(" + std::to_string(hw[0]) + "," + std::to_string(hw[1]) + ")";
    t.check(mod.dimension() == static_cast<std::size_t>(oracle::weyl_dim_a2(hw[0], hw[1])),
            [&] { return "dim " + name + " = " + std::to_string(mod.dimension()); });
    if (depth <= 6) {
      for (const auto& rep : {km::check_relations(mod), km::check_integrability(mod), km::check_contravariance(mod)}) {
        t.check(rep.ok && rep.checked > 0, [&] { return name + ": " + (rep.failures.empty() ? "nothing checked" : rep.failures.front()); });
      }
    }
  }
}

void suite_affine(Rng&, Tally& t) {
  IntMatrix cm(2, 2);
  cm << 2, -2, -2, 2;
  const km::Gcm gcm = km::validate_gcm(cm);
  const km::IrrTrunc mod(gcm, {1, 0}, 5);
  for (int a = 0; a <= 5; ++a) {
    for (int b = 0; a + b <= 5; ++b) {
      const km::Depth k{a, b};
      t.check(mod.multiplicity(k) == km::freudenthal_oracle(gcm, {1, 0}, k),
              [&] { return "multiplicity at depth (" + std::to_string(a) + "," + std::to_string(b) + ")"; });
    }
  }
}

void suite_cone(Rng& rng, Tally& t) {
  IntMatrix cm(1, 1);
  cm << 2;
  const km::Gcm gcm = km::validate_gcm(cm);
  for (long m = 1; m <= 2; ++m) {
    const km::IrrTrunc mod(gcm, {m}, static_cast<std::size_t>(m));
    const km::IrrTrunc doubled(gcm, {2 * m}, static_cast<std::size_t>(2 * m));
    // Basis at depth k is f^k v_Λ = k! v_k in the explicit basis.
    auto explicit_coords = [&](const km::WeightVector& v) {
      Vector x = Vector::Zero(m + 1);
      for (const auto& [k, c] : v.components()) x(k[0]) = c(0) * factorial(static_cast<unsigned>(k[0]));
      return x;
    };
    for (int k = 0; k <= m; ++k) {
      t.check(mod.basis_monomials({k}) == std::vector<std::vector<std::size_t>>{std::vector<std::size_t>(static_cast<std::size_t>(k), 0)},
              [&] { return "unexpected basis monomial at depth " + std::to_string(k); });
    }
    for (int trial = 0; trial < 50; ++trial) {
      km::WeightVector v;
      for (int k = 0; k <= m; ++k) {
        if (rng.coin()) v.add({k}, Vector::Constant(1, rng.rational(3, 2)));
      }
      const bool got = km::kostant_cone_test(mod, doubled, v);
      t.check(got == oracle::sl2_cone_by_casimir(m, explicit_coords(v)),
              [&] { return "cone test disagrees with the Casimir oracle, m = " + std::to_string(m); });
    }
    for (int trial = 0; trial < 20; ++trial) {
      km::KMGroupWord g;
      const long len = rng.range(1, 4);
      for (long i = 0; i < len; ++i) {
        switch (rng.range(0, 2)) {
          case 0: g.push_back({km::KMFactor::ExpE{0, rng.rational(3, 2)}}); break;
          case 1: g.push_back({km::KMFactor::ExpF{0, rng.rational(3, 2)}}); break;
          default: g.push_back({km::KMFactor::Torus{km::Coweight{{1}, std::nullopt}, rng.nonzero_rational(3, 2)}}); break;
        }
      }
      const km::WeightVector v = km::act_km_group(mod, g, mod.highest_weight_vector());
      t.check(km::kostant_cone_test(mod, doubled, v) && oracle::sl2_cone_by_casimir(m, explicit_coords(v)),
              [&] { return "orbit point outside the cone, m = " + std::to_string(m); });
    }
  }
}

void suite_monoid(Rng& rng, Tally& t) {
  const Alphabet a({"h"}, {GeneratorKind::DiagonalizableInteger});
  const Letter h{0};
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<RepSpec> family;
    std::set<long> eigen;
    const long size = rng.range(1, 3);
    for (long r = 0; r < size; ++r) {
      const auto dim = rng.range(1, 3);
      Matrix d = Matrix::Zero(dim, dim);
      for (long i = 0; i < dim; ++i) {
        const long e = rng.range(-4, 4);
        d(i, i) = Rational(e);
        eigen.insert(e);
      }
      family.emplace_back(a, static_cast<std::size_t>(dim), std::vector<Matrix>{d});
    }
    const ZMonoid z = z_monoid(h, family);
    const auto elems = z.elements(-20, 20);
    bool closed = z.contains(0);
    for (const long x : elems) {
      for (const long y : elems) {
        if (x + y >= -20 && x + y <= 20) closed = closed && z.contains(x + y);
      }
    }
    const auto expected = oracle::monoid_closure(eigen, -20, 20);
    t.check(closed && std::set<long>(elems.begin(), elems.end()) == expected,
            [&] { return "monoid check failed, trial " + std::to_string(trial); });
  }
}

struct Entry {
  const char* title;
  double limit;
  void (*run)(Rng&, Tally&);
};

const Entry kSuites[kSuiteCount] = {
    {"shuffle laws", 10, suite_shuffle},
    {"Hopf axioms", 0, suite_hopf},
    {"duality round trips", 30, suite_duality},
    {"product correspondence", 0, suite_product},
    {"translation commutation", 0, suite_translation},
    {"counterexample outside the shuffle span", 5, suite_counterexample},
    {"faithfulness witnesses", 0, suite_faithfulness},
    {"sl2 modules and theta", 10, suite_sl2},
    {"A2 dimensions and relations", 0, suite_a2},
    {"affine A1 multiplicities", 60, suite_affine},
    {"Kostant cone", 0, suite_cone},
    {"eigenvalue monoid", 0, suite_monoid},
};

}  // namespace

SuiteResult run_suite(int id, std::uint64_t seed) {
  if (id < 1 || id > kSuiteCount) throw std::invalid_argument("no suite " + std::to_string(id));
  const Entry& e = kSuites[id - 1];
  SuiteResult r;
  r.id = id;
  r.key = "ac" + std::to_string(id);
  r.title = e.title;
  r.limit_seconds = e.limit;
  Rng rng(seed * 1000003ULL + static_cast<std::uint64_t>(id));
  Tally tally(r);
  const auto start = std::chrono::steady_clock::now();
  try {
    e.run(rng, tally);
  } catch (const std::exception& ex) {
    tally.check(false, [&] { return std::string("exception: ") + ex.what(); });
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<int> parse_suite_selector(const std::string& text) {
  std::vector<int> out;
  if (text == "all") {
    for (int i = 1; i <= kSuiteCount; ++i) out.push_back(i);
    return out;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::string digits = item.rfind("ac", 0) == 0 ? item.substr(2) : item;
    std::size_t used = 0;
    int id = 0;
    try {
      id = std::stoi(digits, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != digits.size() || id < 1 || id > kSuiteCount) {
      throw std::invalid_argument("unknown suite '" + item + "'");
    }
    out.push_back(id);
  }
  return out;
}

std::string format_line(const SuiteResult& r, bool with_time) {
  std::ostringstream os;
  os << (r.ok() ? "PASS " : "FAIL ") << r.key << " " << r.title << ": " << r.passed << "/" << r.total << " checks";
  if (with_time) {
    os.setf(std::ios::fixed);
    os.precision(2);
    os << " (" << r.seconds << " s";
    if (r.limit_seconds > 0) os << ", limit " << r.limit_seconds << " s";
    os << ")";
  }
  if (!r.within_limit()) os << " [time limit exceeded]";
  if (!r.failures.empty()) os << " first failure: " << r.failures.front();
  return os.str();
}

}  // namespace ugdual::acceptance
