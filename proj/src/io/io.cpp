#include "ugdual/io.hpp"

#include <sstream>

namespace ugdual::io {

namespace {

std::string at(const std::string& field, std::size_t i) { return field + "[" + std::to_string(i) + "]"; }
std::string dot(const std::string& field, const std::string& key) { return field.empty() ? key : field + "." + key; }

const json& require(const json& j, const std::string& key, const std::string& field) {
  if (!j.is_object()) throw SchemaError(field, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(dot(field, key), "missing");
  return *it;
}

const json& require_array(const json& j, const std::string& field) {
  if (!j.is_array()) throw SchemaError(field, "expected an array");
  return j;
}

std::string require_string(const json& j, const std::string& field) {
  if (!j.is_string()) throw SchemaError(field, "expected a string");
  return j.get<std::string>();
}

long require_int(const json& j, const std::string& field) {
  if (!j.is_number_integer()) throw SchemaError(field, "expected an integer");
  return j.get<long>();
}

template <typename F>
auto wrap(const std::string& field, F f) -> decltype(f()) {
  try {
    return f();
  } catch (const SchemaError&) {
    throw;
  } catch (const std::exception& e) {
    throw SchemaError(field, e.what());
  }
}

Letter letter_from_json(const Alphabet& a, const json& j, const std::string& field) {
  const auto name = require_string(j, field);
  return wrap(field, [&] { return a.letter(name); });
}

}  // namespace

json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const json& j, const std::string& field) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  const auto s = require_string(j, field);
  return wrap(field, [&] { return Rational::parse(s); });
}

json to_json(const Vector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(to_json(v(i)));
  return out;
}

Vector vector_from_json(const json& j, std::size_t dim, const std::string& field) {
  require_array(j, field);
  if (j.size() != dim) throw SchemaError(field, "expected " + std::to_string(dim) + " entries, got " + std::to_string(j.size()));
  Vector v(static_cast<Eigen::Index>(dim));
  for (std::size_t i = 0; i < dim; ++i) v(static_cast<Eigen::Index>(i)) = rational_from_json(j[i], at(field, i));
  return v;
}

Word word_from_json(const Alphabet& a, const json& j, const std::string& field) {
  const auto s = require_string(j, field);
  return wrap(field, [&] { return a.parse(s); });
}

json to_json(const Alphabet& a) {
  json out = json::array();
  for (const auto l : a.letters()) out.push_back({{"name", a.name(l)}, {"kind", std::string(to_string(a.kind(l)))}});
  return out;
}

Alphabet alphabet_from_json(const json& j, const std::string& field) {
  require_array(j, field);
  std::vector<std::string> names;
  std::vector<GeneratorKind> kinds;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto f = at(field, i);
    names.push_back(require_string(require(j[i], "name", f), dot(f, "name")));
    const auto kind = require_string(require(j[i], "kind", f), dot(f, "kind"));
    kinds.push_back(wrap(dot(f, "kind"), [&] { return generator_kind_from_string(kind); }));
  }
  return wrap(field, [&] { return Alphabet(std::move(names), std::move(kinds)); });
}

Alphabet alphabet_from_spec(const std::string& spec) {
  std::vector<std::string> names;
  std::vector<GeneratorKind> kinds;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    names.push_back(item.substr(0, colon));
    if (colon == std::string::npos) {
      kinds.push_back(GeneratorKind::LocallyNilpotent);
    } else {
      const auto kind = item.substr(colon + 1);
      kinds.push_back(wrap("alphabet", [&] { return generator_kind_from_string(kind); }));
    }
  }
  return wrap("alphabet", [&] { return Alphabet(std::move(names), std::move(kinds)); });
}

json to_json(const Alphabet& a, const NcPoly& p) {
  json out = json::array();
  for (const auto& [w, c] : p.terms()) out.push_back({{"word", a.format(w)}, {"coeff", to_json(c)}});
  return out;
}

NcPoly ncpoly_from_json(const Alphabet& a, const json& j, const std::string& field) {
  require_array(j, field);
  NcPoly p;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto f = at(field, i);
    const Word w = word_from_json(a, require(j[i], "word", f), dot(f, "word"));
    p.add_term(w, rational_from_json(require(j[i], "coeff", f), dot(f, "coeff")));
  }
  return p;
}

json to_json(const Alphabet& a, const TensorNcPoly& t) {
  json out = json::array();
  for (const auto& [k, c] : t.terms()) {
    out.push_back({{"left", a.format(k.first)}, {"right", a.format(k.second)}, {"coeff", to_json(c)}});
  }
  return out;
}

json to_json(const RepSpec& r) {
  json letters = json::array();
  const auto& a = r.alphabet();
  for (const auto l : a.letters()) {
    json m = json::array();
    const Matrix& x = r.matrix(l);
    for (Eigen::Index i = 0; i < x.rows(); ++i) m.push_back(to_json(Vector(x.row(i).transpose())));
    letters.push_back({{"name", a.name(l)}, {"kind", std::string(to_string(a.kind(l)))}, {"matrix", m}});
  }
  json out = {{"dim", r.dim()}, {"letters", letters}};
  if (!r.labels().empty()) out["labels"] = r.labels();
  return out;
}

RepSpec rep_from_json(const json& j, const std::string& field) {
  const long dim = require_int(require(j, "dim", field), dot(field, "dim"));
  if (dim < 0) throw SchemaError(dot(field, "dim"), "must be nonnegative");
  const auto d = static_cast<std::size_t>(dim);
  const auto lf = dot(field, "letters");
  const json& letters = require_array(require(j, "letters", field), lf);
  std::vector<std::string> names;
  std::vector<GeneratorKind> kinds;
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    const auto f = at(lf, i);
    names.push_back(require_string(require(letters[i], "name", f), dot(f, "name")));
    const auto kind = require_string(require(letters[i], "kind", f), dot(f, "kind"));
    kinds.push_back(wrap(dot(f, "kind"), [&] { return generator_kind_from_string(kind); }));
    const auto mf = dot(f, "matrix");
    const json& rows = require_array(require(letters[i], "matrix", f), mf);
    if (rows.size() != d) throw SchemaError(mf, "expected " + std::to_string(d) + " rows");
    Matrix m(dim, dim);
    for (std::size_t r = 0; r < d; ++r) m.row(static_cast<Eigen::Index>(r)) = vector_from_json(rows[r], d, at(mf, r)).transpose();
    action.push_back(std::move(m));
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    const auto f = dot(field, "labels");
    const json& ls = require_array(j["labels"], f);
    for (std::size_t i = 0; i < ls.size(); ++i) labels.push_back(require_string(ls[i], at(f, i)));
  }
  Alphabet a = wrap(lf, [&] { return Alphabet(std::move(names), std::move(kinds)); });
  return wrap(field, [&] { return RepSpec(std::move(a), d, std::move(action), std::move(labels)); });
}

json to_json(const Alphabet& a, const Functional& h) {
  if (const auto* f = std::get_if<FiniteFunctional>(&h)) return {{"kind", "finite"}, {"terms", to_json(a, f->coeffs)}};
  const auto& mc = std::get<MatrixCoefficient>(h);
  return {{"kind", "matrix-coefficient"}, {"rep", to_json(mc.rep())}, {"phi", to_json(mc.phi())}, {"v", to_json(mc.v())}};
}

Functional functional_from_json(const Alphabet& a, const json& j, const std::string& field) {
  const auto kind = require_string(require(j, "kind", field), dot(field, "kind"));
  if (kind == "finite") return FiniteFunctional{ncpoly_from_json(a, require(j, "terms", field), dot(field, "terms"))};
  if (kind == "matrix-coefficient") {
    auto rep = std::make_shared<const RepSpec>(rep_from_json(require(j, "rep", field), dot(field, "rep")));
    Vector phi = vector_from_json(require(j, "phi", field), rep->dim(), dot(field, "phi"));
    Vector v = vector_from_json(require(j, "v", field), rep->dim(), dot(field, "v"));
    return MatrixCoefficient(std::move(rep), std::move(phi), std::move(v));
  }
  throw SchemaError(dot(field, "kind"), "unknown functional kind '" + kind + "'");
}

json to_json(const Alphabet& a, const RhoExpansion& e) {
  json tuple = json::array();
  for (const auto l : e.tuple) tuple.push_back(a.name(l));
  json coeffs = json::array();
  for (const auto& [k, c] : e.coeffs) coeffs.push_back({{"k", k}, {"c", to_json(c)}});
  return {{"tuple", tuple}, {"coeffs", coeffs}};
}

RhoExpansion rho_from_json(const Alphabet& a, const json& j, const std::string& field) {
  RhoExpansion e;
  const auto tf = dot(field, "tuple");
  const json& tuple = require_array(require(j, "tuple", field), tf);
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    const Letter l = letter_from_json(a, tuple[i], at(tf, i));
    e.tuple.push_back(l);
    e.kinds.push_back(a.kind(l));
  }
  const auto cf = dot(field, "coeffs");
  const json& coeffs = require_array(require(j, "coeffs", field), cf);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const auto f = at(cf, i);
    const auto kf = dot(f, "k");
    const json& k = require_array(require(coeffs[i], "k", f), kf);
    if (k.size() != e.tuple.size()) throw SchemaError(kf, "index length differs from the tuple length");
    std::vector<long> idx;
    for (std::size_t p = 0; p < k.size(); ++p) idx.push_back(require_int(k[p], at(kf, p)));
    const Rational c = rational_from_json(require(coeffs[i], "c", f), dot(f, "c"));
    if (!c.is_zero()) e.coeffs[idx] += c;
  }
  return e;
}

json to_json(const Alphabet& a, const GroupWord& g) {
  json out = json::array();
  for (const auto& f : g) {
    out.push_back({{"letter", a.name(f.letter)},
                   {"kind", f.type == OneParamFactor::Type::Exp ? "exp" : "torus"},
                   {"param", to_json(f.param)}});
  }
  return out;
}

GroupWord group_word_from_json(const Alphabet& a, const json& j, const std::string& field) {
  require_array(j, field);
  GroupWord g;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto f = at(field, i);
    const Letter l = letter_from_json(a, require(j[i], "letter", f), dot(f, "letter"));
    const auto kind = require_string(require(j[i], "kind", f), dot(f, "kind"));
    const Rational p = rational_from_json(require(j[i], "param", f), dot(f, "param"));
    if (kind == "exp") {
      g.push_back(OneParamFactor::exp(l, p));
    } else if (kind == "torus") {
      if (p.is_zero()) throw SchemaError(dot(f, "param"), "torus parameter must be nonzero");
      g.push_back(OneParamFactor::torus(l, p));
    } else {
      throw SchemaError(dot(f, "kind"), "expected \"exp\" or \"torus\"");
    }
  }
  return g;
}

json to_json(const Alphabet&, const Witness& w) {
  return {{"rep", to_json(w.rep)}, {"v", to_json(w.v)}, {"image", to_json(w.image)}};
}

json to_json(const FfrMembership& m) {
  return {{"member", m.member}, {"integrable", m.integrable}, {"dim", m.dim}};
}

json to_json(const Alphabet& a, const RegularityCertificate& c) {
  json bounds = json::array();
  for (const auto& b : c.bounds) {
    json tuple = json::array();
    for (const auto l : b.tuple) tuple.push_back(a.name(l));
    bounds.push_back({{"tuple", tuple}, {"max_abs_index", b.max_abs_index}});
  }
  json out = {{"regular", c.regular}, {"bounds", bounds}};
  if (!c.reason.empty()) out["reason"] = c.reason;
  return out;
}

json to_json(const km::Gcm& g) {
  json m = json::array();
  for (std::size_t i = 0; i < g.size(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < g.size(); ++k) row.push_back(g.a(i, k));
    m.push_back(row);
  }
  json out = {{"matrix", m}};
  if (!g.extra_coweights().empty()) out["coweights"] = g.extra_coweights();
  return out;
}

km::Gcm gcm_from_json(const json& j, const std::string& field) {
  const auto mf = dot(field, "matrix");
  const json& rows = require_array(require(j, "matrix", field), mf);
  const auto n = rows.size();
  if (n == 0) throw SchemaError(mf, "empty matrix");
  IntMatrix a(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const auto rf = at(mf, i);
    require_array(rows[i], rf);
    if (rows[i].size() != n) throw SchemaError(rf, "matrix is not square");
    for (std::size_t k = 0; k < n; ++k) a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = require_int(rows[i][k], at(rf, k));
  }
  std::vector<std::vector<long>> extra;
  if (j.contains("coweights")) {
    const auto cf = dot(field, "coweights");
    const json& cw = require_array(j["coweights"], cf);
    for (std::size_t i = 0; i < cw.size(); ++i) extra.push_back(weight_from_json(cw[i], n, at(cf, i)));
  }
  return wrap(field, [&] { return km::validate_gcm(a, std::move(extra)); });
}

std::vector<long> weight_from_json(const json& j, std::size_t n, const std::string& field) {
  require_array(j, field);
  if (j.size() != n) throw SchemaError(field, "expected " + std::to_string(n) + " integers");
  std::vector<long> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(require_int(j[i], at(field, i)));
  return out;
}

json to_json(const km::KMGroupWord& g) {
  json out = json::array();
  for (const auto& f : g) {
    std::visit(
        [&](const auto& x) {
          using F = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<F, km::KMFactor::ExpE>) {
            out.push_back({{"gen", "e" + std::to_string(x.index + 1)}, {"param", to_json(x.t)}});
          } else if constexpr (std::is_same_v<F, km::KMFactor::ExpF>) {
            out.push_back({{"gen", "f" + std::to_string(x.index + 1)}, {"param", to_json(x.t)}});
          } else if constexpr (std::is_same_v<F, km::KMFactor::ExpRoot>) {
            json seq = json::array();
            for (const auto i : x.x.seq) seq.push_back(i + 1);
            out.push_back({{"root", seq}, {"param", to_json(x.t)}});
          } else {
            json t = {{"torus", x.h.h_coeffs}, {"param", to_json(x.s)}};
            if (x.h.extra) t["extra"] = *x.h.extra + 1;
            out.push_back(t);
          }
        },
        f.factor);
  }
  return out;
}

km::KMGroupWord km_group_word_from_json(const km::Gcm& gcm, const json& j, const std::string& field) {
  require_array(j, field);
  const std::size_t n = gcm.size();
  auto index = [&](long one_based, const std::string& f) {
    if (one_based < 1 || static_cast<std::size_t>(one_based) > n) throw SchemaError(f, "index out of range 1.." + std::to_string(n));
    return static_cast<std::size_t>(one_based - 1);
  };
  km::KMGroupWord g;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto f = at(field, i);
    const Rational p = rational_from_json(require(j[i], "param", f), dot(f, "param"));
    if (j[i].contains("gen")) {
      const auto gf = dot(f, "gen");
      const auto gen = require_string(j[i]["gen"], gf);
      if (gen.size() < 2 || (gen[0] != 'e' && gen[0] != 'f')) throw SchemaError(gf, "expected e<i> or f<i>");
      long idx = 0;
      try {
        std::size_t used = 0;
        idx = std::stol(gen.substr(1), &used);
        if (used != gen.size() - 1) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw SchemaError(gf, "expected e<i> or f<i>");
      }
      const auto k = index(idx, gf);
      if (gen[0] == 'e') {
        g.push_back({km::KMFactor::ExpE{k, p}});
      } else {
        g.push_back({km::KMFactor::ExpF{k, p}});
      }
    } else if (j[i].contains("root")) {
      const auto rf = dot(f, "root");
      const json& seq = require_array(j[i]["root"], rf);
      std::vector<std::size_t> s;
      for (std::size_t q = 0; q < seq.size(); ++q) s.push_back(index(require_int(seq[q], at(rf, q)), at(rf, q)));
      g.push_back({km::KMFactor::ExpRoot{wrap(rf, [&] { return km::multibracket_rootvector(gcm, s); }), p}});
    } else if (j[i].contains("torus")) {
      if (p.is_zero()) throw SchemaError(dot(f, "param"), "torus parameter must be nonzero");
      km::Coweight h{weight_from_json(j[i]["torus"], n, dot(f, "torus")), std::nullopt};
      if (j[i].contains("extra")) {
        const auto ef = dot(f, "extra");
        const long e = require_int(j[i]["extra"], ef);
        if (e < 1 || static_cast<std::size_t>(e) > gcm.extra_coweights().size()) throw SchemaError(ef, "no such extra coweight");
        h.extra = static_cast<std::size_t>(e - 1);
      }
      g.push_back({km::KMFactor::Torus{std::move(h), p}});
    } else {
      throw SchemaError(f, "expected one of gen, root, torus");
    }
  }
  return g;
}

json to_json(const km::WeightVector& v) {
  json out = json::array();
  for (const auto& [k, x] : v.components()) out.push_back({{"depth", k}, {"coords", to_json(x)}});
  return out;
}

km::WeightVector weight_vector_from_json(const km::IrrTrunc& m, const json& j, const std::string& field) {
  require_array(j, field);
  km::WeightVector v;
  const std::size_t n = m.gcm().size();
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto f = at(field, i);
    const auto df = dot(f, "depth");
    const auto w = weight_from_json(require(j[i], "depth", f), n, df);
    km::Depth k;
    for (const long x : w) {
      if (x < 0) throw SchemaError(df, "depth entries must be nonnegative");
      k.push_back(static_cast<int>(x));
    }
    const std::size_t d = m.multiplicity(k);
    v.add(k, vector_from_json(require(j[i], "coords", f), d, dot(f, "coords")));
  }
  return v;
}

json to_json(const km::RelationReport& r) {
  return {{"ok", r.ok}, {"checked", r.checked}, {"skipped", r.skipped}, {"failures", r.failures}};
}

json parse_text(const std::string& text, const std::string& field) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError(field, std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace ugdual::io
