#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ugdual/acceptance/suites.hpp"
#include "ugdual/io.hpp"

namespace ugdual::cli {

namespace {

using io::json;

std::size_t env_cap(const char* name, std::size_t fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  char* end = nullptr;
  const unsigned long long x = std::strtoull(v, &end, 10);
  if (*end != '\0' || x == 0) throw SchemaError(name, "expected a positive integer");
  return static_cast<std::size_t>(x);
}

struct Session {
  std::string alphabet_spec = "e1,e2,e3,e4";
  Alphabet alphabet;
  std::size_t dim_cap = kDefaultDimCap;
  km::IrrTruncOptions km;
  bool pretty = false;
  std::istream* in = nullptr;
  std::ostream* out = nullptr;

  void emit(const json& j) const { *out << (pretty ? j.dump(2) : j.dump()) << "\n"; }
};

json load_json(const Session& s, const std::string& arg, const std::string& field) {
  if (arg == "-") {
    std::stringstream ss;
    ss << s.in->rdbuf();
    return io::parse_text(ss.str(), field);
  }
  if (!arg.empty() && arg[0] == '@') {
    std::ifstream f(arg.substr(1));
    if (!f) throw SchemaError(field, "cannot read file '" + arg.substr(1) + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    return io::parse_text(ss.str(), field);
  }
  return io::parse_text(arg, field);
}

bool looks_like_json(const std::string& arg) {
  return !arg.empty() && (arg[0] == '[' || arg[0] == '{' || arg[0] == '@' || arg == "-");
}

NcPoly poly_arg(const Session& s, const std::string& arg, const std::string& field) {
  if (looks_like_json(arg)) return io::ncpoly_from_json(s.alphabet, load_json(s, arg, field), field);
  return NcPoly(io::word_from_json(s.alphabet, arg, field));
}

Functional functional_arg(const Session& s, const std::string& arg, const std::string& field) {
  if (arg.rfind("phi:", 0) == 0) return phi(io::word_from_json(s.alphabet, arg.substr(4), field));
  return io::functional_from_json(s.alphabet, load_json(s, arg, field), field);
}

MatrixCoefficient as_coefficient(const Session& s, const Functional& h) {
  if (const auto* f = std::get_if<FiniteFunctional>(&h)) return realize(*f, s.alphabet, s.dim_cap);
  return std::get<MatrixCoefficient>(h);
}

// Alphabet of the functional: its module's letters, or the session alphabet.
const Alphabet& alphabet_of(const Session& s, const Functional& h) {
  if (const auto* m = std::get_if<MatrixCoefficient>(&h)) return m->rep().alphabet();
  return s.alphabet;
}

std::vector<long> int_list(const std::string& text, const std::string& field) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stol(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw SchemaError(field, "expected comma-separated integers");
    }
  }
  return out;
}

std::vector<long> weight_arg(const Session& s, const km::Gcm& g, const std::string& arg, const std::string& field) {
  if (looks_like_json(arg)) return io::weight_from_json(load_json(s, arg, field), g.size(), field);
  auto w = int_list(arg, field);
  if (w.size() != g.size()) throw SchemaError(field, "expected " + std::to_string(g.size()) + " integers");
  return w;
}

km::Gcm gcm_arg(const Session& s, const std::string& arg) { return io::gcm_from_json(load_json(s, arg, "gcm"), "gcm"); }

std::vector<Letter> tuple_arg(const Alphabet& a, const std::string& text) {
  std::vector<Letter> out;
  std::stringstream ss(text);
  std::string item;
  std::size_t i = 0;
  while (std::getline(ss, item, ',')) {
    out.push_back(io::word_from_json(a, item, "tuple[" + std::to_string(i) + "]").letters().at(0));
    if (a.parse(item).length() != 1) throw SchemaError("tuple[" + std::to_string(i) + "]", "expected a single letter");
    ++i;
  }
  return out;
}

json weight_table(const km::IrrTrunc& m) {
  json rows = json::array();
  for (const auto& k : m.weights()) {
    rows.push_back({{"depth", k}, {"coords", m.coords(k)}, {"mult", m.multiplicity(k)}});
  }
  return rows;
}

void add_common(CLI::App* sub, Session& s) {
  sub->add_option("--alphabet", s.alphabet_spec, "letters as name[:kind],... (kinds: nilpotent, diagonal)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Session s;
  s.in = &in;
  s.out = &out;
  std::uint64_t seed = 0;

  CLI::App app{"Exact computations with functionals on enveloping algebras and Kac-Moody modules", "ugdual"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--pretty", s.pretty, "indent JSON output");
  app.add_option("--seed", seed, "seed for randomized suites");
  app.add_flag("--parallel", s.km.parallel, "build the weight spaces of one level concurrently");

  std::function<void()> action;

  // Words and polynomials.
  std::string w1, w2, xa, ya, fa, ga, rep_a, vec_a, word_a, tuple_a, gcm_a, weight_a, depth_a, suite_a = "all";
  std::string phi_a, v_a, basis_a;
  bool rho = false;
  bool relations = false;
  std::size_t horizon = kDefaultTupleHorizon;
  std::size_t slack = kDefaultShuffleSlack;
  std::optional<std::size_t> span_n;
  std::size_t depth_n = 0;

  auto* shuffle = app.add_subcommand("shuffle", "shuffle product of two words");
  add_common(shuffle, s);
  shuffle->add_option("--w1", w1)->required();
  shuffle->add_option("--w2", w2)->required();
  shuffle->callback([&] {
    action = [&] {
      const auto p = shuffle_product(phi(io::word_from_json(s.alphabet, w1, "w1")), phi(io::word_from_json(s.alphabet, w2, "w2")));
      s.emit({{"terms", io::to_json(s.alphabet, p.coeffs)}});
    };
  });

  auto* mul = app.add_subcommand("mul", "product of polynomials (--x, --y) or of functionals (--f, --g)");
  add_common(mul, s);
  mul->add_option("--x", xa);
  mul->add_option("--y", ya);
  mul->add_option("--f", fa);
  mul->add_option("--g", ga);
  mul->callback([&] {
    action = [&] {
      if (!xa.empty() || !ya.empty()) {
        if (xa.empty() || ya.empty()) throw SchemaError("y", "both --x and --y are required");
        s.emit({{"terms", io::to_json(s.alphabet, poly_arg(s, xa, "x") * poly_arg(s, ya, "y"))}});
      } else {
        if (fa.empty() || ga.empty()) throw SchemaError("g", "give --x/--y or --f/--g");
        const Functional h = product(functional_arg(s, fa, "f"), functional_arg(s, ga, "g"));
        s.emit(io::to_json(alphabet_of(s, h), h));
      }
    };
  });

  auto* cop = app.add_subcommand("coproduct", "coproduct of a polynomial");
  add_common(cop, s);
  cop->add_option("--x", xa)->required();
  cop->callback([&] { action = [&] { s.emit({{"terms", io::to_json(s.alphabet, coproduct(poly_arg(s, xa, "x")))}}); }; });

  auto* ant = app.add_subcommand("antipode", "antipode of a polynomial");
  add_common(ant, s);
  ant->add_option("--x", xa)->required();
  ant->callback([&] { action = [&] { s.emit({{"terms", io::to_json(s.alphabet, antipode(poly_arg(s, xa, "x")))}}); }; });

  auto* act = app.add_subcommand("act", "act on a module vector by a polynomial or a group word");
  act->add_option("--rep", rep_a, "module JSON")->required();
  act->add_option("--vector", vec_a, "coordinates JSON");
  act->add_option("--basis", basis_a, "basis label instead of --vector");
  act->add_option("--x", xa, "polynomial");
  act->add_option("--group", ga, "group word JSON");
  act->callback([&] {
    action = [&] {
      const RepSpec r = io::rep_from_json(load_json(s, rep_a, "rep"), "rep");
      Vector v;
      if (!basis_a.empty()) {
        const auto idx = r.label_index(basis_a);
        if (!idx) throw SchemaError("basis", "no basis vector labelled '" + basis_a + "'");
        v = r.basis_vector(*idx);
      } else if (!vec_a.empty()) {
        v = io::vector_from_json(load_json(s, vec_a, "vector"), r.dim(), "vector");
      } else {
        throw SchemaError("vector", "give --vector or --basis");
      }
      Session local = s;
      local.alphabet = r.alphabet();
      if (!xa.empty()) {
        s.emit({{"vector", io::to_json(act_poly(r, poly_arg(local, xa, "x"), v))}});
      } else if (!ga.empty()) {
        s.emit({{"vector", io::to_json(act_group(r, io::group_word_from_json(r.alphabet(), load_json(s, ga, "group"), "group"), v))}});
      } else {
        throw SchemaError("x", "give --x or --group");
      }
    };
  });

  auto* ev = app.add_subcommand("eval", "evaluate a functional on a polynomial, word or group word");
  add_common(ev, s);
  ev->add_option("--functional", fa, "phi:<word> or functional JSON")->required();
  ev->add_option("--x", xa, "polynomial");
  ev->add_option("--group", ga, "group word JSON");
  ev->callback([&] {
    action = [&] {
      const Functional h = functional_arg(s, fa, "functional");
      Session local = s;
      local.alphabet = alphabet_of(s, h);
      if (!xa.empty()) {
        s.emit({{"value", io::to_json(evaluate(h, poly_arg(local, xa, "x")))}});
      } else if (!ga.empty()) {
        const RegularFunction f{as_coefficient(s, h)};
        const auto g = io::group_word_from_json(f.mc.rep().alphabet(), load_json(s, ga, "group"), "group");
        s.emit({{"value", io::to_json(eval_regular(f, g))}});
      } else {
        throw SchemaError("x", "give --x or --group");
      }
    };
  });

  auto* tay = app.add_subcommand("taylor", "expansion along a tuple of one-parameter letters");
  add_common(tay, s);
  tay->add_option("--functional", fa)->required();
  tay->add_option("--tuple", tuple_a, "comma-separated letters")->required();
  tay->add_flag("--rho", rho, "emit the expansion coefficients as JSON");
  tay->callback([&] {
    action = [&] {
      const Functional h = functional_arg(s, fa, "functional");
      const Alphabet& a = alphabet_of(s, h);
      const auto tuple = tuple_arg(a, tuple_a);
      if (rho) {
        s.emit(io::to_json(a, expand_rho(h, tuple, a)));
      } else {
        *s.out << taylor_expand(h, tuple, a).str() << "\n";
      }
    };
  });

  auto* phm = app.add_subcommand("phi-map", "functional on U(g) of a group function given by (rep, phi, v)");
  phm->add_option("--rep", rep_a)->required();
  phm->add_option("--phi", phi_a)->required();
  phm->add_option("--v", v_a)->required();
  phm->callback([&] {
    action = [&] {
      auto r = std::make_shared<const RepSpec>(io::rep_from_json(load_json(s, rep_a, "rep"), "rep"));
      const RegularFunction f{MatrixCoefficient(r, io::vector_from_json(load_json(s, phi_a, "phi"), r->dim(), "phi"),
                                                io::vector_from_json(load_json(s, v_a, "v"), r->dim(), "v"))};
      s.emit(io::to_json(r->alphabet(), phi_map(f)));
    };
  });

  auto* xim = app.add_subcommand("xi-map", "group function of a functional, as (rep, phi, v)");
  add_common(xim, s);
  xim->add_option("--functional", fa)->required();
  xim->add_option("--group", ga, "also evaluate on this group word");
  xim->callback([&] {
    action = [&] {
      const RegularFunction f{as_coefficient(s, functional_arg(s, fa, "functional"))};
      json j = {{"rep", io::to_json(f.mc.rep())}, {"phi", io::to_json(f.mc.phi())}, {"v", io::to_json(f.mc.v())}};
      if (!ga.empty()) {
        j["value"] = io::to_json(eval_regular(f, io::group_word_from_json(f.mc.rep().alphabet(), load_json(s, ga, "group"), "group")));
      }
      s.emit(j);
    };
  });

  auto* wit = app.add_subcommand("witness", "module on which a polynomial or a reduced group word acts nontrivially");
  add_common(wit, s);
  wit->add_option("--x", xa);
  wit->add_option("--group", ga);
  wit->callback([&] {
    action = [&] {
      if (!xa.empty()) {
        s.emit(io::to_json(s.alphabet, faithfulness_witness(poly_arg(s, xa, "x"), s.alphabet)));
      } else if (!ga.empty()) {
        s.emit(io::to_json(s.alphabet, group_faithfulness_witness(io::group_word_from_json(s.alphabet, load_json(s, ga, "group"), "group"), s.alphabet)));
      } else {
        throw SchemaError("x", "give --x or --group");
      }
    };
  });

  auto* mem = app.add_subcommand("membership", "regularity, finite-dimensional translates and shuffle-span tests");
  add_common(mem, s);
  mem->add_option("--functional", fa)->required();
  mem->add_option("--horizon", horizon, "longest tuple for the regularity scan");
  mem->add_option("--n", span_n, "also test vanishing beyond word length n");
  mem->add_option("--slack", slack, "window length for the shuffle-span test");
  mem->callback([&] {
    action = [&] {
      const Functional h = functional_arg(s, fa, "functional");
      const Alphabet& a = alphabet_of(s, h);
      json j = {{"ffr", io::to_json(membership_ffr(h))}, {"regular", io::to_json(a, is_regular(h, a, horizon))}};
      if (span_n) j["shuffle_span"] = in_shuffle_span(h, *span_n, slack);
      s.emit(j);
    };
  });

  auto* kb = app.add_subcommand("km-build", "weight table of a truncated irreducible module");
  kb->add_option("--gcm", gcm_a, "GCM JSON")->required();
  kb->add_option("--weight", weight_a, "highest weight, e.g. 1,0")->required();
  kb->add_option("--depth", depth_n)->required();
  kb->add_flag("--relations", relations, "also run the relation, integrability and contravariance checks");
  kb->callback([&] {
    action = [&] {
      const km::Gcm g = gcm_arg(s, gcm_a);
      const km::IrrTrunc m(g, weight_arg(s, g, weight_a, "weight"), depth_n, s.km);
      json j = {{"gcm", io::to_json(g)}, {"symmetrizer", g.symmetrizer()}, {"highest", m.highest_weight()},
                {"depth", m.depth()}, {"dimension", m.dimension()}, {"weights", weight_table(m)}};
      if (relations) {
        j["relations"] = io::to_json(km::check_relations(m));
        j["integrability"] = io::to_json(km::check_integrability(m));
        j["contravariance"] = io::to_json(km::check_contravariance(m));
      }
      s.emit(j);
    };
  });

  auto* kmu = app.add_subcommand("km-mult", "weight multiplicity by Gram rank and by Freudenthal's formula");
  kmu->add_option("--gcm", gcm_a)->required();
  kmu->add_option("--weight", weight_a)->required();
  kmu->add_option("--depth-vector", depth_a, "k with λ = Λ - Σ k_i α_i, e.g. 1,1")->required();
  kmu->callback([&] {
    action = [&] {
      const km::Gcm g = gcm_arg(s, gcm_a);
      const auto hw = weight_arg(s, g, weight_a, "weight");
      const auto kv = int_list(depth_a, "depth-vector");
      if (kv.size() != g.size()) throw SchemaError("depth-vector", "expected " + std::to_string(g.size()) + " integers");
      km::Depth k;
      for (const long x : kv) {
        if (x < 0) throw SchemaError("depth-vector", "entries must be nonnegative");
        k.push_back(static_cast<int>(x));
      }
      const km::IrrTrunc m(g, hw, static_cast<std::size_t>(km::level(k)), s.km);
      s.emit({{"depth", k}, {"coords", m.coords(k)}, {"gram_rank", km::weight_multiplicity(m, k)},
              {"freudenthal", km::freudenthal_oracle(g, hw, k)}});
    };
  });

  auto* kth = app.add_subcommand("km-theta", "highest-weight matrix coefficient on a group word");
  kth->add_option("--gcm", gcm_a)->required();
  kth->add_option("--weight", weight_a)->required();
  kth->add_option("--group", ga, "Kac-Moody group word JSON")->required();
  kth->callback([&] {
    action = [&] {
      const km::Gcm g = gcm_arg(s, gcm_a);
      const km::IrrTrunc m(g, weight_arg(s, g, weight_a, "weight"), 0, s.km);
      const auto word = io::km_group_word_from_json(g, load_json(s, ga, "group"), "group");
      s.emit({{"value", io::to_json(km::theta_eval(m, word))}, {"depth_used", m.depth()}});
    };
  });

  auto* kco = app.add_subcommand("km-cone", "Kostant cone membership of a module vector");
  kco->add_option("--gcm", gcm_a)->required();
  kco->add_option("--weight", weight_a)->required();
  kco->add_option("--vector", vec_a, "weight vector JSON")->required();
  kco->callback([&] {
    action = [&] {
      const km::Gcm g = gcm_arg(s, gcm_a);
      const auto hw = weight_arg(s, g, weight_a, "weight");
      std::vector<long> hw2;
      for (const long x : hw) hw2.push_back(2 * x);
      const km::IrrTrunc m(g, hw, 0, s.km);
      const km::IrrTrunc doubled(g, hw2, 0, s.km);
      const auto v = io::weight_vector_from_json(m, load_json(s, vec_a, "vector"), "vector");
      s.emit({{"in_cone", km::kostant_cone_test(m, doubled, v)}});
    };
  });

  auto* chk = app.add_subcommand("check", "run acceptance suites");
  chk->add_option("--suite", suite_a, "all, or a comma list such as ac1,ac8");
  int check_status = kExitOk;
  chk->callback([&] {
    action = [&] {
      std::vector<int> ids;
      try {
        ids = acceptance::parse_suite_selector(suite_a);
      } catch (const std::invalid_argument& e) {
        throw SchemaError("suite", e.what());
      }
      std::size_t ok = 0;
      for (const int id : ids) {
        const auto r = acceptance::run_suite(id, seed);
        *s.out << acceptance::format_line(r, false) << "\n";
        if (r.ok()) ++ok;
      }
      *s.out << "summary: " << ok << "/" << ids.size() << " suites pass (seed " << seed << ")\n";
      if (ok != ids.size()) check_status = kExitInvalid;
    };
  });

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }

  try {
    s.alphabet = io::alphabet_from_spec(s.alphabet_spec);
    s.dim_cap = env_cap("UGDUAL_DIM_CAP", kDefaultDimCap);
    s.km.depth_cap = env_cap("UGDUAL_DEPTH_CAP", s.km.depth_cap);
    s.km.dim_cap = env_cap("UGDUAL_KM_DIM_CAP", s.km.dim_cap);
    if (action) action();
    return check_status;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return kExitCap;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
}

}  // namespace ugdual::cli
