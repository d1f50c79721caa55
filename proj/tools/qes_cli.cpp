// qes: command-line front end.
//
// Exit codes: 0 success, 1 validation error, 2 a check reported a failure
// (space not invariant, relation violated, pipeline residual, unmatched level).
#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <cstdlib>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include "qes/catalog.hpp"
#include "qes/numverify.hpp"
#include "qes/recurrence.hpp"

using json = nlohmann::ordered_json;
using namespace qes;

namespace {

constexpr int kOk = 0, kInvalid = 1, kFinding = 2;

struct ValidationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A finished command: JSON payload, optional CSV table, exit status.
struct Result {
  json payload;
  std::vector<std::vector<std::string>> table;  // first row is the header
  int status = kOk;
};

// ------------------------------------------------------------ parsing

Rational rat(const std::string& name, const std::string& s) {
  try {
    return parse_rational(s);
  } catch (const std::exception&) {
    throw ValidationError("--" + name + ": not an exact rational: '" + s + "'");
  }
}

int integer(const std::string& name, const std::string& s) {
  Rational q = rat(name, s);
  if (!is_integer(q) || abs(q) > 1000) throw ValidationError("--" + name + ": expected a small integer, got " + s);
  return static_cast<int>(to_long(q));
}

GenExponent exponent_arg(const std::string& s) {
  if (s == "formal") return GenExponent(0, 1);
  return GenExponent(rat("a", s));
}

// Parameters shared by the physical cases, kept as the strings given.
struct CaseArgs {
  std::string name;
  std::map<std::string, std::string> values{{"m", ""},     {"p2", "1"},  {"p1", "0"},    {"kappa0", "1/2"},
                                            {"epsilon", "0"}, {"delta", "1/2"}, {"k2", "1/3"}, {"alpha", "1"},
                                            {"M", "3/2"},   {"s", "0"}};

  void add_to(CLI::App* app) {
    app->add_option("--case", name, "polypot | lame | bosehubbard")->required();
    for (auto& [k, v] : values) app->add_option("--" + k, v, "exact rational");
  }
  std::string m_or(const std::string& fallback) const {
    return values.at("m").empty() ? fallback : values.at("m");
  }

  PolyPotParams polypot() const {
    PolyPotParams p;
    p.m = integer("m", m_or("2"));
    p.p2 = rat("p2", values.at("p2"));
    p.p1 = rat("p1", values.at("p1"));
    p.kappa0 = rat("kappa0", values.at("kappa0"));
    p.epsilon = rat("epsilon", values.at("epsilon"));
    p.validate();
    return p;
  }
  LameParams lame() const {
    LameParams p;
    p.m = integer("m", m_or("1"));
    p.delta = rat("delta", values.at("delta"));
    p.k2 = rat("k2", values.at("k2"));
    p.validate();
    return p;
  }
  BoseHubbardParams bosehubbard() const {
    BoseHubbardParams p;
    p.alpha = rat("alpha", values.at("alpha"));
    p.M = rat("M", values.at("M"));
    p.s = rat("s", values.at("s"));
    p.validate();
    return p;
  }
  // the parameters that matter for this case, canonicalized
  json params() const {
    json j = json::object();
    if (name == "polypot") {
      PolyPotParams p = polypot();
      j["m"] = p.m;
      j["p2"] = to_string(p.p2);
      j["p1"] = to_string(p.p1);
      j["kappa0"] = to_string(p.kappa0);
      j["epsilon"] = to_string(p.epsilon);
    } else if (name == "lame") {
      LameParams p = lame();
      j["m"] = p.m;
      j["delta"] = to_string(p.delta);
      j["k2"] = to_string(p.k2);
    } else if (name == "bosehubbard") {
      BoseHubbardParams p = bosehubbard();
      j["alpha"] = to_string(p.alpha);
      j["M"] = to_string(p.M);
      j["s"] = to_string(p.s);
    } else {
      throw ValidationError("--case: unknown case '" + name + "' (polypot, lame, bosehubbard)");
    }
    return j;
  }
};

// Catalog selection: family plus its parameters.
struct OpArgs {
  std::string op, a = "formal", lambda = "-1";
  int n = 0, m = 0, sign = 0, alpha = 0, k = 0, index = 1;

  void add_to(CLI::App* app, bool op_option) {
    if (op_option) app->add_option("--op", op, "family name or J+, J0, J-, j+, j0, j-")->required();
    app->add_option("--n", n, "degree of the plain sector");
    app->add_option("--m", m, "degree of the second sector");
    app->add_option("--a", a, "exponent of the second sector: 'formal' or a rational");
    app->add_option("--sign", sign, "+1, 0, -1 for j, k_a, J")->check(CLI::Range(-1, 1));
    app->add_option("--alpha", alpha, "index of q, Q");
    app->add_option("--k", k, "integer a for W+, W-");
    app->add_option("--index", index, "1..3 for S, Stilde")->check(CLI::Range(1, 3));
    app->add_option("--lambda", lambda, "S, Stilde parameter");
  }

  CatalogSpec spec() const {
    CatalogSpec s;
    std::string name = op;
    static const std::map<std::string, std::pair<std::string, int>> alias{
        {"J+", {"J", 1}}, {"J0", {"J", 0}}, {"J-", {"J", -1}}, {"j+", {"j", 1}}, {"j0", {"j", 0}}, {"j-", {"j", -1}}};
    s.sign = sign;
    if (auto it = alias.find(op); it != alias.end()) {
      name = it->second.first;
      s.sign = it->second.second;
    }
    try {
      s.family = parse_family(name);
    } catch (const std::invalid_argument& e) {
      throw ValidationError(e.what());
    }
    s.n = n;
    s.m = m;
    s.a = exponent_arg(a);
    s.alpha = alpha;
    s.k = k;
    s.index = index;
    s.lambda = rat("lambda", lambda);
    return s;
  }
};

// ------------------------------------------------------------ serialization

json matrix_json(const QuadMatrix& M) {
  json rows = json::array();
  for (int i = 0; i < M.rows(); ++i) {
    json r = json::array();
    for (int j = 0; j < M.cols(); ++j) r.push_back(M(i, j).str());
    rows.push_back(r);
  }
  return rows;
}

json operator_json(const MatrixOperator& M) {
  return json::array({json::array({M(0, 0).str(), M(0, 1).str()}), json::array({M(1, 0).str(), M(1, 1).str()})});
}

std::string fring_str(const FRingOperator& A) {
  std::string p = A.plain_part().str(), q = A.f_part().str();
  return "(" + p + ") + f*(" + q + ")";
}

json basis_json(const Basis& V) {
  json b = json::array();
  for (const auto& e : V) b.push_back(basis_str(e));
  return b;
}

json invariance_json(const InvarianceReport& r) {
  json f = json::array();
  for (const auto& x : r.failures)
    f.push_back({{"source", basis_str(x.source)}, {"image", basis_str(x.image)}, {"coeff", x.coeff.str("a")}});
  return {{"invariant", r.invariant}, {"failures", f}};
}

json poly_json(const EPoly& p, const std::string& var) {
  json c = json::array();
  for (const auto& x : p.coeffs()) c.push_back(x.str());
  return {{"text", p.str(var)}, {"degree", p.degree()}, {"coefficients", c}};
}

json roots_json(const EPoly& p, const Rational& precision) {
  json out = json::array();
  for (const RootInterval& r : real_roots(p, precision))
    out.push_back({{"lo", to_string(r.lo)}, {"hi", to_string(r.hi)}, {"approx", r.mid()}});
  return out;
}

// ------------------------------------------------------------ commands

Result cmd_catalog_list() {
  Result r;
  r.payload["families"] = family_names();
  r.payload["relations"] = relation_names();
  r.table.push_back({"kind", "name"});
  for (const auto& f : family_names()) r.table.push_back({"family", f});
  for (const auto& f : relation_names()) r.table.push_back({"relation", f});
  return r;
}

Result cmd_catalog_show(const OpArgs& args) {
  CatalogSpec s = args.spec();
  BuiltOperator b = build(s);
  Result r;
  json& j = r.payload;
  j["family"] = family_name(s.family);
  j["params"] = {{"n", s.n}, {"m", s.m}, {"a", s.a.str()}, {"sign", s.sign}, {"alpha", s.alpha},
                 {"k", s.k}, {"index", s.index}, {"lambda", to_string(s.lambda)}};
  if (b.is_fring) {
    j["operator"] = fring_str(b.fring);
    TwoComponentSpace V = declared_fspace(s);
    j["space"] = basis_json(V.basis());
  } else {
    j["operator"] = b.scalar.str();
    j["space"] = basis_json(declared_space(s));
  }
  InvarianceReport inv = check_declared(s);
  j["invariant"] = inv.invariant;
  r.status = inv.invariant ? kOk : kFinding;
  return r;
}

Result cmd_invariance(const OpArgs& args, const std::string& space) {
  CatalogSpec s = args.spec();
  Result r;
  InvarianceReport inv;
  json basis;
  if (space == "declared") {
    inv = check_declared(s);
    basis = s.family == Family::S || s.family == Family::Stilde ? basis_json(declared_fspace(s).basis())
                                                                : basis_json(declared_space(s));
  } else {
    Basis V;
    if (space == "v1") {
      V = MonomialSpace{s.n, s.m, s.a}.basis();
    } else if (space.size() > 1 && space[0] == 'p') {
      V = MonomialSpace::polynomials(integer("space", space.substr(1))).basis();
    } else {
      throw ValidationError("--space: expected declared, v1 or p<N>");
    }
    BuiltOperator b = build(s);
    if (b.is_fring) throw ValidationError("--space: S and Stilde act on p + f q; use --space declared");
    inv = check_invariance(b.scalar, V);
    basis = basis_json(V);
  }
  r.payload["op"] = args.op;
  r.payload["space"] = space;
  r.payload["basis"] = basis;
  json ij = invariance_json(inv);
  r.payload["invariant"] = ij["invariant"];
  r.payload["failures"] = ij["failures"];
  r.table.push_back({"source", "image", "coeff"});
  for (const auto& f : inv.failures) r.table.push_back({basis_str(f.source), basis_str(f.image), f.coeff.str("a")});
  r.status = inv.invariant ? kOk : kFinding;
  return r;
}

Result cmd_algebra(const std::string& relation, int n, int m, const std::string& a, const std::string& lambda,
                   bool tilde) {
  Result r;
  json& j = r.payload;
  j["relation"] = relation;
  j["n"] = n;
  j["m"] = m;
  if (relation == "so3") {
    Rational spin = tilde ? Rational(n) + frac(1, 2) : Rational(n);
    So3Report s = so3_closure(spin, rat("lambda", lambda), tilde);
    j["holds"] = s.closes;
    json c = json::array();
    for (const auto& x : s.constants) c.push_back(x.str());
    j["constants"] = c;
    r.status = s.closes ? kOk : kFinding;
    return r;
  }
  auto names = relation_names();
  if (std::find(names.begin(), names.end(), relation) == names.end())
    throw ValidationError("--relation: unknown relation '" + relation + "'");
  RelationReport rep = verify_relation(relation, n, m, exponent_arg(a));
  j["holds"] = rep.holds;
  j["operator_identity"] = rep.operator_identity;
  j["residual"] = rep.residual.str();
  j["note"] = rep.note;
  if (relation == "nlalgebra") {
    AlgebraFitResult fit = fit_casimir_polynomial(n, m);
    json c = json::object();
    const char* label[] = {"alpha", "beta", "gamma", "delta"};
    for (size_t i = 0; i < fit.coefficients.size() && i < 4; ++i) c[label[i]] = fit.coefficients[i].str("a");
    j["cubic"] = c;
    j["cubic_exact"] = fit.exact;
  }
  r.status = rep.holds ? kOk : kFinding;
  return r;
}

Result cmd_hamiltonian(const CaseArgs& c) {
  Result r;
  json& j = r.payload;
  j["case"] = c.name;
  j["params"] = c.params();
  if (c.name == "bosehubbard") {
    BoseHubbardParams p = c.bosehubbard();
    j["c"] = to_string(p.c());
    j["quasi_exact"] = p.quasi_exact();
    j["E0"] = to_string(p.E0());
    j["reduced"] = build_bosehubbard_reduced(p).str();
    j["peeled"] = bosehubbard_peeled(p).str();
    j["printed_peeled"] = bosehubbard_printed_peeled(p).str();
    j["u_form"] = bosehubbard_u_form(p).str();
    json roots = json::array();
    for (const auto& x : bosehubbard_indicial_roots(p)) roots.push_back(to_string(x));
    j["indicial_roots"] = roots;
    return r;
  }
  PipelineReport rep;
  Basis V;
  MatrixOperator H;
  if (c.name == "polypot") {
    PolyPotParams p = c.polypot();
    rep = polypot_pipeline_check(p);
    V = polypot_space(p.m);
  } else {
    LameParams p = c.lame();
    rep = lame_pipeline_check(p);
    V = lame_space(p.m);
  }
  j["derived"] = operator_json(rep.derived);
  j["printed"] = operator_json(rep.printed);
  j["residual"] = operator_json(rep.residual);
  j["matches_printed"] = rep.matches;
  j["reading"] = rep.reading;
  j["space"] = basis_json(V);
  InvarianceReport inv = check_invariance(rep.derived, V);
  j["invariant"] = inv.invariant;
  r.status = rep.matches && inv.invariant ? kOk : kFinding;
  return r;
}

RecurrenceSystem case_recurrence(const CaseArgs& c, int parity) {
  if (c.name == "polypot") return polypot_recurrence(c.polypot());
  if (c.name == "lame") return lame_recurrence(c.lame());
  return bosehubbard_recurrence(c.bosehubbard(), parity);
}

Result cmd_recurrence(const CaseArgs& c, int parity, long from, long to) {
  c.params();  // validates
  if (to < from) throw ValidationError("--to must be >= --from");
  RecurrenceSystem sys = case_recurrence(c, parity);
  Result r;
  json& j = r.payload;
  j["case"] = c.name;
  j["params"] = c.params();
  if (c.name == "bosehubbard") j["parity"] = parity;
  j["dimension"] = sys.dimension();
  json off = json::array();
  for (const auto& o : sys.grading().offsets) off.push_back(to_string(o));
  j["grading"] = {{"offsets", off}, {"stride", to_string(sys.grading().stride)}};
  json levels = json::array();
  r.table.push_back({"level", "block", "row", "col", "value"});
  from = std::max(from, sys.first_level());
  for (long n = from; n <= to; ++n) {
    RecurrenceBlocks b = sys.blocks(n);
    json L = {{"n", n}, {"C", matrix_json(b.C)}, {"A", matrix_json(b.A)}, {"B", matrix_json(b.B)}};
    if (sys.scalar_leading(n)) {
      RecurrenceBlocks nf = sys.normal_form(n);
      L["normal_form"] = {{"A", matrix_json(nf.A)}, {"B", matrix_json(nf.B)}};
    }
    levels.push_back(L);
    for (auto [name, M] : {std::pair<std::string, const QuadMatrix*>{"C", &b.C}, {"A", &b.A}, {"B", &b.B}})
      for (int i = 0; i < M->rows(); ++i)
        for (int k = 0; k < M->cols(); ++k)
          r.table.push_back({std::to_string(n), name, std::to_string(i), std::to_string(k), (*M)(i, k).str()});
  }
  j["levels"] = levels;
  return r;
}

Result cmd_spectrum(const CaseArgs& c, const std::string& precision) {
  Rational prec = rat("precision", precision);
  if (sgn(prec) <= 0) throw ValidationError("--precision must be positive");
  Result r;
  json& j = r.payload;
  j["case"] = c.name;
  j["params"] = c.params();
  json chains = json::array();
  r.table.push_back({"chain", "root", "lo", "hi", "approx"});
  bool agree = true;
  auto add_chain = [&](const std::string& label, const EPoly& det, bool oracle) {
    json roots = roots_json(det, prec);
    chains.push_back({{"chain", label}, {"polynomial", poly_json(det, "E")}, {"roots", roots}, {"oracle_agrees", oracle}});
    for (size_t i = 0; i < roots.size(); ++i)
      r.table.push_back({label, std::to_string(i), roots[i]["lo"], roots[i]["hi"], roots[i]["approx"].dump()});
    agree = agree && oracle;
  };
  if (c.name == "bosehubbard") {
    BoseHubbardParams p = c.bosehubbard();
    j["shift"] = to_string(p.E0());
    for (int o : {0, 1}) {
      long N = bosehubbard_truncation_level(p, o);
      if (N < 1) continue;
      FactorizationReport f = factorization_check(bosehubbard_recurrence(p, o), N, 1);
      Basis V;
      for (long k = 0; k < N; ++k) V.push_back({0, GenExponent(o + 2 * k)});
      add_chain("parity " + std::to_string(o), f.divisor, proportional(f.divisor, charpoly(restrict(bosehubbard_u_form(p), V))));
    }
  } else {
    RecurrenceSystem sys = case_recurrence(c, 0);
    Basis V;
    MatrixOperator H;
    if (c.name == "polypot") {
      V = polypot_space(c.polypot().m);
      H = build_polypot_algebraic(c.polypot());
    } else {
      V = lame_space(c.lame().m);
      H = build_lame_algebraic(c.lame());
    }
    EPoly det = truncation_polynomial(sys, last_levels(sys, V)).determinant;
    add_chain("all", det, proportional(det, charpoly(restrict(H, V))));
  }
  j["chains"] = chains;
  r.status = agree ? kOk : kFinding;
  return r;
}

struct VerifyOutcome {
  json payload;
  std::vector<std::vector<std::string>> rows;
  bool matched = false;
};

VerifyOutcome verify_case(const CaseArgs& c, int grid, double tol) {
  if (grid < 200) throw ValidationError("--grid must be at least 200");
  CaseCheck chk;
  if (c.name == "polypot")
    chk = verify_polypot(c.polypot(), grid, tol);
  else if (c.name == "lame")
    chk = verify_lame(c.lame(), grid, tol);
  else
    chk = verify_bosehubbard(c.bosehubbard(), grid, tol);
  VerifyOutcome v;
  json params = c.params();
  const CompareReport& rep = chk.report;
  json numeric = json::array(), residuals = json::array();
  for (size_t i = 0; i < chk.algebraic.size(); ++i) {
    double num = rep.match[i] >= 0 ? chk.numeric.values[rep.match[i]] : std::nan("");
    numeric.push_back(rep.match[i] >= 0 ? json(num) : json(nullptr));
    residuals.push_back(rep.match[i] >= 0 ? json(rep.residuals[i]) : json(nullptr));
    std::vector<std::string> row{c.name};
    for (auto& [k, val] : params.items()) row.push_back(val.is_string() ? val.get<std::string>() : val.dump());
    std::ostringstream a, n, res;
    a.precision(15);
    n.precision(15);
    res.precision(6);
    a << chk.algebraic[i];
    if (rep.match[i] >= 0) {
      n << num;
      res << rep.residuals[i];
    }
    row.insert(row.end(), {std::to_string(i), a.str(), n.str(), res.str()});
    v.rows.push_back(row);
  }
  v.matched = rep.all_matched && chk.rayleigh_ok;
  v.payload = {{"case", c.name},
               {"params", params},
               {"shift", rep.shift},
               {"algebraic", chk.algebraic},
               {"numeric", numeric},
               {"residuals", residuals},
               {"tolerance", tol},
               {"all_matched", rep.all_matched},
               {"rayleigh", chk.rayleigh},
               {"rayleigh_residuals", chk.rayleigh_residuals},
               {"rayleigh_ok", chk.rayleigh_ok},
               {"grids", {{"coarse", chk.numeric.n_coarse}, {"fine", chk.numeric.n_fine}}}};
  return v;
}

std::vector<std::string> csv_header(const CaseArgs& c) {
  std::vector<std::string> h{"case"};
  json params = c.params();
  for (auto& [k, v] : params.items()) h.push_back(k);
  h.insert(h.end(), {"level", "algebraic", "numeric", "residual"});
  return h;
}

Result cmd_verify(const CaseArgs& c, int grid, double tol) {
  c.params();
  VerifyOutcome v = verify_case(c, grid, tol);
  Result r;
  r.payload = v.payload;
  r.table.push_back(csv_header(c));
  r.table.insert(r.table.end(), v.rows.begin(), v.rows.end());
  r.status = v.matched ? kOk : kFinding;
  return r;
}

int worker_count() {
  const char* env = std::getenv("QES_WORKERS");
  if (!env) return 1;
  char* end = nullptr;
  long w = std::strtol(env, &end, 10);
  if (*end != '\0' || w < 1 || w > 256) throw ValidationError("QES_WORKERS must be an integer in [1, 256]");
  return static_cast<int>(w);
}

// --vary name=v1,v2,... ; the cartesian product of all --vary options
Result cmd_sweep(const CaseArgs& base, const std::vector<std::string>& vary, int grid, double tol) {
  std::vector<CaseArgs> cases{base};
  for (const std::string& spec : vary) {
    auto eq = spec.find('=');
    if (eq == std::string::npos) throw ValidationError("--vary expects name=v1,v2,...");
    std::string key = spec.substr(0, eq);
    if (!base.values.count(key)) throw ValidationError("--vary: unknown parameter '" + key + "'");
    std::vector<std::string> vals;
    std::stringstream ss(spec.substr(eq + 1));
    for (std::string v; std::getline(ss, v, ',');) vals.push_back(v);
    if (vals.empty()) throw ValidationError("--vary: no values for '" + key + "'");
    std::vector<CaseArgs> next;
    for (const auto& c : cases)
      for (const auto& v : vals) {
        CaseArgs d = c;
        d.values[key] = v;
        next.push_back(d);
      }
    cases = std::move(next);
  }
  for (const auto& c : cases) c.params();  // every point is validated before any solve

  std::vector<VerifyOutcome> out(cases.size());
  std::vector<std::string> errors(cases.size());
  std::atomic<size_t> next{0};
  auto work = [&] {
    for (size_t i; (i = next++) < cases.size();) {
      try {
        out[i] = verify_case(cases[i], grid, tol);
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };
  int workers = std::min<int>(worker_count(), static_cast<int>(cases.size()));
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  Result r;
  json runs = json::array();
  r.table.push_back(csv_header(base));
  bool all = true;
  for (size_t i = 0; i < cases.size(); ++i) {
    if (!errors[i].empty()) throw ValidationError("sweep point " + std::to_string(i) + ": " + errors[i]);
    runs.push_back(out[i].payload);
    r.table.insert(r.table.end(), out[i].rows.begin(), out[i].rows.end());
    all = all && out[i].matched;
  }
  r.payload = {{"case", base.name}, {"points", cases.size()}, {"runs", runs}};
  r.status = all ? kOk : kFinding;
  return r;
}

// ------------------------------------------------------------ emission

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return q + "\"";
}

void flatten(const json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  if (j.is_object()) {
    for (auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_array()) {
    for (size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
    if (j.empty()) out.emplace_back(prefix, "[]");
  } else {
    out.emplace_back(prefix, j.is_string() ? j.get<std::string>() : j.dump());
  }
}

void emit(const Result& r, const std::string& format) {
  if (format == "json") {
    std::cout << r.payload.dump(2) << "\n";
    return;
  }
  std::vector<std::pair<std::string, std::string>> flat;
  flatten(r.payload, "", flat);
  if (format == "text") {
    for (auto& [k, v] : flat) std::cout << k << ": " << v << "\n";
    return;
  }
  std::vector<std::vector<std::string>> table = r.table;
  if (table.empty()) {
    table.push_back({"key", "value"});
    for (auto& [k, v] : flat) table.push_back({k, v});
  }
  for (const auto& row : table) {
    for (size_t i = 0; i < row.size(); ++i) std::cout << (i ? "," : "") << csv_field(row[i]);
    std::cout << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quasi-exactly solvable operators: exact construction, recurrences and numerical checks"};
  app.require_subcommand(1);
  app.fallthrough();  // --emit and --verbose may follow the subcommand
  std::string format = "json";
  app.add_option("--emit", format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));
  bool verbose = false;
  app.add_flag("-v,--verbose", verbose, "progress on stderr");

  auto* catalog = app.add_subcommand("catalog", "list families or serialize one operator");
  catalog->require_subcommand(1);
  catalog->fallthrough();
  auto* cat_list = catalog->add_subcommand("list", "family and relation names");
  auto* cat_show = catalog->add_subcommand("show", "build one operator");
  OpArgs show_args;
  cat_show->add_option("family", show_args.op, "family name or J+, J0, J-, j+, j0, j-")->required();
  show_args.add_to(cat_show, false);

  auto* inv = app.add_subcommand("invariance", "check that an operator preserves a space");
  OpArgs inv_args;
  std::string space = "declared";
  inv_args.add_to(inv, true);
  inv->add_option("--space", space, "declared | v1 | p<N>");

  auto* alg = app.add_subcommand("algebra", "verify a named relation");
  std::string relation, alg_a = "formal", alg_lambda = "-1";
  int alg_n = 0, alg_m = 0;
  bool tilde = false;
  alg->add_option("--relation", relation, "relation name or so3")->required();
  alg->add_option("--n", alg_n);
  alg->add_option("--m", alg_m);
  alg->add_option("--a", alg_a, "'formal' or a rational");
  alg->add_option("--lambda", alg_lambda, "so3 only");
  alg->add_flag("--tilde", tilde, "so3 only: conjugated family with spin n + 1/2");

  auto* ham = app.add_subcommand("hamiltonian", "algebraic form of a physical case");
  CaseArgs ham_args;
  ham_args.add_to(ham);

  auto* rec = app.add_subcommand("recurrence", "recurrence blocks of a case");
  CaseArgs rec_args;
  int parity = 0;
  long from = 0, to = 5;
  rec_args.add_to(rec);
  rec->add_option("--parity", parity, "bosehubbard chain parity")->check(CLI::Range(0, 1));
  rec->add_option("--from", from);
  rec->add_option("--to", to);

  auto* spec = app.add_subcommand("spectrum", "truncation polynomial and isolated roots");
  CaseArgs spec_args;
  std::string precision = "1/1000000000000";
  spec_args.add_to(spec);
  spec->add_option("--precision", precision, "isolating interval width (rational)");

  auto* ver = app.add_subcommand("verify", "algebraic levels against a finite-difference spectrum");
  CaseArgs ver_args;
  int grid = 1000;
  double tol = 1e-6;
  ver_args.add_to(ver);
  ver->add_option("--grid", grid, "grid points (>= 200)");
  ver->add_option("--tol", tol, "relative tolerance");

  auto* sweep = app.add_subcommand("sweep", "verify over a parameter grid (QES_WORKERS threads)");
  CaseArgs sweep_args;
  std::vector<std::string> vary;
  sweep_args.add_to(sweep);
  sweep->add_option("--vary", vary, "name=v1,v2,... (repeatable)")->required();
  sweep->add_option("--grid", grid, "grid points (>= 200)");
  sweep->add_option("--tol", tol, "relative tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    Result r;
    if (*cat_list)
      r = cmd_catalog_list();
    else if (*cat_show)
      r = cmd_catalog_show(show_args);
    else if (*inv)
      r = cmd_invariance(inv_args, space);
    else if (*alg)
      r = cmd_algebra(relation, alg_n, alg_m, alg_a, alg_lambda, tilde);
    else if (*ham)
      r = cmd_hamiltonian(ham_args);
    else if (*rec)
      r = cmd_recurrence(rec_args, parity, from, to);
    else if (*spec)
      r = cmd_spectrum(spec_args, precision);
    else if (*ver)
      r = cmd_verify(ver_args, grid, tol);
    else
      r = cmd_sweep(sweep_args, vary, grid, tol);
    emit(r, format);
    if (verbose) std::cerr << "status " << r.status << "\n";
    return r.status;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }
}
