#include "uniton/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

#include "uniton/errors.hpp"
#include "uniton/factorize.hpp"
#include "uniton/json_io.hpp"
#include "uniton/mesh.hpp"
#include "uniton/nullcurve.hpp"

namespace uniton {
namespace {

using json = nlohmann::json;

struct Options {
  std::string command;
  std::string type, in, out, format, at, lambda = "1,-1,i,-i", filtration = "alternating";
  std::string grid = "-1,1,-1,1";
  std::vector<std::string> params;
  std::optional<double> fd_step, tol;
  int res = 64;
};

std::vector<std::string> split(const std::string &text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(text);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  return out;
}

GR parse_constant(const std::string &text) {
  RF f = parse_rf(text);
  if (!f.is_constant()) throw SchemaError("expected a constant, got '" + text + "'");
  return f.num().coeff(0);
}

std::vector<GR> parse_lambdas(const std::string &text) {
  std::vector<GR> out;
  for (const auto &s : split(text, ',')) out.push_back(parse_constant(s));
  if (out.empty()) throw SchemaError("empty λ list");
  return out;
}

GR parse_point(std::string text) {
  if (text.empty()) throw SchemaError("--at is required");
  auto eq = text.find('=');
  if (eq != std::string::npos) {
    std::string lhs = text.substr(0, eq);
    lhs.erase(std::remove(lhs.begin(), lhs.end(), ' '), lhs.end());
    if (lhs != "z") throw SchemaError("--at expects z=EXPR");
    text = text.substr(eq + 1);
  }
  return parse_constant(text);
}

json rf_list(const RFVector &v) {
  json out = json::array();
  for (const RF &x : v) out.push_back(format_rf(x));
  return out;
}

json type_json(const std::vector<int> &t) { return json(t); }

// Type, free data and an optional literal matrix from --in, --type and --param.
struct Input {
  std::optional<std::vector<int>> type;
  std::map<std::string, std::string> raw;
  FreeData data;
  std::optional<LambdaMatrix> matrix;
};

json read_json_file(const std::string &path) {
  std::ifstream is(path);
  if (!is) throw IoError("cannot read '" + path + "'");
  try {
    return json::parse(is);
  } catch (const json::exception &e) {
    throw SchemaError("malformed JSON in '" + path + "': " + e.what());
  }
}

Input load_input(const Options &o) {
  Input in;
  if (!o.in.empty()) {
    json doc = read_json_file(o.in);
    if (!doc.is_object()) throw SchemaError("input document must be an object");
    for (const auto &[key, v] : doc.items())
      if (key != "type" && key != "params" && key != "matrix")
        throw SchemaError("unexpected key '" + key + "'");
    if (doc.contains("type")) {
      const json &t = doc["type"];
      if (!t.is_array()) throw SchemaError("type must be an array of integers");
      std::vector<int> ty;
      for (const json &x : t) {
        if (!x.is_number_integer()) throw SchemaError("type must be an array of integers");
        ty.push_back(x.get<int>());
      }
      in.type = ty;
    }
    if (doc.contains("params")) {
      if (!doc["params"].is_object()) throw SchemaError("params must be an object");
      for (const auto &[k, v] : doc["params"].items()) {
        if (!v.is_string()) throw SchemaError("parameter '" + k + "' must be a string");
        in.raw[k] = v.get<std::string>();
      }
    }
    if (doc.contains("matrix")) in.matrix = lmat_from_json(doc["matrix"]);
  }
  if (!o.type.empty()) in.type = parse_type_list(o.type);
  for (const auto &p : o.params) {
    auto eq = p.find('=');
    if (eq == std::string::npos || eq == 0) throw SchemaError("--param expects NAME=EXPR, got '" + p + "'");
    std::string name = p.substr(0, eq);
    if (in.raw.count(name) && o.in.empty()) throw SchemaError("parameter '" + name + "' given twice");
    in.raw[name] = p.substr(eq + 1);
  }
  for (const auto &[k, v] : in.raw) {
    try {
      in.data.params[k] = parse_rf(v);
    } catch (const SyntaxError &e) {
      std::string msg = e.what();
      msg.erase(msg.rfind(" at position "));
      throw SyntaxError("parameter '" + k + "': " + msg, e.position);
    }
  }
  return in;
}

std::vector<int> require_type(const Input &in) {
  if (!in.type) throw SchemaError("a type is required (--type or \"type\")");
  return *in.type;
}

SolutionCandidate candidate(const Input &in) {
  std::vector<int> t = require_type(in);
  if (in.matrix) {
    if (!in.raw.empty()) throw SchemaError("give either a matrix or parameters, not both");
    CanonicalElement xi = CanonicalElement::from_type(t);
    if (in.matrix->n() != xi.n()) throw SizeMismatch("matrix size does not match the type");
    return {*in.matrix, xi};
  }
  return build(t, in.data);
}

json schema_check(const std::vector<int> &t, const FreeData &data) {
  ParamSchema s = param_schema(t);
  std::set<std::string> allowed(s.required.begin(), s.required.end());
  allowed.insert(s.optional.begin(), s.optional.end());
  for (const auto &[name, v] : data.params)
    if (!allowed.count(name)) throw SchemaError("unexpected parameter '" + name + "'");
  for (const auto &name : s.required)
    if (!data.params.count(name)) throw SchemaError("missing parameter '" + name + "'");
  return {{"required", s.required}, {"optional", s.optional}};
}

// Shape, orthogonality and the extended-solution equation, with failures.
json verify_json(const SolutionCandidate &c, bool &pass) {
  ShapeReport sh = check_shape(c.A, c.xi);
  OrthoReport orth = check_complex_orthogonal(c.A);
  json j;
  json shape_issues = json::array();
  for (const auto &v : sh.violations) shape_issues.push_back({{"i", v.i}, {"j", v.j}, {"what", v.what}});
  j["shape"] = {{"pass", sh.pass}, {"violations", shape_issues}};
  json orth_fail = json::array();
  for (const auto &f : orth.failures)
    orth_fail.push_back({{"i", f.i}, {"j", f.j}, {"residual", f.residual.str()}});
  j["complex_orthogonal"] = {{"pass", orth.pass}, {"failures", orth_fail}};
  json eq;
  std::vector<EquationFailure> failures;
  if (sh.pass && orth.pass) {
    ExtSolReport rep = check_extended_solution(c);
    failures = rep.failures;
    eq = {{"pass", rep.pass}, {"column", rep.column_pass}, {"row", rep.row_pass}, {"mod", rep.mod_pass}};
  } else {
    // Outside the verifier's domain the three forms need not agree.
    bool col = equation_holds(c, SolverMode::Column, &failures);
    bool row = equation_holds(c, SolverMode::Row, &failures);
    bool mod = equation_holds(c, SolverMode::Mod, &failures);
    eq = {{"pass", col && row && mod}, {"column", col}, {"row", row}, {"mod", mod},
          {"precondition", false}};
  }
  json eq_fail = json::array();
  for (const auto &f : failures)
    eq_fail.push_back({{"mode", mode_name(f.mode)}, {"i", f.i}, {"k", f.k}, {"residual", f.residual.str()}});
  eq["failures"] = eq_fail;
  j["extended_solution"] = eq;
  pass = sh.pass && orth.pass && eq["pass"].get<bool>();
  j["pass"] = pass;
  return j;
}

json candidate_json(const SolutionCandidate &c) {
  return {{"type", type_json(c.xi.type())},
          {"n", c.xi.n()},
          {"r", c.xi.r()},
          {"matrix", lmat_to_json(c.A)},
          {"s1_invariant", is_s1_invariant(c.A)},
          {"symmetric", is_symmetric_type(c.A)}};
}

json subspace_json(const Subspace &s) {
  json out = json::array();
  for (const auto &v : s) {
    json col = json::array();
    for (const GR &x : v) col.push_back(x.str());
    out.push_back(col);
  }
  return out;
}

int cmd_validate(const Options &o, json &cert) {
  Input in = load_input(o);
  std::vector<int> t = require_type(in);
  CanonicalElement xi = CanonicalElement::from_type(t);
  cert["type"] = type_json(t);
  if (in.matrix) {
    if (!in.raw.empty()) throw SchemaError("give either a matrix or parameters, not both");
    if (in.matrix->n() != xi.n()) throw SizeMismatch("matrix size does not match the type");
    cert["input"] = "matrix";
  } else {
    cert["input"] = "params";
    cert["schema"] = schema_check(t, in.data);
    cert["params"] = in.raw;
  }
  cert["valid"] = true;
  cert["pass"] = true;
  return kExitPass;
}

int cmd_build(const Options &o, json &cert) {
  Input in = load_input(o);
  if (in.matrix) throw SchemaError("build takes parameters, not a matrix");
  SolutionCandidate c = build(require_type(in), in.data);
  bool pass = false;
  cert.update(candidate_json(c));
  cert["checks"] = verify_json(c, pass);
  cert["pass"] = pass;
  return pass ? kExitPass : kExitFail;
}

int cmd_verify(const Options &o, json &cert) {
  SolutionCandidate c = candidate(load_input(o));
  bool pass = false;
  cert.update(candidate_json(c));
  cert["checks"] = verify_json(c, pass);
  cert["pass"] = pass;
  return pass ? kExitPass : kExitFail;
}

int cmd_factorize(const Options &o, json &cert) {
  SolutionCandidate c = candidate(load_input(o));
  GR z0 = parse_point(o.at);
  std::vector<GR> lambdas = parse_lambdas(o.lambda);
  FiltrationMode mode = parse_filtration(o.filtration);
  cert["type"] = type_json(c.xi.type());
  cert["z0"] = z0.str();
  cert["filtration"] = filtration_name(mode);
  cert["n"] = c.xi.n();
  cert["r"] = c.xi.r();
  Factorization f = factorize(c, z0, mode);
  json dims = json::array(), alphas = json::array();
  for (const auto &a : f.seq.alphas) {
    dims.push_back(a.size());
    alphas.push_back(subspace_json(a));
  }
  cert["alpha_dims"] = dims;
  cert["alphas"] = alphas;
  bool pass = true;
  RealityReport rep = check_reality(f.seq, lambdas);
  json verdicts = json::array();
  for (const auto &v : rep.verdicts)
    verdicts.push_back({{"lambda", v.lambda.str()},
                        {"second_transpose", v.second_transpose},
                        {"conjugation", v.conjugation},
                        {"unitary", v.unitary}});
  cert["lambda_checks"] = verdicts;
  pass = pass && rep.pass;
  bool at_one = assemble_phi(f.seq, GR(1)).is_identity();
  cert["phi_at_1_identity"] = at_one;
  bool roundtrip = phi_generates(f.seq, f.model);
  cert["w_roundtrip"] = roundtrip;
  pass = pass && at_one && roundtrip;
  if (is_s1_invariant(c.A) && mode != FiltrationMode::Alternating) {
    std::vector<Subspace> expect = s1_alphas(c, z0);
    if (mode == FiltrationMode::Uhlenbeck) std::reverse(expect.begin(), expect.end());
    bool match = expect == f.seq.alphas;
    cert["s1_column_spans"] = match;
    pass = pass && match;
  }
  HarmonicMapValue hm = harmonic_map(c, f.seq);
  cert["harmonic_map"] = {{"target", target_name(hm.target)},
                          {"odd_prefactor", hm.odd_prefactor},
                          {"real", hm.phi.real_conj() == hm.phi},
                          {"orthogonal", (hm.phi.adjoint() * hm.phi).is_identity()}};
  if (o.fd_step) {
    std::vector<GR> pair;
    for (const GR &l : lambdas)
      if (!l.is_one() && pair.size() < 2) pair.push_back(l);
    if (pair.size() < 2) pair = {GR(-1), GR::i()};
    double tol = o.tol.value_or(1e-6);
    double res = fd_extended_solution_check(c, z0, *o.fd_step, pair[0], pair[1]);
    bool ok = res <= tol;
    cert["fd"] = {{"h", *o.fd_step}, {"lambda1", pair[0].str()}, {"lambda2", pair[1].str()},
                  {"residual", res}, {"tol", tol}, {"pass", ok}};
    pass = pass && ok;
  }
  cert["pass"] = pass;
  return pass ? kExitPass : kExitFail;
}

bool has_all(const Input &in, std::initializer_list<const char *> names) {
  for (const char *n : names)
    if (!in.raw.count(n)) return false;
  return in.raw.size() == names.size();
}

struct CurveInput {
  NullCurve curve;
  std::optional<WeierstrassData3> d3;
  std::optional<WeierstrassData4> d4;
  std::optional<SolutionCandidate> matrix;
};

CurveInput curve_input(const Input &in) {
  CurveInput ci;
  const auto &p = in.data.params;
  if (in.matrix) {
    ci.matrix = candidate(in);
    ci.curve = matrix_to_curve(*ci.matrix);
  } else if (has_all(in, {"g", "nu"})) {
    ci.d3 = WeierstrassData3{p.at("g"), p.at("nu")};
    ci.curve = weierstrass_c3(*ci.d3);
  } else if (has_all(in, {"g1", "h1", "h2"})) {
    ci.d4 = WeierstrassData4{p.at("g1"), p.at("h1"), p.at("h2")};
    ci.curve = weierstrass_c4(*ci.d4);
  } else if (has_all(in, {"chi1", "chi2", "chi3"})) {
    ci.curve = make_null_curve({p.at("chi1"), p.at("chi2"), p.at("chi3")});
  } else if (has_all(in, {"chi1", "chi2", "chi3", "chi4"})) {
    ci.curve = make_null_curve({p.at("chi1"), p.at("chi2"), p.at("chi3"), p.at("chi4")});
  } else {
    throw SchemaError("expected parameters g,nu or g1,h1,h2 or chi1..chi3 or chi1..chi4");
  }
  return ci;
}

int cmd_nullcurve(const Options &o, json &cert) {
  Input in = load_input(o);
  if (in.type && !in.matrix) throw SchemaError("nullcurve takes Weierstrass data or a curve, not --type");
  CurveInput ci = curve_input(in);
  const NullCurve &chi = ci.curve;
  bool pass = true;
  bool null = is_null(chi.components);
  cert["ambient"] = chi.n_ambient;
  cert["curve"] = rf_list(chi.components);
  cert["null"] = null;
  pass = pass && null;
  SolutionCandidate c = curve_to_matrix(chi);
  cert.update(candidate_json(c));
  bool vpass = false;
  cert["checks"] = verify_json(c, vpass);
  pass = pass && vpass;
  bool curve_back = matrix_to_curve(c).components == chi.components;
  json rt = {{"matrix_to_curve", curve_back}};
  pass = pass && curve_back;
  std::vector<int> t = c.xi.type();
  FreeData fd;
  if (chi.n_ambient == 3) {
    WeierstrassData3 d = matrix_to_data3(c);
    cert["data"] = {{"g", format_rf(d.g)}, {"nu", format_rf(d.nu)}};
    bool curve_rt = weierstrass_c3(d).components == chi.components;
    rt["data_to_curve"] = curve_rt;
    fd.params = {{"g", d.g}, {"nu1", d.nu}};
    pass = pass && curve_rt;
    if (ci.d3) {
      rt["data"] = d == *ci.d3;
      pass = pass && d == *ci.d3;
    }
    RFVector F = last_column_map(c);
    bool iso = isotropy_check(F, c.xi.n() - 2), full = is_full(F);
    bool rec = iso && full && calabi_reconstruct(F).A == c.A;
    cert["calabi"] = {{"isotropic", iso}, {"full", full}, {"reconstructs", rec}};
    pass = pass && rec;
  } else {
    WeierstrassData4 d = matrix_to_data4(c);
    cert["data"] = {{"g1", format_rf(d.g1)}, {"h1", format_rf(d.h1)}, {"h2", format_rf(d.h2)}};
    bool curve_rt = weierstrass_c4(d).components == chi.components;
    rt["data_to_curve"] = curve_rt;
    fd.params = {{"g1", d.g1}, {"h1", d.h1}, {"h2", d.h2}};
    pass = pass && curve_rt;
    if (ci.d4) {
      rt["data"] = d == *ci.d4;
      pass = pass && d == *ci.d4;
    }
  }
  bool builder = build(t, fd).A == c.A;
  rt["builder"] = builder;
  pass = pass && builder;
  if (ci.matrix) {
    rt["curve_to_matrix"] = c.A == ci.matrix->A;
    pass = pass && c.A == ci.matrix->A;
  }
  cert["roundtrip"] = rt;
  cert["pass"] = pass;
  return pass ? kExitPass : kExitFail;
}

MeshGrid parse_grid(const Options &o) {
  auto parts = split(o.grid, ',');
  if (parts.size() != 4) throw SchemaError("--grid expects x0,x1,y0,y1");
  MeshGrid g;
  double v[4];
  for (int k = 0; k < 4; ++k) {
    try {
      std::size_t used = 0;
      v[k] = std::stod(parts[k], &used);
      if (used != parts[k].size()) throw std::invalid_argument("trailing");
    } catch (const std::exception &) {
      throw SchemaError("bad grid bound '" + parts[k] + "'");
    }
  }
  g.x0 = v[0];
  g.x1 = v[1];
  g.y0 = v[2];
  g.y1 = v[3];
  g.res = o.res;
  return g;
}

void write_file(const std::string &path, const std::string &body) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoError("cannot write '" + path + "'");
  os << body;
  if (!os) throw IoError("cannot write '" + path + "'");
}

int cmd_mesh(const Options &o, json &cert) {
  Input in = load_input(o);
  if (in.type && !in.matrix) throw SchemaError("mesh takes Weierstrass data or a curve, not --type");
  NullCurve chi = curve_input(in).curve;
  std::string format = o.format.empty() ? "obj" : o.format;
  if (format != "obj" && format != "csv" && format != "json")
    throw SchemaError("mesh format must be obj, csv or json");
  Mesh m = sample_mesh(chi, parse_grid(o));
  double tol = o.tol.value_or(1e-4);
  cert["ambient"] = chi.n_ambient;
  cert["curve"] = rf_list(chi.components);
  cert["stats"] = mesh_stats_json(m);
  const MeshStats &s = m.stats;
  bool pass = s.conformality_max <= tol && s.orthogonality_max <= tol && s.laplacian_max <= tol;
  cert["tol"] = tol;
  if (!o.out.empty()) {
    std::ostringstream body;
    if (format == "obj") write_obj(m, body);
    if (format == "csv") write_csv(m, body);
    if (format == "json") body << mesh_json(m).dump(2) << '\n';
    write_file(o.out, body.str());
    json files = json::array({o.out});
    if (format == "obj" && m.dim == 4) {
      std::string csv = o.out;
      auto dot = csv.rfind('.');
      auto slash = csv.find_last_of('/');
      if (dot != std::string::npos && (slash == std::string::npos || dot > slash)) csv.erase(dot);
      csv += ".csv";
      std::ostringstream cb;
      write_csv(m, cb);
      write_file(csv, cb.str());
      files.push_back(csv);
    }
    cert["files"] = files;
  }
  cert["pass"] = pass;
  return pass ? kExitPass : kExitFail;
}

void add_common(CLI::App *sub, Options &o, bool fd, bool mesh) {
  sub->add_option("--type", o.type, "type list, e.g. 1,1,1");
  sub->add_option("--param", o.params, "NAME=EXPR (repeatable)");
  sub->add_option("--in", o.in, "input JSON document");
  sub->add_option("--out", o.out, "output path");
  sub->add_option("--format", o.format, "json|obj|csv");
  sub->add_option("--tol", o.tol, "tolerance");
  if (fd) {
    sub->add_option("--at", o.at, "z=EXPR");
    sub->add_option("--lambda", o.lambda, "comma-separated λ values");
    sub->add_option("--fd-step", o.fd_step, "finite-difference step");
    sub->add_option("--filtration", o.filtration, "segal|uhlenbeck|alternating");
  }
  if (mesh) {
    sub->add_option("--grid", o.grid, "x0,x1,y0,y1");
    sub->add_option("--res", o.res, "samples per side");
  }
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  Options o;
  CLI::App app{"Extended solutions, uniton factorizations and null curves"};
  app.require_subcommand(1);
  struct Cmd {
    const char *name;
    const char *help;
    bool fd, mesh;
  };
  const Cmd cmds[] = {{"validate", "check an input document against its schema", false, false},
                      {"build", "construct a solution from free data and verify it", false, false},
                      {"verify", "verify a solution candidate", false, false},
                      {"factorize", "uniton factorization at a point", true, false},
                      {"nullcurve", "null curve, matrix and Weierstrass data", false, false},
                      {"mesh", "sample the minimal surface Re χ", false, true}};
  for (const Cmd &c : cmds) {
    CLI::App *sub = app.add_subcommand(c.name, c.help);
    add_common(sub, o, c.fd, c.mesh);
    sub->callback([&o, name = c.name] { o.command = name; });
  }
  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError &e) {
    json cert = {{"command", o.command}, {"error", {{"kind", "UsageError"}, {"message", e.what()}}},
                 {"pass", false}};
    out << cert.dump(2) << '\n';
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  if (o.command.empty()) {
    for (CLI::App *sub : app.get_subcommands()) o.command = sub->get_name();
  }
  json cert = {{"command", o.command}};
  int code = kExitPass;
  try {
    if (o.command == "validate") code = cmd_validate(o, cert);
    if (o.command == "build") code = cmd_build(o, cert);
    if (o.command == "verify") code = cmd_verify(o, cert);
    if (o.command == "factorize") code = cmd_factorize(o, cert);
    if (o.command == "nullcurve") code = cmd_nullcurve(o, cert);
    if (o.command == "mesh") code = cmd_mesh(o, cert);
    if (o.command != "mesh" && !o.format.empty() && o.format != "json")
      throw SchemaError(o.command + " writes json only");
  } catch (const Error &e) {
    cert = {{"command", o.command}, {"error", {{"kind", e.kind()}, {"message", e.what()}}},
            {"pass", false}};
    err << "error: " << e.kind() << ": " << e.what() << '\n';
    code = kExitInput;
  } catch (const InternalAssertion &e) {
    cert = {{"command", o.command}, {"error", {{"kind", e.kind()}, {"message", e.what()}}},
            {"pass", false}};
    err << "internal error: " << e.kind() << ": " << e.what() << '\n';
    code = kExitInternal;
  }
  cert["exit_code"] = code;
  std::string body = cert.dump(2) + "\n";
  if (o.command != "mesh" && !o.out.empty()) {
    try {
      write_file(o.out, body);
    } catch (const IoError &e) {
      err << "error: " << e.what() << '\n';
      out << body;
      return kExitInput;
    }
  } else {
    out << body;
  }
  return code;
}

}  // namespace uniton
