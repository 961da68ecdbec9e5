// Command-line front end: computes spectral functions on matrix/scalar JSON
// inputs, runs the verification suites, and generates reproducible test
// matrices with conjugation sidecars.
//
// Exit codes: 0 ok, 1 I/O or parse, 2 spectral class refuted, 3 budget above
// tolerance, 4 verification suite failure.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "ringcalc/fixtures.hpp"
#include "ringcalc/halffree.hpp"
#include "ringcalc/identities.hpp"
#include "ringcalc/json_io.hpp"
#include "ringcalc/spectral.hpp"
#include "ringcalc/verify_suites.hpp"

namespace {

using namespace ringcalc;

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitClass = 2;
constexpr int kExitBudget = 3;
constexpr int kExitSuite = 4;

class Report {
public:
  explicit Report(const std::string& path) : to_file_(!path.empty()) {
    if (to_file_) {
      file_.open(path);
      if (!file_) throw std::runtime_error("cannot open report path: " + path);
    }
  }
  void line(const json& j) {
    if (to_file_)
      file_ << j.dump() << "\n";
    else
      std::cout << j.dump() << "\n";
  }

private:
  bool to_file_;
  std::ofstream file_;
};

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open input: " + path);
  json j;
  in >> j;
  return j;
}

using CM = ComplexMatrixRing<double>;
using MatC = Matrix<Cplx<double>>;

json result_json(const CM& ring, const SpectralResult<CM>& res) {
  json r;
  r["value"] = complex_matrix_to_json(res.value);
  r["residuals"] = res.residuals;
  r["error_budget"] = res.error_budget;
  r["backend"] = backend_name(res.backend);
  r["nodes"] = res.nodes;
  r["class_verified"] = res.class_verified;
  (void)ring;
  return r;
}

json result_json_rational(const SpectralResult<RationalRing>& res) {
  json r;
  Matrix<Rational> m(1);
  m(0, 0) = res.value;
  r["value"] = rational_matrix_to_json(m);
  r["residuals"] = res.residuals;
  r["error_budget"] = res.error_budget;
  r["backend"] = backend_name(res.backend);
  r["nodes"] = res.nodes;
  r["class_verified"] = res.class_verified;
  return r;
}

OracleData<CM> load_sidecar(const std::string& path) {
  json j = load_json(path);
  if (j.value("kind", "") != "sidecar") throw std::runtime_error("not a sidecar file");
  OracleData<CM> od;
  od.v = complex_matrix_from_json(j.at("v"));
  od.v_inv = complex_matrix_from_json(j.at("v_inv"));
  for (const auto& e : j.at("eigs")) od.eigs.push_back({e.at(0).get<double>(), e.at(1).get<double>()});
  return od;
}

struct ComputeArgs {
  std::string fn;
  std::string input, input2, sidecar;
  std::string backend = "quadrature";
  int nodes = 64;
  int order = 32;
  double tol = 1e-8;
  bool verify = false;
  std::string report;
};

SpectralResult<CM> run_complex_fn(const CM& ring, const std::string& fn, const MatC& a,
                                  const MatC* b2, const Backend<CM>& backend) {
  if (fn == "sgn") return sgn(ring, a, backend);
  if (fn == "sqrt") return sqrt_spec(ring, a, backend);
  if (fn == "idem") return idem_spec(ring, a, backend);
  if (fn == "fsqrt") return fsqrt_spec(ring, a, backend);
  if (fn == "absr") return derived_decomposition(ring, DerivedKind::AbsR, a, backend);
  if (fn == "absi") return derived_decomposition(ring, DerivedKind::AbsI, a, backend);
  if (fn == "pol") return derived_decomposition(ring, DerivedKind::Pol, a, backend);
  if (fn == "absF") return derived_decomposition(ring, DerivedKind::AbsF, a, backend);
  if (fn == "pertr") return derived_decomposition(ring, DerivedKind::PertR, a, backend);
  if (fn == "geomean") {
    if (!b2) throw std::runtime_error("geomean needs --input2");
    return geometric_mean(ring, a, *b2, backend);
  }
  if (fn == "sqrt-segment") return sqrt_real_segment(ring, a, backend.nodes);
  throw std::runtime_error("unknown --fn " + fn);
}

SpectralFn parse_fn_kind(const std::string& fn) {
  if (fn == "sgn" || fn == "absr" || fn == "pertr") return SpectralFn::Sgn;
  if (fn == "sqrt" || fn == "sqrt-segment" || fn == "geomean") return SpectralFn::Sqrt;
  if (fn == "idem") return SpectralFn::Idem;
  if (fn == "fsqrt") return SpectralFn::Fsqrt;
  if (fn == "absF") return SpectralFn::Idem;
  if (fn == "absi" || fn == "pol") return SpectralFn::Sgn;
  if (fn == "split") return SpectralFn::Sgn;
  throw std::runtime_error("unknown --fn " + fn);
}

int cmd_compute(const ComputeArgs& args) {
  if (args.tol <= 0) throw std::runtime_error("--tol must be positive");
  Report rep(args.report);
  json input = load_json(args.input);
  const std::string kind = input.value("kind", "");

  if (kind == "rational_matrix") {
    auto m = rational_matrix_from_json(input);
    if (m.dim() != 1 || args.backend != "series")
      throw std::runtime_error("rational inputs: scalar (n=1) with --backend series");
    RationalRing ring;
    auto backend = Backend<RationalRing>::series(args.order);
    SpectralResult<RationalRing> res;
    const auto& x = m(0, 0);
    if (args.fn == "sgn") res = sgn(ring, x, backend);
    else if (args.fn == "sqrt") res = sqrt_spec(ring, x, backend);
    else if (args.fn == "idem") res = idem_spec(ring, x, backend);
    else if (args.fn == "fsqrt") res = fsqrt_spec(ring, x, backend);
    else if (args.fn == "absr") res = derived_decomposition(ring, DerivedKind::AbsR, x, backend);
    else if (args.fn == "pertr") res = derived_decomposition(ring, DerivedKind::PertR, x, backend);
    else throw std::runtime_error("function not available on exact rational scalars: " + args.fn);
    rep.line(result_json_rational(res));
    return kExitOk;
  }

  auto a = complex_matrix_from_json(input);
  CM ring(a.dim());
  Backend<CM> backend;
  if (args.backend == "quadrature") {
    backend = Backend<CM>::quadrature(args.nodes);
    backend.order = args.order;
  } else if (args.backend == "oracle") {
    if (args.sidecar.empty()) throw std::runtime_error("oracle backend needs --sidecar");
    backend = Backend<CM>::with_oracle(load_sidecar(args.sidecar));
  } else if (args.backend == "series") {
    backend = Backend<CM>::series(args.order);
  } else {
    throw std::runtime_error("unknown --backend " + args.backend);
  }

  std::optional<MatC> b2;
  if (!args.input2.empty()) b2 = complex_matrix_from_json(load_json(args.input2));

  if (args.fn == "split") {
    auto sp = spectral_split(ring, a, backend);
    json r;
    r["proj_minus"] = complex_matrix_to_json(sp.proj_minus);
    r["proj_plus"] = complex_matrix_to_json(sp.proj_plus);
    r["q_minus"] = complex_matrix_to_json(sp.q_minus);
    r["q_plus"] = complex_matrix_to_json(sp.q_plus);
    r["residuals"] = sp.residuals;
    r["backend"] = backend_name(backend.kind);
    rep.line(r);
    return kExitOk;
  }

  auto res = run_complex_fn(ring, args.fn, a, b2 ? &*b2 : nullptr, backend);
  rep.line(result_json(ring, res));

  if (args.verify && backend.kind == BackendKind::Quadrature) {
    // convergence table at N/2, N, 2N against the 2N rule
    auto bh = Backend<CM>::quadrature(backend.nodes / 2);
    auto bd = Backend<CM>::quadrature(backend.nodes * 2);
    auto vh = run_complex_fn(ring, args.fn, a, b2 ? &*b2 : nullptr, bh).value;
    auto vd = run_complex_fn(ring, args.fn, a, b2 ? &*b2 : nullptr, bd).value;
    json conv;
    conv["convergence"] = {{"nodes", {backend.nodes / 2, backend.nodes, backend.nodes * 2}},
                           {"diff_half", (vh - vd).row_sum_norm()},
                           {"diff_full", (res.value - vd).row_sum_norm()}};
    rep.line(conv);
  }
  if (res.error_budget > args.tol) return kExitBudget;
  return kExitOk;
}

int cmd_verify(const std::string& suite, double tol, const std::string& report_path) {
  Report rep(report_path);
  auto checks = run_suite(suite, tol);
  int fails = 0;
  for (const auto& c : checks) {
    rep.line(json{{"check", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    fails += c.pass ? 0 : 1;
  }
  rep.line(json{{"suite", suite}, {"total", checks.size()}, {"failures", fails}});
  return fails == 0 ? kExitOk : kExitSuite;
}

int cmd_verify_identities(const std::string& set, const std::string& report_path) {
  Report rep(report_path);
  int fails = 0;
  for (const auto& r : verify_identities(set)) {
    rep.line(json{{"id", r.id},
                  {"set", r.set_tag},
                  {"verified", r.verified},
                  {"needs_half", r.needs_half},
                  {"residual", r.residual}});
    fails += r.verified ? 0 : 1;
  }
  rep.line(json{{"set", set}, {"failures", fails}});
  return fails == 0 ? kExitOk : kExitSuite;
}

struct GenerateArgs {
  int n = 2;
  std::string eigs;
  std::uint64_t seed = 1;
  std::string fn = "sgn";
  double margin = 0.1;
  std::string out;
};

int cmd_generate(const GenerateArgs& args) {
  json eig_json = json::parse(args.eigs);
  std::vector<Cplx<double>> eigs;
  for (const auto& e : eig_json) eigs.push_back({e.at(0).get<double>(), e.at(1).get<double>()});
  if ((int)eigs.size() != args.n) throw std::runtime_error("need n eigenvalues");
  auto fn_kind = parse_fn_kind(args.fn);
  for (const auto& e : eigs) {
    if (scalar_class_margin(fn_kind, e) < args.margin) {
      std::cerr << "eigenvalue margin violation against the excluded set of " << args.fn << "\n";
      return kExitClass;
    }
  }
  auto fx = make_fixture<double>(args.n, eigs, args.seed);
  std::ofstream main_out(args.out);
  if (!main_out) throw std::runtime_error("cannot open output: " + args.out);
  main_out << complex_matrix_to_json(fx.a).dump() << "\n";
  json side;
  side["kind"] = "sidecar";
  side["v"] = complex_matrix_to_json(fx.v);
  side["v_inv"] = complex_matrix_to_json(fx.v_inv);
  json ej = json::array();
  for (const auto& e : fx.eigs) ej.push_back({e.re, e.im});
  side["eigs"] = ej;
  side["seed"] = args.seed;
  std::ofstream side_out(args.out + ".sidecar.json");
  if (!side_out) throw std::runtime_error("cannot open sidecar output");
  side_out << side.dump() << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"generic-ring spectral functional calculus"};
  app.require_subcommand(1);

  ComputeArgs cargs;
  auto* compute = app.add_subcommand("compute", "evaluate a spectral function on a JSON input");
  compute->add_option("--fn", cargs.fn,
                      "sgn|sqrt|idem|fsqrt|absr|absi|pol|absF|pertr|split|geomean|sqrt-segment")
      ->required();
  compute->add_option("--input", cargs.input, "matrix/scalar JSON path")->required();
  compute->add_option("--input2", cargs.input2, "second input (geomean)");
  compute->add_option("--backend", cargs.backend, "quadrature|series|oracle");
  compute->add_option("--nodes", cargs.nodes, "quadrature nodes (power of two)");
  compute->add_option("--order", cargs.order, "series truncation order");
  compute->add_option("--tol", cargs.tol, "budget tolerance");
  compute->add_flag("--verify", cargs.verify, "emit a convergence table at N/2, N, 2N");
  compute->add_option("--report", cargs.report, "report path (stdout when absent)");
  compute->add_option("--sidecar", cargs.sidecar, "conjugation sidecar (oracle backend)");

  std::string suite = "all";
  double vtol = 1e-8;
  std::string vreport;
  auto* verify = app.add_subcommand("verify", "run a module verification suite");
  verify->add_option("--suite", suite, "identities|kernels|halffree|spectral|all");
  verify->add_option("--tol", vtol, "tolerance for the spectral suite");
  verify->add_option("--report", vreport, "report path (stdout when absent)");

  std::string idset = "all";
  std::string idreport;
  auto* vid = app.add_subcommand("verify-identities", "check the algebraic identity catalog");
  vid->add_option("--set", idset, "sign|sqrt|idem|fsqrt|homotopy|all");
  vid->add_option("--report", idreport, "report path (stdout when absent)");

  GenerateArgs gargs;
  auto* gen = app.add_subcommand("generate", "emit a conjugated test matrix plus sidecar");
  gen->add_option("--n", gargs.n, "dimension")->required();
  gen->add_option("--eigs", gargs.eigs, "JSON eigenvalue list [[re,im],...]")->required();
  gen->add_option("--seed", gargs.seed, "deterministic seed");
  gen->add_option("--fn", gargs.fn, "function whose excluded set the margin is against");
  gen->add_option("--margin", gargs.margin, "required spectrum margin");
  gen->add_option("--out", gargs.out, "output path")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (compute->parsed()) return cmd_compute(cargs);
    if (verify->parsed()) return cmd_verify(suite, vtol, vreport);
    if (vid->parsed()) return cmd_verify_identities(idset, idreport);
    if (gen->parsed()) return cmd_generate(gargs);
  } catch (const spectral_class_error& e) {
    std::cerr << "spectral class refuted: " << e.what() << "\n";
    return kExitClass;
  } catch (const decay_error& e) {
    std::cerr << "decay certificate failed: " << e.what() << "\n";
    return kExitClass;
  } catch (const json::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitIo;
}
