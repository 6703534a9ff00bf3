#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "sparsefac/config.hpp"
#include "sparsefac/divisibility.hpp"
#include "sparsefac/errors.hpp"
#include "sparsefac/factor_engine.hpp"
#include "sparsefac/irredproj.hpp"
#include "sparsefac/isolation.hpp"
#include "sparsefac/ntt.hpp"
#include "sparsefac/pit.hpp"
#include "sparsefac/poly_text.hpp"

using namespace sparsefac;
using json = nlohmann::ordered_json;

namespace {

struct Globals {
  std::string format = "json";
  unsigned jobs = 1;
  bool expand = false;
  bool verbose = false;
  std::string config_path;
  Config cfg;
};

std::string read_input(const std::string& arg) {
  if (arg != "-") return arg;
  return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
}

struct Inputs {
  std::vector<SparsePoly> polys;
  VarNames names;
};

Inputs parse_inputs(const std::vector<std::string>& raw, const Globals& g) {
  std::vector<std::string> texts;
  std::string joined;
  for (const auto& r : raw) {
    texts.push_back(read_input(r));
    joined += texts.back() + " + ";
  }
  Inputs in;
  in.names = infer_layout(joined);
  for (const auto& t : texts)
    in.polys.push_back(g.expand ? parse_expression(t, in.names) : parse_poly(t, in.names));
  return in;
}

void emit_factors(const FactorList& fl, const VarNames& names, const Globals& g,
                  const std::vector<std::string>& diagnostics) {
  if (g.format == "text") std::cout << fl.to_text(names);
  else std::cout << fl.to_json(names) << "\n";
  if (g.verbose)
    for (const auto& d : diagnostics) std::cerr << "note: " << d << "\n";
}

void emit(const json& j, const std::string& text, const Globals& g) {
  if (g.format == "text") std::cout << text << "\n";
  else std::cout << j.dump() << "\n";
}

std::unique_ptr<IrredProjOracle> make_oracle(const std::string& spec, std::size_t n, unsigned d, const Globals& g,
                                             bool allow_random, bool allow_sampling) {
  auto colon = spec.find(':');
  std::string kind = spec.substr(0, colon);
  std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (kind == "constant-degree") {
    if (arg.empty()) throw CLI::ValidationError("--oracle", "constant-degree needs a degree, e.g. constant-degree:2");
    return constant_degree_oracle(static_cast<unsigned>(std::stoul(arg)), n, d, g.cfg);
  }
  if (kind == "su") {
    unsigned su_d = arg.empty() ? 2 : static_cast<unsigned>(std::stoul(arg));
    return su_oracle(n, su_d, g.cfg, allow_sampling);
  }
  if (kind == "unsound-random") {
    if (!allow_random) throw CLI::ValidationError("--oracle", "the random oracle requires --unsound-random-oracle");
    return std::make_unique<RandomOracle>(n, arg.empty() ? 64 : std::stoull(arg), 1);
  }
  throw CLI::ValidationError("--oracle", "unknown oracle '" + spec + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deterministic factor extraction for sparse multivariate polynomials over the rationals"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--jobs", g.jobs, "Worker threads for parallel loops")->check(CLI::PositiveNumber);
  app.add_flag("--expand", g.expand, "Accept products/powers of parenthesised expressions and expand them");
  app.add_option("--config", g.config_path, "key = value configuration file")->check(CLI::ExistingFile);
  app.add_flag("-v,--verbose", g.verbose, "Print diagnostics to stderr");

  std::string f_text = "-", g_text;
  unsigned delta = 1;
  std::size_t sparsity = 0;
  std::string oracle_spec;
  bool witness = false, unsound_random = false, strict = false, psi = false;
  unsigned su_degree = 2;
  std::size_t iso_n = 1;

  auto* cd = app.add_subcommand("factor-cd", "All irreducible factors of degree <= delta");
  cd->add_option("--delta", delta)->required()->check(CLI::PositiveNumber);
  cd->add_option("poly", f_text, "Polynomial text or '-' for stdin");

  auto* cdp = app.add_subcommand("factor-cd-promise", "Factor under the promise that all factors have degree <= delta");
  cdp->add_option("--delta", delta)->required()->check(CLI::PositiveNumber);
  cdp->add_option("poly", f_text);

  auto* fs = app.add_subcommand("factor-sparse", "Sparse irreducible factors via an irreducibility-projection oracle");
  fs->add_option("--sparsity", sparsity)->required()->check(CLI::PositiveNumber);
  fs->add_option("--oracle", oracle_spec, "constant-degree:<delta> | su[:<d>] | unsound-random[:<count>]")->required();
  fs->add_flag("--unsound-random-oracle", unsound_random, "Permit the random (contract-free) oracle");
  fs->add_flag("--strict", strict, "Refuse sampled oracle grids instead of degrading");
  fs->add_option("poly", f_text);

  auto* su = app.add_subcommand("factor-su", "Sum-of-univariates factors");
  su->add_option("--degree", su_degree, "Degree bound of the sought factors")->check(CLI::PositiveNumber);
  su->add_option("--sparsity", sparsity, "Sparsity bound (default n*d+1)");
  su->add_flag("--strict", strict, "Refuse sampled oracle grids instead of degrading");
  su->add_option("poly", f_text);

  auto* dv = app.add_subcommand("divides", "Decide whether g divides f");
  dv->add_flag("--witness", witness, "Decide through the polynomial-identity witness");
  dv->add_option("f", f_text)->required();
  dv->add_option("g", g_text)->required();

  auto* mu = app.add_subcommand("multiplicity", "Multiplicity of an irreducible g in f");
  mu->add_option("f", f_text)->required();
  mu->add_option("g", g_text)->required();

  auto* pt = app.add_subcommand("pit", "Identity test");
  pt->add_option("poly", f_text);

  auto* ir = app.add_subcommand("irreducible", "Irreducibility test through an oracle");
  ir->add_option("--oracle", oracle_spec)->required();
  ir->add_flag("--unsound-random-oracle", unsound_random);
  ir->add_option("poly", f_text);

  auto* is = app.add_subcommand("isolate", "Print an isolation scheme");
  is->add_option("--n", iso_n)->required()->check(CLI::PositiveNumber);
  is->add_option("--delta", delta)->required()->check(CLI::PositiveNumber);
  is->add_flag("--psi", psi, "Build the two-weight scheme used by the Psi map");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (!g.config_path.empty()) g.cfg = load_config(g.config_path);
    if (app.get_option("--jobs")->count() > 0) g.cfg.jobs = g.jobs;
    g.cfg.verbose = g.cfg.verbose || g.verbose;
    kernels::set_threads(static_cast<int>(g.cfg.jobs));

    if (*cd || *cdp) {
      Inputs in = parse_inputs({f_text}, g);
      std::vector<std::string> diag;
      FactorList fl = *cd ? constant_degree_factors(in.polys[0], delta, g.cfg, DivBackend::Exact, &diag)
                          : factor_constant_degree_promise(in.polys[0], delta, g.cfg);
      emit_factors(fl, in.names, g, diag);
    } else if (*fs || *su) {
      Inputs in = parse_inputs({f_text}, g);
      const SparsePoly& f = in.polys[0];
      std::size_t n = f.nvars();
      unsigned d = f.total_degree();
      std::unique_ptr<IrredProjOracle> oracle;
      std::size_t s = sparsity;
      if (*su) {
        oracle = su_oracle(n, su_degree, g.cfg, !strict);
        if (s == 0) s = n * su_degree + 1;
      } else {
        oracle = make_oracle(oracle_spec, n, d, g, unsound_random, !strict);
      }
      if (!oracle->complete())
        std::cerr << "warning: oracle '" << oracle->name() << "' runs on a sample of its hitting set\n";
      SparseFactorReport rep = sparse_factors(f, s, *oracle, g.cfg);
      emit_factors(rep.factors, in.names, g, rep.diagnostics);
    } else if (*dv) {
      Inputs in = parse_inputs({f_text, g_text}, g);
      json j;
      std::string text;
      if (witness) {
        WitnessIdentity w = divisibility_witness(in.polys[0], in.polys[1]);
        std::vector<std::string> alpha;
        for (const auto& a : w.alpha) alpha.push_back(to_string(a));
        j["divides"] = w.holds;
        j["alpha"] = alpha;
        j["scalings"] = w.S.size();
        j["h_tilde"] = render(w.h_tilde, in.names);
        if (w.quotient) j["quotient"] = render(*w.quotient, in.names);
        text = w.holds ? "divides" : "does not divide";
      } else {
        DivisionResult r = divides_exact(in.polys[0], in.polys[1]);
        j["divides"] = r.divides;
        if (r.quotient) j["quotient"] = render(*r.quotient, in.names);
        text = r.divides ? "divides" : "does not divide";
      }
      emit(j, text, g);
    } else if (*mu) {
      Inputs in = parse_inputs({f_text, g_text}, g);
      unsigned e = factor_multiplicity(in.polys[0], in.polys[1]);
      emit(json{{"multiplicity", e}}, std::to_string(e), g);
    } else if (*pt) {
      Inputs in = parse_inputs({f_text}, g);
      bool zero = sparse_pit(in.polys[0]);
      emit(json{{"result", zero ? "zero" : "nonzero"}}, zero ? "zero" : "nonzero", g);
    } else if (*ir) {
      Inputs in = parse_inputs({f_text}, g);
      const SparsePoly& f = in.polys[0];
      auto oracle = make_oracle(oracle_spec, f.nvars(), f.total_degree(), g, unsound_random, true);
      bool irr = sparse_irreducible_test(f, *oracle, g.cfg);
      emit(json{{"irreducible", irr}}, irr ? "irreducible" : "reducible", g);
    } else if (*is) {
      IsolationScheme s = psi ? psi_scheme(iso_n, delta, g.cfg) : find_isolating_prime(iso_n, delta);
      std::cout << s.to_json() << "\n";
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const PromiseViolation& e) {
    std::cerr << "promise violation: " << e.what() << "\n";
    return 2;
  } catch (const CapError& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
