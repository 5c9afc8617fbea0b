// lspaths command-line interface: generate level-zero LS-path crystals and
// machine-check their structure (components, simplicity, tensor splitting,
// affinization) for the tabulated affine types.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "lspaths/json_io.hpp"

namespace {

using namespace lspaths;

DominantShape parse_shape(const AffineCartanDatum& d, const std::string& csv) {
  DominantShape s;
  std::size_t pos = 0;
  while (pos <= csv.size()) {
    std::size_t comma = csv.find(',', pos);
    std::string item = csv.substr(pos, comma == std::string::npos ? comma : comma - pos);
    try {
      std::size_t used = 0;
      long long v = std::stoll(item, &used);
      if (used != item.size() || v < 0) throw std::invalid_argument(item);
      s.m.push_back(v);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad shape entry '" + item + "' in '" + csv + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (static_cast<int>(s.m.size()) != d.l)
    throw std::invalid_argument("shape '" + csv + "' must list " + std::to_string(d.l) +
                                " multiplicities for " + d.type.label());
  return s;
}

int thread_request(int flag_value) {
  int threads = flag_value >= 1 ? flag_value : 1;
  if (const char* env = std::getenv("LS_CRYSTAL_THREADS")) {
    int cap = std::atoi(env);
    if (cap >= 1 && threads > cap) threads = cap;
  }
  return threads;
}

void emit(const json& payload, const std::string& out_path) {
  std::string text = payload.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open output file '" + out_path + "'");
    f << text;
  }
}

void emit_text(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open output file '" + out_path + "'");
    f << text;
  }
}

struct Options {
  std::string type = "A1~1";
  std::string shape;
  std::string format = "json";
  std::string out;
  std::string nbound;
  long long depth = 4;
  long long nmax = 6;
  long long cap = 1000000;
  int threads = 1;
  unsigned seed = 1;
  std::string mode = "cl";
};

int run_datum(const Options& opt) {
  auto d = build_datum(opt.type);
  emit(to_json(d), opt.out);
  std::cerr << "datum " << d.type.label() << ": rank " << d.l << ", "
            << positive_finite_roots(d).size() << " positive finite roots\n";
  return 0;
}

std::pair<CrystalGraph, bool> build_graph(const Options& opt, const AffineCartanDatum& d,
                                          const DominantShape& shape) {
  bool capped = false;
  if (opt.mode == "cl") {
    ClPathOps ops{d};
    auto gen = generate_closure_partial(ops, straight_cl(d, from_shape(d, shape)), opt.cap,
                                        capped);
    return {std::move(gen.graph), capped};
  }
  if (opt.mode == "p") {
    PathOps ops{d};
    auto gen = generate_depth_bounded_partial(ops, straight(d, from_shape(d, shape)), opt.depth,
                                              opt.cap, capped);
    return {std::move(gen.graph), capped};
  }
  if (opt.mode == "tensor") return {fundamental_tensor(d, shape), false};
  throw std::invalid_argument("unknown mode '" + opt.mode + "' (expected cl, p, or tensor)");
}

int run_graph(const Options& opt) {
  auto d = build_datum(opt.type);
  auto shape = parse_shape(d, opt.shape);
  auto [g, capped] = build_graph(opt, d, shape);
  ExportFormat fmt = parse_format(opt.format);
  if (fmt == ExportFormat::json_format) {
    json payload = to_json(g);
    payload["partial"] = capped;
    emit(payload, opt.out);
  } else {
    std::string dot = export_dot(g);
    if (capped) dot.insert(0, "// partial: vertex cap reached\n");
    emit_text(dot, opt.out);
  }
  std::cerr << "crystal " << opt.mode << " " << d.type.label() << " shape " << shape.to_string()
            << ": " << g.size() << " vertices, " << g.f_edges.size() << " edges"
            << (capped ? " (PARTIAL: vertex cap reached)" : "") << "\n";
  return capped ? 1 : 0;
}

int run_components(const Options& opt) {
  auto d = build_datum(opt.type);
  auto ctx = make_ls_context(d, parse_shape(d, opt.shape), opt.cap);
  json sigs = json::array();
  for (const auto& sig : enumerate_signatures(ctx, opt.nmax)) {
    json row{{"sig", sig}, {"canonical_extremal", to_json(canonical_extremal(ctx, sig))}};
    if (opt.depth > 0) {
      PathOps ops{d};
      auto gen = generate_depth_bounded(ops, canonical_extremal(ctx, sig), opt.depth, opt.cap);
      row["vertices_at_depth"] = gen.graph.size();
    }
    sigs.push_back(std::move(row));
  }
  json turns = json::array();
  for (const auto& t : ctx.turns) turns.push_back(t.to_string());
  emit(json{{"type", d.type.label()},
            {"shape", ctx.shape.m},
            {"turn", turns},
            {"d_lambda", ctx.dlam},
            {"signatures", sigs}},
       opt.out);
  std::cerr << "crystal components " << d.type.label() << " shape " << ctx.shape.to_string()
            << ": " << sigs.size() << " signatures with entries <= " << opt.nmax << "\n";
  return 0;
}

int run_verify_chains(const Options& opt) {
  auto d = build_datum(opt.type);
  auto shape = parse_shape(d, opt.shape);
  auto lam = from_shape(d, shape);
  ChainOracle oracle(d);
  json rows = json::array();
  bool all_agree = true;
  long long cases = 0;
  for (const auto& tau : turn_set(shape)) {
    long long p = tau.den().to_ll(), q = tau.num().to_ll();
    for (long long N = 0; N <= opt.nmax; ++N) {
      auto cert = oracle.sigma_chain(lam, lam + delta_multiple(d, Rational(N)), tau);
      bool criterion = sigma_chain_criterion(d, shape, p, q, N);
      bool agree = cert.has_value() == criterion;
      all_agree = all_agree && agree;
      ++cases;
      json row{{"tau", tau.to_string()},
               {"N", N},
               {"oracle", cert.has_value()},
               {"criterion", criterion},
               {"agree", agree}};
      row["certificate"] = cert ? to_json(d, *cert) : json(nullptr);
      rows.push_back(std::move(row));
    }
  }
  emit(json{{"type", d.type.label()},
            {"shape", shape.m},
            {"rows", rows},
            {"all_agree", all_agree}},
       opt.out);
  std::cerr << "verify chains " << d.type.label() << " shape " << shape.to_string() << ": "
            << cases << " cases, " << (all_agree ? "all agree" : "DISAGREEMENT") << "\n";
  return all_agree ? 0 : 1;
}

int run_verify_comps(const Options& opt) {
  auto d = build_datum(opt.type);
  auto ctx = make_ls_context(d, parse_shape(d, opt.shape), opt.cap);
  auto report = verify_theorem_comps(ctx, opt.depth, opt.nmax, -1,
                                     thread_request(opt.threads), opt.seed);
  emit(to_json(report), opt.out);
  std::cerr << "verify comps " << d.type.label() << " shape " << ctx.shape.to_string() << ": "
            << report.components.size() << " components, "
            << (report.passed() ? "pass" : std::to_string(report.violations.size()) +
                                               " violations")
            << "\n";
  return report.passed() ? 0 : 1;
}

int run_verify_simple(const Options& opt) {
  auto d = build_datum(opt.type);
  auto ctx = make_ls_context(d, parse_shape(d, opt.shape), opt.cap);
  auto report = verify_simple(ctx);
  emit(to_json(report), opt.out);
  std::cerr << "verify simple " << d.type.label() << " shape " << ctx.shape.to_string() << ": "
            << report.vertices << " vertices, " << (report.passed() ? "pass" : "FAIL") << "\n";
  return report.passed() ? 0 : 1;
}

int run_verify_theta(const Options& opt) {
  auto d = build_datum(opt.type);
  auto ctx = make_aff_context(make_ls_context(d, parse_shape(d, opt.shape), opt.cap));
  Rational nbound =
      opt.nbound.empty() ? Rational(3 * ctx.ls.dlam) : Rational::parse(opt.nbound);
  auto report = verify_theta(ctx, nbound);
  json payload = to_json(report);
  payload["nbound"] = nbound.to_string();
  emit(payload, opt.out);
  std::cerr << "verify theta " << d.type.label() << " shape " << ctx.ls.shape.to_string()
            << " |n| <= " << nbound.to_string() << ": " << report.elements_checked
            << " elements, " << (report.passed() ? "pass" : "FAIL") << "\n";
  return report.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"level-zero Lakshmibai-Seshadri path crystals for affine Lie algebras"};
  app.require_subcommand(1);
  Options opt;

  auto add_type_shape = [&](CLI::App* cmd, bool with_shape = true) {
    cmd->add_option("--type", opt.type, "affine type label, e.g. A2~1 or A2~2")->required();
    if (with_shape)
      cmd->add_option("--shape", opt.shape, "comma list of multiplicities m_i over I0")
          ->required();
  };

  auto* datum = app.add_subcommand("datum", "print the affine Cartan datum as JSON");
  add_type_shape(datum, false);
  datum->add_option("--out", opt.out, "write to file instead of stdout");

  auto* crystal = app.add_subcommand("crystal", "generate crystals");
  crystal->require_subcommand(1);
  auto* gen = crystal->add_subcommand("gen", "generate a crystal graph");
  add_type_shape(gen);
  gen->add_option("--mode", opt.mode, "cl (closure of B(lambda)_cl), p (depth-bounded), tensor");
  gen->add_option("--depth", opt.depth, "depth bound for mode p");
  gen->add_option("--cap", opt.cap, "vertex cap");
  gen->add_option("--format", opt.format, "json or dot");
  gen->add_option("--out", opt.out, "write to file instead of stdout");
  auto* comps = crystal->add_subcommand("components", "list component signatures");
  add_type_shape(comps);
  comps->add_option("--nmax", opt.nmax, "largest signature entry");
  comps->add_option("--depth", opt.depth, "also report depth-bounded component sizes");
  comps->add_option("--cap", opt.cap, "vertex cap");
  comps->add_option("--out", opt.out, "write to file instead of stdout");

  auto* verify = app.add_subcommand("verify", "machine-check structural statements");
  verify->require_subcommand(1);
  auto* chains = verify->add_subcommand(
      "chains", "sigma-chain search against the closed-form criterion");
  add_type_shape(chains);
  chains->add_option("--nmax", opt.nmax, "check N = 0..nmax");
  chains->add_option("--out", opt.out, "write to file instead of stdout");
  auto* vcomps = verify->add_subcommand("comps", "component parametrization checks");
  add_type_shape(vcomps);
  vcomps->add_option("--depth", opt.depth, "component generation depth");
  vcomps->add_option("--nmax", opt.nmax, "largest signature entry");
  vcomps->add_option("--cap", opt.cap, "vertex cap");
  vcomps->add_option("--threads", opt.threads, "parallelism degree across signatures");
  vcomps->add_option("--seed", opt.seed, "seed for the oracle sampling of large components");
  vcomps->add_option("--out", opt.out, "write to file instead of stdout");
  auto* vsimple = verify->add_subcommand("simple", "connectedness/simplicity of B(lambda)_cl");
  add_type_shape(vsimple);
  vsimple->add_option("--cap", opt.cap, "vertex cap");
  vsimple->add_option("--out", opt.out, "write to file instead of stdout");
  auto* vtheta = verify->add_subcommand("theta", "affinization isomorphism checks");
  add_type_shape(vtheta);
  vtheta->add_option("--nbound", opt.nbound, "slab bound on |n| (default 3 d_lambda)");
  vtheta->add_option("--cap", opt.cap, "vertex cap");
  vtheta->add_option("--out", opt.out, "write to file instead of stdout");

  auto* exportc = app.add_subcommand("export", "generate and export a crystal graph");
  add_type_shape(exportc);
  exportc->add_option("--mode", opt.mode, "cl, p, or tensor");
  exportc->add_option("--depth", opt.depth, "depth bound for mode p");
  exportc->add_option("--cap", opt.cap, "vertex cap");
  exportc->add_option("--format", opt.format, "json or dot");
  exportc->add_option("--out", opt.out, "write to file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*datum) return run_datum(opt);
    if (*gen) return run_graph(opt);
    if (*comps) return run_components(opt);
    if (*chains) return run_verify_chains(opt);
    if (*vcomps) return run_verify_comps(opt);
    if (*vsimple) return run_verify_simple(opt);
    if (*vtheta) return run_verify_theta(opt);
    if (*exportc) return run_graph(opt);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
