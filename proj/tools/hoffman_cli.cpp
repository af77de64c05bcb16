// Command-line front end: Hoffman-constant computations, the Euclidean
// two-sided estimator, a reproducible random-matrix benchmark, and
// certificate-ledger verification.

#include <CLI11.hpp>

#include "hoffman/ellipsoid.hpp"
#include "hoffman/engine.hpp"
#include "hoffman/io.hpp"
#include "hoffman/rng.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <thread>

namespace {

using namespace hoffman;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitUnsupportedNorm = 2;
constexpr int kExitIO = 3;
constexpr int kExitNotSurjective = 4;

struct ComputeArgs {
  std::string variant = "ineq";
  std::string a_path;
  std::string c_path;
  std::string l_spec;
  std::string norm_dom = "linf";
  std::string norm_cod = "linf";
  int algo = 1;
  bool witness = false;
};

Matrix load_block(const std::string& path, Index fallback_cols) {
  if (path.empty()) return Matrix(0, fallback_cols);
  Matrix M = read_matrix(path);
  if (M.rows() == 0 && M.cols() == 0) return Matrix(0, fallback_cols);
  return M;
}

int run_compute(const ComputeArgs& args) {
  const NormConfig cfg{parse_norm_tag(args.norm_dom), parse_norm_tag(args.norm_cod)};
  const Algo algo = args.algo == 2 ? Algo::Alg2 : Algo::Alg1;
  const Matrix A = read_matrix(args.a_path);

  HoffmanReport rep;
  if (args.variant == "ineq") {
    rep = hoffman_inequalities(A, cfg, algo);
  } else if (args.variant == "restricted") {
    rep = hoffman_restricted(A, parse_index_list(args.l_spec, A.rows()), cfg, algo);
  } else if (args.variant == "mixed" || args.variant == "mixed-easy-ineq" ||
             args.variant == "mixed-easy-eq") {
    const Matrix C = load_block(args.c_path, A.cols());
    const Matrix Aeff = A.rows() == 0 && C.rows() > 0 ? Matrix(0, C.cols()) : A;
    if (args.variant == "mixed")
      rep = hoffman_mixed(Aeff, C, cfg, algo);
    else if (args.variant == "mixed-easy-ineq")
      rep = hoffman_mixed_easy_inequalities(Aeff, C, cfg, algo);
    else
      rep = hoffman_mixed_easy_equations(Aeff, C, cfg, algo);
  } else if (args.variant == "facial") {
    rep = facial_distance(A, cfg, algo);
  } else {
    throw CLI::ValidationError("--variant", "unknown variant '" + args.variant + "'");
  }

  if (args.witness && rep.variant == Variant::InequalitiesOnly)
    rep.witness = tight_witness(A, rep, cfg);

  std::cout << report_to_json(rep).dump(2) << "\n";
  return 0;
}

struct EstimateArgs {
  std::string a_path;
  std::string c_path;
  std::string j_spec;
};

int run_estimate(const EstimateArgs& args) {
  const Matrix C = args.c_path.empty() ? Matrix(0, 0) : read_matrix(args.c_path);
  Matrix A = args.a_path.empty() ? Matrix(0, C.cols()) : read_matrix(args.a_path);
  if (A.rows() == 0) A = Matrix(0, C.cols());
  const IndexSet J = parse_index_list(args.j_spec, C.rows());

  const auto detect = min_relsurj_detect(A, C, J);
  if (!detect.surjective) {
    nlohmann::json j;
    j["schema"] = 1;
    j["error"] = "J is not relatively surjective";
    j["certificate"] = detect.support.members();
    std::cout << j.dump(2) << "\n";
    return kExitNotSurjective;
  }
  const DikinBounds db = dikin_bounds(A, C, J);
  nlohmann::json j;
  j["schema"] = 1;
  j["sigma"] = db.sigma;
  j["lower"] = db.lower;
  j["upper"] = db.upper;
  j["factor"] = 4 * db.p + 9;
  std::cout << j.dump(2) << "\n";
  return 0;
}

struct BenchArgs {
  Index m = 4;
  Index n = 2;
  int trials = 10;
  std::uint64_t seed = 0;
  int algo = 1;
  int jobs = 1;
  bool verify = false;
  bool no_timing = false;
  std::string norm_dom = "linf";
  std::string norm_cod = "linf";
};

int run_bench(const BenchArgs& args) {
  const NormConfig cfg{parse_norm_tag(args.norm_dom), parse_norm_tag(args.norm_cod)};
  const Algo algo = args.algo == 2 ? Algo::Alg2 : Algo::Alg1;
  if (args.verify && args.m > 22)
    throw CLI::ValidationError("--verify", "cover verification needs m <= 22");

  std::vector<std::string> lines(static_cast<std::size_t>(args.trials));
  std::vector<char> ok(static_cast<std::size_t>(args.trials), 1);

  auto run_trial = [&](int trial) {
    Rng rng = Rng::for_trial(args.seed, static_cast<std::uint64_t>(trial));
    const Matrix A = rng.gaussian_matrix(args.m, args.n);
    const auto t0 = std::chrono::steady_clock::now();
    const HoffmanReport rep = hoffman_inequalities(A, cfg, algo);
    const auto t1 = std::chrono::steady_clock::now();
    double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    if (args.no_timing) ms = 0.0;
    const bool surjective =
        std::any_of(rep.ledger.surjective_F.begin(), rep.ledger.surjective_F.end(),
                    [&](const IndexSet& F) { return F.size() == args.m; });
    if (args.verify &&
        !verify_joint_certificates(rep.ledger.surjective_F, rep.ledger.nonsurjective_I, args.m))
      ok[static_cast<std::size_t>(trial)] = 0;
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%lld,%lld,%d,%zu,%zu,%.17g,%.3f,%d",
                  static_cast<long long>(args.m), static_cast<long long>(args.n), trial,
                  rep.ledger.surjective_F.size(), rep.ledger.nonsurjective_I.size(), rep.H, ms,
                  surjective ? 1 : 0);
    lines[static_cast<std::size_t>(trial)] = buf;
  };

  const int jobs = std::max(1, args.jobs);
  if (jobs == 1) {
    for (int t = 0; t < args.trials; ++t) run_trial(t);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < jobs; ++w)
      pool.emplace_back([&, w] {
        for (int t = w; t < args.trials; t += jobs) run_trial(t);
      });
    for (auto& th : pool) th.join();
  }

  std::cout << "m,n,trial,F_size,I_size,H,wallclock_ms,surjective_flag\n";
  for (const std::string& line : lines) std::cout << line << "\n";
  for (char c : ok)
    if (!c) {
      std::cerr << "bench: cover verification failed\n";
      return kExitVerifyFailed;
    }
  return 0;
}

struct VerifyArgs {
  std::string ledger_path;
  std::string a_path;
  std::string c_path;
  std::string variant = "ineq";
};

int run_verify(const VerifyArgs& args) {
  std::ifstream in(args.ledger_path);
  if (!in) throw IOError("cannot open " + args.ledger_path);
  nlohmann::json j;
  in >> j;
  const CertificateLedger led = ledger_from_json(j);
  const std::string variant = j.value("variant", args.variant);

  const Matrix A = read_matrix(args.a_path);
  Matrix C(0, A.cols());
  if (!args.c_path.empty()) C = read_matrix(args.c_path);

  Index expected_m = 0;
  SurjectivityProbe probe;
  if (variant == "ineq" || variant == "restricted") {
    expected_m = A.rows();
    probe = [&](const IndexSet& J) {
      return min_conic_image_norm(A, J, {NormTag::LInf, NormTag::LInf});
    };
  } else if (variant == "mixed" || variant == "mixed-easy-ineq" || variant == "mixed-easy-eq") {
    expected_m = C.rows();
    const Matrix Aeff = A.rows() == 0 ? Matrix(0, C.cols()) : A;
    probe = [&, Aeff](const IndexSet& J) { return min_relsurj_detect(Aeff, C, J); };
  } else if (variant == "facial") {
    expected_m = A.cols();
    Matrix At(A.rows() + 1, A.cols());
    At.topRows(A.rows()) = A;
    At.row(A.rows()).setOnes();
    const Matrix Cfac = -Matrix::Identity(A.cols(), A.cols());
    probe = [At, Cfac](const IndexSet& J) { return min_relsurj_detect(At, Cfac, J); };
  } else {
    throw CLI::ValidationError("--variant", "unknown variant '" + variant + "'");
  }

  if (led.m != expected_m) {
    std::cerr << "verify: ledger universe m=" << led.m << " does not match the matrix ("
              << expected_m << ")\n";
    return kExitVerifyFailed;
  }
  if (!verify_joint_certificates(led.surjective_F, led.nonsurjective_I, led.m)) {
    std::cerr << "verify: certificate collections do not cover all subsets\n";
    return kExitVerifyFailed;
  }
  for (const IndexSet& F : led.surjective_F) {
    if (!probe(F).surjective) {
      std::cerr << "verify: F={" << F.to_string() << "} fails the surjectivity re-probe\n";
      return kExitVerifyFailed;
    }
  }
  for (const IndexSet& I : led.nonsurjective_I) {
    if (probe(I).surjective) {
      std::cerr << "verify: I={" << I.to_string() << "} re-probes surjective\n";
      return kExitVerifyFailed;
    }
  }
  std::cout << "ok\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hoffman constants for systems of linear equations and inequalities"};
  app.require_subcommand(1);

  ComputeArgs cargs;
  CLI::App* compute = app.add_subcommand("compute", "compute a Hoffman constant with certificates");
  compute->add_option("--variant", cargs.variant,
                      "ineq|restricted|mixed|mixed-easy-ineq|mixed-easy-eq|facial");
  compute->add_option("--A", cargs.a_path, "matrix file (.csv or .mtx)")->required();
  compute->add_option("--C", cargs.c_path, "inequality block for the mixed variants");
  compute->add_option("--L", cargs.l_spec, "row subset for the restricted variant, e.g. 1,3,5");
  compute->add_option("--norm-dom", cargs.norm_dom, "domain norm: l1|linf");
  compute->add_option("--norm-cod", cargs.norm_cod, "codomain norm: l1|linf");
  compute->add_option("--algo", cargs.algo, "certificate search: 1 (worklist) or 2 (cover gaps)")
      ->check(CLI::IsMember({1, 2}));
  compute->add_flag("--witness", cargs.witness, "attach a tightness witness (b, u, ratio)");

  EstimateArgs eargs;
  CLI::App* estimate =
      app.add_subcommand("estimate-l2", "two-sided Euclidean bracket for 1/H_J(A;C)");
  estimate->add_option("--A", eargs.a_path, "equation block");
  estimate->add_option("--C", eargs.c_path, "inequality block")->required();
  estimate->add_option("--J", eargs.j_spec, "inequality subset, e.g. 1,2");

  BenchArgs bargs;
  CLI::App* bench = app.add_subcommand("bench", "random-matrix benchmark, CSV on stdout");
  bench->add_option("--m", bargs.m, "rows")->required();
  bench->add_option("--n", bargs.n, "columns")->required();
  bench->add_option("--trials", bargs.trials, "number of matrices")->required();
  bench->add_option("--seed", bargs.seed, "stream seed");
  bench->add_option("--algo", bargs.algo, "1 or 2")->check(CLI::IsMember({1, 2}));
  bench->add_option("--jobs", bargs.jobs, "parallel workers (output order is fixed)");
  bench->add_flag("--verify", bargs.verify, "run the exhaustive cover check per trial");
  bench->add_flag("--no-timing", bargs.no_timing,
                  "zero the wallclock column for byte-stable output");
  bench->add_option("--norm-dom", bargs.norm_dom, "domain norm: l1|linf");
  bench->add_option("--norm-cod", bargs.norm_cod, "codomain norm: l1|linf");

  VerifyArgs vargs;
  CLI::App* verify = app.add_subcommand("verify", "re-check a serialized certificate ledger");
  verify->add_option("--ledger", vargs.ledger_path, "ledger or report JSON")->required();
  verify->add_option("--A", vargs.a_path, "matrix the ledger was computed from")->required();
  verify->add_option("--C", vargs.c_path, "inequality block for mixed ledgers");
  verify->add_option("--variant", vargs.variant, "fallback when the JSON lacks a variant");

  CLI11_PARSE(app, argc, argv);

  try {
    if (compute->parsed()) return run_compute(cargs);
    if (estimate->parsed()) return run_estimate(eargs);
    if (bench->parsed()) return run_bench(bargs);
    if (verify->parsed()) return run_verify(vargs);
  } catch (const UnsupportedNormError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUnsupportedNorm;
  } catch (const IOError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIO;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerifyFailed;
  }
  return 0;
}
