#include "hoffman/engine.hpp"

#include <cmath>
#include <map>

namespace hoffman {

namespace {

void require_exact(const NormConfig& cfg, const char* what) {
  if (!cfg.exact_lp())
    throw UnsupportedNormError(std::string(what) +
                               ": L2 norms route to the ellipsoid estimator");
}

double invert_value(double v) {
  if (!std::isfinite(v) || v <= 0.0) return 0.0;
  return 1.0 / v;
}

CertificateLedger run_search(Index m, Algo algo, const SurjectivityProbe& probe,
                             const ValueFn& value_of) {
  return algo == Algo::Alg1 ? algorithm1_run(m, probe, value_of)
                            : algorithm2_run(m, probe, value_of);
}

HoffmanReport make_report(CertificateLedger led, const NormConfig& cfg, Variant variant) {
  HoffmanReport rep;
  rep.H = led.best_H;
  rep.ledger = std::move(led);
  rep.norms = cfg;
  rep.variant = variant;
  return rep;
}

}  // namespace

std::string to_string(Variant v) {
  switch (v) {
    case Variant::InequalitiesOnly:
      return "ineq";
    case Variant::RestrictedL:
      return "restricted";
    case Variant::Mixed:
      return "mixed";
    case Variant::MixedEasyIneq:
      return "mixed-easy-ineq";
    case Variant::MixedEasyEq:
      return "mixed-easy-eq";
    default:
      return "facial";
  }
}

HoffmanReport hoffman_inequalities(const Matrix& A, const NormConfig& cfg, Algo algo) {
  require_exact(cfg, "hoffman_inequalities");
  const Index m = A.rows();
  std::map<IndexSet, SurjectivityOutcome> cache;
  auto probe = [&](const IndexSet& J) -> SurjectivityOutcome {
    auto it = cache.find(J);
    if (it == cache.end()) it = cache.emplace(J, min_conic_image_norm(A, J, cfg)).first;
    return it->second;
  };
  auto value_of = [&](const IndexSet& F) { return invert_value(probe(F).value); };
  return make_report(run_search(m, algo, probe, value_of), cfg, Variant::InequalitiesOnly);
}

HoffmanReport hoffman_restricted(const Matrix& A, const IndexSet& L, const NormConfig& cfg,
                                 Algo algo) {
  require_exact(cfg, "hoffman_restricted");
  if (L.universe_size() != A.rows())
    throw std::invalid_argument("hoffman_restricted: L universe mismatch");
  const Index m = A.rows();
  auto probe = [&](const IndexSet& J) { return min_conic_image_norm(A, J, cfg); };
  auto value_of = [&](const IndexSet& F) {
    return invert_value(min_conic_image_norm_restricted(A, F, L, cfg).value);
  };
  return make_report(run_search(m, algo, probe, value_of), cfg, Variant::RestrictedL);
}

namespace {

HoffmanReport mixed_common(const Matrix& A, const Matrix& C, const NormConfig& cfg, Algo algo,
                           Normalization block, Variant variant) {
  if (cfg.domain == NormTag::L2 || cfg.codomain == NormTag::L2)
    throw UnsupportedNormError("mixed Hoffman constants: L2 norms route to the estimator");
  const Index p = C.rows();
  auto probe = [&](const IndexSet& J) { return min_relsurj_detect(A, C, J); };
  auto value_of = [&](const IndexSet& F) {
    return invert_value(min_relsurj_value(A, C, F, cfg, block).value);
  };
  return make_report(run_search(p, algo, probe, value_of), cfg, variant);
}

}  // namespace

HoffmanReport hoffman_mixed(const Matrix& A, const Matrix& C, const NormConfig& cfg, Algo algo) {
  return mixed_common(A, C, cfg, algo, Normalization::FullPair, Variant::Mixed);
}

HoffmanReport hoffman_mixed_easy_inequalities(const Matrix& A, const Matrix& C,
                                              const NormConfig& cfg, Algo algo) {
  return mixed_common(A, C, cfg, algo, Normalization::EquationMultipliers,
                      Variant::MixedEasyIneq);
}

HoffmanReport hoffman_mixed_easy_equations(const Matrix& A, const Matrix& C,
                                           const NormConfig& cfg, Algo algo) {
  return mixed_common(A, C, cfg, algo, Normalization::InequalityMultipliers,
                      Variant::MixedEasyEq);
}

HoffmanReport facial_distance(const Matrix& A, const NormConfig& cfg, Algo algo) {
  const Index m = A.rows();
  const Index n = A.cols();
  Matrix At(m + 1, n);
  At.topRows(m) = A;
  At.row(m).setOnes();
  const Matrix C = -Matrix::Identity(n, n);

  auto probe = [&](const IndexSet& J) { return min_relsurj_detect(At, C, J); };
  auto value_of = [&](const IndexSet& F) {
    return invert_value(min_facial_value(A, F, cfg).value);
  };
  HoffmanReport rep =
      make_report(run_search(n, algo, probe, value_of), cfg, Variant::FacialDistance);
  if (rep.H > 0.0) {
    rep.one_over_H = 1.0 / rep.H;
    rep.facial_distance = 2.0 / rep.H;
  }
  return rep;
}

std::optional<TightWitness> tight_witness(const Matrix& A, const HoffmanReport& report,
                                          const NormConfig& cfg) {
  if (report.variant != Variant::InequalitiesOnly)
    throw std::invalid_argument("tight_witness: inequalities-only reports");
  if (cfg.codomain != NormTag::LInf)
    throw UnsupportedNormError("tight_witness: vertex enumeration needs the LInf codomain");
  const double H = report.H;
  if (H <= 0.0) return std::nullopt;
  const Index m = A.rows();

  // Lexicographically smallest F attaining H.
  const IndexSet* attain = nullptr;
  for (const auto& [F, value] : report.ledger.per_F_values) {
    if (value >= H * (1.0 - 1e-9)) {
      if (attain == nullptr || F < *attain) attain = &F;
    }
  }
  if (attain == nullptr) return std::nullopt;
  const IndexSet F = *attain;
  if (F.size() > 16)
    throw std::length_error("tight_witness: attaining F too large for vertex enumeration");

  // The inner min-norm value is convex in y, so the maximum over the unit
  // ball sits at a sign vertex.
  const auto rows = F.members();
  double best = -1.0;
  Vector best_y;
  const std::uint64_t total = std::uint64_t{1} << F.size();
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    Vector y = Vector::Zero(m);
    for (std::size_t k = 0; k < rows.size(); ++k)
      y(rows[k] - 1) = (bits & (std::uint64_t{1} << k)) ? -1.0 : 1.0;
    const double val = min_norm_solution(A, F, y, cfg.domain).first;
    if (val > best) {
      best = val;
      best_y = y;
    }
  }

  // Pad the rows outside F so they cannot bind near the attaining face.
  const double mbig = (1.0 + max_row_norm(A, dual(cfg.domain))) * (H + 1.0) *
                      std::max(1.0, norm(best_y, cfg.codomain));
  Vector b(m);
  for (Index i = 0; i < m; ++i) b(i) = F.contains(static_cast<int>(i) + 1) ? best_y(i) : mbig;

  TightWitness w;
  w.b = b;
  w.u = Vector::Zero(A.cols());
  const double numer = distance_to_polyhedron(w.u, A, b, nullptr, nullptr, cfg.domain).first;
  const Vector resid = (-b).cwiseMax(0.0);
  const double denom = norm(resid, cfg.codomain);
  if (denom <= 0.0) return std::nullopt;
  w.ratio = numer / denom;
  return w;
}

}  // namespace hoffman
