#pragma once

#include "hoffman/certkit.hpp"
#include "hoffman/polylp.hpp"
#include "hoffman/types.hpp"

#include <optional>

namespace hoffman {

enum class Variant : std::uint8_t {
  InequalitiesOnly,
  RestrictedL,
  Mixed,
  MixedEasyIneq,
  MixedEasyEq,
  FacialDistance,
};

enum class Algo : std::uint8_t { Alg1, Alg2 };

std::string to_string(Variant v);

struct TightWitness {
  Vector b;
  Vector u;
  double ratio = 0.0;
};

/// Output of a Hoffman-constant computation: the constant, the certificate
/// ledger that proves it, and variant-specific extras.
struct HoffmanReport {
  double H = 0.0;
  CertificateLedger ledger;
  NormConfig norms;
  Variant variant = Variant::InequalitiesOnly;
  std::optional<double> one_over_H;        // facial variant, when H > 0
  std::optional<double> facial_distance;   // 2/H, the face-to-face polytope gap
  std::optional<TightWitness> witness;
};

/// Sharpest H with dist(u, {x: Ax <= b}) <= H ||(Au-b)_+|| for all feasible b.
HoffmanReport hoffman_inequalities(const Matrix& A, const NormConfig& cfg,
                                   Algo algo = Algo::Alg1);

/// Restricted constant H(A|L): only the residuals of rows in L are charged;
/// the bound then holds for points already satisfying the rows outside L.
HoffmanReport hoffman_restricted(const Matrix& A, const IndexSet& L, const NormConfig& cfg,
                                 Algo algo = Algo::Alg1);

/// H(A;C) for systems Ax = b, Cx <= d under the product codomain norm.
HoffmanReport hoffman_mixed(const Matrix& A, const Matrix& C, const NormConfig& cfg,
                            Algo algo = Algo::Alg1);

/// Variant charging only the equation residual ||Au - b|| (inequalities easy).
HoffmanReport hoffman_mixed_easy_inequalities(const Matrix& A, const Matrix& C,
                                              const NormConfig& cfg, Algo algo = Algo::Alg1);

/// Variant charging only the inequality residual ||(Cu - d)_+|| (equations easy).
HoffmanReport hoffman_mixed_easy_equations(const Matrix& A, const Matrix& C,
                                           const NormConfig& cfg, Algo algo = Algo::Alg1);

/// Hoffman constant of the system Ax = v, x in the standard simplex: bounds
/// dist(x, Z(v)) <= H ||Ax - v||. The report carries 1/H and the equivalent
/// face-to-complement distance 2/H of conv(A).
HoffmanReport facial_distance(const Matrix& A, const NormConfig& cfg, Algo algo = Algo::Alg1);

/// Constructs (b, u) attaining dist(u, P_{A,b}) = H(A) * dist(b, Au + R^m_+)
/// by enumerating the sign vertices of the codomain unit ball over the
/// attaining F. Requires the InequalitiesOnly variant with codomain LInf and
/// |F| <= 16; returns nullopt when H = 0.
std::optional<TightWitness> tight_witness(const Matrix& A, const HoffmanReport& report,
                                          const NormConfig& cfg);

}  // namespace hoffman
