#pragma once

#include "hoffman/linalg.hpp"
#include "hoffman/simplex.hpp"
#include "hoffman/types.hpp"

#include <utility>

namespace hoffman {

struct UnsupportedNormError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InfeasibleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Norms on the domain R^n and the codomain (R^m, or the stacked product
/// space for mixed systems). Exact LP paths need both in {L1, LInf}.
struct NormConfig {
  NormTag domain = NormTag::LInf;
  NormTag codomain = NormTag::LInf;

  bool exact_lp() const {
    return domain != NormTag::L2 && codomain != NormTag::L2;
  }
};

/// Result of a surjectivity value/detection problem. `value` is the optimal
/// value of the underlying norm-minimization problem (+inf when vacuous).
/// When not surjective, `support` is the certificate of non-surjectivity.
struct SurjectivityOutcome {
  double value = 0.0;
  Vector witness_v;
  IndexSet support;
  bool surjective = false;
};

/// Relative threshold below which the optimal value of a surjectivity
/// problem counts as zero for the given data.
double surjectivity_threshold(const Matrix& A, NormTag domain);

/// min { ||A_J' v||* : v in R^J_+, ||v||* = 1 }. Positive optimal value
/// certifies that J is A-surjective and equals 1/H_J(A); a zero value yields
/// the certificate support I(v).
SurjectivityOutcome min_conic_image_norm(const Matrix& A, const IndexSet& J,
                                         const NormConfig& cfg);

/// Restricted variant normalizing only the coordinates in J∩L:
/// min { ||A_J' v||* : v in R^J_+, ||v_{J∩L}||* = 1 }; value +inf when
/// J∩L is empty.
SurjectivityOutcome min_conic_image_norm_restricted(const Matrix& A, const IndexSet& J,
                                                    const IndexSet& L, const NormConfig& cfg);

/// Decides whether [A,C,J] is relatively surjective (norm-independent).
/// When it is not, support carries the certificate I(z).
SurjectivityOutcome min_relsurj_detect(const Matrix& A, const Matrix& C, const IndexSet& J);

/// Which multiplier block the value problem normalizes.
enum class Normalization : std::uint8_t {
  FullPair,               // ||(v,z)||* = 1
  EquationMultipliers,    // ||v||* = 1
  InequalityMultipliers,  // ||z||* = 1
};

/// min { ||A'v + C_J'z||* : v in A R^n, z in R^J_+, || . ||* = 1 } with the
/// normalization applied to the chosen block. The codomain (product) norm
/// must be L1 except for InequalityMultipliers, which also admits LInf.
SurjectivityOutcome min_relsurj_value(const Matrix& A, const Matrix& C, const IndexSet& J,
                                      const NormConfig& cfg,
                                      Normalization block = Normalization::FullPair);

/// Value problem behind the facial-distance constant: builds [A;1'] and
/// C = -I internally and normalizes the orthogonal projection of v onto
/// L_A = {Ax : 1'x = 0}. J indexes the sign constraints, universe {1..n}.
SurjectivityOutcome min_facial_value(const Matrix& A, const IndexSet& J, const NormConfig& cfg);

/// Distance from u to {x : Ax <= b, eqA x = eqb} with a nearest point.
/// Throws InfeasibleError when the polyhedron is empty.
std::pair<double, Vector> distance_to_polyhedron(const Vector& u, const Matrix& A,
                                                 const Vector& b, const Matrix* eqA,
                                                 const Vector* eqb, NormTag domain_norm);

/// min { ||x|| : A_J x <= y_J } with an attaining point.
std::pair<double, Vector> min_norm_solution(const Matrix& A, const IndexSet& J, const Vector& y,
                                            NormTag domain_norm);

/// Extreme points of { y in span(B) : ||y||_1 <= 1 }, signed. Used to
/// decompose value problems whose normalization lives on a subspace.
std::vector<Vector> l1_section_extremes(const SubspaceBasis& W);

}  // namespace hoffman
