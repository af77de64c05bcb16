#pragma once

#include "hoffman/polylp.hpp"
#include "hoffman/types.hpp"

#include <functional>
#include <map>
#include <optional>

namespace hoffman {

using SurjectivityProbe = std::function<SurjectivityOutcome(const IndexSet&)>;
using ValueFn = std::function<double(const IndexSet&)>;

/// Certificate state built up by the search: verified surjective supersets F,
/// verified non-surjective subsets I, the pending worklist, and the running
/// constant best_H = max over F of value_of(F).
struct CertificateLedger {
  Index m = 0;
  std::vector<IndexSet> surjective_F;
  std::vector<IndexSet> nonsurjective_I;
  std::vector<IndexSet> worklist_J;
  double best_H = 0.0;
  std::map<IndexSet, double> per_F_values;
};

/// Worklist-driven certificate search. The probe decides surjectivity of a
/// set and supplies a non-surjectivity certificate on failure; value_of is
/// evaluated once per verified F.
CertificateLedger algorithm1_run(Index m, const SurjectivityProbe& probe,
                                 const ValueFn& value_of);

/// Variant that keeps no worklist and instead closes cover gaps reported by
/// solve_cover_gap until none remain. Same best_H as algorithm1_run; the
/// certificate collections may differ.
CertificateLedger algorithm2_run(Index m, const SurjectivityProbe& probe,
                                 const ValueFn& value_of);

/// Feasibility search for a set J covered by neither collection: J must meet
/// the complement of every F and miss at least one element of every I.
/// Returns a maximal such J, or nullopt when the collections already cover
/// every subset of {1..m}.
std::optional<IndexSet> solve_cover_gap(const std::vector<IndexSet>& F,
                                        const std::vector<IndexSet>& I, Index m);

/// Exhaustive cover check over all 2^m subsets; m <= 22.
bool verify_joint_certificates(const std::vector<IndexSet>& F, const std::vector<IndexSet>& I,
                               Index m);

}  // namespace hoffman
