#include "hoffman/certkit.hpp"

#include <algorithm>
#include <cmath>

namespace hoffman {

namespace {

bool subset_of_any(const IndexSet& J, const std::vector<IndexSet>& coll) {
  for (const IndexSet& F : coll)
    if (J.subset_of(F)) return true;
  return false;
}

// Inserts J into the worklist keeping only inclusion-maximal sets.
void insert_dominated(std::vector<IndexSet>& work, const IndexSet& J) {
  for (const IndexSet& W : work)
    if (J.subset_of(W)) return;
  work.erase(std::remove_if(work.begin(), work.end(),
                            [&](const IndexSet& W) { return W.subset_of(J); }),
             work.end());
  work.push_back(J);
}

// Pick rule: maximum cardinality, lexicographically smallest on ties.
std::size_t pick_index(const std::vector<IndexSet>& work) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < work.size(); ++i) {
    if (work[i].size() > work[best].size() ||
        (work[i].size() == work[best].size() && work[i] < work[best]))
      best = i;
  }
  return best;
}

// Termination measure: sum of (m+1)^|J| over the worklist. Every update
// either deletes a set or replaces sets by at most m strictly smaller ones,
// so the sum strictly decreases.
unsigned __int128 worklist_potential(const std::vector<IndexSet>& work, Index m) {
  unsigned __int128 total = 0;
  for (const IndexSet& J : work) {
    unsigned __int128 p = 1;
    for (Index k = 0; k < J.size(); ++k) p *= static_cast<unsigned>(m + 1);
    total += p;
  }
  return total;
}

double h_value(const ValueFn& value_of, const IndexSet& F) {
  const double v = value_of(F);
  return std::isfinite(v) ? v : 0.0;
}

void register_surjective(CertificateLedger& led, const IndexSet& J, const ValueFn& value_of) {
  const double h = h_value(value_of, J);
  led.surjective_F.push_back(J);
  led.per_F_values[J] = h;
  led.best_H = std::max(led.best_H, h);
}

SurjectivityOutcome probe_or_abort(const SurjectivityProbe& probe, const IndexSet& J) {
  try {
    return probe(J);
  } catch (const std::exception& e) {
    throw NumericalError("surjectivity probe failed on J={" + J.to_string() + "}: " + e.what());
  }
}

}  // namespace

CertificateLedger algorithm1_run(Index m, const SurjectivityProbe& probe,
                                 const ValueFn& value_of) {
  CertificateLedger led;
  led.m = m;
  led.worklist_J.push_back(IndexSet::full(m));

  unsigned __int128 potential = worklist_potential(led.worklist_J, m);
  while (!led.worklist_J.empty()) {
    const std::size_t pick = pick_index(led.worklist_J);
    const IndexSet J = led.worklist_J[pick];
    const SurjectivityOutcome probe_out = probe_or_abort(probe, J);

    if (probe_out.surjective) {
      register_surjective(led, J, value_of);
      led.worklist_J.erase(std::remove_if(led.worklist_J.begin(), led.worklist_J.end(),
                                          [&](const IndexSet& W) { return W.subset_of(J); }),
                           led.worklist_J.end());
    } else {
      const IndexSet cert = probe_out.support;
      if (cert.is_empty() || !cert.subset_of(J))
        throw NumericalError("invalid non-surjectivity certificate for J={" + J.to_string() +
                             "}");
      led.nonsurjective_I.push_back(cert);
      std::vector<IndexSet> keep;
      std::vector<IndexSet> expanded;
      for (const IndexSet& W : led.worklist_J) {
        if (cert.subset_of(W))
          expanded.push_back(W);
        else
          keep.push_back(W);
      }
      led.worklist_J = std::move(keep);
      for (const IndexSet& W : expanded) {
        for (int i : cert.members()) {
          const IndexSet child = W.erased(i);
          if (!subset_of_any(child, led.surjective_F)) insert_dominated(led.worklist_J, child);
        }
      }
    }

    const unsigned __int128 next_potential = worklist_potential(led.worklist_J, m);
    if (m <= 22 && next_potential >= potential)
      throw std::logic_error("algorithm1_run: worklist potential failed to decrease");
    potential = next_potential;
  }
  return led;
}

CertificateLedger algorithm2_run(Index m, const SurjectivityProbe& probe,
                                 const ValueFn& value_of) {
  CertificateLedger led;
  led.m = m;
  while (auto gap = solve_cover_gap(led.surjective_F, led.nonsurjective_I, m)) {
    const IndexSet J = *gap;
    const SurjectivityOutcome probe_out = probe_or_abort(probe, J);
    if (probe_out.surjective) {
      register_surjective(led, J, value_of);
    } else {
      if (probe_out.support.is_empty() || !probe_out.support.subset_of(J))
        throw NumericalError("invalid non-surjectivity certificate for J={" + J.to_string() +
                             "}");
      led.nonsurjective_I.push_back(probe_out.support);
    }
  }
  return led;
}

namespace {

// DFS with unit propagation over element in/out decisions. Clauses:
// for each I: at least one element of I is out; for each F: at least one
// element of F^c is in. state: 0 undecided, +1 in, -1 out.
struct GapSearch {
  Index m;
  const std::vector<IndexSet>* F;
  const std::vector<IndexSet>* I;
  std::vector<int> state;

  bool propagate() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const IndexSet& Iset : *I) {
        int undecided = 0, last = -1;
        bool satisfied = false;
        for (int e : Iset.members()) {
          const int s = state[static_cast<std::size_t>(e - 1)];
          if (s == -1) satisfied = true;
          if (s == 0) {
            ++undecided;
            last = e;
          }
        }
        if (satisfied) continue;
        if (undecided == 0) return false;
        if (undecided == 1) {
          state[static_cast<std::size_t>(last - 1)] = -1;
          changed = true;
        }
      }
      for (const IndexSet& Fset : *F) {
        int undecided = 0, last = -1;
        bool satisfied = false;
        for (int e = 1; e <= static_cast<int>(m); ++e) {
          if (Fset.contains(e)) continue;
          const int s = state[static_cast<std::size_t>(e - 1)];
          if (s == +1) satisfied = true;
          if (s == 0) {
            ++undecided;
            last = e;
          }
        }
        if (satisfied) continue;
        if (undecided == 0) return false;
        if (undecided == 1) {
          state[static_cast<std::size_t>(last - 1)] = +1;
          changed = true;
        }
      }
    }
    return true;
  }

  bool dfs(int elem) {
    if (!propagate()) return false;
    while (elem <= static_cast<int>(m) && state[static_cast<std::size_t>(elem - 1)] != 0)
      ++elem;
    if (elem > static_cast<int>(m)) return true;
    const std::vector<int> saved = state;
    state[static_cast<std::size_t>(elem - 1)] = +1;  // prefer inclusion: larger probes
    if (dfs(elem + 1)) return true;
    state = saved;
    state[static_cast<std::size_t>(elem - 1)] = -1;
    if (dfs(elem + 1)) return true;
    state = saved;
    return false;
  }
};

}  // namespace

std::optional<IndexSet> solve_cover_gap(const std::vector<IndexSet>& F,
                                        const std::vector<IndexSet>& I, Index m) {
  GapSearch gs{m, &F, &I, std::vector<int>(static_cast<std::size_t>(m), 0)};
  if (!gs.dfs(1)) return std::nullopt;

  std::vector<int> members;
  for (int e = 1; e <= static_cast<int>(m); ++e)
    if (gs.state[static_cast<std::size_t>(e - 1)] == +1) members.push_back(e);
  IndexSet J(m, std::move(members));

  // Greedy extension to a maximal feasible set: growing J can only help the
  // F-constraints, so only the I-constraints need rechecking.
  for (int e = 1; e <= static_cast<int>(m); ++e) {
    if (J.contains(e)) continue;
    IndexSet cand(m, [&] {
      std::vector<int> v = J.members();
      v.push_back(e);
      return v;
    }());
    bool ok = true;
    for (const IndexSet& Iset : I)
      if (Iset.subset_of(cand)) ok = false;
    if (ok) J = cand;
  }
  return J;
}

bool verify_joint_certificates(const std::vector<IndexSet>& F, const std::vector<IndexSet>& I,
                               Index m) {
  if (m > 22) throw std::length_error("verify_joint_certificates: m > 22");
  std::vector<std::uint64_t> fmasks, imasks;
  fmasks.reserve(F.size());
  imasks.reserve(I.size());
  for (const IndexSet& s : F) fmasks.push_back(s.mask());
  for (const IndexSet& s : I) imasks.push_back(s.mask());
  const std::uint64_t total = std::uint64_t{1} << m;
  for (std::uint64_t J = 0; J < total; ++J) {
    bool covered = false;
    for (std::uint64_t f : fmasks) {
      if ((J & ~f) == 0) {
        covered = true;
        break;
      }
    }
    if (covered) continue;
    for (std::uint64_t i : imasks) {
      if ((i & ~J) == 0) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

}  // namespace hoffman
