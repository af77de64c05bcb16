#pragma once

#include <Eigen/Core>

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hoffman {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

// Default relative threshold for numerical rank decisions.
inline constexpr double kRankTol = 1e-10;

// Relative threshold below which an optimal value of a surjectivity
// subproblem is treated as zero.
inline constexpr double kSurjTol = 1e-9;

// Feasibility / duality-gap tolerances for LP outcomes.
inline constexpr double kFeasTol = 1e-8;
inline constexpr double kGapTol = 1e-8;

enum class NormTag : std::uint8_t { L1, L2, LInf };

constexpr NormTag dual(NormTag t) {
  switch (t) {
    case NormTag::L1:
      return NormTag::LInf;
    case NormTag::LInf:
      return NormTag::L1;
    default:
      return NormTag::L2;
  }
}

inline std::string to_string(NormTag t) {
  switch (t) {
    case NormTag::L1:
      return "l1";
    case NormTag::L2:
      return "l2";
    default:
      return "linf";
  }
}

/// A sorted subset of {1,...,m}. Indices are 1-based throughout the public
/// API and in serialized ledgers; zero_based() converts for matrix slicing.
class IndexSet {
 public:
  IndexSet() = default;

  IndexSet(Index universe_size, std::vector<int> members)
      : universe_(universe_size), members_(std::move(members)) {
    normalize();
  }

  static IndexSet empty(Index universe_size) { return IndexSet(universe_size, {}); }

  static IndexSet full(Index universe_size) {
    std::vector<int> all(static_cast<std::size_t>(universe_size));
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i) + 1;
    return IndexSet(universe_size, std::move(all));
  }

  static IndexSet of(std::initializer_list<int> members, Index universe_size) {
    return IndexSet(universe_size, std::vector<int>(members));
  }

  Index universe_size() const { return universe_; }
  Index size() const { return static_cast<Index>(members_.size()); }
  bool is_empty() const { return members_.empty(); }
  const std::vector<int>& members() const { return members_; }

  bool contains(int i) const {
    return std::binary_search(members_.begin(), members_.end(), i);
  }

  bool subset_of(const IndexSet& other) const {
    return std::includes(other.members_.begin(), other.members_.end(),
                         members_.begin(), members_.end());
  }

  IndexSet erased(int i) const {
    std::vector<int> out;
    out.reserve(members_.size());
    for (int j : members_)
      if (j != i) out.push_back(j);
    return IndexSet(universe_, std::move(out));
  }

  IndexSet complement() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(universe_));
    std::size_t k = 0;
    for (int i = 1; i <= static_cast<int>(universe_); ++i) {
      if (k < members_.size() && members_[k] == i) {
        ++k;
      } else {
        out.push_back(i);
      }
    }
    return IndexSet(universe_, std::move(out));
  }

  IndexSet intersect(const IndexSet& other) const {
    std::vector<int> out;
    std::set_intersection(members_.begin(), members_.end(), other.members_.begin(),
                          other.members_.end(), std::back_inserter(out));
    return IndexSet(universe_, std::move(out));
  }

  std::vector<Index> zero_based() const {
    std::vector<Index> out;
    out.reserve(members_.size());
    for (int i : members_) out.push_back(static_cast<Index>(i) - 1);
    return out;
  }

  /// Bitmask representation; only valid for universes up to 63 elements.
  std::uint64_t mask() const {
    if (universe_ > 63) throw std::length_error("IndexSet::mask: universe too large");
    std::uint64_t m = 0;
    for (int i : members_) m |= (std::uint64_t{1} << (i - 1));
    return m;
  }

  static IndexSet from_mask(Index universe_size, std::uint64_t mask) {
    std::vector<int> out;
    for (int i = 1; i <= static_cast<int>(universe_size); ++i)
      if (mask & (std::uint64_t{1} << (i - 1))) out.push_back(i);
    return IndexSet(universe_size, std::move(out));
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t k = 0; k < members_.size(); ++k) {
      if (k > 0) s += ',';
      s += std::to_string(members_[k]);
    }
    return s;
  }

  friend bool operator==(const IndexSet& a, const IndexSet& b) {
    return a.universe_ == b.universe_ && a.members_ == b.members_;
  }
  friend bool operator!=(const IndexSet& a, const IndexSet& b) { return !(a == b); }
  friend bool operator<(const IndexSet& a, const IndexSet& b) {
    return a.members_ < b.members_;
  }

 private:
  void normalize() {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    for (int i : members_) {
      if (i < 1 || i > static_cast<int>(universe_))
        throw std::out_of_range("IndexSet: index " + std::to_string(i) +
                                " outside universe of size " + std::to_string(universe_));
    }
  }

  Index universe_ = 0;
  std::vector<int> members_;
};

}  // namespace hoffman
