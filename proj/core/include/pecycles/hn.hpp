#pragma once

#include <utility>
#include <vector>

#include "pecycles/chow.hpp"
#include "pecycles/rational.hpp"

namespace pecycles {

/// One semistable quotient of a Harder-Narasimhan filtration, reduced to its
/// numerical data. Degrees are rationals so that Q-twists stay in the type;
/// untwisted bundles have integral degrees.
struct SemistablePiece {
  int rank = 1;
  Rat degree;

  Rat slope() const { return degree / rank; }

  friend bool operator==(const SemistablePiece&, const SemistablePiece&) = default;
};

/// Harder-Narasimhan numerical data of a bundle on a smooth curve: the ordered
/// quotients Q_1, ..., Q_l with strictly ascending slopes (Q_1 has the minimal
/// slope). Immutable after construction; construction validates.
class HNData {
 public:
  /// Groups the summands by slope (a direct sum of semistable sheaves of equal
  /// slope is semistable) and orders the groups by strictly ascending slope.
  /// `require_integral` rejects non-integer degrees, for callers that model
  /// honest untwisted bundles.
  static HNData from_summands(std::vector<SemistablePiece> pieces, bool require_integral = false);

  /// Accepts quotients the caller asserts already form an HN profile. Slopes
  /// that are not strictly ascending are rejected, not merged.
  static HNData from_profile(std::vector<SemistablePiece> quotients, bool require_integral = false);

  const std::vector<SemistablePiece>& quotients() const { return quotients_; }
  int pieces() const { return static_cast<int>(quotients_.size()); }
  bool semistable() const { return quotients_.size() == 1; }

  int total_rank() const;  // n
  Rat total_degree() const;  // D
  Rat slope(int k) const;  // mu_k, k = 1..l

  RingSpec ring_spec() const { return RingSpec{total_rank(), total_degree()}; }

  /// Twist by a Q-divisor class of degree t: (r, d) -> (r, d + r*t). Slopes
  /// shift uniformly by t, so the profile stays valid.
  HNData twisted(const Rat& t) const;

  /// Cumulative profile [(rbar_k, dbar_k)] for k = 0..l, where rbar_k is the
  /// rank of Q_1 + ... + Q_k and dbar_k = D - (d_1 + ... + d_k) is the degree
  /// of the k-th filtration step. Starts at (0, D), ends at (n, 0).
  std::vector<std::pair<int, Rat>> cumulative() const;

  /// HN data of the kernel of E -> Q_1 (drops the first quotient).
  /// Only defined when the bundle is unstable.
  HNData tail() const;

  friend bool operator==(const HNData&, const HNData&) = default;

 private:
  explicit HNData(std::vector<SemistablePiece> quotients) : quotients_(std::move(quotients)) {}

  std::vector<SemistablePiece> quotients_;
};

}  // namespace pecycles
