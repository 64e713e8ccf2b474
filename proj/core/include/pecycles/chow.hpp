#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "pecycles/rational.hpp"

namespace pecycles {

/// Parameters of the numerical ring of a projective bundle P(E) over a smooth
/// curve: the rank n of E and its degree. The ring is generated by the Serre
/// class xi and the fiber class f subject to
///
///   f^2 = 0,   xi^n = degree * xi^(n-1) * f,
///
/// so the reduced monomial basis is { xi^j * f^eps : 0 <= j <= n-1, eps in {0,1} }
/// and the point class is xi^(n-1) * f. Rank 1 is allowed: the basis collapses
/// to {1, f} and xi itself reduces to degree * f.
struct RingSpec {
  int rank = 1;
  Rat degree;

  friend bool operator==(const RingSpec&, const RingSpec&) = default;
};

/// An element of the ring, stored fully reduced with exact rational
/// coefficients. Elements may mix codimensions; the codimension of the
/// monomial xi^j * f^eps is j + eps. Value type, immutable in spirit: all
/// operations return new elements.
class ChowElement {
 public:
  static ChowElement zero(const RingSpec& spec) { return ChowElement(spec); }
  static ChowElement one(const RingSpec& spec) { return monomial(spec, 0, 0); }
  static ChowElement xi(const RingSpec& spec) { return monomial(spec, 1, 0); }
  static ChowElement fiber(const RingSpec& spec) { return monomial(spec, 0, 1); }
  static ChowElement point(const RingSpec& spec) { return monomial(spec, spec.rank - 1, 1); }

  /// c * xi^xi_pow * f^f_pow, reduced. Accepts any nonnegative powers.
  static ChowElement monomial(const RingSpec& spec, int xi_pow, int f_pow, const Rat& c = Rat(1));

  const RingSpec& spec() const { return spec_; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Coefficient of the reduced basis monomial xi^xi_pow * f^f_pow.
  Rat coeff(int xi_pow, int f_pow) const;

  /// Coefficient of the point class xi^(n-1) * f. Mixed-degree input is fine;
  /// everything below top codimension contributes zero.
  Rat degree() const { return coeff(spec_.rank - 1, 1); }

  /// True when every monomial has codimension k (the zero element is
  /// homogeneous of every codimension).
  bool is_homogeneous(int codim) const;

  /// Codimension of a nonzero homogeneous element; nullopt when zero or mixed.
  std::optional<int> codim() const;

  /// The codimension-k part.
  ChowElement component(int codim) const;

  ChowElement& operator+=(const ChowElement& rhs);
  ChowElement& operator-=(const ChowElement& rhs);
  friend ChowElement operator+(ChowElement lhs, const ChowElement& rhs) { return lhs += rhs; }
  friend ChowElement operator-(ChowElement lhs, const ChowElement& rhs) { return lhs -= rhs; }
  friend ChowElement operator-(const ChowElement& x) { return Rat(-1) * x; }
  friend ChowElement operator*(const Rat& c, const ChowElement& x);
  friend ChowElement operator*(const ChowElement& x, const Rat& c) { return c * x; }
  friend ChowElement operator*(const ChowElement& lhs, const ChowElement& rhs);

  ChowElement pow(int k) const;

  friend bool operator==(const ChowElement&, const ChowElement&) = default;

  /// Canonical rendering, terms ordered by (codimension, f-power):
  /// "xi^2 - 3*xi*f", "-2*xi*f", "0". Reparsing the result through the
  /// expression grammar yields an equal element.
  std::string str() const;

 private:
  explicit ChowElement(const RingSpec& spec) : spec_(spec) {}

  RingSpec spec_;
  std::map<std::pair<int, int>, Rat> coeffs_;  // (xi power, f power) -> coefficient
};

/// Numerical class of P(Q) inside P(E) for a quotient bundle Q of rank r and
/// degree d: xi^(n-r) + (d - deg E) * xi^(n-r-1) * f, and the fundamental
/// class when r = n.
ChowElement subbundle_class(const RingSpec& spec, int r, const Rat& d);

void require_same_spec(const ChowElement& a, const ChowElement& b);

}  // namespace pecycles
