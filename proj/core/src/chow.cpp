#include "pecycles/chow.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "pecycles/errors.hpp"

namespace pecycles {

void require_same_spec(const ChowElement& a, const ChowElement& b) {
  if (!(a.spec() == b.spec())) {
    throw SpecMismatch("elements live in different rings (rank/degree mismatch)");
  }
}

ChowElement ChowElement::monomial(const RingSpec& spec, int xi_pow, int f_pow, const Rat& c) {
  if (spec.rank < 1) throw RangeError("ring rank must be >= 1");
  if (xi_pow < 0 || f_pow < 0) throw RangeError("monomial powers must be nonnegative");
  ChowElement out(spec);
  if (c == 0 || f_pow >= 2) return out;
  const int n = spec.rank;
  if (f_pow == 1) {
    if (xi_pow >= n) return out;  // xi^n * f reduces through f^2 = 0
    out.coeffs_[{xi_pow, 1}] = c;
    return out;
  }
  if (xi_pow <= n - 1) {
    out.coeffs_[{xi_pow, 0}] = c;
    return out;
  }
  if (xi_pow == n) {
    // xi^n = degree * xi^(n-1) * f
    if (spec.degree != 0) out.coeffs_[{n - 1, 1}] = c * spec.degree;
    return out;
  }
  return out;  // xi^(n+a), a >= 1, reduces to a multiple of xi^(n-1+a) * f = 0
}

Rat ChowElement::coeff(int xi_pow, int f_pow) const {
  auto it = coeffs_.find({xi_pow, f_pow});
  return it == coeffs_.end() ? Rat(0) : it->second;
}

bool ChowElement::is_homogeneous(int codim) const {
  for (const auto& [mono, c] : coeffs_) {
    if (mono.first + mono.second != codim) return false;
  }
  return true;
}

std::optional<int> ChowElement::codim() const {
  std::optional<int> k;
  for (const auto& [mono, c] : coeffs_) {
    int d = mono.first + mono.second;
    if (k && *k != d) return std::nullopt;
    k = d;
  }
  return k;
}

ChowElement ChowElement::component(int codim) const {
  ChowElement out(spec_);
  for (const auto& [mono, c] : coeffs_) {
    if (mono.first + mono.second == codim) out.coeffs_.emplace(mono, c);
  }
  return out;
}

ChowElement& ChowElement::operator+=(const ChowElement& rhs) {
  require_same_spec(*this, rhs);
  for (const auto& [mono, c] : rhs.coeffs_) {
    auto [it, inserted] = coeffs_.emplace(mono, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) coeffs_.erase(it);
    }
  }
  return *this;
}

ChowElement& ChowElement::operator-=(const ChowElement& rhs) { return *this += Rat(-1) * rhs; }

ChowElement operator*(const Rat& c, const ChowElement& x) {
  ChowElement out(x.spec_);
  if (c == 0) return out;
  for (const auto& [mono, v] : x.coeffs_) out.coeffs_.emplace(mono, c * v);
  return out;
}

ChowElement operator*(const ChowElement& lhs, const ChowElement& rhs) {
  require_same_spec(lhs, rhs);
  ChowElement out(lhs.spec_);
  for (const auto& [ma, ca] : lhs.coeffs_) {
    for (const auto& [mb, cb] : rhs.coeffs_) {
      out += ChowElement::monomial(lhs.spec_, ma.first + mb.first, ma.second + mb.second, ca * cb);
    }
  }
  return out;
}

ChowElement ChowElement::pow(int k) const {
  if (k < 0) throw RangeError("exponent must be nonnegative");
  ChowElement acc = one(spec_);
  for (int i = 0; i < k; ++i) acc = acc * *this;
  return acc;
}

namespace {

std::string monomial_str(int j, int eps) {
  std::string s;
  if (j == 1) s = "xi";
  if (j >= 2) s = "xi^" + std::to_string(j);
  if (eps == 1) {
    if (!s.empty()) s += '*';
    s += 'f';
  }
  return s;  // empty for the unit monomial
}

}  // namespace

std::string ChowElement::str() const {
  if (coeffs_.empty()) return "0";

  std::vector<std::pair<std::pair<int, int>, Rat>> terms(coeffs_.begin(), coeffs_.end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    int ca = a.first.first + a.first.second, cb = b.first.first + b.first.second;
    if (ca != cb) return ca < cb;
    return a.first.second < b.first.second;
  });

  std::ostringstream out;
  bool first = true;
  for (const auto& [mono, c] : terms) {
    Rat a = c;
    if (first) {
      if (a < 0) {
        out << '-';
        a = -a;
      }
    } else {
      out << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    std::string m = monomial_str(mono.first, mono.second);
    if (m.empty()) {
      out << rat_str(a);
    } else if (a == 1) {
      // A bare leading "-xi^j" would reparse as (-xi)^j, so keep the 1 when
      // the first factor carries an exponent.
      if (first && c < 0 && mono.first >= 2) {
        out << "1*" << m;
      } else {
        out << m;
      }
    } else {
      out << rat_str(a) << '*' << m;
    }
    first = false;
  }
  return out.str();
}

ChowElement subbundle_class(const RingSpec& spec, int r, const Rat& d) {
  if (r < 1 || r > spec.rank) throw RangeError("quotient rank must lie in 1..rank");
  if (r == spec.rank) return ChowElement::one(spec);
  const int n = spec.rank;
  return ChowElement::monomial(spec, n - r, 0) +
         ChowElement::monomial(spec, n - r - 1, 1, d - spec.degree);
}

}  // namespace pecycles
