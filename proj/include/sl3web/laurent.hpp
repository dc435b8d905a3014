#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <sstream>
#include <string>

namespace sl3web {

using Int = boost::multiprecision::cpp_int;

/// Sparse Laurent polynomial over arbitrary-precision integers: an element of
/// Z[q, q^-1]. Only nonzero coefficients are stored, so equality of the term
/// maps is equality in the ring.
class LaurentPoly {
 public:
  using Exponent = long long;
  using Terms = std::map<Exponent, Int>;

  LaurentPoly() = default;  // zero

  /// coeff * q^exponent; the zero polynomial when coeff == 0.
  static LaurentPoly monomial(Int coeff, Exponent exponent) {
    LaurentPoly p;
    if (coeff != 0) p.terms_[exponent] = std::move(coeff);
    return p;
  }

  static LaurentPoly zero() { return LaurentPoly(); }
  static LaurentPoly one() { return monomial(1, 0); }

  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r = a;
    for (const auto& [e, c] : b.terms_) {
      Int& slot = r.terms_[e];
      slot += c;
      if (slot == 0) r.terms_.erase(e);
    }
    return r;
  }

  friend LaurentPoly operator-(const LaurentPoly& a) {
    LaurentPoly r;
    for (const auto& [e, c] : a.terms_) r.terms_[e] = -c;
    return r;
  }

  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

  /// Convolution product on exponents.
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Int& slot = r.terms_[ea + eb];
        slot += ca * cb;
        if (slot == 0) r.terms_.erase(ea + eb);
      }
    }
    return r;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  /// The bar involution q -> q^-1.
  LaurentPoly bar() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_[-e] = c;
    return r;
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

  /// Human form with descending exponents, e.g. "q^2 + 1 + q^-2".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      Int c = it->second;
      if (first) {
        if (c < 0) {
          out << "-";
          c = -c;
        }
      } else {
        out << (c < 0 ? " - " : " + ");
        if (c < 0) c = -c;
      }
      first = false;
      const Exponent e = it->first;
      if (e == 0) {
        out << c.str();
      } else {
        if (c != 1) out << c.str();
        out << "q";
        if (e != 1) out << "^" << e;
      }
    }
    return out.str();
  }

 private:
  Terms terms_;
};

inline LaurentPoly q_power(LaurentPoly::Exponent e) { return LaurentPoly::monomial(1, e); }

}  // namespace sl3web
