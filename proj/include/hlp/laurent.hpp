#pragma once

#include <map>
#include <sstream>
#include <string>

#include "hlp/rational.hpp"

namespace hlp {

// Laurent polynomial in the degree-2 generator u, over the rationals.
// Localization sums take values here; exponents run in both directions.
// Zero coefficients are never stored.
class LaurentU {
 public:
  LaurentU() = default;
  explicit LaurentU(const Rational& constant) {
    if (constant != 0) coef_[0] = constant;
  }

  static LaurentU monomial(int power, const Rational& c) {
    LaurentU p;
    if (c != 0) p.coef_[power] = c;
    return p;
  }

  Rational coeff(int power) const {
    auto it = coef_.find(power);
    return it == coef_.end() ? Rational(0) : it->second;
  }

  const std::map<int, Rational>& terms() const { return coef_; }

  bool is_zero() const { return coef_.empty(); }

  // Support contained in {u^0}: the sum of a genuine top-degree class.
  bool is_u_free() const {
    return coef_.empty() || (coef_.size() == 1 && coef_.begin()->first == 0);
  }

  void add_term(int power, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = coef_.emplace(power, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) coef_.erase(it);
    }
  }

  LaurentU& operator+=(const LaurentU& o) {
    for (const auto& [p, c] : o.coef_) add_term(p, c);
    return *this;
  }
  LaurentU& operator-=(const LaurentU& o) {
    for (const auto& [p, c] : o.coef_) add_term(p, -c);
    return *this;
  }
  friend LaurentU operator+(LaurentU a, const LaurentU& b) { return a += b; }
  friend LaurentU operator-(LaurentU a, const LaurentU& b) { return a -= b; }

  friend LaurentU operator*(const LaurentU& a, const LaurentU& b) {
    LaurentU out;
    for (const auto& [pa, ca] : a.coef_)
      for (const auto& [pb, cb] : b.coef_) out.add_term(pa + pb, ca * cb);
    return out;
  }

  friend LaurentU operator*(const Rational& s, const LaurentU& a) {
    LaurentU out;
    for (const auto& [p, c] : a.coef_) out.add_term(p, s * c);
    return out;
  }

  bool operator==(const LaurentU& o) const { return coef_ == o.coef_; }
  bool operator!=(const LaurentU& o) const { return !(*this == o); }

  std::string str() const {
    if (coef_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = coef_.rbegin(); it != coef_.rend(); ++it) {
      if (!first) os << " + ";
      first = false;
      if (it->first == 0)
        os << to_string(it->second);
      else
        os << to_string(it->second) << "*u^" << it->first;
    }
    return os.str();
  }

 private:
  std::map<int, Rational> coef_;
};

}  // namespace hlp
