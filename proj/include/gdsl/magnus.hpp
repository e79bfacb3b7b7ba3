#pragma once

#include <map>
#include <string>
#include <vector>

#include "gdsl/diagram.hpp"
#include "gdsl/embed.hpp"

namespace gdsl {

/// Element of the reduced free group on n generators in Magnus normal form:
/// a truncated integer series over noncommuting symbols X_1..X_n where any
/// monomial with a repeated symbol is zero. Group elements have constant
/// term 1; x_i maps to 1 + X_i and x_i^{-1} to 1 - X_i.
class MagnusElement {
 public:
  explicit MagnusElement(int n = 1, long long constant = 1) : n_(n) {
    if (constant != 0) coeffs_[{}] = constant;
  }

  static MagnusElement generator(int n, int index) {
    MagnusElement e(n, 1);
    e.coeffs_[{index}] = 1;
    return e;
  }

  static MagnusElement generator_inverse(int n, int index) {
    MagnusElement e(n, 1);
    e.coeffs_[{index}] = -1;
    return e;
  }

  int rank() const { return n_; }

  long long coefficient(const std::vector<int>& monomial) const {
    auto it = coeffs_.find(monomial);
    return it == coeffs_.end() ? 0 : it->second;
  }

  const std::map<std::vector<int>, long long>& coefficients() const { return coeffs_; }

  friend bool operator==(const MagnusElement& a, const MagnusElement& b) {
    return a.n_ == b.n_ && a.coeffs_ == b.coeffs_;
  }

  friend MagnusElement operator*(const MagnusElement& a, const MagnusElement& b) {
    if (a.n_ != b.n_) throw Error("magnus product: rank mismatch");
    MagnusElement out(a.n_, 0);
    for (const auto& [ma, ca] : a.coeffs_)
      for (const auto& [mb, cb] : b.coeffs_) {
        std::vector<int> m = ma;
        m.insert(m.end(), mb.begin(), mb.end());
        if (has_repeat(m)) continue;
        long long& slot = out.coeffs_[m];
        slot = checked_add(slot, checked_mul(ca, cb));
        if (slot == 0) out.coeffs_.erase(m);
      }
    return out;
  }

  friend MagnusElement operator+(const MagnusElement& a, const MagnusElement& b) {
    if (a.n_ != b.n_) throw Error("magnus sum: rank mismatch");
    MagnusElement out = a;
    for (const auto& [m, c] : b.coeffs_) {
      long long& slot = out.coeffs_[m];
      slot = checked_add(slot, c);
      if (slot == 0) out.coeffs_.erase(m);
    }
    return out;
  }

  MagnusElement scaled(long long k) const {
    MagnusElement out(n_, 0);
    if (k == 0) return out;
    for (const auto& [m, c] : coeffs_) out.coeffs_[m] = checked_mul(c, k);
    return out;
  }

  /// Two-sided inverse of a group-like element (constant term 1):
  /// (1 + N)^-1 = 1 - N + N^2 - ..., which terminates by truncation.
  MagnusElement inverse() const {
    if (coefficient({}) != 1)
      throw Error("magnus inverse: element is not group-like (constant term must be 1)");
    MagnusElement nilpotent = *this + MagnusElement(n_, -1);
    MagnusElement acc(n_, 1);
    MagnusElement power(n_, 1);
    for (int k = 1; k <= n_; ++k) {
      power = power * nilpotent;
      if (power.coeffs_.empty()) break;
      acc = acc + power.scaled(k % 2 ? -1 : 1);
    }
    return acc;
  }

  std::string str() const {
    if (coeffs_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : coeffs_) {
      if (!s.empty() || c < 0) s += c < 0 ? "-" : "+";
      long long a = c < 0 ? -c : c;
      if (a != 1 || m.empty()) s += std::to_string(a);
      for (int i : m) s += "X" + std::to_string(i + 1);
    }
    return s;
  }

 private:
  static bool has_repeat(const std::vector<int>& m) {
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = i + 1; j < m.size(); ++j)
        if (m[i] == m[j]) return true;
    return false;
  }

  int n_;
  std::map<std::vector<int>, long long> coeffs_;
};

/// Evaluates a word in the generators (index, exponent sign) in RF_n.
inline MagnusElement rf_word(int n, const std::vector<std::pair<int, int>>& word) {
  MagnusElement acc(n, 1);
  for (auto [index, sign] : word)
    acc = acc * (sign > 0 ? MagnusElement::generator(n, index)
                          : MagnusElement::generator_inverse(n, index));
  return acc;
}

inline MagnusElement rf_multiply(const MagnusElement& a, const MagnusElement& b) {
  return a * b;
}

inline MagnusElement rf_invert(const MagnusElement& a) { return a.inverse(); }

}  // namespace gdsl
