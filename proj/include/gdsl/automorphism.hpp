#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "gdsl/braid.hpp"
#include "gdsl/magnus.hpp"

namespace gdsl {

/// Basis-conjugating automorphism of the reduced free group, stored by the
/// images of the generators (each a conjugate of the generator). The images
/// in Magnus normal form are a canonical representation: two automorphisms
/// are equal iff their image tuples are.
class ConjugatingAutomorphism {
 public:
  explicit ConjugatingAutomorphism(int n = 1) : n_(n) {
    images_.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) images_.push_back(MagnusElement::generator(n, i));
  }

  int rank() const { return n_; }

  const MagnusElement& image(int i) const { return images_[i]; }

  /// x_under -> x_over^sign x_under x_over^-sign, every other generator fixed.
  static ConjugatingAutomorphism crossing(int n, int over, int under, int sign) {
    ConjugatingAutomorphism a(n);
    MagnusElement xo = sign > 0 ? MagnusElement::generator(n, over)
                                : MagnusElement::generator_inverse(n, over);
    a.images_[under] = xo * MagnusElement::generator(n, under) * xo.inverse();
    return a;
  }

  /// Extends the automorphism to the truncated series algebra and applies it.
  MagnusElement apply(const MagnusElement& e) const {
    MagnusElement out(n_, 0);
    for (const auto& [monomial, coeff] : e.coefficients()) {
      MagnusElement term(n_, 1);
      for (int index : monomial) {
        // image of the symbol X_i is f(x_i) - 1
        term = term * (images_[index] + MagnusElement(n_, -1));
      }
      out = out + term.scaled(coeff);
    }
    return out;
  }

  /// Composition in stacking order: (f then g)(x) = g(f(x)).
  ConjugatingAutomorphism then(const ConjugatingAutomorphism& g) const {
    if (g.n_ != n_) throw Error("automorphism composition: rank mismatch");
    ConjugatingAutomorphism out(n_);
    for (int i = 0; i < n_; ++i) out.images_[i] = g.apply(images_[i]);
    return out;
  }

  bool is_identity() const {
    for (int i = 0; i < n_; ++i)
      if (!(images_[i] == MagnusElement::generator(n_, i))) return false;
    return true;
  }

  friend bool operator==(const ConjugatingAutomorphism& a, const ConjugatingAutomorphism& b) {
    return a.n_ == b.n_ && a.images_ == b.images_;
  }

  /// Canonical rendering of the image tuple.
  std::string str() const {
    std::string s;
    for (int i = 0; i < n_; ++i) {
      if (i) s += "; ";
      s += "x" + std::to_string(i + 1) + " -> " + images_[i].str();
    }
    return s;
  }

 private:
  int n_;
  std::vector<MagnusElement> images_;
};

/// The action of a pure braid word on the reduced free group: the composite
/// of one conjugation per classical letter, fold left to right. The strand
/// passing over conjugates the generator of the strand passing under; virtual
/// letters only permute the strand tracking.
inline ConjugatingAutomorphism action(const BraidWord& w) {
  if (!is_pure(w)) throw Error("action: word does not induce the identity permutation");
  std::vector<int> at(static_cast<std::size_t>(w.strand_count));
  std::iota(at.begin(), at.end(), 0);
  ConjugatingAutomorphism acc(w.strand_count);
  for (const BraidLetter& l : w.letters) {
    int lo = at[l.index - 1], hi = at[l.index];
    if (l.sign != 0) {
      int over = l.sign > 0 ? lo : hi;
      int under = l.sign > 0 ? hi : lo;
      acc = acc.then(ConjugatingAutomorphism::crossing(w.strand_count, over, under, l.sign));
    }
    std::swap(at[l.index - 1], at[l.index]);
  }
  return acc;
}

/// Complete invariant of welded pure braids up to self-virtualization: the
/// generator images of the action, rendered canonically.
inline std::string sv_invariant(const BraidWord& w) { return action(w).str(); }

/// Whether the automorphism fixes the product x_1 x_2 ... x_n.
inline bool preserves_product(const ConjugatingAutomorphism& a) {
  int n = a.rank();
  MagnusElement lhs(n, 1), rhs(n, 1);
  for (int i = 0; i < n; ++i) {
    lhs = lhs * a.image(i);
    rhs = rhs * MagnusElement::generator(n, i);
  }
  return lhs == rhs;
}

/// For rank 2: extracts (eta1, eta2) with x1 -> x2^eta1 x1 x2^-eta1 and
/// x2 -> x1^eta2 x2 x1^-eta2. Every basis-conjugating automorphism of the
/// rank-2 reduced free group has this form.
inline std::pair<long long, long long> xi_exponents(const ConjugatingAutomorphism& a) {
  if (a.rank() != 2) throw Error("xi_exponents: rank must be 2");
  long long eta1 = a.image(0).coefficient({1, 0});
  long long eta2 = a.image(1).coefficient({0, 1});
  // verify the images really have the conjugate normal form
  MagnusElement x1 = MagnusElement::generator(2, 0), x2 = MagnusElement::generator(2, 1);
  MagnusElement c1(2, 1), c2(2, 1);
  long long k1 = eta1 < 0 ? -eta1 : eta1, k2 = eta2 < 0 ? -eta2 : eta2;
  for (long long i = 0; i < k1; ++i) c1 = c1 * (eta1 > 0 ? x2 : x2.inverse());
  for (long long i = 0; i < k2; ++i) c2 = c2 * (eta2 > 0 ? x1 : x1.inverse());
  if (!(c1 * x1 * c1.inverse() == a.image(0)) || !(c2 * x2 * c2.inverse() == a.image(1)))
    throw Error("xi_exponents: automorphism is not of conjugate exponent form");
  return {eta1, eta2};
}

}  // namespace gdsl
