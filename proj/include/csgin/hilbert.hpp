#pragma once

#include <map>
#include <string>
#include <vector>

#include "csgin/monomial_ideal.hpp"

namespace csgin {

/// Integer Laurent polynomial in z_1..z_n. Zero coefficients are never stored.
class LaurentPoly {
 public:
  using Exponent = std::vector<int>;

  explicit LaurentPoly(std::size_t nvars = 0) : nvars_(nvars) {}
  static LaurentPoly one(std::size_t nvars);
  static LaurentPoly monomial(Exponent e, long long coeff = 1);

  std::size_t num_vars() const { return nvars_; }
  const std::map<Exponent, long long>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  long long coefficient(const Exponent& e) const;
  void add_term(const Exponent& e, long long coeff);

  LaurentPoly operator-() const;
  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  /// Terms of total degree d.
  LaurentPoly component(int d) const;
  /// Smallest total degree present; requires a nonzero polynomial.
  int min_degree() const;
  bool has_negative_exponent() const;

  /// Written as `z1^2*z2 + 2*z3 - 1`, highest total degree first.
  std::string to_string() const;

 private:
  std::size_t nvars_;
  std::map<Exponent, long long> terms_;
};

/// Parses the text produced by LaurentPoly::to_string (nonnegative exponents).
LaurentPoly parse_laurent(const std::string& text, std::size_t nvars);

enum class PivotRule {
  MostFrequent,  // variable in the most generators, ties by lowest index
  LastVariable,  // highest-index variable occurring in two or more generators
};

/// Numerator of the Z^n-graded Hilbert series of S/I over prod (1 - z_i)^{d_i}.
LaurentPoly k_polynomial(const MonomialIdeal& ideal, PivotRule rule = PivotRule::MostFrequent);

/// K(1 - z_1, ..., 1 - z_n). Rejects negative exponents.
LaurentPoly c_polynomial(const LaurentPoly& k);

/// Terms whose exponents are minimal under divisibility in the support.
LaurentPoly min_part(const LaurentPoly& g);

/// min_part of the C-polynomial of S/I.
LaurentPoly g_multidegree(const MonomialIdeal& ideal);
/// Component of the C-polynomial of S/I in total degree codim(I).
LaurentPoly multidegree(const MonomialIdeal& ideal);

bool multiplicity_free(const LaurentPoly& d);

struct MixedMultiplicities {
  std::map<std::vector<int>, long long> values;  // a -> f(a)
  std::vector<std::vector<int>> flagged;         // exponents a' with some a'_i = d_i
};

/// Translates MDeg terms e(a') z^{a'} into f(a) with a_i = d_i - 1 - a'_i.
MixedMultiplicities mdeg_to_mixed_multiplicities(const LaurentPoly& mdeg, const std::vector<int>& block_sizes);

}  // namespace csgin
