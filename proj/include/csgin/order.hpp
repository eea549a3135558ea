#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "csgin/ring.hpp"

namespace csgin {

enum class OrderKind { GradedReverseLex, Lex, BlockElimination };

/// A monomial order on a ring with N variables.
///
/// The order ranks variables through a permutation: position k holds ring variable
/// permutation()[k], and position 0 is the largest variable. Comparisons act on the
/// permuted exponent vector. BlockElimination compares the first front_size()
/// positions by graded reverse lex, then the remaining positions by graded reverse lex.
class TermOrder {
 public:
  static TermOrder grevlex(std::size_t nvars);
  static TermOrder lex(std::size_t nvars);
  /// Eliminates `front` (ring variable indices); front and rest keep ambient relative order.
  static TermOrder elimination(std::size_t nvars, const std::vector<std::size_t>& front);
  static TermOrder permuted(OrderKind kind, std::vector<std::size_t> permutation,
                            std::size_t front_size = 0);

  OrderKind kind() const { return kind_; }
  std::size_t num_vars() const { return perm_.size(); }
  const std::vector<std::size_t>& permutation() const { return perm_; }
  std::size_t front_size() const { return front_; }

  /// Ring monomial -> position-space monomial, and back.
  Monomial to_positions(const Monomial& m) const;
  Monomial from_positions(const Monomial& m) const;

  /// Compares position-space monomials: >0 if a > b.
  int compare_positions(const Monomial& a, const Monomial& b) const;
  /// Compares ring monomials.
  int compare(const Monomial& a, const Monomial& b) const {
    return compare_positions(to_positions(a), to_positions(b));
  }

  bool is_identity_permutation() const;
  /// Stable text key, used for caching Gröbner bases per order.
  std::string key() const;

  friend bool operator==(const TermOrder& a, const TermOrder& b) {
    return a.kind_ == b.kind_ && a.perm_ == b.perm_ && a.front_ == b.front_;
  }

 private:
  TermOrder(OrderKind kind, std::vector<std::size_t> perm, std::size_t front);

  OrderKind kind_;
  std::vector<std::size_t> perm_;
  std::vector<std::size_t> inverse_;
  std::size_t front_ = 0;
};

}  // namespace csgin
