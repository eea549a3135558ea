#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "csgin/ring.hpp"

namespace csgin {

/// Monomial ideal stored by its minimal generators, sorted decreasing in the ambient order.
/// No generators means the zero ideal; the generator 1 means the unit ideal.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(RingPtr ring) : ring_(std::move(ring)) {}
  MonomialIdeal(RingPtr ring, std::vector<Monomial> generators);

  static MonomialIdeal unit(RingPtr ring) { return MonomialIdeal(std::move(ring), {Monomial()}); }
  /// Prime generated by the variables in `vars` (bit mask).
  static MonomialIdeal prime(RingPtr ring, std::uint32_t vars);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().is_one(); }
  bool contains(const Monomial& m) const;
  bool contains(const MonomialIdeal& other) const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return same_ring(a.ring_, b.ring_) && a.gens_ == b.gens_;
  }
  friend bool operator<(const MonomialIdeal& a, const MonomialIdeal& b);

  std::string to_string() const;

 private:
  RingPtr ring_;
  std::vector<Monomial> gens_;
};

/// Removes non-minimal generators and sorts.
std::vector<Monomial> minimalize(std::vector<Monomial> gens, std::size_t nvars);

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal intersect_all(const RingPtr& ring, const std::vector<MonomialIdeal>& ideals);
MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
/// I : x_var
MonomialIdeal colon_variable(const MonomialIdeal& ideal, std::size_t var);

bool is_squarefree(const MonomialIdeal& ideal);
/// Replaces each generator by the product of its support.
MonomialIdeal radical(const MonomialIdeal& ideal);

/// Raised when an operation defined only for squarefree ideals gets another input.
class NotSquarefree : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Alexander dual of a squarefree ideal: generated by the minimal vertex covers of
/// the generator supports. Computed as an intersection of primes.
MonomialIdeal alexander_dual(const MonomialIdeal& ideal);

/// Minimal vertex covers of the generator supports, by branch and bound search.
/// Each cover is a variable mask; the zero ideal yields the single empty cover.
std::vector<std::uint32_t> minimal_vertex_covers(const MonomialIdeal& ideal);

/// Minimal primes of a squarefree ideal, one prime per minimal cover.
std::vector<MonomialIdeal> minimal_primes(const MonomialIdeal& ideal);

/// Borel-fixedness under the characteristic-0 exchange rule x_{i,j} -> x_{i,j-1}.
bool is_borel_fixed(const MonomialIdeal& ideal);

/// P_a: generated by the first a_i variables of block i.
MonomialIdeal borel_prime(const RingPtr& ring, const std::vector<int>& a);

/// Krull dimension of S/I, via the radical.
int dimension(const MonomialIdeal& ideal);
int codimension(const MonomialIdeal& ideal);

/// True iff every generator uses only the first variable of each block.
bool uses_only_first_variables(const MonomialIdeal& ideal);

}  // namespace csgin
