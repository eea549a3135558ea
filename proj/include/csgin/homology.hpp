#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "csgin/monomial_ideal.hpp"

namespace csgin {

/// Simplicial complex on vertices 0..n-1, faces as bit masks. A complex with no
/// facets is the void complex; {∅} is the complex whose only face is empty.
class SimplicialComplex {
 public:
  SimplicialComplex(std::size_t vertices, std::vector<std::uint32_t> facets);

  /// Stanley–Reisner complex of a squarefree monomial ideal.
  static SimplicialComplex stanley_reisner(const MonomialIdeal& ideal);

  std::size_t num_vertices() const { return n_; }
  const std::vector<std::uint32_t>& facets() const { return facets_; }
  bool is_void() const { return facets_.empty(); }
  bool contains(std::uint32_t face) const;
  int dimension() const;  // -1 for {∅}; -2 for the void complex

  /// All faces, the empty face included when the complex is not void.
  std::vector<std::uint32_t> faces() const;

  SimplicialComplex restriction(std::uint32_t vertices) const;
  SimplicialComplex link(std::uint32_t face) const;
  /// {τ : complement of τ is not a face}.
  SimplicialComplex alexander_dual() const;

 private:
  std::size_t n_;
  std::vector<std::uint32_t> facets_;
};

/// Ranks of reduced homology H̃_i over the field of the given characteristic,
/// entry k holding i = k - 1 (i from -1 to dim). Empty for the void complex.
std::vector<std::size_t> reduced_homology_ranks(const SimplicialComplex& complex, std::uint32_t characteristic);

/// Multigraded Betti numbers β_{i,σ}(I) of the ideal (β_0 counts generators).
class BettiTable {
 public:
  void add(int i, std::uint32_t face, std::size_t value);
  const std::map<std::pair<int, std::uint32_t>, std::size_t>& multigraded() const { return fine_; }
  /// (i, j) -> β_{i,j}, summed over squarefree degrees of total degree j.
  std::map<std::pair<int, int>, std::size_t> graded() const;
  std::size_t get(int i, int j) const;
  std::size_t get_fine(int i, std::uint32_t face) const;
  bool empty() const { return fine_.empty(); }

  friend bool operator==(const BettiTable& a, const BettiTable& b) { return a.fine_ == b.fine_; }

 private:
  std::map<std::pair<int, std::uint32_t>, std::size_t> fine_;
};

/// β_{i,σ}(I) = dim H̃_{|σ|-i-2}(Δ|σ).
BettiTable betti_direct(const MonomialIdeal& ideal);
/// β_{i,σ}(I) = dim H̃_{i-1}(link of the complement of σ in the Alexander dual complex).
BettiTable betti_squarefree(const MonomialIdeal& ideal);

/// dim_K H^i_m(S/I)_d for integer degree d.
std::size_t local_cohomology_hilbert(const MonomialIdeal& ideal, int i, int degree);

struct ExtremalBetti {
  int i;
  int j;
  std::size_t value;
  friend bool operator==(const ExtremalBetti&, const ExtremalBetti&) = default;
};

struct HomologicalInvariants {
  std::optional<int> regularity;           // none for the zero ideal
  std::optional<int> projective_dimension;  // none for the zero ideal
  std::vector<ExtremalBetti> extremal;
};

HomologicalInvariants homological_invariants(const BettiTable& table);
HomologicalInvariants homological_invariants(const MonomialIdeal& ideal);

/// Reisner: every link, the empty face included, has vanishing reduced homology
/// below its dimension.
bool reisner_cm(const MonomialIdeal& ideal);

/// (i, d) -> dim H^i_m(S/I)_d over the window d in [-(N + pd), pd].
using LocalCohomologyTable = std::map<std::pair<int, int>, std::size_t>;
LocalCohomologyTable local_cohomology_table(const MonomialIdeal& ideal, int pd);

struct ConjectureReport {
  bool local_cohomology_equal = false;
  bool extremal_equal = false;
  int window_low = 0;
  int window_high = 0;
  LocalCohomologyTable lhs;
  LocalCohomologyTable rhs;
  std::vector<ExtremalBetti> lhs_extremal;
  std::vector<ExtremalBetti> rhs_extremal;
  bool holds() const { return local_cohomology_equal && extremal_equal; }
};

/// Compares Z-graded local cohomology tables and extremal Betti numbers of I and J.
ConjectureReport compare_local_cohomology(const MonomialIdeal& ideal, const MonomialIdeal& gin);

}  // namespace csgin
