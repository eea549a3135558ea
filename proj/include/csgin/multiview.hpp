#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "csgin/generic_initial.hpp"
#include "csgin/linear_closure.hpp"

namespace csgin {

/// Camera matrices as integer rows, read from {"n": int, "cameras": [[[row]..]..], "field": ...}.
struct CameraSpec {
  int n = 0;
  std::vector<std::vector<std::vector<long long>>> cameras;
  std::uint32_t characteristic = kDefaultPrime;
};

CameraSpec parse_camera_json(const std::string& text);

/// Target ring K[x_{ij} : j <= d_i] with one block per camera.
RingPtr multiview_ring(const std::vector<int>& d, std::uint32_t characteristic);

/// m full-row-rank matrices A_i of size d_i x n.
template <FieldElement K>
class CameraSystem {
 public:
  CameraSystem(std::size_t n, std::vector<Matrix<K>> cameras, std::uint32_t characteristic)
      : n_(n), cameras_(std::move(cameras)) {
    if (cameras_.empty()) throw std::invalid_argument("at least one camera is required");
    std::vector<int> d;
    for (std::size_t i = 0; i < cameras_.size(); ++i) {
      const auto& a = cameras_[i];
      if (a.cols() != n_) throw std::invalid_argument("camera " + std::to_string(i + 1) + " has the wrong width");
      if (a.rows() == 0) throw std::invalid_argument("camera " + std::to_string(i + 1) + " has no rows");
      if (auto row = first_dependent_row(a))
        throw RankDeficient("camera " + std::to_string(i + 1) + " is not of full row rank (row " +
                                std::to_string(*row + 1) + ")",
                            *row);
      d.push_back(static_cast<int>(a.rows()));
    }
    ring_ = multiview_ring(d, characteristic);
  }

  static CameraSystem from_spec(const CameraSpec& spec) {
    std::vector<Matrix<K>> cams;
    for (const auto& rows : spec.cameras)
      cams.push_back(Matrix<K>::from_rows(rows, static_cast<std::size_t>(spec.n), spec.characteristic));
    return CameraSystem(static_cast<std::size_t>(spec.n), std::move(cams), spec.characteristic);
  }

  std::size_t n() const { return n_; }
  std::size_t m() const { return cameras_.size(); }
  const std::vector<Matrix<K>>& cameras() const { return cameras_; }
  const RingPtr& ring() const { return ring_; }
  std::uint32_t characteristic() const { return ring_->characteristic(); }

 private:
  std::size_t n_;
  std::vector<Matrix<K>> cameras_;
  RingPtr ring_;
};

/// A_i extended by unit vectors to an invertible n x n matrix (rows of A_i first).
template <FieldElement K>
Matrix<K> extend_to_basis(const Matrix<K>& a) {
  const std::size_t n = a.cols();
  const std::uint32_t ch = a.characteristic();
  std::vector<std::vector<K>> rows;
  for (std::size_t r = 0; r < a.rows(); ++r) rows.push_back(a.row(r));
  auto as_matrix = [&](const std::vector<std::vector<K>>& rs) {
    Matrix<K> m(rs.size(), n, ch);
    for (std::size_t i = 0; i < rs.size(); ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = rs[i][j];
    return m;
  };
  for (std::size_t k = 0; k < n && rows.size() < n; ++k) {
    std::vector<K> e(n, K::from_int(0, ch));
    e[k] = K::from_int(1, ch);
    rows.push_back(e);
    if (rank(as_matrix(rows)) < rows.size()) rows.pop_back();
  }
  return as_matrix(rows);
}

/// I_2 of the m x n matrix of the Segre embedding, rewritten in the coordinates
/// w_{i,j} = (B_i z_i)_j, followed by elimination of w_{i,j} for j > d_i.
template <FieldElement K>
Ideal<K> multiview_segre_route(const CameraSystem<K>& sys) {
  const std::size_t m = sys.m(), n = sys.n();
  const std::uint32_t ch = sys.characteristic();
  std::vector<std::string> names;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < n; ++k) names.push_back("w" + std::to_string(i + 1) + "_" + std::to_string(k + 1));
  RingPtr w = make_ring(std::vector<int>(m, static_cast<int>(n)), ch, names);
  PolyMatrix<K> z(w, m, n);
  for (std::size_t i = 0; i < m; ++i) {
    Matrix<K> binv = inverse(extend_to_basis(sys.cameras()[i]));
    for (std::size_t k = 0; k < n; ++k) {
      std::vector<Term<K>> terms;
      for (std::size_t j = 0; j < n; ++j)
        if (!binv(k, j).is_zero()) terms.push_back({Monomial::variable(w->var(i, j)), binv(k, j)});
      z(i, k) = Polynomial<K>::from_terms(w, std::move(terms));
    }
  }
  Ideal<K> segre(w, z.minors(2));
  std::vector<std::size_t> surplus;
  std::vector<std::size_t> back(w->num_vars(), sys.ring()->num_vars());
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (j >= sys.cameras()[i].rows()) surplus.push_back(w->var(i, j));
      else back[w->var(i, j)] = sys.ring()->var(i, j);
    }
  std::vector<Polynomial<K>> gens;
  Ideal<K> kept = eliminate(segre, surplus);
  for (const auto& g : kept.generators()) gens.push_back(g.map_to(sys.ring(), back));
  return Ideal<K>(sys.ring(), std::move(gens));
}

/// Ker φ_0 as a space of linear forms on the target ring: relations among the rows of all cameras.
template <FieldElement K>
LinearSpace<K> kernel_space(const CameraSystem<K>& sys) {
  const std::size_t total = sys.ring()->num_vars();
  Matrix<K> stacked(total, sys.n(), sys.characteristic());
  for (std::size_t i = 0; i < sys.m(); ++i)
    for (std::size_t j = 0; j < sys.cameras()[i].rows(); ++j)
      for (std::size_t k = 0; k < sys.n(); ++k) stacked(sys.ring()->var(i, j), k) = sys.cameras()[i](j, k);
  auto rel = kernel(stacked.transpose());
  Matrix<K> basis(rel.size(), total, sys.characteristic());
  for (std::size_t r = 0; r < rel.size(); ++r)
    for (std::size_t c = 0; c < total; ++c) basis(r, c) = rel[r][c];
  return LinearSpace<K>(sys.ring(), std::move(basis));
}

/// (Ker φ_0)^⋆ by homogenizing, saturating and eliminating the homogenizing variables.
template <FieldElement K>
Ideal<K> multiview_star_route(const CameraSystem<K>& sys) {
  LinearSpace<K> v = kernel_space(sys);
  return contract_to_t(v, jhom_saturation(v));
}

template <FieldElement K>
bool is_CS_multiview(const CameraSystem<K>& sys, const GinOptions& options = {}) {
  return is_CS(multiview_star_route(sys), options);
}

/// Coordinates of the generic example: A_j selects x_{d(j-1)+1..jd} for j < m and
/// A_m has rows -sum_j x_{d(j-1)+h}.
template <FieldElement K>
CameraSystem<K> normalized_example_system(std::size_t m, std::size_t d, std::uint32_t characteristic) {
  if (m < 2 || m > d) throw std::invalid_argument("the example needs 2 <= m <= d");
  const std::size_t n = (m - 1) * d;
  std::vector<Matrix<K>> cams;
  for (std::size_t j = 0; j < m - 1; ++j) {
    Matrix<K> a(d, n, characteristic);
    for (std::size_t h = 0; h < d; ++h) a(h, j * d + h) = K::from_int(1, characteristic);
    cams.push_back(std::move(a));
  }
  Matrix<K> last(d, n, characteristic);
  for (std::size_t h = 0; h < d; ++h)
    for (std::size_t j = 0; j < m - 1; ++j) last(h, j * d + h) = K::from_int(-1, characteristic);
  cams.push_back(std::move(last));
  return CameraSystem<K>(n, std::move(cams), characteristic);
}

/// m random d_i x n cameras of full row rank drawn from the stream.
template <FieldElement K>
CameraSystem<K> random_camera_system(std::size_t n, const std::vector<int>& d, SplitMix64& rng,
                                     std::uint32_t characteristic) {
  std::vector<Matrix<K>> cams;
  for (int di : d) {
    for (;;) {
      Matrix<K> a(static_cast<std::size_t>(di), n, characteristic);
      for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < n; ++c) a(r, c) = random_scalar<K>(rng, characteristic);
      if (rank(a) == a.rows()) {
        cams.push_back(std::move(a));
        break;
      }
    }
  }
  return CameraSystem<K>(n, std::move(cams), characteristic);
}

/// I_m of the m x d matrix (x_{ik}) of the target ring.
template <FieldElement K>
Ideal<K> generic_maximal_minors(const RingPtr& ring, std::size_t m, std::size_t d) {
  std::vector<std::vector<std::size_t>> vars(m, std::vector<std::size_t>(d));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < d; ++k) vars[i][k] = ring->var(i, k);
  return Ideal<K>(ring, PolyMatrix<K>::generic(ring, vars).minors(m));
}

}  // namespace csgin
