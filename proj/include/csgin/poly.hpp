#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "csgin/field.hpp"
#include "csgin/ring.hpp"

namespace csgin {

template <FieldElement K>
struct Term {
  Monomial mono;
  K coeff;
};

/// Sparse polynomial in a BlockRing. Terms are kept strictly decreasing in the
/// ambient graded reverse lex order with nonzero coefficients, so equal
/// polynomials have equal term lists.
template <FieldElement K>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr ring, const K& c) {
    Polynomial p(std::move(ring));
    if (!c.is_zero()) p.terms_.push_back({Monomial(), c});
    return p;
  }
  static Polynomial constant(RingPtr ring, long long c) {
    K k = K::from_int(c, ring->characteristic());
    return constant(std::move(ring), k);
  }
  static Polynomial monomial(RingPtr ring, const Monomial& m, const K& c) {
    Polynomial p(std::move(ring));
    if (!c.is_zero()) p.terms_.push_back({m, c});
    return p;
  }
  static Polynomial variable(RingPtr ring, std::size_t var) {
    if (var >= ring->num_vars()) throw std::out_of_range("variable index out of range");
    K one = K::from_int(1, ring->characteristic());
    return monomial(std::move(ring), Monomial::variable(var), one);
  }
  /// Sorts and combines arbitrary terms.
  static Polynomial from_terms(RingPtr ring, std::vector<Term<K>> terms) {
    Polynomial p(std::move(ring));
    const std::size_t n = p.ring_->num_vars();
    std::sort(terms.begin(), terms.end(), [n](const Term<K>& a, const Term<K>& b) {
      return ambient_compare(a.mono, b.mono, n) > 0;
    });
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
        p.terms_.back().coeff += t.coeff;
        if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
      } else if (!t.coeff.is_zero()) {
        p.terms_.push_back(std::move(t));
      }
    }
    return p;
  }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term<K>>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Term<K>& leading_term() const { return terms_.front(); }
  K zero_coeff() const { return K::from_int(0, ring_->characteristic()); }
  K one_coeff() const { return K::from_int(1, ring_->characteristic()); }

  Polynomial operator-() const {
    Polynomial r(*this);
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return combine(a, b, false); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return combine(a, b, true); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    require_same_ring(a.ring_, b.ring_);
    std::vector<Term<K>> out;
    out.reserve(a.size() * b.size());
    for (const auto& s : a.terms_)
      for (const auto& t : b.terms_) out.push_back({s.mono * t.mono, s.coeff * t.coeff});
    return from_terms(a.ring_, std::move(out));
  }

  friend Polynomial operator*(const K& c, const Polynomial& a) {
    Polynomial r(a.ring_);
    if (c.is_zero()) return r;
    r.terms_ = a.terms_;
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
  }

  /// Multiplies by a monomial times a scalar.
  Polynomial times(const Monomial& m, const K& c) const {
    Polynomial r(ring_);
    if (c.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (!same_ring(a.ring_, b.ring_) || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (!(a.terms_[i].mono == b.terms_[i].mono) || !(a.terms_[i].coeff == b.terms_[i].coeff))
        return false;
    return true;
  }

  /// Monic rescaling (leading coefficient 1); zero stays zero.
  Polynomial monic() const {
    if (is_zero()) return *this;
    return terms_.front().coeff.inverse() * *this;
  }

  /// True iff every term has the same multidegree in Z^n.
  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    auto d = ring_->multidegree(terms_.front().mono);
    for (const auto& t : terms_)
      if (ring_->multidegree(t.mono) != d) return false;
    return true;
  }

  /// Multidegree of a nonzero homogeneous polynomial.
  std::vector<int> multidegree() const {
    if (terms_.empty()) throw std::invalid_argument("multidegree of zero");
    if (!is_homogeneous()) throw std::invalid_argument("multidegree of a non-homogeneous polynomial");
    return ring_->multidegree(terms_.front().mono);
  }

  unsigned total_degree() const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
  }

  std::map<std::vector<int>, Polynomial> homogeneous_components() const {
    std::map<std::vector<int>, std::vector<Term<K>>> parts;
    for (const auto& t : terms_) parts[ring_->multidegree(t.mono)].push_back(t);
    std::map<std::vector<int>, Polynomial> out;
    for (auto& [deg, ts] : parts) out.emplace(deg, from_terms(ring_, std::move(ts)));
    return out;
  }

  std::uint32_t support() const {
    std::uint32_t s = 0;
    for (const auto& t : terms_) s |= t.mono.support();
    return s;
  }

  /// Moves the polynomial into another ring; var_map[v] is the target index of variable v.
  Polynomial map_to(RingPtr target, const std::vector<std::size_t>& var_map) const {
    std::vector<Term<K>> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      Monomial m;
      for (std::size_t v = 0; v < ring_->num_vars(); ++v)
        if (t.mono[v]) {
          if (var_map.at(v) >= target->num_vars()) throw std::out_of_range("variable has no image");
          m.set(var_map[v], m[var_map[v]] + t.mono[v]);
        }
      out.push_back({m, t.coeff});
    }
    return from_terms(std::move(target), std::move(out));
  }

  /// Sets every variable in `vars` (bit mask) to 1.
  Polynomial set_to_one(std::uint32_t vars) const {
    std::vector<Term<K>> out;
    for (const auto& t : terms_) {
      Monomial m = t.mono;
      for (std::size_t v = 0; v < ring_->num_vars(); ++v)
        if ((vars >> v) & 1u) m.set(v, 0);
      out.push_back({m, t.coeff});
    }
    return from_terms(ring_, std::move(out));
  }

  /// Substitutes images[v] for each variable v (all images in `target`).
  Polynomial substitute(RingPtr target, const std::vector<Polynomial>& images) const {
    if (images.size() != ring_->num_vars()) throw std::invalid_argument("one image per variable required");
    std::map<std::pair<std::size_t, unsigned>, Polynomial> powers;
    auto power = [&](std::size_t v, unsigned e) -> const Polynomial& {
      unsigned have = 1;
      powers.try_emplace({v, 1u}, images[v]);
      while (powers.count({v, have + 1}) && have < e) ++have;
      for (; have < e; ++have) powers.emplace(std::make_pair(v, have + 1), powers.at({v, have}) * images[v]);
      return powers.at({v, e});
    };
    std::vector<Term<K>> acc;
    for (const auto& t : terms_) {
      Polynomial prod = constant(target, t.coeff);
      for (std::size_t v = 0; v < ring_->num_vars(); ++v)
        if (t.mono[v]) prod = prod * power(v, t.mono[v]);
      acc.insert(acc.end(), prod.terms_.begin(), prod.terms_.end());
    }
    return from_terms(std::move(target), std::move(acc));
  }

 private:
  static Polynomial combine(const Polynomial& a, const Polynomial& b, bool subtract) {
    require_same_ring(a.ring_, b.ring_);
    const std::size_t n = a.ring_->num_vars();
    Polynomial r(a.ring_);
    r.terms_.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      int c = i == a.size() ? -1 : j == b.size() ? 1 : ambient_compare(a.terms_[i].mono, b.terms_[j].mono, n);
      if (c > 0) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (c < 0) {
        Term<K> t = b.terms_[j++];
        if (subtract) t.coeff = -t.coeff;
        r.terms_.push_back(std::move(t));
      } else {
        K s = subtract ? a.terms_[i].coeff - b.terms_[j].coeff : a.terms_[i].coeff + b.terms_[j].coeff;
        if (!s.is_zero()) r.terms_.push_back({a.terms_[i].mono, s});
        ++i;
        ++j;
      }
    }
    return r;
  }

  RingPtr ring_;
  std::vector<Term<K>> terms_;
};

/// Layout of S = T[y_1..y_u]: block i of S is block i of T followed by y_i.
struct HomogenizationLayout {
  RingPtr source;
  RingPtr target;
  std::vector<std::size_t> x_to_target;  // T variable -> S variable
  std::vector<std::size_t> y_var;        // block -> S index of y_i
};

HomogenizationLayout make_homogenization_layout(const RingPtr& source, const std::string& y_prefix = "y");

/// Raised when a requested homogenization degree is too small.
class HomogenizationError : public std::invalid_argument {
 public:
  HomogenizationError(const std::string& what, std::size_t block)
      : std::invalid_argument(what), block_(block) {}
  std::size_t block() const { return block_; }

 private:
  std::size_t block_;
};

/// Z^u-homogenization of f in T: each term x^a gets y^(c - deg a) where c is the
/// componentwise maximum of the term degrees, or the given target degree.
template <FieldElement K>
Polynomial<K> homogenize(const Polynomial<K>& f, const HomogenizationLayout& layout,
                         const std::vector<int>* target_degree = nullptr) {
  require_same_ring(f.ring(), layout.source);
  if (f.is_zero()) throw std::invalid_argument("cannot homogenize the zero polynomial");
  const std::size_t u = layout.source->num_blocks();
  std::vector<int> top(u, 0);
  for (const auto& t : f.terms()) {
    auto d = layout.source->multidegree(t.mono);
    for (std::size_t i = 0; i < u; ++i) top[i] = std::max(top[i], d[i]);
  }
  if (target_degree) {
    if (target_degree->size() != u) throw std::invalid_argument("target degree has wrong length");
    for (std::size_t i = 0; i < u; ++i)
      if ((*target_degree)[i] < top[i])
        throw HomogenizationError("target degree too small in block " + std::to_string(i + 1), i);
    top = *target_degree;
  }
  std::vector<Term<K>> out;
  for (const auto& t : f.terms()) {
    auto d = layout.source->multidegree(t.mono);
    Monomial m;
    for (std::size_t v = 0; v < layout.source->num_vars(); ++v)
      if (t.mono[v]) m.set(layout.x_to_target[v], t.mono[v]);
    for (std::size_t i = 0; i < u; ++i)
      if (top[i] - d[i] > 0) m.set(layout.y_var[i], static_cast<unsigned>(top[i] - d[i]));
    out.push_back({m, t.coeff});
  }
  return Polynomial<K>::from_terms(layout.target, std::move(out));
}

/// Sets every y_i to 1 and returns to T.
template <FieldElement K>
Polynomial<K> dehomogenize(const Polynomial<K>& f, const HomogenizationLayout& layout) {
  require_same_ring(f.ring(), layout.target);
  std::vector<std::size_t> back(layout.target->num_vars(), layout.source->num_vars());
  for (std::size_t v = 0; v < layout.x_to_target.size(); ++v) back[layout.x_to_target[v]] = v;
  std::vector<Term<K>> out;
  for (const auto& t : f.terms()) {
    Monomial m;
    for (std::size_t v = 0; v < layout.target->num_vars(); ++v)
      if (t.mono[v] && back[v] < layout.source->num_vars()) m.set(back[v], t.mono[v]);
    out.push_back({m, t.coeff});
  }
  return Polynomial<K>::from_terms(layout.source, std::move(out));
}

}  // namespace csgin
