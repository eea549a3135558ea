#include "csgin/order.hpp"

#include <algorithm>
#include <stdexcept>

namespace csgin {

namespace {

int grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  unsigned da = 0, db = 0;
  for (std::size_t k = lo; k < hi; ++k) {
    da += a[k];
    db += b[k];
  }
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t k = hi; k-- > lo;) {
    if (a[k] != b[k]) return a[k] < b[k] ? 1 : -1;
  }
  return 0;
}

std::vector<std::size_t> iota(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

}  // namespace

TermOrder::TermOrder(OrderKind kind, std::vector<std::size_t> perm, std::size_t front)
    : kind_(kind), perm_(std::move(perm)), front_(front) {
  if (perm_.size() > kMaxVariables) throw std::invalid_argument("too many variables");
  inverse_.assign(perm_.size(), perm_.size());
  for (std::size_t k = 0; k < perm_.size(); ++k) {
    if (perm_[k] >= perm_.size() || inverse_[perm_[k]] != perm_.size())
      throw std::invalid_argument("order permutation is not a permutation");
    inverse_[perm_[k]] = k;
  }
  if (front_ > perm_.size()) throw std::invalid_argument("elimination block too large");
}

TermOrder TermOrder::grevlex(std::size_t nvars) {
  return TermOrder(OrderKind::GradedReverseLex, iota(nvars), 0);
}

TermOrder TermOrder::lex(std::size_t nvars) { return TermOrder(OrderKind::Lex, iota(nvars), 0); }

TermOrder TermOrder::elimination(std::size_t nvars, const std::vector<std::size_t>& front) {
  std::vector<bool> in_front(nvars, false);
  for (std::size_t v : front) {
    if (v >= nvars) throw std::out_of_range("elimination variable out of range");
    in_front[v] = true;
  }
  std::vector<std::size_t> perm;
  for (std::size_t v = 0; v < nvars; ++v)
    if (in_front[v]) perm.push_back(v);
  std::size_t f = perm.size();
  for (std::size_t v = 0; v < nvars; ++v)
    if (!in_front[v]) perm.push_back(v);
  return TermOrder(OrderKind::BlockElimination, std::move(perm), f);
}

TermOrder TermOrder::permuted(OrderKind kind, std::vector<std::size_t> permutation,
                              std::size_t front_size) {
  return TermOrder(kind, std::move(permutation), front_size);
}

Monomial TermOrder::to_positions(const Monomial& m) const {
  Monomial r;
  for (std::size_t k = 0; k < perm_.size(); ++k)
    if (m[perm_[k]]) r.set(k, m[perm_[k]]);
  return r;
}

Monomial TermOrder::from_positions(const Monomial& m) const {
  Monomial r;
  for (std::size_t k = 0; k < perm_.size(); ++k)
    if (m[k]) r.set(perm_[k], m[k]);
  return r;
}

int TermOrder::compare_positions(const Monomial& a, const Monomial& b) const {
  const std::size_t n = perm_.size();
  switch (kind_) {
    case OrderKind::GradedReverseLex:
      return ambient_compare(a, b, n);
    case OrderKind::Lex:
      for (std::size_t k = 0; k < n; ++k)
        if (a[k] != b[k]) return a[k] > b[k] ? 1 : -1;
      return 0;
    case OrderKind::BlockElimination: {
      int c = grevlex_range(a, b, 0, front_);
      if (c != 0) return c;
      return grevlex_range(a, b, front_, n);
    }
  }
  return 0;
}

bool TermOrder::is_identity_permutation() const {
  for (std::size_t k = 0; k < perm_.size(); ++k)
    if (perm_[k] != k) return false;
  return true;
}

std::string TermOrder::key() const {
  std::string k;
  switch (kind_) {
    case OrderKind::GradedReverseLex: k = "grevlex"; break;
    case OrderKind::Lex: k = "lex"; break;
    case OrderKind::BlockElimination: k = "elim" + std::to_string(front_); break;
  }
  for (std::size_t v : perm_) k += ":" + std::to_string(v);
  return k;
}

}  // namespace csgin
