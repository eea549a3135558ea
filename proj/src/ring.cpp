#include "csgin/ring.hpp"

#include <algorithm>
#include <bit>

namespace csgin {

Monomial::Monomial(const std::vector<int>& exponents) {
  if (exponents.size() > kMaxVariables) throw std::out_of_range("too many variables");
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] < 0) throw std::invalid_argument("negative exponent");
    set(i, static_cast<unsigned>(exponents[i]));
  }
}

Monomial Monomial::variable(std::size_t var, unsigned power) {
  Monomial m;
  m.set(var, power);
  return m;
}

void Monomial::set(std::size_t var, unsigned e) {
  if (var >= kMaxVariables) throw std::out_of_range("variable index out of range");
  if (e > kMaxExponent) throw std::overflow_error("exponent overflow");
  degree_ = static_cast<std::uint16_t>(degree_ - exp_[var] + e);
  exp_[var] = static_cast<Exponent>(e);
}

std::uint32_t Monomial::support() const {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < kMaxVariables; ++i)
    if (exp_[i]) mask |= (1u << i);
  return mask;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < kMaxVariables; ++i)
    if (exp_[i] > other.exp_[i]) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    unsigned e = static_cast<unsigned>(a.exp_[i]) + b.exp_[i];
    if (e > Monomial::kMaxExponent) throw std::overflow_error("exponent overflow");
    r.exp_[i] = static_cast<Monomial::Exponent>(e);
  }
  r.degree_ = static_cast<std::uint16_t>(a.degree_ + b.degree_);
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (b.exp_[i] > a.exp_[i]) throw std::invalid_argument("monomial does not divide");
    r.exp_[i] = static_cast<Monomial::Exponent>(a.exp_[i] - b.exp_[i]);
  }
  r.degree_ = static_cast<std::uint16_t>(a.degree_ - b.degree_);
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  unsigned d = 0;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    r.exp_[i] = std::max(a.exp_[i], b.exp_[i]);
    d += r.exp_[i];
  }
  r.degree_ = static_cast<std::uint16_t>(d);
  return r;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial r;
  unsigned d = 0;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    r.exp_[i] = std::min(a.exp_[i], b.exp_[i]);
    d += r.exp_[i];
  }
  r.degree_ = static_cast<std::uint16_t>(d);
  return r;
}

std::size_t Monomial::hash() const {
  // FNV-1a over the exponent bytes
  std::size_t h = 1469598103934665603ull;
  for (Exponent e : exp_) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return h;
}

int ambient_compare(const Monomial& a, const Monomial& b, std::size_t nvars) {
  if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
  for (std::size_t k = nvars; k-- > 0;) {
    if (a[k] != b[k]) return a[k] < b[k] ? 1 : -1;
  }
  return 0;
}

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

BlockRing::BlockRing(std::vector<int> block_sizes, std::uint32_t characteristic,
                     std::vector<std::string> names)
    : block_sizes_(std::move(block_sizes)), characteristic_(characteristic) {
  if (characteristic_ != 0 && (characteristic_ == 2 || !is_prime(characteristic_) ||
                               characteristic_ >= (1u << 31)))
    throw std::invalid_argument("characteristic must be 0 or an odd prime below 2^31");
  std::size_t total = 0;
  for (std::size_t b = 0; b < block_sizes_.size(); ++b) {
    if (block_sizes_[b] < 1) throw std::invalid_argument("block sizes must be positive");
    first_.push_back(total);
    for (int j = 0; j < block_sizes_[b]; ++j) block_of_.push_back(b);
    total += static_cast<std::size_t>(block_sizes_[b]);
  }
  if (total > kMaxVariables) throw std::invalid_argument("too many variables (max 32)");
  if (names.empty()) {
    for (std::size_t v = 0; v < total; ++v)
      names.push_back("x" + std::to_string(block_of_[v] + 1) + "_" +
                      std::to_string(v - first_[block_of_[v]] + 1));
  }
  if (names.size() != total) throw std::invalid_argument("one name per variable required");
  names_ = std::move(names);
  for (std::size_t v = 0; v < total; ++v) {
    std::string canonical = "x" + std::to_string(block_of_[v] + 1) + "_" +
                            std::to_string(v - first_[block_of_[v]] + 1);
    lookup_.emplace(canonical, v);
  }
  for (std::size_t v = 0; v < total; ++v) {
    auto [it, inserted] = lookup_.emplace(names_[v], v);
    if (!inserted && it->second != v) throw std::invalid_argument("ambiguous variable name " + names_[v]);
  }
}

std::optional<std::size_t> BlockRing::find_variable(const std::string& token) const {
  auto it = lookup_.find(token);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::vector<int> BlockRing::multidegree(const Monomial& m) const {
  std::vector<int> deg(num_blocks(), 0);
  for (std::size_t v = 0; v < num_vars(); ++v) deg[block_of_[v]] += static_cast<int>(m[v]);
  return deg;
}

RingPtr make_ring(std::vector<int> block_sizes, std::uint32_t characteristic,
                  std::vector<std::string> names) {
  return std::make_shared<const BlockRing>(std::move(block_sizes), characteristic, std::move(names));
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && *a == *b);
}

void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (!same_ring(a, b)) throw RingMismatch("operands live in different rings");
}

}  // namespace csgin
