#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace csgin {

inline constexpr std::size_t kMaxVariables = 32;

/// Exponent vector of length at most kMaxVariables. Unused slots are zero.
class Monomial {
 public:
  using Exponent = std::uint8_t;
  static constexpr unsigned kMaxExponent = 255;

  Monomial() = default;
  explicit Monomial(const std::vector<int>& exponents);

  static Monomial variable(std::size_t var, unsigned power = 1);

  unsigned operator[](std::size_t var) const { return exp_[var]; }
  void set(std::size_t var, unsigned e);
  unsigned degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  /// Bit v is set iff variable v occurs.
  std::uint32_t support() const;

  bool divides(const Monomial& other) const;
  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// a / b; throws if b does not divide a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.degree_ == b.degree_ && a.exp_ == b.exp_;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);
  friend bool coprime(const Monomial& a, const Monomial& b) { return (a.support() & b.support()) == 0; }

  const std::array<Exponent, kMaxVariables>& exponents() const { return exp_; }
  std::size_t hash() const;

 private:
  std::array<Exponent, kMaxVariables> exp_{};
  std::uint16_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Graded reverse lexicographic comparison with x_0 > x_1 > ... (ambient order).
/// Returns >0 if a > b, <0 if a < b, 0 if equal.
int ambient_compare(const Monomial& a, const Monomial& b, std::size_t nvars);

/// Polynomial ring K[x_{ij}] with n blocks of sizes d_1..d_n; x_{ij} has degree e_i.
/// Variables are numbered block by block, x_{1,1} first.
class BlockRing {
 public:
  BlockRing(std::vector<int> block_sizes, std::uint32_t characteristic,
            std::vector<std::string> names = {});

  std::size_t num_blocks() const { return block_sizes_.size(); }
  std::size_t num_vars() const { return block_of_.size(); }
  int block_size(std::size_t block) const { return block_sizes_[block]; }
  const std::vector<int>& block_sizes() const { return block_sizes_; }
  std::uint32_t characteristic() const { return characteristic_; }

  std::size_t block_of(std::size_t var) const { return block_of_[var]; }
  /// 0-based position of var inside its block.
  std::size_t index_in_block(std::size_t var) const { return var - first_[block_of_[var]]; }
  std::size_t first_var(std::size_t block) const { return first_[block]; }
  std::size_t var(std::size_t block, std::size_t j) const { return first_[block] + j; }

  const std::string& name(std::size_t var) const { return names_[var]; }
  const std::vector<std::string>& names() const { return names_; }
  /// Accepts the canonical token x<i>_<j> (1-based) or any display name.
  std::optional<std::size_t> find_variable(const std::string& token) const;

  std::vector<int> multidegree(const Monomial& m) const;

  friend bool operator==(const BlockRing& a, const BlockRing& b) {
    return a.block_sizes_ == b.block_sizes_ && a.characteristic_ == b.characteristic_ &&
           a.names_ == b.names_;
  }

 private:
  std::vector<int> block_sizes_;
  std::uint32_t characteristic_;
  std::vector<std::string> names_;
  std::vector<std::size_t> block_of_;
  std::vector<std::size_t> first_;
  std::unordered_map<std::string, std::size_t> lookup_;
};

using RingPtr = std::shared_ptr<const BlockRing>;

RingPtr make_ring(std::vector<int> block_sizes, std::uint32_t characteristic,
                  std::vector<std::string> names = {});

bool same_ring(const RingPtr& a, const RingPtr& b);
void require_same_ring(const RingPtr& a, const RingPtr& b);

bool is_prime(std::uint32_t p);

/// Raised when two objects live in different rings.
class RingMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace csgin
