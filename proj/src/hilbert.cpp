#include "csgin/hilbert.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace csgin {

namespace {

long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("Laurent coefficient overflow");
  return r;
}

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("Laurent coefficient overflow");
  return r;
}

int total(const LaurentPoly::Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

}  // namespace

LaurentPoly LaurentPoly::one(std::size_t nvars) {
  return monomial(Exponent(nvars, 0), 1);
}

LaurentPoly LaurentPoly::monomial(Exponent e, long long coeff) {
  LaurentPoly p(e.size());
  p.add_term(e, coeff);
  return p;
}

long long LaurentPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? 0 : it->second;
}

void LaurentPoly::add_term(const Exponent& e, long long coeff) {
  if (e.size() != nvars_) throw std::invalid_argument("exponent length mismatch");
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(e, coeff);
  if (inserted) return;
  it->second = checked_add(it->second, coeff);
  if (it->second == 0) terms_.erase(it);
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(nvars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, checked_mul(c, -1));
  return r;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("Laurent polynomials in different variable counts");
  LaurentPoly r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, c);
  return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("Laurent polynomials in different variable counts");
  LaurentPoly r(a.nvars_);
  LaurentPoly::Exponent e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, checked_mul(ca, cb));
    }
  return r;
}

LaurentPoly LaurentPoly::component(int d) const {
  LaurentPoly r(nvars_);
  for (const auto& [e, c] : terms_)
    if (total(e) == d) r.terms_.emplace(e, c);
  return r;
}

int LaurentPoly::min_degree() const {
  if (terms_.empty()) throw std::invalid_argument("minimal degree of zero");
  int best = total(terms_.begin()->first);
  for (const auto& [e, c] : terms_) best = std::min(best, total(e));
  return best;
}

bool LaurentPoly::has_negative_exponent() const {
  for (const auto& [e, c] : terms_)
    for (int x : e)
      if (x < 0) return true;
  return false;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Exponent, long long>> ordered(terms_.begin(), terms_.end());
  // Higher total degree first, then lexicographically larger exponent first.
  std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    int ta = total(a.first), tb = total(b.first);
    if (ta != tb) return ta > tb;
    return a.first > b.first;
  });
  std::string out;
  bool first = true;
  for (const auto& [e, c] : ordered) {
    long long mag = c < 0 ? -c : c;
    if (first) out += c < 0 ? "-" : "";
    else out += c < 0 ? " - " : " + ";
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "z" + std::to_string(i + 1);
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) out += std::to_string(mag);
    else if (mag == 1) out += mono;
    else out += std::to_string(mag) + "*" + mono;
  }
  return out;
}

LaurentPoly parse_laurent(const std::string& text, std::size_t nvars) {
  LaurentPoly out(nvars);
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto number = [&]() -> long long {
    std::size_t start = pos;
    long long v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      v = checked_add(checked_mul(v, 10), text[pos++] - '0');
    if (start == pos) throw std::invalid_argument("expected a number at position " + std::to_string(pos));
    return v;
  };
  skip();
  if (text.substr(pos) == "0") return out;
  bool first = true;
  while (pos < text.size()) {
    long long sign = 1;
    skip();
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!first) {
      throw std::invalid_argument("expected '+' or '-' at position " + std::to_string(pos));
    }
    first = false;
    skip();
    long long coeff = 1;
    LaurentPoly::Exponent e(nvars, 0);
    bool have_factor = false;
    for (;;) {
      skip();
      if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        coeff = checked_mul(coeff, number());
      } else if (pos < text.size() && text[pos] == 'z') {
        ++pos;
        long long var = number();
        if (var < 1 || static_cast<std::size_t>(var) > nvars)
          throw std::invalid_argument("variable index out of range at position " + std::to_string(pos));
        long long power = 1;
        skip();
        if (pos < text.size() && text[pos] == '^') {
          ++pos;
          power = number();
        }
        e[static_cast<std::size_t>(var - 1)] += static_cast<int>(power);
      } else {
        throw std::invalid_argument("unexpected input at position " + std::to_string(pos));
      }
      have_factor = true;
      skip();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        continue;
      }
      break;
    }
    if (!have_factor) throw std::invalid_argument("empty term at position " + std::to_string(pos));
    out.add_term(e, sign * coeff);
    skip();
  }
  return out;
}

namespace {

class KPolynomial {
 public:
  KPolynomial(const BlockRing& ring, PivotRule rule) : ring_(ring), rule_(rule) {}

  LaurentPoly run(std::vector<Monomial> gens) {
    const std::size_t n = ring_.num_blocks();
    if (gens.empty()) return LaurentPoly::one(n);
    for (const Monomial& g : gens)
      if (g.is_one()) return LaurentPoly(n);

    std::string key = key_of(gens);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;

    LaurentPoly result(n);
    std::vector<int> count(ring_.num_vars(), 0);
    for (const Monomial& g : gens)
      for (std::size_t v = 0; v < ring_.num_vars(); ++v)
        if (g[v]) ++count[v];
    const bool coprime = std::all_of(count.begin(), count.end(), [](int c) { return c <= 1; });
    if (coprime) {
      result = LaurentPoly::one(n);
      for (const Monomial& g : gens) {
        LaurentPoly factor = LaurentPoly::one(n);
        factor.add_term(ring_.multidegree(g), -1);
        result = result * factor;
      }
    } else {
      std::size_t pivot = choose(count);
      std::vector<Monomial> plus{Monomial::variable(pivot)};
      std::vector<Monomial> quotient;
      for (const Monomial& g : gens) {
        if (!g[pivot]) plus.push_back(g);
        Monomial q = g;
        if (q[pivot]) q.set(pivot, q[pivot] - 1);
        quotient.push_back(q);
      }
      LaurentPoly shift = LaurentPoly::monomial(ring_.multidegree(Monomial::variable(pivot)));
      result = run(minimalize(std::move(plus), ring_.num_vars())) +
               shift * run(minimalize(std::move(quotient), ring_.num_vars()));
    }
    memo_.emplace(std::move(key), result);
    return result;
  }

 private:
  std::size_t choose(const std::vector<int>& count) const {
    if (rule_ == PivotRule::LastVariable) {
      for (std::size_t v = count.size(); v-- > 0;)
        if (count[v] >= 2) return v;
    }
    std::size_t best = 0;
    for (std::size_t v = 1; v < count.size(); ++v)
      if (count[v] > count[best]) best = v;
    return best;
  }

  std::string key_of(const std::vector<Monomial>& gens) const {
    std::string key;
    key.reserve(gens.size() * ring_.num_vars());
    for (const Monomial& g : gens) {
      for (std::size_t v = 0; v < ring_.num_vars(); ++v) key.push_back(static_cast<char>(g[v]));
      key.push_back('\xff');
    }
    return key;
  }

  const BlockRing& ring_;
  PivotRule rule_;
  std::unordered_map<std::string, LaurentPoly> memo_;
};

}  // namespace

LaurentPoly k_polynomial(const MonomialIdeal& ideal, PivotRule rule) {
  return KPolynomial(*ideal.ring(), rule).run(ideal.generators());
}

LaurentPoly c_polynomial(const LaurentPoly& k) {
  if (k.has_negative_exponent()) throw std::invalid_argument("C-polynomial needs nonnegative exponents; shift first");
  const std::size_t n = k.num_vars();
  std::vector<LaurentPoly> one_minus;
  for (std::size_t i = 0; i < n; ++i) {
    LaurentPoly f = LaurentPoly::one(n);
    LaurentPoly::Exponent e(n, 0);
    e[i] = 1;
    f.add_term(e, -1);
    one_minus.push_back(std::move(f));
  }
  std::map<std::pair<std::size_t, int>, LaurentPoly> powers;
  auto power = [&](std::size_t i, int p) {
    auto key = std::make_pair(i, p);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    LaurentPoly r = LaurentPoly::one(n);
    for (int j = 0; j < p; ++j) r = r * one_minus[i];
    powers.emplace(key, r);
    return r;
  };
  LaurentPoly out(n);
  for (const auto& [e, c] : k.terms()) {
    LaurentPoly term = LaurentPoly::monomial(LaurentPoly::Exponent(n, 0), c);
    for (std::size_t i = 0; i < n; ++i)
      if (e[i]) term = term * power(i, e[i]);
    out = out + term;
  }
  return out;
}

LaurentPoly min_part(const LaurentPoly& g) {
  LaurentPoly out(g.num_vars());
  for (const auto& [e, c] : g.terms()) {
    bool minimal = true;
    for (const auto& [f, d] : g.terms()) {
      if (f == e) continue;
      bool divides = true;
      for (std::size_t i = 0; i < e.size(); ++i)
        if (f[i] > e[i]) {
          divides = false;
          break;
        }
      if (divides) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.add_term(e, c);
  }
  return out;
}

LaurentPoly g_multidegree(const MonomialIdeal& ideal) {
  return min_part(c_polynomial(k_polynomial(ideal)));
}

LaurentPoly multidegree(const MonomialIdeal& ideal) {
  return c_polynomial(k_polynomial(ideal)).component(codimension(ideal));
}

bool multiplicity_free(const LaurentPoly& d) {
  for (const auto& [e, c] : d.terms())
    if (c != 0 && c != 1) return false;
  return true;
}

MixedMultiplicities mdeg_to_mixed_multiplicities(const LaurentPoly& mdeg, const std::vector<int>& block_sizes) {
  if (mdeg.num_vars() != block_sizes.size()) throw std::invalid_argument("one block size per variable required");
  MixedMultiplicities out;
  for (const auto& [e, c] : mdeg.terms()) {
    std::vector<int> a(e.size());
    bool flagged = false;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] < 0 || e[i] > block_sizes[i]) throw std::invalid_argument("multidegree exponent outside [0, d_i]");
      if (e[i] == block_sizes[i]) flagged = true;
      a[i] = block_sizes[i] - 1 - e[i];
    }
    if (flagged) out.flagged.push_back(e);
    else out.values[a] = c;
  }
  return out;
}

}  // namespace csgin
