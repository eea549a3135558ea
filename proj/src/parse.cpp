#include "csgin/parse.hpp"

namespace csgin {

std::string monomial_to_string(const Monomial& m, const BlockRing& ring) {
  if (m.is_one()) return "1";
  std::string out;
  for (std::size_t v = 0; v < ring.num_vars(); ++v) {
    if (!m[v]) continue;
    if (!out.empty()) out += "*";
    out += ring.name(v);
    if (m[v] > 1) out += "^" + std::to_string(m[v]);
  }
  return out;
}

}  // namespace csgin
