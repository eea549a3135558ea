#include "csgin/poly.hpp"

namespace csgin {

HomogenizationLayout make_homogenization_layout(const RingPtr& source, const std::string& y_prefix) {
  HomogenizationLayout layout;
  layout.source = source;
  std::vector<int> sizes;
  std::vector<std::string> names;
  layout.x_to_target.resize(source->num_vars());
  layout.y_var.resize(source->num_blocks());
  std::size_t next = 0;
  for (std::size_t b = 0; b < source->num_blocks(); ++b) {
    sizes.push_back(source->block_size(b) + 1);
    for (int j = 0; j < source->block_size(b); ++j) {
      std::size_t v = source->var(b, static_cast<std::size_t>(j));
      layout.x_to_target[v] = next++;
      names.push_back(source->name(v));
    }
    layout.y_var[b] = next++;
    names.push_back(y_prefix + std::to_string(b + 1));
  }
  layout.target = make_ring(std::move(sizes), source->characteristic(), std::move(names));
  return layout;
}

}  // namespace csgin
