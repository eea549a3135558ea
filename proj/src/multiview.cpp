#include "csgin/multiview.hpp"

#include <json.hpp>

#include "csgin/parse.hpp"

namespace csgin {

CameraSpec parse_camera_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed camera JSON: ") + e.what(), e.byte);
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("cameras"))
    throw std::invalid_argument("camera JSON needs \"n\" and \"cameras\"");
  CameraSpec spec;
  spec.n = j.at("n").get<int>();
  if (spec.n < 1) throw std::invalid_argument("n must be positive");
  if (j.contains("field")) spec.characteristic = parse_field(j.at("field").get<std::string>());
  spec.cameras = j.at("cameras").get<std::vector<std::vector<std::vector<long long>>>>();
  return spec;
}

RingPtr multiview_ring(const std::vector<int>& d, std::uint32_t characteristic) {
  return make_ring(d, characteristic);
}

}  // namespace csgin
