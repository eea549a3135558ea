#include "csgin/linear_closure.hpp"

#include <json.hpp>

#include "csgin/parse.hpp"

namespace csgin {

std::uint32_t parse_field(const std::string& field) {
  if (field == "Q" || field == "QQ") return 0;
  if (field == "Fp") return kDefaultPrime;
  if (field.rfind("Fp:", 0) == 0) {
    std::size_t used = 0;
    unsigned long p = 0;
    try {
      p = std::stoul(field.substr(3), &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad field '" + field + "'");
    }
    if (used != field.size() - 3 || p > 0x7fffffffUL || !is_prime(static_cast<std::uint32_t>(p)) || p < 3)
      throw std::invalid_argument("field characteristic must be an odd prime below 2^31: '" + field + "'");
    return static_cast<std::uint32_t>(p);
  }
  throw std::invalid_argument("unknown field '" + field + "' (use Q, Fp or Fp:p)");
}

RingPtr graded_linear_ring(const std::vector<int>& blocks, std::uint32_t characteristic) {
  std::vector<std::string> names;
  int total = 0;
  for (int a : blocks) {
    if (a < 1) throw std::invalid_argument("block sizes must be positive");
    total += a;
  }
  for (int i = 1; i <= total; ++i) names.push_back("x" + std::to_string(i));
  return make_ring(blocks, characteristic, std::move(names));
}

LinearSpaceSpec parse_linear_space_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed linear space JSON: ") + e.what(), e.byte);
  }
  if (!j.is_object() || !j.contains("blocks") || !j.contains("basis"))
    throw std::invalid_argument("linear space JSON needs \"blocks\" and \"basis\"");
  LinearSpaceSpec spec;
  spec.blocks = j.at("blocks").get<std::vector<int>>();
  if (j.contains("field")) spec.characteristic = parse_field(j.at("field").get<std::string>());
  bool fractions = false;
  for (const auto& row : j.at("basis")) {
    std::vector<long long> nums, dens;
    for (const auto& e : row) {
      if (e.is_number_integer()) {
        nums.push_back(e.get<long long>());
        dens.push_back(1);
      } else if (e.is_string()) {
        const std::string s = e.get<std::string>();
        auto slash = s.find('/');
        try {
          nums.push_back(std::stoll(s.substr(0, slash)));
          dens.push_back(slash == std::string::npos ? 1 : std::stoll(s.substr(slash + 1)));
        } catch (const std::exception&) {
          throw std::invalid_argument("bad matrix entry '" + s + "'");
        }
        fractions = true;
      } else {
        throw std::invalid_argument("matrix entries must be integers or \"a/b\" strings");
      }
    }
    spec.basis.push_back(std::move(nums));
    spec.denominators.push_back(std::move(dens));
  }
  if (!fractions) spec.denominators.clear();
  return spec;
}

}  // namespace csgin
