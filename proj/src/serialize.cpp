#include "permlab/serialize.hpp"

#include <json.hpp>

namespace permlab {

std::string permutation_to_json(const Permutation& p) { return nlohmann::json(p.word()).dump(); }

Permutation permutation_from_json(const std::string& text) {
    return Permutation(nlohmann::json::parse(text).get<std::vector<int>>());
}

std::string partition_to_json(const Partition& p) { return nlohmann::json(p.parts()).dump(); }

Partition partition_from_json(const std::string& text) {
    return Partition(nlohmann::json::parse(text).get<std::vector<int>>());
}

} // namespace permlab
