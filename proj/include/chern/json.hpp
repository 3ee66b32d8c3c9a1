#pragma once

#include <json.hpp>

namespace chern {

// Insertion-ordered JSON keeps every emitted document deterministic and in
// documented field order.
using njson = nlohmann::ordered_json;

}  // namespace chern
