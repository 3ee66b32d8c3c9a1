#pragma once

#include <string>
#include <string_view>

namespace chern {

/// The three Hirzebruch-type genera handled by the engine: the chi_y-genus,
/// the twisted Dirac series A_y, and the twisted signature series L_y.
enum class GenusKind : unsigned char { ChiY, AY, LY };

/// CLI/JSON spelling: "chi-y", "a-y", "l-y".
std::string_view kind_name(GenusKind kind);

/// Inverse of kind_name; throws std::invalid_argument on unknown text.
GenusKind kind_from_name(std::string_view name);

}  // namespace chern
