#pragma once

#include <string_view>
#include <utility>
#include <vector>

namespace mixgeo::detail {

/// (name, MGF text) for every file under fixtures/, sorted by name.
const std::vector<std::pair<std::string_view, std::string_view>>& embedded_fixtures();

}  // namespace mixgeo::detail
