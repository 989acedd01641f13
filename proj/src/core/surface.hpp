#pragma once

#include <string>

#include "core/config.hpp"

namespace qnp::surface {

enum class Format { Plain, Json, Csv };
Format parse_format(const std::string& text);

// Set names: n-, n+, n~+, nbar, nbar1, nbar2, cup, i-, i~+, dbar.
std::string enumerate_sets(const std::string& set_name, int n, Format fmt, const Config& config);

// Single-map application; n is required only where a field size is needed.
std::string apply_map(const std::string& map_name, const std::string& input, int n,
                      Format fmt, const Config& config);

std::string gleason_text(int n, bool mod2, bool factored, Format fmt);

std::string count_text(int n, Format fmt);

std::string table_text(int n, Format fmt, const Config& config);

}  // namespace qnp::surface
