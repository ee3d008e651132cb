#pragma once

#include <json.hpp>
#include <string>

#include "spinphase/states.hpp"

namespace spinphase {

// Fixed 17-significant-digit formatting; identical input bits give
// identical text.
std::string format_double(double value);

nlohmann::ordered_json complex_json(Complex value);

// Writes to the path, or to stdout when the path is empty or "-".
void write_text(const std::string& path, const std::string& text);

}  // namespace spinphase
