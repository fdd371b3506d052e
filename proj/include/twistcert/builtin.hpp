#pragma once

#include <string_view>
#include <vector>

#include "twistcert/abelianize.hpp"

namespace twistcert {

/// Surfaces with a shipped H_1 presentation: N2 .. N6.
std::vector<std::string_view> builtin_surfaces();
/// Presentation text for a surface id; throws InputError for other ids.
std::string_view builtin_presentation_text(std::string_view surface);
const Presentation& builtin_presentation(std::string_view surface);

std::string_view builtin_obstructions_text();
const std::vector<ObstructionEntry>& builtin_obstructions();

}  // namespace twistcert
