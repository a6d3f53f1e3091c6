#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "help/chartab.hpp"

namespace help {

/// Names of the character tables compiled into the library.
std::vector<std::string> fixture_names();

/// Raw JSON of a builtin table. Throws std::invalid_argument for an unknown name.
std::string_view fixture_json(std::string_view name);

/// Parsed and validated builtin table.
CharacterTable load_fixture(std::string_view name);

}  // namespace help
