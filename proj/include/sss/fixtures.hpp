#pragma once

#include "sss/dsl.hpp"

namespace sss {

/// Names of the builtin systems, without the leading `@`.
std::vector<std::string> fixture_names();

/// DSL source of a builtin system; throws std::invalid_argument for unknown
/// names.  Accepts both `freyd` and `@freyd`.
const std::string& fixture_source(const std::string& name);

/// Parsed builtin system.
SystemDocument builtin_fixture(const std::string& name);

}  // namespace sss
