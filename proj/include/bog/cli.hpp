#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "bog/classify.hpp"

namespace bog {

/// Runs one fbcp invocation. `args` excludes the program name. Returns the
/// exit code: 0 on success, 1 on domain errors, 2 on parse and usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Indented `key: value` rendering of a JSON document, keys in sorted order.
std::string render_text(const Json& doc);

}  // namespace bog
