#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "semidual_cli/document.hpp"

namespace semidual::cli {

// Exit status: 0 true/success, 1 definitional false, 2 error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Individual commands on parsed documents. `status` receives 0 or 1.
json cmd_check(const Document& d, SpaceMode mode, int& status);
json cmd_dualize(const Document& d, SpaceMode mode);
json cmd_envelope(const Document& d);
json cmd_hom2rel(const Document& d);
json cmd_rel2hom(const Document& d);
json cmd_fn2rel(const Document& d);
json cmd_rel2fn(const Document& d);
json cmd_compose(const Document& first, const Document& second);

} // namespace semidual::cli
