#pragma once

#include <string>
#include <vector>

namespace braidkit {

// Exit codes: 0 success / true, 1 failed check or false predicate,
// 2 usage or parse error, 3 resource limit.
int cli_main(const std::vector<std::string>& args);

} // namespace braidkit
