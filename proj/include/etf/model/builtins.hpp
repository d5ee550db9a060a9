#pragma once

// Named functions for environment files and the command line.

#include <string>
#include <string_view>
#include <vector>

#include "etf/model/eval.hpp"

namespace etf::model {

// plus, times, sg, sgbar, odd, fprime, pred, monus, lt, t, pair, p1, p2, q,
// identity, double, const:<k>. Throws std::invalid_argument for other names.
FuncValue builtin(std::string_view name);
const std::vector<std::string>& builtin_names();

// Lines "n = 5" and "f = builtin:plus"; '#' starts a comment.
// Throws std::invalid_argument with the line number on malformed input.
Env parse_env(std::string_view text);

// Declarations matching an env, for parsing terms against it.
syntax::Context env_context(const Env& env);

}  // namespace etf::model
