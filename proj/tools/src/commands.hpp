#pragma once

#include "options.hpp"

#include <iosfwd>

namespace pertcoul::cli {

int cmd_solve(const Options& opt, std::ostream& out);
int cmd_verify(const Options& opt, std::ostream& out);
int cmd_oracle(const Options& opt, std::ostream& out);
int cmd_eig(const Options& opt, std::ostream& out);
int cmd_sweep(const Options& opt, std::ostream& out);

} // namespace pertcoul::cli
