#ifndef MACDONALD_CLI_HPP
#define MACDONALD_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "macdonald/formulas.hpp"

namespace macd {

constexpr double DEFAULT_COST_CAP = 1e8;

// predicted enumeration nodes for a build; rows of a non-attacking filling
// hold distinct entries, which is the only pruning taken into account
double estimate_cost(const Partition& lam, int n_vars, const FormulaChoice& choice);
// MACDONALD_COST_CAP overrides the default
double cost_cap_from_env();

// args exclude the program name; returns 0 ok, 1 verification failure, 2 usage error
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace macd

#endif
