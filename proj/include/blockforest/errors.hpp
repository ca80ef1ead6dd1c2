#pragma once

#include <stdexcept>
#include <string>

namespace blockforest {

// Base class for everything thrown by this library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A value outside an operation's domain (bad n, inconsistent distribution,
// series precondition violated, ...). The CLI maps this to exit code 3.
struct domain_error : error {
    using error::error;
};

// Malformed textual input (block-set lines, codes, flags).
struct parse_error : domain_error {
    using domain_error::domain_error;
};

// Two independently computed routes disagree (recurrence vs functional
// equation, formula vs oracle). The CLI maps this to exit code 4 and the
// message names the invariant that failed.
struct internal_consistency_error : error {
    using error::error;
};

} // namespace blockforest
