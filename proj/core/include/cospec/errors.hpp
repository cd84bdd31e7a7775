#pragma once

#include <stdexcept>

namespace cospec {

// Exact precondition of a construction failed (the inputs are not
// cospectral/controllable at the required level).
class precondition_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Numeric frame Gram data disagreed beyond tolerance during construction.
class gram_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace cospec
