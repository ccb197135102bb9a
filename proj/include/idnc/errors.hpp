// errors.hpp -- error types shared across the library.
//
// capacity_error: a solver or oracle was asked for more than its configured
// ceiling (the CLI maps this to exit code 3).
// io_error: fixture/config files that are missing or malformed (exit code 4).
// feasibility_error: a transmission plan or vertex set violates the
// admissibility rules; carries the first offending rule/edge in the message.
#pragma once

#include <stdexcept>
#include <string>

namespace idnc {

struct capacity_error : std::runtime_error {
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

struct io_error : std::runtime_error {
    explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

struct feasibility_error : std::runtime_error {
    explicit feasibility_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace idnc
