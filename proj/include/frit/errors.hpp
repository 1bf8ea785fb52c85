// Error types used across the library.
//
// config_error:    invalid user input, parameters, or geometry (CLI exit code 2).
// invariant_error: a numerical invariant the library guarantees was violated at
//                  runtime, e.g. a spectral output that should be real carries a
//                  large imaginary residue (CLI exit code 3).
#pragma once

#include <stdexcept>
#include <string>

namespace frit {

class config_error : public std::runtime_error {
public:
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

class invariant_error : public std::runtime_error {
public:
    explicit invariant_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace frit
