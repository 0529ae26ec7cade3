#pragma once

#include <stdexcept>
#include <string>

namespace geoextract {

enum class ErrorKind {
    Parse,               // malformed document or coordinate
    ClassMismatch,       // object/point of the wrong class or dimension
    InvalidArgument,     // bad parameter (k too small, unknown index, ...)
    SizeCap,             // instance exceeds a desk-scale cap
    AlgorithmInvariant,  // an internal proof step was violated
    NoColoringFound,     // exhaustive search found no proper coloring
    ImproperColoring,    // a supplied coloring leaves a target point uncovered
    Precondition,        // a target point has depth < 2
    Unbounded,           // extraction number is infinite
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

// CLI exit code for an error kind: 2 input, 3 size cap, 4 invariant,
// 5 depth precondition.
int exit_code(ErrorKind kind);

}  // namespace geoextract
