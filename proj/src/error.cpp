#include "geoextract/error.hpp"

namespace geoextract {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Parse: return "parse-error";
        case ErrorKind::ClassMismatch: return "class-mismatch";
        case ErrorKind::InvalidArgument: return "invalid-argument";
        case ErrorKind::SizeCap: return "size-cap";
        case ErrorKind::AlgorithmInvariant: return "algorithm-invariant";
        case ErrorKind::NoColoringFound: return "no-4-coloring-found";
        case ErrorKind::ImproperColoring: return "improper-coloring";
        case ErrorKind::Precondition: return "depth-precondition";
        case ErrorKind::Unbounded: return "unbounded";
    }
    return "unknown";
}

int exit_code(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Parse:
        case ErrorKind::ClassMismatch:
        case ErrorKind::InvalidArgument: return 2;
        case ErrorKind::SizeCap: return 3;
        case ErrorKind::AlgorithmInvariant:
        case ErrorKind::NoColoringFound:
        case ErrorKind::ImproperColoring: return 4;
        case ErrorKind::Precondition: return 5;
        case ErrorKind::Unbounded: return 1;
    }
    return 1;
}

}  // namespace geoextract
