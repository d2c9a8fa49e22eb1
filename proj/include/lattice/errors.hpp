#pragma once

#include <stdexcept>
#include <string>

namespace lattice {

struct InvalidModulus : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotCoprime : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct OutOfRange : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InvalidSpec : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DegenerateSegment : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InvalidPolygon : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct FitMismatch : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace lattice
