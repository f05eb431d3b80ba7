#pragma once

#include <stdexcept>
#include <string>

namespace sppp
{
    struct InvalidArgument : std::invalid_argument
    {
        using std::invalid_argument::invalid_argument;
    };

    struct Unsupported : std::runtime_error
    {
        using std::runtime_error::runtime_error;
    };

    /// Malformed plane-file text. Carries the 1-based line number.
    struct ParseError : std::runtime_error
    {
        ParseError(int line, const std::string & what) :
            std::runtime_error("line " + std::to_string(line) + ": " + what),
            line_number(line)
        {
        }

        int line_number;
    };

    /// Well-formed input that violates a plane invariant (purity, order).
    struct StructuralError : std::runtime_error
    {
        using std::runtime_error::runtime_error;
    };
}
