#pragma once

#include <stdexcept>
#include <string>

#include "envelope/sampling.hpp"

namespace envelope {

/// File-system failure, with the offending path attached.
struct IoError : std::runtime_error {
    IoError(const std::string& msg, const std::string& path_)
        : std::runtime_error(msg + ": " + path_), path(path_) {}
    std::string path;
};

/// Shortest decimal digit string that round-trips the binary64 value
/// (never more than 17 significant digits). Locale-independent.
std::string format_double(double v);

/// Writes the table as `x,y,alpha,method` rows, '\n' separators, exactly one
/// final newline; byte-identical across platforms for identical inputs.
/// Throws IoError on failure.
void emit_csv(const CurveSampleTable& table, const std::string& path);

/// Reads a file written by emit_csv; numeric parsing is exact (round-trip).
/// Every 64th row is spot-checked against the membership tolerance of its
/// method tag. Throws IoError on file trouble, std::runtime_error on a
/// malformed or failing row.
CurveSampleTable parse_csv(const std::string& path);

}  // namespace envelope
