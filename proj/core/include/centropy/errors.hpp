#pragma once

#include <stdexcept>
#include <string>

namespace centropy {

// Tied values where a strictly increasing sequence is required. Spacing
// estimators divide by spacings, so tied data are rejected rather than
// perturbed.
class tie_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A harmonic-mean spacing collapsed to zero or below (clamped windows at the
// sample boundary can coincide).
class degenerate_spacing_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Lookup outside an embedded table or window rule domain.
class table_miss_error : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

// Malformed input file; carries the 1-based line number.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, int line)
        : std::runtime_error(what + " (line " + std::to_string(line) + ")"),
          line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

} // namespace centropy
