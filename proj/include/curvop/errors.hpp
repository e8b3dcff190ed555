#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace curvop {

// Precondition violations: bad dimension, index out of range, r below r_min.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Two vectors that do not span a plane.
class DegeneratePlaneError : public DomainError {
public:
    using DomainError::DomainError;
};

class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Report emission failed after `rows_written` rows reached the sink.
class IoError : public std::runtime_error {
public:
    IoError(const std::string& what, std::size_t rows_written)
        : std::runtime_error(what), rows_written_(rows_written) {}

    [[nodiscard]] std::size_t rows_written() const noexcept { return rows_written_; }

private:
    std::size_t rows_written_;
};

}  // namespace curvop
