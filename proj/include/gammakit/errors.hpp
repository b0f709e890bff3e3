#pragma once

#include <stdexcept>
#include <string>

namespace gammakit {

// Base class for all library failures.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Invalid argument values: bad N, bad digit counts, malformed records.
class argument_error : public error {
public:
    using error::error;
};

// Input outside the mathematical domain of an operation.
class domain_error : public error {
public:
    using error::error;
};

// Evaluation requested exactly at a pole of the gamma function.  The index m
// identifies the pole at z = -m.
class pole_error : public domain_error {
public:
    pole_error(long index, const std::string& what)
        : domain_error(what), index_(index) {}

    long index() const noexcept { return index_; }

private:
    long index_;
};

// A linear system was too close to singular at the working precision.
class conditioning_error : public error {
public:
    using error::error;
};

// A nonlinear solve failed to bracket a root.
class no_root_error : public error {
public:
    using error::error;
};

// Operation is not defined for the requested scheme.
class unsupported_error : public argument_error {
public:
    using argument_error::argument_error;
};

}  // namespace gammakit
