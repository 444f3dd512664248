#pragma once

#include <stdexcept>
#include <string>

namespace eqloc {

/// Base of every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Two values from coefficient rings over different torus ranks were combined.
struct RankMismatch : Error {
    using Error::Error;
};

struct ZeroDenominator : Error {
    using Error::Error;
};

/// Division by the zero linear form.
struct ZeroDivisorForm : Error {
    using Error::Error;
};

/// Malformed model file, class file, rational or polynomial text.
struct ParseError : Error {
    using Error::Error;
};

/// A model violates a structural invariant (zero weight, dimension count, ...).
struct ValidationError : Error {
    using Error::Error;
};

/// Product of two positive-dimensional fixed components: would need two
/// cohomology generators, which the component model does not carry.
struct UnsupportedComponentProduct : Error {
    using Error::Error;
};

}  // namespace eqloc
