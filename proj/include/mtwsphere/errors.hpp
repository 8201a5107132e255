// SPDX-License-Identifier: MIT
#pragma once

#include <stdexcept>
#include <string>

namespace mtwsphere {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the domain of the operation (distance, exponent, radius).
class DomainError : public Error {
public:
    using Error::Error;
};

/// f' or f'' vanishes, so the transport-vector parametrization breaks down.
class DegenerateCost : public Error {
public:
    using Error::Error;
};

class AntipodalError : public Error {
public:
    using Error::Error;
};

/// Orientation case not realizable in the requested sphere dimension.
class DimensionError : public Error {
public:
    using Error::Error;
};

class OrthogonalityError : public Error {
public:
    using Error::Error;
};

class DivergentLimit : public Error {
public:
    using Error::Error;
};

class StencilDomainError : public Error {
public:
    using Error::Error;
};

class SingularMixedHessian : public Error {
public:
    using Error::Error;
};

class NoSignChange : public Error {
public:
    using Error::Error;
};

class EmptyDomain : public Error {
public:
    using Error::Error;
};

}  // namespace mtwsphere
