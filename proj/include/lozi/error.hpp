#pragma once

#include <stdexcept>
#include <string>

namespace lozi {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Parameters or arguments outside the region where an operation is defined.
class DomainError : public Error {
public:
    using Error::Error;
};

class SingularSystem : public Error {
public:
    using Error::Error;
};

// Excluded slopes, noninvertible branches, lines that miss the critical locus.
class GeometryError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class NoSignChange : public Error {
public:
    using Error::Error;
};

class ConditionFailed : public Error {
public:
    ConditionFailed(const std::string& what, double gap) : Error(what), gap(gap) {}
    double gap;
};

class EndpointOrder : public Error {
public:
    using Error::Error;
};

class MultipleCrossing : public Error {
public:
    using Error::Error;
};

}  // namespace lozi
