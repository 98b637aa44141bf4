#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace r2quad {

/// Base class of every numerical failure raised by the toolkit. `name()` is the
/// stable error identifier printed by the command line front end.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& what)
        : std::runtime_error(what), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

/// Errors that carry the offending sequence index.
class IndexedError : public Error {
public:
    IndexedError(std::string name, const std::string& what, std::size_t index)
        : Error(std::move(name), what + " (index " + std::to_string(index) + ")"), index_(index) {}

    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

class ChainSequenceViolation : public IndexedError {
public:
    explicit ChainSequenceViolation(std::size_t index, const std::string& what = "not a positive chain sequence")
        : IndexedError("ChainSequenceViolation", what, index) {}
};

class NotConverged : public Error {
public:
    explicit NotConverged(const std::string& what) : Error("NotConverged", what) {}
};

class DegenerateTail : public IndexedError {
public:
    explicit DegenerateTail(std::size_t index)
        : IndexedError("DegenerateTail", "backward parameter recursion left (0,1]", index) {}
};

class MaxIterExceeded : public Error {
public:
    explicit MaxIterExceeded(const std::string& what) : Error("MaxIterExceeded", what) {}
};

class NegativeDiscriminant : public Error {
public:
    explicit NegativeDiscriminant(double at)
        : Error("NegativeDiscriminant", "Laguerre discriminant negative at y = " + std::to_string(at)), at_(at) {}

    double at() const noexcept { return at_; }

private:
    double at_;
};

class RootCountMismatch : public Error {
public:
    explicit RootCountMismatch(const std::string& what) : Error("RootCountMismatch", what) {}
};

/// Raised when a pivot of the shifted pencil factorization vanishes. `index()` is
/// the 1-based pivot row, which equals the degree of the polynomial vanishing at the shift.
class SingularPivot : public IndexedError {
public:
    explicit SingularPivot(std::size_t row) : IndexedError("SingularPivot", "singular pivot in LU of A - pB", row) {}
};

class DivergentSeries : public Error {
public:
    explicit DivergentSeries(const std::string& what = "series S diverges; M_1 is unavailable")
        : Error("DivergentSeries", what) {}
};

class DegenerateInput : public IndexedError {
public:
    DegenerateInput(std::size_t index, const std::string& what) : IndexedError("DegenerateInput", what, index) {}
};

class InvalidTauSeed : public Error {
public:
    InvalidTauSeed() : Error("InvalidTauSeed", "tau_1 = -1 makes c_1 singular") {}
};

class OracleFailure : public Error {
public:
    explicit OracleFailure(const std::string& what) : Error("OracleFailure", what) {}
};

class NormalizationError : public Error {
public:
    explicit NormalizationError(double gamma0)
        : Error("NormalizationError", "measure is not normalized: gamma_0 = " + std::to_string(gamma0)) {}
};

class InvalidParameter : public Error {
public:
    explicit InvalidParameter(const std::string& what) : Error("InvalidParameter", what) {}
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("ParseError", "line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class IndexBeyondData : public IndexedError {
public:
    explicit IndexBeyondData(std::size_t index)
        : IndexedError("IndexBeyondData", "coefficient requested beyond the supplied data", index) {}
};

}  // namespace r2quad
