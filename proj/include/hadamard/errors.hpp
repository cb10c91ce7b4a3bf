#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace had {

// Raised when a construction does not cover the requested parameter.
class Unsupported : public std::runtime_error {
public:
    explicit Unsupported(const std::string& what) : std::runtime_error(what) {}
};

class NotPrimePower : public std::invalid_argument {
public:
    explicit NotPrimePower(std::int64_t q)
        : std::invalid_argument("not an odd prime power: " + std::to_string(q)), q_(q) {}
    std::int64_t value() const { return q_; }

private:
    std::int64_t q_;
};

// A data record or computed object failed its validator.
class ValidationFailure : public std::runtime_error {
public:
    explicit ValidationFailure(const std::string& what) : std::runtime_error(what) {}
};

class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Matrix requested for an order whose existence status is not Exists.
class NoConstruction : public std::runtime_error {
public:
    NoConstruction(std::int64_t n, const std::string& status)
        : std::runtime_error("no construction for order " + std::to_string(n) + " (" + status + ")"),
          order_(n), status_(status) {}
    std::int64_t order() const { return order_; }
    // "NotExist" or "Unknown".
    const std::string& status() const { return status_; }

private:
    std::int64_t order_;
    std::string status_;
};

class NotCovered : public std::runtime_error {
public:
    explicit NotCovered(std::int64_t residue)
        : std::runtime_error("residue " + std::to_string(residue) + " is not covered"),
          residue_(residue) {}
    std::int64_t residue() const { return residue_; }

private:
    std::int64_t residue_;
};

}  // namespace had
