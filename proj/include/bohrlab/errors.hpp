#pragma once

#include <stdexcept>
#include <string>

namespace bohrlab {

// Query asks for something the catalog does not support (e.g. a Rogosinski
// radius for a Ma-Minda family).
class CapabilityError : public std::runtime_error {
public:
    explicit CapabilityError(const std::string& msg) : std::runtime_error(msg) {}
};

// Family-spec string did not parse or violated a parameter range.
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& msg, std::string token)
        : std::invalid_argument(msg), bad_token(std::move(token)) {}
    std::string bad_token;
};

// Inner series reaches outside the outer series' disk of validity.
class CompositionDomainError : public std::domain_error {
public:
    explicit CompositionDomainError(const std::string& msg) : std::domain_error(msg) {}
};

// Bracketed solve found no sign change; carries the endpoint values so the
// failure diagnoses the objective that produced it.
class SolverError : public std::runtime_error {
public:
    SolverError(const std::string& msg, double lo_, double hi_, double f_lo_, double f_hi_)
        : std::runtime_error(msg), lo(lo_), hi(hi_), f_lo(f_lo_), f_hi(f_hi_) {}
    double lo, hi, f_lo, f_hi;
};

// A sampled object failed one of its construction invariants.
class ConstructionError : public std::runtime_error {
public:
    explicit ConstructionError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace bohrlab
