#pragma once

#include <stdexcept>
#include <string>

namespace riordan {

// Inverting, dividing by, or taking the log-derivative of a series whose
// constant term is zero.
struct ZeroConstantTerm : std::domain_error {
    explicit ZeroConstantTerm(const std::string& what) : std::domain_error(what) {}
};

// Composing a non-polynomial series with an inner series g, g(0) != 0.
struct NonzeroInnerConstant : std::domain_error {
    explicit NonzeroInnerConstant(const std::string& what) : std::domain_error(what) {}
};

// A series does not have the valuation an operation requires (reversion
// needs h(0)=0, h'(0)!=0; a Riordan pair needs g(0)=0).
struct BadValuation : std::domain_error {
    explicit BadValuation(const std::string& what) : std::domain_error(what) {}
};

struct NonSquareConstant : std::domain_error {
    explicit NonSquareConstant(const std::string& what) : std::domain_error(what) {}
};

struct BadConstantTerm : std::domain_error {
    explicit BadConstantTerm(const std::string& what) : std::domain_error(what) {}
};

struct NotProper : std::domain_error {
    explicit NotProper(const std::string& what) : std::domain_error(what) {}
};

// The truncation order of an input is too small for the requested result.
struct InsufficientOrder : std::domain_error {
    explicit InsufficientOrder(const std::string& what) : std::domain_error(what) {}
};

struct UnsupportedIndex : std::domain_error {
    explicit UnsupportedIndex(const std::string& what) : std::domain_error(what) {}
};

struct DegreeTooHigh : std::domain_error {
    explicit DegreeTooHigh(const std::string& what) : std::domain_error(what) {}
};

// A combination that is claimed polynomial has a nonzero truncation tail
// (usually means the working order was too small).
struct NonPolynomialResidue : std::domain_error {
    explicit NonPolynomialResidue(const std::string& what) : std::domain_error(what) {}
};

// An odd power of a radical survived a combination that must be rational.
struct ParityViolation : std::logic_error {
    explicit ParityViolation(const std::string& what) : std::logic_error(what) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace riordan
