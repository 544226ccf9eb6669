#ifndef LEONARD_ERRORS_HPP
#define LEONARD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace leonard {

/// Base class for all domain errors raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// qfield
class ZeroDenominatorError : public Error {
public:
    ZeroDenominatorError() : Error("rational function with zero denominator") {}
};
class DivisionByZeroError : public Error {
public:
    DivisionByZeroError() : Error("division by zero field element") {}
};
class PoleAtPointError : public Error {
public:
    explicit PoleAtPointError(const std::string& what = "evaluation at a pole") : Error(what) {}
};
class DegreeCapError : public Error {
public:
    explicit DegreeCapError(long deg, long cap)
        : Error("polynomial degree " + std::to_string(deg) + " exceeds cap " + std::to_string(cap)) {}
};
class SquareDiscriminantError : public Error {
public:
    SquareDiscriminantError()
        : Error("discriminant is a square; element belongs to the base field") {}
};

// exactmat
class NotSquareError : public Error {
public:
    NotSquareError() : Error("matrix is not square") {}
};
class SizeMismatchError : public Error {
public:
    explicit SizeMismatchError(const std::string& what = "matrix size mismatch") : Error(what) {}
};
class SingularMatrixError : public Error {
public:
    SingularMatrixError() : Error("matrix is singular") {}
};
class NotAnEigenvalueError : public Error {
public:
    NotAnEigenvalueError() : Error("value is not an eigenvalue (trivial kernel)") {}
};
class DegenerateEigenvalueError : public Error {
public:
    DegenerateEigenvalueError() : Error("eigenvalue has kernel dimension > 1") {}
};

// params
class NotRecurrentError : public Error {
public:
    NotRecurrentError() : Error("sequence is not beta-recurrent") {}
};
class MissingXiError : public Error {
public:
    MissingXiError() : Error("closed-form parameters lack xi") {}
};
class MissingCError : public Error {
public:
    MissingCError() : Error("closed-form parameters lack c") {}
};
class ZeroCError : public Error {
public:
    ZeroCError() : Error("parameter c must be nonzero") {}
};
class UnderdeterminedError : public Error {
public:
    UnderdeterminedError() : Error("every nonzero c satisfies the equation") {}
};
class NoNonzeroRootError : public Error {
public:
    NoNonzeroRootError() : Error("the quadratic has no nonzero root") {}
};
class NotALeonardPairError : public Error {
public:
    explicit NotALeonardPairError(const std::string& what = "not a Leonard pair") : Error(what) {}
};

// lbtd
class ConditionsViolatedError : public Error {
public:
    explicit ConditionsViolatedError(const std::string& what = "construction inequalities violated")
        : Error(what) {}
};
class EigenvalueMismatchError : public Error {
public:
    explicit EigenvalueMismatchError(const std::string& what = "eigenvalue list mismatch")
        : Error(what) {}
};
class NotInFamilyError : public Error {
public:
    explicit NotInFamilyError(const std::string& what) : Error("pair not in the LB-TD family: " + what) {}
};
class DegenerateZError : public Error {
public:
    DegenerateZError() : Error("subdiagonal ratio z_2/z_1 is neither q^2 nor q^-2") {}
};
class CaseHypothesisViolatedError : public Error {
public:
    explicit CaseHypothesisViolatedError(const std::string& what) : Error(what) {}
};

// awrel
class NonzeroAlphaError : public Error {
public:
    NonzeroAlphaError() : Error("closed scalar forms require alpha = alpha* = 0") {}
};
class InconsistentScalarsError : public Error {
public:
    explicit InconsistentScalarsError(const std::string& what) : Error(what) {}
};

}  // namespace leonard

#endif
