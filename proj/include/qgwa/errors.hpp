#pragma once

#include <stdexcept>
#include <string>

namespace qgwa {

// Base class for every error thrown by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

struct MixedFields : Error {
    explicit MixedFields(const std::string& ctx)
        : Error("operands belong to different fields: " + ctx) {}
};

struct MixedRings : Error {
    explicit MixedRings(const std::string& ctx)
        : Error("operands belong to different coefficient rings: " + ctx) {}
};

struct MixedAlgebras : Error {
    explicit MixedAlgebras(const std::string& ctx)
        : Error("operands belong to different algebras: " + ctx) {}
};

struct NegativeExponentInPolyRing : Error {
    explicit NegativeExponentInPolyRing(long exp)
        : Error("negative exponent " + std::to_string(exp) +
                " not allowed in the polynomial ring") {}
};

struct ZeroPolynomial : Error {
    explicit ZeroPolynomial(const std::string& op)
        : Error(op + ": zero polynomial not allowed") {}
};

struct ZeroElement : Error {
    explicit ZeroElement(const std::string& op)
        : Error(op + ": zero element not allowed") {}
};

struct ValidationError : Error {
    explicit ValidationError(const std::string& msg) : Error(msg) {}
};

struct InvalidGenerator : Error {
    explicit InvalidGenerator(const std::string& msg) : Error(msg) {}
};

struct InconsistentImages : Error {
    explicit InconsistentImages(const std::string& relation)
        : Error("generator images violate relation: " + relation) {}
};

struct NonInvertibleImageOfH : Error {
    NonInvertibleImageOfH()
        : Error("image of h must be invertible in the target algebra") {}
};

struct GammaNotInCg : Error {
    explicit GammaNotInCg(const std::string& msg)
        : Error("gamma is not a valid scaling parameter: " + msg) {}
};

struct QNotMinusOne : Error {
    QNotMinusOne() : Error("construction requires q = -1") {}
};

struct NotSymmetric : Error {
    NotSymmetric() : Error("construction requires a symmetric defining polynomial") {}
};

struct MatrixNotInH : Error {
    explicit MatrixNotInH(const std::string& msg)
        : Error("matrix not admissible for this algebra: " + msg) {}
};

struct NotComposable : Error {
    NotComposable() : Error("morphisms not composable: target/source mismatch") {}
};

struct NotRecognizedInvertible : Error {
    NotRecognizedInvertible()
        : Error("morphism not recognized as a member of an invertible family") {}
};

struct UnitCaseOnly : Error {
    explicit UnitCaseOnly(const std::string& op)
        : Error(op + ": defined only when the defining polynomial is a unit") {}
};

// Parse errors carry a position (0-based offset into the input).
struct SyntaxError : Error {
    std::size_t position;
    SyntaxError(const std::string& msg, std::size_t pos)
        : Error(msg + " (at offset " + std::to_string(pos) + ")"), position(pos) {}
};

}  // namespace qgwa
