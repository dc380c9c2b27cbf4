#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace psf {

enum class Errc {
    ZeroInput,
    NotAUnit,
    NotPrime,
    PrimeMismatch,
    InsufficientTruncation,
    InsufficientLevel,
    NotDistinguished,
    PreconditionViolation,
    IndexingViolation,
    NotCoprime,
    PrecisionLoss,
    ZeroDiscriminantAtPrecision,
    BadBezout,
    BadSplit,
    BadPartition,
    NotPairwiseCoprime,
    NotInIdeal,
    ZeroConstantTerm,
    UnresolvedPadicFactorization,
    ContentNotAsserted,
    DiscriminantUnresolved,
    SyntaxError,
    NonPolynomial,
    Internal,
};

inline std::string_view errc_name(Errc e) {
    switch (e) {
    case Errc::ZeroInput: return "ZeroInput";
    case Errc::NotAUnit: return "NotAUnit";
    case Errc::NotPrime: return "NotPrime";
    case Errc::PrimeMismatch: return "PrimeMismatch";
    case Errc::InsufficientTruncation: return "InsufficientTruncation";
    case Errc::InsufficientLevel: return "InsufficientLevel";
    case Errc::NotDistinguished: return "NotDistinguished";
    case Errc::PreconditionViolation: return "PreconditionViolation";
    case Errc::IndexingViolation: return "IndexingViolation";
    case Errc::NotCoprime: return "NotCoprime";
    case Errc::PrecisionLoss: return "PrecisionLoss";
    case Errc::ZeroDiscriminantAtPrecision: return "ZeroDiscriminantAtPrecision";
    case Errc::BadBezout: return "BadBezout";
    case Errc::BadSplit: return "BadSplit";
    case Errc::BadPartition: return "BadPartition";
    case Errc::NotPairwiseCoprime: return "NotPairwiseCoprime";
    case Errc::NotInIdeal: return "NotInIdeal";
    case Errc::ZeroConstantTerm: return "ZeroConstantTerm";
    case Errc::UnresolvedPadicFactorization: return "UnresolvedPadicFactorization";
    case Errc::ContentNotAsserted: return "ContentNotAsserted";
    case Errc::DiscriminantUnresolved: return "DiscriminantUnresolved";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::NonPolynomial: return "NonPolynomial";
    case Errc::Internal: return "Internal";
    }
    return "Unknown";
}

/// Every library failure is reported through this exception type; `code()`
/// identifies the condition so callers (and the CLI) can map it.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

/// Raised when a valuation or factor cannot be certified at the stored
/// precision. `extra` is the least additional p-adic precision that might help.
class PrecisionError : public Error {
public:
    PrecisionError(const std::string& what, std::size_t extra)
        : Error(Errc::PrecisionLoss, what + " (need at least " + std::to_string(extra) +
                                         " more digits)"),
          extra_(extra) {}

    std::size_t extra() const noexcept { return extra_; }

private:
    std::size_t extra_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

} // namespace psf
