#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace arrmono {

// Every failure raised by the library derives from Error, so callers that
// only care about "did it work" can catch one type.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define ARRMONO_DEFINE_ERROR(Name)                                   \
    class Name : public Error {                                      \
    public:                                                          \
        explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
    }

ARRMONO_DEFINE_ERROR(ParseError);
ARRMONO_DEFINE_ERROR(ZeroAtPole);
ARRMONO_DEFINE_ERROR(ShapeMismatch);
ARRMONO_DEFINE_ERROR(NoSolution);
ARRMONO_DEFINE_ERROR(NotInRing);
ARRMONO_DEFINE_ERROR(NonzeroConstantTerm);
ARRMONO_DEFINE_ERROR(InvalidArrangement);
ARRMONO_DEFINE_ERROR(NotAComplex);
ARRMONO_DEFINE_ERROR(FundamentalIdentityFailed);
ARRMONO_DEFINE_ERROR(AbelianizationNotPreserved);
ARRMONO_DEFINE_ERROR(CertificateInvalid);
ARRMONO_DEFINE_ERROR(NotIdentityAtOne);
ARRMONO_DEFINE_ERROR(FactorizationFailed);
ARRMONO_DEFINE_ERROR(NonIntegerRootAtProbe);
ARRMONO_DEFINE_ERROR(VerificationFailed);

#undef ARRMONO_DEFINE_ERROR

// Raised when a matrix identity D^q * F^{q+1} == F^q * D^q fails; carries the
// first offending entry (0-based) so diagnostics can point at it.
class ChainIdentityFailed : public Error {
public:
    ChainIdentityFailed(std::size_t degree, std::size_t row, std::size_t col,
                        const std::string& detail)
        : Error("ChainIdentityFailed: degree " + std::to_string(degree) + " entry (" +
                std::to_string(row + 1) + "," + std::to_string(col + 1) + ")" +
                (detail.empty() ? "" : ": " + detail)),
          degree_(degree), row_(row), col_(col) {}

    std::size_t degree() const noexcept { return degree_; }
    std::size_t row() const noexcept { return row_; }
    std::size_t col() const noexcept { return col_; }

private:
    std::size_t degree_;
    std::size_t row_;
    std::size_t col_;
};

} // namespace arrmono
