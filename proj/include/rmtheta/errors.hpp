#pragma once

#include <stdexcept>
#include <string>

namespace rmtheta {

// Base class for every error raised by the library. The CLI maps these to
// exit code 3 (mathematical/domain failure) vs 2 (input validation).
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define RMTHETA_ERROR(Name)                                            \
    struct Name : Error {                                              \
        explicit Name(const std::string& what = #Name) : Error(what) {} \
    }

RMTHETA_ERROR(NonPrime);
RMTHETA_ERROR(InvalidExtension);
RMTHETA_ERROR(FieldMismatch);
RMTHETA_ERROR(DivisionByZero);
RMTHETA_ERROR(UnsupportedField);
RMTHETA_ERROR(ZeroArgument);
RMTHETA_ERROR(InconsistentCharacterData);
RMTHETA_ERROR(UnramifiedCharacter);
RMTHETA_ERROR(DimensionMismatch);
RMTHETA_ERROR(SingularMatrix);
RMTHETA_ERROR(ZeroDiagonal);
RMTHETA_ERROR(DivergentParameters);
RMTHETA_ERROR(BadReduction);
RMTHETA_ERROR(UnsupportedFieldSize);
RMTHETA_ERROR(WeilBoundViolation);
RMTHETA_ERROR(IndefiniteGram);
RMTHETA_ERROR(BoundTooLarge);
RMTHETA_ERROR(MissingPrime);
RMTHETA_ERROR(RamifiedPrimeUnsupported);
RMTHETA_ERROR(NonIntegralProduct);
RMTHETA_ERROR(DiscMismatch);
RMTHETA_ERROR(SatakeUnsolvable);

#undef RMTHETA_ERROR

}  // namespace rmtheta
