#pragma once

#include <stdexcept>
#include <string>

namespace msp {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define MSP_DEFINE_ERROR(Name)                 \
    class Name : public Error {                \
    public:                                    \
        using Error::Error;                    \
    }

MSP_DEFINE_ERROR(InvalidArgument);
MSP_DEFINE_ERROR(InvalidDomain);
MSP_DEFINE_ERROR(DoldViolation);
MSP_DEFINE_ERROR(DivisionByZero);
MSP_DEFINE_ERROR(ExactnessError);
MSP_DEFINE_ERROR(NonMonicInput);
MSP_DEFINE_ERROR(DimensionMismatch);
MSP_DEFINE_ERROR(OddDimension);
MSP_DEFINE_ERROR(NotAntisymplectic);
MSP_DEFINE_ERROR(FormViolation);
MSP_DEFINE_ERROR(WrongKind);
MSP_DEFINE_ERROR(EmptyTarget);
MSP_DEFINE_ERROR(OddTargetUnrealizable);
MSP_DEFINE_ERROR(TargetMismatch);
MSP_DEFINE_ERROR(ParseError);

#undef MSP_DEFINE_ERROR

}  // namespace msp
