#pragma once

#include <stdexcept>

namespace apramsey {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParameterOutOfRange : Error { using Error::Error; };
struct NotOddPrime : Error { using Error::Error; };
struct NotCoprime : Error { using Error::Error; };
struct OverflowEnvelopeExceeded : Error { using Error::Error; };
struct DisjointnessViolated : Error { using Error::Error; };
struct WitnessConstructionFailed : Error { using Error::Error; };
struct ConstructionInvalid : Error { using Error::Error; };

}  // namespace apramsey
