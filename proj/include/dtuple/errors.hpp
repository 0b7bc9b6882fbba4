#pragma once

#include <stdexcept>
#include <string>

namespace dtuple {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// intmath
struct EvenModulus : Error { using Error::Error; };
struct NotPrime : Error { using Error::Error; };
struct LimitTooLarge : Error { using Error::Error; };

// tuples
struct DuplicateElements : Error { using Error::Error; };
struct NonPositiveElement : Error { using Error::Error; };
struct ZeroN : Error { using Error::Error; };
struct BudgetExceeded : Error { using Error::Error; };

// extension
struct NotATriple : Error { using Error::Error; };
struct NonSquareResidual : Error { using Error::Error; };
struct ExtensionNotLarger : Error { using Error::Error; };
struct ExtensionInvalid : Error { using Error::Error; };

// gapbound
struct TrivialN : Error { using Error::Error; };

// sievebound
struct SharedFactor : Error { using Error::Error; };
struct DomainTooSmall : Error { using Error::Error; };
struct QTooSmall : Error { using Error::Error; };

// cli
struct InputError : Error { using Error::Error; };

}  // namespace dtuple
