#ifndef PHGJ_ERRORS_HPP
#define PHGJ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace phgj {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonIntegrable : Error { using Error::Error; };
struct InvalidSupport : Error { using Error::Error; };
struct TooShort : Error { using Error::Error; };
struct ZeroMeasure : Error { using Error::Error; };
struct RankTooLow : Error { using Error::Error; };
struct InsufficientSamples : Error { using Error::Error; };
struct NotPseudoPositive : Error { using Error::Error; };
struct MissingMoment : Error { using Error::Error; };
struct NoConvergence : Error { using Error::Error; };
struct NonPositiveWeight : Error { using Error::Error; };
struct NodeEscape : Error { using Error::Error; };
struct MissingDerivativeBound : Error { using Error::Error; };
struct OrderTooHigh : Error { using Error::Error; };
struct InvalidRadii : Error { using Error::Error; };

} // namespace phgj

#endif
