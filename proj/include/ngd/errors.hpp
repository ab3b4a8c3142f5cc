#pragma once

#include <stdexcept>
#include <string>

namespace ngd {

// Base for every domain error the library throws. The CLI maps these to
// exit code 1; anything else escaping is a bug.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define NGD_ERROR_TYPE(Name)                                \
    class Name : public Error {                             \
    public:                                                 \
        explicit Name(const std::string& msg) : Error(msg) {} \
    };

// graph validation
NGD_ERROR_TYPE(AsymmetricWeights)
NGD_ERROR_TYPE(SelfLoop)
NGD_ERROR_TYPE(NegativeWeight)
NGD_ERROR_TYPE(Disconnected)

// spectral
NGD_ERROR_TYPE(NotSymmetric)
NGD_ERROR_TYPE(ConvergenceFailure)
NGD_ERROR_TYPE(NegativeEigenvalue)
NGD_ERROR_TYPE(NonSimilarizable)

// nonlocal constructions
NGD_ERROR_TYPE(NonPositiveFractionalWeight)
NGD_ERROR_TYPE(ZeroDistance)

// compatibility / conditioning
NGD_ERROR_TYPE(SizeMismatch)
NGD_ERROR_TYPE(EdgeNotPreserved)
NGD_ERROR_TYPE(MaskDisconnects)
NGD_ERROR_TYPE(EmptyRow)

// regularization
NGD_ERROR_TYPE(OriginMismatch)
NGD_ERROR_TYPE(BaseComplete)

// dynamics / analytics
NGD_ERROR_TYPE(InvalidDistribution)
NGD_ERROR_TYPE(DegenerateEigenvalueOne)
NGD_ERROR_TYPE(SingularSystem)

// generators
NGD_ERROR_TYPE(BadWeightCount)

// io
NGD_ERROR_TYPE(ParseError)
NGD_ERROR_TYPE(DuplicateEdge)
NGD_ERROR_TYPE(UnsupportedFormat)

#undef NGD_ERROR_TYPE

}  // namespace ngd
