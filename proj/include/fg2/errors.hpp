#pragma once
#include <stdexcept>
#include <string>

namespace fg2 {

struct Error : std::runtime_error {
    explicit Error(const std::string& m) : std::runtime_error(m) {}
};

#define FG2_ERROR(Name) \
    struct Name : Error { \
        explicit Name(const std::string& m = #Name) : Error(m) {} \
    }

FG2_ERROR(DenominatorZero);
FG2_ERROR(SampleExhausted);
FG2_ERROR(FrozenVertexMutation);
FG2_ERROR(IncompatibleGlueing);
FG2_ERROR(UnknownGroup);
FG2_ERROR(UnsupportedMatrixModel);
FG2_ERROR(ZeroMinor);
FG2_ERROR(NonGenericInput);
FG2_ERROR(ChainConditionViolated);
FG2_ERROR(MalformedTriangulation);
FG2_ERROR(UnpairedFace);
FG2_ERROR(UnassignedVariable);
FG2_ERROR(NonGenericSolution);
FG2_ERROR(InsufficientOrbitFreedom);

#undef FG2_ERROR

} // namespace fg2
