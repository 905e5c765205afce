#pragma once

#include <stdexcept>
#include <string>

namespace hopfact {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define HOPFACT_ERROR(Name)                  \
    struct Name : Error {                    \
        using Error::Error;                  \
    }

HOPFACT_ERROR(DivisionByZero);
HOPFACT_ERROR(ParentMismatch);
HOPFACT_ERROR(NoSolution);
HOPFACT_ERROR(BadBicharacter);
HOPFACT_ERROR(SingularMatrix);
HOPFACT_ERROR(ShapeMismatch);
HOPFACT_ERROR(NotPrimitiveRoot);
HOPFACT_ERROR(BadSupportShape);
HOPFACT_ERROR(DegenerateBicharacter);
HOPFACT_ERROR(NotCommutingAction);
HOPFACT_ERROR(NotFiniteOrder);
HOPFACT_ERROR(MalformedGrading);
HOPFACT_ERROR(BadOrder);
HOPFACT_ERROR(UnknownGenerator);
HOPFACT_ERROR(NotInnerCompatible);
HOPFACT_ERROR(InconsistentDegree);
HOPFACT_ERROR(ConditionFailed);
HOPFACT_ERROR(ConstraintViolated);
HOPFACT_ERROR(ShapeViolation);
HOPFACT_ERROR(NotDivisible);
HOPFACT_ERROR(TrivialSkewPart);
HOPFACT_ERROR(SchemaError);

#undef HOPFACT_ERROR

// which: name of the violated datum invariant, e.g. "ejj" or "compat_ii"
struct DatumViolation : Error {
    DatumViolation(std::string which_, int i_, int j_, const std::string& msg)
        : Error(msg), which(std::move(which_)), i(i_), j(j_) {}
    std::string which;
    int i;
    int j;
};

}  // namespace hopfact
