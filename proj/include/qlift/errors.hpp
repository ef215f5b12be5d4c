#ifndef QLIFT_ERRORS_HPP
#define QLIFT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qlift {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define QLIFT_ERROR(Name)                                                     \
    struct Name : Error {                                                     \
        explicit Name(const std::string& what) : Error(#Name ": " + what) {}  \
    }

QLIFT_ERROR(RankError);
QLIFT_ERROR(ContainmentError);
QLIFT_ERROR(FormError);
QLIFT_ERROR(AlgebraError);
QLIFT_ERROR(DegenerateError);
QLIFT_ERROR(InputError);
QLIFT_ERROR(ConstructionError);
QLIFT_ERROR(InternalError);
QLIFT_ERROR(IdealError);
QLIFT_ERROR(WitnessError);
QLIFT_ERROR(SearchExhausted);
QLIFT_ERROR(EnumerationError);
QLIFT_ERROR(MultiplicityError);
QLIFT_ERROR(ClassificationError);
QLIFT_ERROR(AbsentError);
QLIFT_ERROR(BootstrapError);
QLIFT_ERROR(Indeterminate);
QLIFT_ERROR(TheoremViolation);

#undef QLIFT_ERROR

}  // namespace qlift

#endif
