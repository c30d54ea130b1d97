#pragma once

#include <stdexcept>
#include <string>

namespace hs {

// Every failure raised by the library derives from Error so callers (the CLI in
// particular) can catch one type and still report the specific kind.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define HS_DEFINE_ERROR(Name)                                                  \
    class Name : public Error {                                                \
    public:                                                                    \
        explicit Name(const std::string& what) : Error(#Name, what) {}         \
    }

HS_DEFINE_ERROR(ParseError);
HS_DEFINE_ERROR(NonExactDivision);
HS_DEFINE_ERROR(AsymmetricInput);
HS_DEFINE_ERROR(OddExponent);
HS_DEFINE_ERROR(UndefinedOperator);
HS_DEFINE_ERROR(InvalidWord);
HS_DEFINE_ERROR(ScoreViolation);
HS_DEFINE_ERROR(NonIntegerCoefficient);
HS_DEFINE_ERROR(InvalidQuery);
HS_DEFINE_ERROR(ConsistencyFailure);
HS_DEFINE_ERROR(BudgetExceeded);
HS_DEFINE_ERROR(DegreeTooLarge);
HS_DEFINE_ERROR(SingularSystem);
HS_DEFINE_ERROR(MismatchAgainstGolden);

#undef HS_DEFINE_ERROR

}  // namespace hs
