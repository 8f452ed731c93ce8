#pragma once

#include <stdexcept>
#include <string>

namespace hopfcalc {

// Mathematical errors carry a stable short name; the CLI prints that name on
// stderr and exits 3. Usage-level problems (bad expressions, unknown flags)
// are ParseError / UsageError and exit 2 instead.
class MathError : public std::runtime_error {
public:
  MathError(std::string name, const std::string& what)
      : std::runtime_error(what), name_(std::move(name)) {}
  const std::string& name() const { return name_; }

private:
  std::string name_;
};

#define HOPFCALC_MATH_ERROR(CLASS, NAME)                          \
  class CLASS : public MathError {                                \
  public:                                                         \
    explicit CLASS(const std::string& what = NAME)                \
        : MathError(NAME, what) {}                                \
  }

HOPFCALC_MATH_ERROR(NoAntipodeError, "NoAntipode");
HOPFCALC_MATH_ERROR(SizeLimitError, "SizeLimit");
HOPFCALC_MATH_ERROR(PartitionMismatchError, "PartitionMismatch");
HOPFCALC_MATH_ERROR(OrderMismatchError, "OrderMismatch");
HOPFCALC_MATH_ERROR(NonzeroConstantTermError, "NonzeroConstantTerm");
HOPFCALC_MATH_ERROR(NotAMorphismError, "NotAMorphism");
HOPFCALC_MATH_ERROR(DimensionMismatchError, "DimensionMismatch");
HOPFCALC_MATH_ERROR(IndexOutOfRangeError, "IndexOutOfRange");
HOPFCALC_MATH_ERROR(UnknownLetterError, "UnknownLetter");
HOPFCALC_MATH_ERROR(MalformedMatrixError, "MalformedMatrix");

#undef HOPFCALC_MATH_ERROR

class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

class UsageError : public std::runtime_error {
public:
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hopfcalc
