#ifndef GC_ERRORS_HPP
#define GC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gc {

/// Base of every error thrown by the engine.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "Error"; }
};

#define GC_DEFINE_ERROR(Name)                                            \
  struct Name : Error {                                                  \
    using Error::Error;                                                  \
    const char* kind() const noexcept override { return #Name; }         \
  };

GC_DEFINE_ERROR(UnsupportedAlgebra)
GC_DEFINE_ERROR(Unsupported)
GC_DEFINE_ERROR(AmbiguousPositivity)
GC_DEFINE_ERROR(OrderingMismatch)
GC_DEFINE_ERROR(FieldMismatch)
GC_DEFINE_ERROR(GhostDimensionError)
GC_DEFINE_ERROR(InvarianceError)
GC_DEFINE_ERROR(BudgetExceeded)
GC_DEFINE_ERROR(InjectivityViolation)
GC_DEFINE_ERROR(MembershipError)
GC_DEFINE_ERROR(NotGhostImage)
GC_DEFINE_ERROR(NormalizationError)
GC_DEFINE_ERROR(CentralityError)
GC_DEFINE_ERROR(NotDominant)
GC_DEFINE_ERROR(OracleViolation)
GC_DEFINE_ERROR(NoIwasawa)
GC_DEFINE_ERROR(InvalidAlgebra)

#undef GC_DEFINE_ERROR

/// Parse failure with the offending position and what was expected there.
struct ParseError : Error {
  std::size_t position;
  std::string expected;
  ParseError(const std::string& msg, std::size_t pos, std::string exp)
      : Error(msg + " at position " + std::to_string(pos) + " (expected " + exp + ")"),
        position(pos), expected(std::move(exp)) {}
  const char* kind() const noexcept override { return "ParseError"; }
};

/// Reconstruction failure; `residual` is the serialized difference.
struct DecompositionMismatch : Error {
  std::string residual;
  DecompositionMismatch(const std::string& msg, std::string res)
      : Error(msg + ": residual " + res), residual(std::move(res)) {}
  const char* kind() const noexcept override { return "DecompositionMismatch"; }
};

}  // namespace gc

#endif
