#pragma once
#include <stdexcept>
#include <string>

namespace jpgeom {

// Base class for every library error. Subclasses are deliberately fine-grained
// so callers can catch exactly the failure mode they can recover from.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define JPGEOM_DEFINE_ERROR(Name)                                  \
  struct Name : Error {                                            \
    explicit Name(const std::string& msg = #Name) : Error(msg) {}  \
  }

JPGEOM_DEFINE_ERROR(InvalidField);
JPGEOM_DEFINE_ERROR(FieldMismatch);
JPGEOM_DEFINE_ERROR(DimensionMismatch);
JPGEOM_DEFINE_ERROR(DivisionByZero);
JPGEOM_DEFINE_ERROR(ParseError);
JPGEOM_DEFINE_ERROR(AlgebraMismatch);
JPGEOM_DEFINE_ERROR(InvalidStructureConstants);
JPGEOM_DEFINE_ERROR(NotTripotent);
JPGEOM_DEFINE_ERROR(NotTransversal);
JPGEOM_DEFINE_ERROR(NotHomogeneous);
JPGEOM_DEFINE_ERROR(NotInChart);
JPGEOM_DEFINE_ERROR(NotInOmega);
JPGEOM_DEFINE_ERROR(CapExceeded);
JPGEOM_DEFINE_ERROR(InfiniteField);
JPGEOM_DEFINE_ERROR(NotSurjective);
JPGEOM_DEFINE_ERROR(NotGraded);
JPGEOM_DEFINE_ERROR(InvalidPair);
JPGEOM_DEFINE_ERROR(InvalidJTS);
JPGEOM_DEFINE_ERROR(NotInvolution);
JPGEOM_DEFINE_ERROR(NotQuasiInvertible);
JPGEOM_DEFINE_ERROR(NotInvertible);
JPGEOM_DEFINE_ERROR(NotUnitCandidate);
JPGEOM_DEFINE_ERROR(NotBitransversal);
JPGEOM_DEFINE_ERROR(Isotropic);
JPGEOM_DEFINE_ERROR(Hypothesis71Violated);
JPGEOM_DEFINE_ERROR(NotCentralExtension);
JPGEOM_DEFINE_ERROR(NotComplementary);
JPGEOM_DEFINE_ERROR(SchemaViolation);
JPGEOM_DEFINE_ERROR(UnknownEntry);

#undef JPGEOM_DEFINE_ERROR

}  // namespace jpgeom
