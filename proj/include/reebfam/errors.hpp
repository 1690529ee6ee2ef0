#pragma once

#include <stdexcept>
#include <string>

namespace reebfam {

/// Base class for all toolkit errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define REEBFAM_ERROR(Name)                                         \
    struct Name : Error {                                           \
        explicit Name(const std::string& msg) : Error(#Name ": " + msg) {} \
    }

// geometry
REEBFAM_ERROR(UnboundedRegion);
REEBFAM_ERROR(NonSimpleVertex);
REEBFAM_ERROR(EmptyInterior);
REEBFAM_ERROR(DimensionMismatch);
REEBFAM_ERROR(NonPositiveScale);
REEBFAM_ERROR(ValidationError);

// cone
REEBFAM_ERROR(OriginNotInterior);
REEBFAM_ERROR(ReebVectorOutsideChamber);
REEBFAM_ERROR(IrrationalLabels);
REEBFAM_ERROR(NormalNotInLatticeDirection);

// moments
REEBFAM_ERROR(ReebNotPositive);
REEBFAM_ERROR(AccuracyNotReached);
REEBFAM_ERROR(WrongDimension);
REEBFAM_ERROR(ChamberBoundaryProximity);
REEBFAM_ERROR(UnsupportedExactSpec);

// futaki
REEBFAM_ERROR(IllConditioned);

// critical
REEBFAM_ERROR(SearchExhausted);
REEBFAM_ERROR(DegenerateResultant);

// quadrilateral
REEBFAM_ERROR(NotAQuadrilateral);
REEBFAM_ERROR(DegenerateConfiguration);
REEBFAM_ERROR(NotCoprime);

// cli
REEBFAM_ERROR(ParseError);

#undef REEBFAM_ERROR

}  // namespace reebfam
