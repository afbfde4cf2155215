#pragma once

#include <stdexcept>
#include <string>

namespace graphpredict {

// Root of every error the library raises. Subclasses carry the kind so callers
// (the CLI in particular) can map them to exit codes without string matching.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define GRAPHPREDICT_ERROR(Name)         \
  class Name : public Error {            \
   public:                               \
    using Error::Error;                  \
  }

GRAPHPREDICT_ERROR(SchemaError);
GRAPHPREDICT_ERROR(LookupError);
GRAPHPREDICT_ERROR(ValidationError);
GRAPHPREDICT_ERROR(ConfigError);
GRAPHPREDICT_ERROR(DimensionError);
GRAPHPREDICT_ERROR(PropertyError);
GRAPHPREDICT_ERROR(ProjectionError);
GRAPHPREDICT_ERROR(ConnectivityError);
GRAPHPREDICT_ERROR(SizeError);
GRAPHPREDICT_ERROR(ClassError);
GRAPHPREDICT_ERROR(TrainingError);
GRAPHPREDICT_ERROR(FeatureError);
GRAPHPREDICT_ERROR(DivergenceError);
GRAPHPREDICT_ERROR(SymmetryError);
GRAPHPREDICT_ERROR(UndefinedSimilarityError);
GRAPHPREDICT_ERROR(DegenerateQueryError);
GRAPHPREDICT_ERROR(ParseError);
GRAPHPREDICT_ERROR(FileError);
GRAPHPREDICT_ERROR(StageError);

#undef GRAPHPREDICT_ERROR

}  // namespace graphpredict
