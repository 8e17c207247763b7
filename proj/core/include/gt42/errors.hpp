#pragma once

#include <stdexcept>
#include <string>

namespace gt42 {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Frame has rank < 2: all six minors vanish.
struct RankDeficientError : Error {
  RankDeficientError() : Error("frame is rank deficient: all six minors vanish") {}
  explicit RankDeficientError(const std::string& what) : Error(what) {}
};

// Requested affine chart does not contain the point (its pivot minor vanishes).
struct NotInChartError : Error {
  explicit NotInChartError(const std::string& what) : Error(what) {}
};

// All homogeneous coordinates vanish.
struct ZeroVectorError : Error {
  ZeroVectorError() : Error("zero vector does not define a projective point") {}
  explicit ZeroVectorError(const std::string& what) : Error(what) {}
};

// Zero pattern is not realizable by any point of the Grassmannian.
struct NotAdmissibleError : Error {
  explicit NotAdmissibleError(const std::string& what) : Error(what) {}
};

// Boundary operators do not satisfy d∘d = 0.
struct NotAComplexError : Error {
  explicit NotAComplexError(const std::string& what) : Error(what) {}
};

// Stratum identifier does not name an admissible stratum.
struct UnknownStratumError : Error {
  explicit UnknownStratumError(const std::string& what) : Error(what) {}
};

// Malformed input (JSON schema violations, bad rationals, wrong shapes).
struct InputError : Error {
  explicit InputError(const std::string& what) : Error(what) {}
};

}  // namespace gt42
