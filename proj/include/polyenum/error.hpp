#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace polyenum {

enum class Errc {
  InvalidArgument,
  ParseError,
  EmptyMatrix,
  NotConnected,
  LooseBoundingBox,
  CapExceeded,
  NotAPermutation,
  NotAPermutationMatrix,
  NotQuasiPermutation,
  NotConvex,
  NotParallelogram,
  DegreeZero,
  InvalidDecomposition,
  NonInvertibleConstantTerm,
  NonSquareConstantTerm,
  ConstantTermNotZero,
  IdentityFailed,
  UnknownFamily,
  MalformedTree,
  NotAPartialOrder,
  CorruptCache,
};

std::string_view errcName(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail)
      : std::runtime_error(std::string(errcName(code)) + ": " + detail), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace polyenum
