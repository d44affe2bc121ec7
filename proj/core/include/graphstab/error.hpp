#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace graphstab {

enum class Errc {
  InvalidGraph,
  InvalidMatching,
  NotHalfIntegral,
  DegreeConstraintViolated,
  NotBasic,
  CycleNotInSupport,
  VertexNotOnCycle,
  HalfValueOnPath,
  NotAComponent,
  InfeasibleCover,
  NotAlternating,
  WeightLoss,
  NotAugmenting,
  NotOptimalPair,
  PathNotAugmenting,
  EndpointNotRecognized,
  EntryIsMinusInfinity,
  VertexNotExposed,
  MNotAMatching,
  BudgetExceeded,
  ParseError,
};

std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace graphstab
