#pragma once

#include <stdexcept>
#include <string>

namespace qgame {

struct InconsistentTable : std::runtime_error {
  explicit InconsistentTable(const std::string& what) : std::runtime_error(what) {}
};

struct BadMixture : std::runtime_error {
  explicit BadMixture(const std::string& what) : std::runtime_error(what) {}
};

struct SignAssumptionViolated : std::runtime_error {
  explicit SignAssumptionViolated(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidPhase : std::runtime_error {
  explicit InvalidPhase(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidIndices : std::runtime_error {
  explicit InvalidIndices(const std::string& what) : std::runtime_error(what) {}
};

struct ConstraintViolated : std::runtime_error {
  explicit ConstraintViolated(const std::string& what) : std::runtime_error(what) {}
};

struct BoundViolated : std::runtime_error {
  explicit BoundViolated(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

struct SamplingExhausted : std::runtime_error {
  explicit SamplingExhausted(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qgame
