#pragma once

#include <stdexcept>
#include <string>

namespace polysum {

// An operation was called with inputs outside its documented domain.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An existence-guaranteed search came back empty. Always a bug.
class SearchExhausted : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A constructive chain failed at a named step.
class PipelineFailure : public std::runtime_error {
 public:
  PipelineFailure(std::string step, const std::string& detail)
      : std::runtime_error(step + ": " + detail), step_(std::move(step)) {}

  const std::string& step() const noexcept { return step_; }

 private:
  std::string step_;
};

}  // namespace polysum
