#pragma once

#include <stdexcept>
#include <string>

namespace ellipconv {

/// Argument outside the domain of the function being evaluated.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A series or iteration hit its term cap before meeting its tolerance.
class NonConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A root search could not find a sign change to bracket.
class BracketError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An evaluation failed inside a scan; carries the offending abscissa.
class EvaluationError : public std::runtime_error {
 public:
  EvaluationError(const std::string& what, std::string x_text)
      : std::runtime_error(what + " at x=" + x_text), x_text_(std::move(x_text)) {}
  const std::string& x_text() const noexcept { return x_text_; }

 private:
  std::string x_text_;
};

}  // namespace ellipconv
