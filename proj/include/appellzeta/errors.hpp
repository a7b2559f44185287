#pragma once

#include <stdexcept>
#include <string>

namespace appellzeta {

// Error taxonomy, by failure semantics rather than by call site.
//
// AZError          -- common base for numeric failure conditions, so callers
//                     can fence off "the computation said no" in one handler.
// DomainError      -- input outside a function's declared domain; message names
//                     the violated constraint.
// PoleError        -- evaluation exactly at (or numerically on top of) a pole.
// ConvergenceError -- an iterative scheme exhausted its budget without meeting
//                     its own stopping criterion. Never a silently wrong value.
// ContractError    -- caller broke a structural precondition (order mismatch,
//                     bad sizes); a programming error, not a numeric condition.

struct AZError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DomainError : AZError {
  using AZError::AZError;
};

struct PoleError : AZError {
  using AZError::AZError;
};

struct ConvergenceError : AZError {
  using AZError::AZError;
};

struct ContractError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace appellzeta
