#pragma once

#include <stdexcept>
#include <string>

namespace achieve {

// Base of every error the library throws on contract violations.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Vertex or point already taken.
class IllegalMoveError : public Error {
 public:
  using Error::Error;
};

// Unknown vertex, malformed argument, violated precondition.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Input exceeds a documented size limit (solver vertex cap, clique board size).
class CapacityError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// Bot ledger does not match the point sets it is handed.
class StateError : public Error {
 public:
  using Error::Error;
};

}  // namespace achieve
