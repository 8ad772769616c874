#pragma once

#include <stdexcept>
#include <string>

namespace prelog {

/// Base of every error the library raises on bad input or inconsistent data.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
  using Error::Error;
};

/// Degree out of range, inhomogeneous input, or complementary-degree mismatch.
class DegreeError : public Error {
public:
  using Error::Error;
};

/// Missing or inconsistent map data (pullbacks, pushforwards, sections).
class MapError : public Error {
public:
  using Error::Error;
};

class ConfigError : public Error {
public:
  using Error::Error;
};

}  // namespace prelog
