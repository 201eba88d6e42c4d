#pragma once

#include <stdexcept>
#include <string>

namespace fanok {

/// Bad or inconsistent input: violated preconditions, degenerate data.
class InputError : public std::runtime_error {
public:
  explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

/// The computation left the structural regime the engine supports
/// (e.g. a Zariski negative part that would not be supported on E).
class RegimeError : public std::runtime_error {
public:
  explicit RegimeError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed serialized data: rational literals, CSV tables, config files.
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace fanok
