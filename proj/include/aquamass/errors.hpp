#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace aquamass {

/// Base class of every error thrown by this toolkit.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Input bytes could not be decoded at all (bad JSON, truncated file).
struct ParseError : Error {
    ParseError(const std::string& what, std::size_t byte_offset = 0)
        : Error(what), byte_offset(byte_offset) {}
    std::size_t byte_offset;
};

/// Decoded input violates a documented invariant.
struct ValidationError : Error {
    using Error::Error;
};

/// Wrong container format (magic number, header shape).
struct FormatError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

/// Numeric argument outside the mathematical domain of an operation.
struct DomainError : Error {
    using Error::Error;
};

/// Instance class has no prior database entry and no alias.
struct UnknownClassError : Error {
    UnknownClassError(const std::string& class_name, std::vector<std::string> known);
    std::string class_name;
    std::vector<std::string> known_classes;
};

inline UnknownClassError::UnknownClassError(const std::string& name, std::vector<std::string> known)
    : Error([&] {
          std::string msg = "unknown debris class \"" + name + "\"; known classes:";
          for (const auto& k : known) msg += " \"" + k + "\"";
          return msg;
      }()),
      class_name(name),
      known_classes(std::move(known)) {}

}  // namespace aquamass
