#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pecycles {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A bundle description that cannot be turned into valid Harder-Narasimhan
/// numerical data (empty, nonpositive rank, slopes not strictly ascending, ...).
struct InvalidDescriptor : Error {
  using Error::Error;
};

/// Two elements from rings with different (rank, degree) parameters were mixed.
struct SpecMismatch : Error {
  using Error::Error;
};

/// An index argument outside its documented range (codimension, dimension,
/// polygon abscissa, ...).
struct RangeError : Error {
  using Error::Error;
};

/// Text that does not conform to the expected grammar. `offset` is the byte
/// position of the offending character in the input.
struct ParseError : Error {
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (at offset " + std::to_string(offset) + ")"), offset(offset) {}
  std::size_t offset = 0;
};

}  // namespace pecycles
