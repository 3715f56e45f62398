// Copyright 2026 the hslr authors
// SPDX-License-Identifier: Apache-2.0

#ifndef HSLR_ERRORS_HPP
#define HSLR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hslr {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Shapes do not conform (matvec length, non-square input, ...).
class DimensionError : public Error {
public:
  using Error::Error;
};

/// A parameter violates an operation precondition (rank range, percent
/// range, depth vs. matrix size, ...).
class ParamError : public Error {
public:
  using Error::Error;
};

/// Payload values are invalid (NaN/Inf on ingest).
class DataError : public Error {
public:
  using Error::Error;
};

/// File is not in a recognized format (bad magic, unsupported version).
class FormatError : public Error {
public:
  using Error::Error;
};

/// File has the right format but is structurally broken (zero dimension,
/// truncated payload).
class CorruptFileError : public Error {
public:
  using Error::Error;
};

/// Filesystem-level failure (open, read, write).
class IoError : public Error {
public:
  using Error::Error;
};

/// Value not representable in the requested storage type (f16 overflow).
class RangeError : public Error {
public:
  using Error::Error;
};

/// Numerical routine failed to produce a usable result.
class NumericError : public Error {
public:
  using Error::Error;
};

} // namespace hslr

#endif // HSLR_ERRORS_HPP
