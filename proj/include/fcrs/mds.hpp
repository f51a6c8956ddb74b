#pragma once

#include "fcrs/galois.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace fcrs {

using gf::Symbol;

/// A received codeword coordinate.
struct CodewordPoint {
  std::uint32_t coordinate;
  Symbol value;
};

/// Dense matrix over GF(2^16) applied to blocks of stripes.
///
/// Coefficients are kept in log form so that a block product costs one table
/// lookup per multiply-accumulate.
class GfMatrix {
 public:
  GfMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Symbol at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, Symbol v);

  /// out = this * in, where `in` holds cols() rows of `width` symbols each
  /// (row-major) and `out` receives rows() rows of `width` symbols.
  void apply(std::span<const Symbol> in, std::span<Symbol> out, std::size_t width) const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint32_t> log_coeffs_;
};

/// Non-systematic Reed-Solomon code: coordinate l of the codeword is the
/// message polynomial (coefficients in ascending degree) evaluated at the
/// field element l.
class MdsCode {
 public:
  /// Requires 1 <= message_length <= length <= 65536.
  MdsCode(std::uint32_t length, std::uint32_t message_length);

  std::uint32_t length() const { return length_; }
  std::uint32_t message_length() const { return message_length_; }

  std::vector<Symbol> encode(std::span<const Symbol> message) const;

  /// Interpolates the message from at least message_length() distinct
  /// coordinates. Surplus points must agree with the interpolant.
  std::vector<Symbol> decode(std::span<const CodewordPoint> points) const;

  /// length() x message_length() Vandermonde generator.
  GfMatrix generator() const;

  /// message_length() x message_length() matrix mapping the values at
  /// `coordinates` (exactly message_length() distinct ones) to the message.
  GfMatrix interpolator(std::span<const std::uint32_t> coordinates) const;

 private:
  void check_coordinate(std::uint32_t c) const;

  std::uint32_t length_;
  std::uint32_t message_length_;
};

}  // namespace fcrs
