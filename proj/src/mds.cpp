#include "fcrs/mds.hpp"

#include "fcrs/errors.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

namespace fcrs {

GfMatrix::GfMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), log_coeffs_(rows * cols, gf::kLogZero) {}

Symbol GfMatrix::at(std::size_t r, std::size_t c) const {
  return gf::exp_at(log_coeffs_[r * cols_ + c]);
}

void GfMatrix::set(std::size_t r, std::size_t c, Symbol v) {
  log_coeffs_[r * cols_ + c] = gf::log_of(v);
}

void GfMatrix::apply(std::span<const Symbol> in, std::span<Symbol> out, std::size_t width) const {
  if (in.size() < cols_ * width || out.size() < rows_ * width)
    throw ParameterError("matrix block size mismatch");
  constexpr std::size_t kChunk = 512;
  const std::uint32_t* log = gf::log_table();
  const Symbol* exp = gf::exp_table();
  std::vector<std::uint32_t> in_logs(cols_ * kChunk);
  for (std::size_t start = 0; start < width; start += kChunk) {
    const std::size_t w = std::min(kChunk, width - start);
    for (std::size_t c = 0; c < cols_; ++c)
      for (std::size_t t = 0; t < w; ++t) in_logs[c * kChunk + t] = log[in[c * width + start + t]];
    for (std::size_t r = 0; r < rows_; ++r) {
      Symbol* dst = out.data() + r * width + start;
      std::fill(dst, dst + w, Symbol{0});
      for (std::size_t c = 0; c < cols_; ++c) {
        const std::uint32_t lc = log_coeffs_[r * cols_ + c];
        if (lc == gf::kLogZero) continue;
        const std::uint32_t* src = in_logs.data() + c * kChunk;
        for (std::size_t t = 0; t < w; ++t) dst[t] ^= exp[lc + src[t]];
      }
    }
  }
}

MdsCode::MdsCode(std::uint32_t length, std::uint32_t message_length)
    : length_(length), message_length_(message_length) {
  if (length == 0 || length > gf::kFieldSize)
    throw ParameterError("code length must lie in [1, 65536], got " + std::to_string(length));
  if (message_length == 0 || message_length > length)
    throw ParameterError("message length must lie in [1, code length]");
}

void MdsCode::check_coordinate(std::uint32_t c) const {
  if (c >= length_) throw ParameterError("coordinate " + std::to_string(c) + " out of range");
}

std::vector<Symbol> MdsCode::encode(std::span<const Symbol> message) const {
  if (message.size() != message_length_)
    throw ParameterError("message has " + std::to_string(message.size()) + " symbols, expected " +
                         std::to_string(message_length_));
  std::vector<Symbol> codeword(length_);
  for (std::uint32_t l = 0; l < length_; ++l) {
    const auto x = static_cast<Symbol>(l);
    Symbol acc = 0;
    for (auto it = message.rbegin(); it != message.rend(); ++it) acc = gf::mul(acc, x) ^ *it;
    codeword[l] = acc;
  }
  return codeword;
}

GfMatrix MdsCode::generator() const {
  GfMatrix g(length_, message_length_);
  for (std::uint32_t l = 0; l < length_; ++l) {
    Symbol power = 1;
    for (std::uint32_t r = 0; r < message_length_; ++r) {
      g.set(l, r, power);
      power = gf::mul(power, static_cast<Symbol>(l));
    }
  }
  return g;
}

GfMatrix MdsCode::interpolator(std::span<const std::uint32_t> coordinates) const {
  const std::size_t m = message_length_;
  if (coordinates.size() != m) throw ParameterError("interpolator needs exactly m coordinates");
  std::unordered_set<std::uint32_t> seen;
  for (auto c : coordinates) {
    check_coordinate(c);
    if (!seen.insert(c).second) throw ParameterError("duplicate coordinate in interpolator");
  }

  // node(x) = prod (x - x_j), ascending coefficients, degree m.
  std::vector<Symbol> node(m + 1, 0);
  node[0] = 1;
  for (std::size_t j = 0; j < m; ++j) {
    const auto xj = static_cast<Symbol>(coordinates[j]);
    for (std::size_t deg = j + 1; deg > 0; --deg) node[deg] = node[deg - 1] ^ gf::mul(node[deg], xj);
    node[0] = gf::mul(node[0], xj);
  }

  GfMatrix result(m, m);
  std::vector<Symbol> quotient(m);
  for (std::size_t i = 0; i < m; ++i) {
    const auto xi = static_cast<Symbol>(coordinates[i]);
    // node / (x - x_i) by synthetic division.
    quotient[m - 1] = node[m];
    for (std::size_t deg = m - 1; deg > 0; --deg) quotient[deg - 1] = node[deg] ^ gf::mul(xi, quotient[deg]);
    Symbol denom = 0;
    for (auto it = quotient.rbegin(); it != quotient.rend(); ++it) denom = gf::mul(denom, xi) ^ *it;
    const Symbol scale = gf::inv(denom);
    for (std::size_t r = 0; r < m; ++r) result.set(r, i, gf::mul(quotient[r], scale));
  }
  return result;
}

std::vector<Symbol> MdsCode::decode(std::span<const CodewordPoint> points) const {
  std::vector<CodewordPoint> basis;
  std::vector<CodewordPoint> surplus;
  std::unordered_set<std::uint32_t> seen;
  for (const auto& p : points) {
    check_coordinate(p.coordinate);
    if (seen.insert(p.coordinate).second && basis.size() < message_length_)
      basis.push_back(p);
    else
      surplus.push_back(p);
  }
  if (basis.size() < message_length_)
    throw InsufficientDataError("need " + std::to_string(message_length_) + " distinct coordinates, got " +
                                std::to_string(basis.size()));

  std::vector<std::uint32_t> coords;
  std::vector<Symbol> values;
  for (const auto& p : basis) {
    coords.push_back(p.coordinate);
    values.push_back(p.value);
  }
  std::vector<Symbol> message(message_length_);
  interpolator(coords).apply(values, message, 1);

  for (const auto& p : surplus) {
    Symbol acc = 0;
    const auto x = static_cast<Symbol>(p.coordinate);
    for (auto it = message.rbegin(); it != message.rend(); ++it) acc = gf::mul(acc, x) ^ *it;
    if (acc != p.value)
      throw CorruptionError("coordinate " + std::to_string(p.coordinate) + " is inconsistent with the codeword");
  }
  return message;
}

}  // namespace fcrs
