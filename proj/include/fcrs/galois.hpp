#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

// GF(2^16) modulo x^16 + x^12 + x^3 + x + 1. Elements are plain 16-bit words;
// addition is XOR.
namespace fcrs::gf {

using Symbol = std::uint16_t;

inline constexpr std::uint32_t kModulus = 0x1100B;
inline constexpr std::uint32_t kFieldSize = 1u << 16;
inline constexpr std::uint32_t kGroupOrder = kFieldSize - 1;

/// Logarithm stand-in for zero. exp_at() of any sum involving it yields 0 as
/// long as the other operand is a genuine logarithm.
inline constexpr std::uint32_t kLogZero = 2 * kGroupOrder;

constexpr Symbol add(Symbol a, Symbol b) { return a ^ b; }

Symbol mul(Symbol a, Symbol b);
Symbol inv(Symbol a);  // throws ParameterError for a == 0
Symbol div(Symbol a, Symbol b);
Symbol pow(Symbol a, std::uint64_t e);

/// Shift-and-add multiplication; independent of the log tables.
Symbol mul_reference(Symbol a, Symbol b);

std::uint32_t log_of(Symbol a);  // kLogZero for a == 0
Symbol exp_at(std::uint32_t index);  // valid for index <= kLogZero + kGroupOrder - 1

/// Raw tables for hot loops: log_table()[a] == log_of(a), exp_table()[i] == exp_at(i).
const std::uint32_t* log_table();
const Symbol* exp_table();

/// out[t] ^= coeff * in[t] for every t.
void mul_add_region(Symbol coeff, std::span<const Symbol> in, std::span<Symbol> out);

}  // namespace fcrs::gf
