#include "fcrs/galois.hpp"

#include "fcrs/errors.hpp"

#include <algorithm>

#include <vector>

namespace fcrs::gf {

namespace {

struct Tables {
  std::vector<std::uint32_t> log;
  std::vector<Symbol> exp;  // kLogZero + kGroupOrder entries, zero from kLogZero on

  Tables() : log(kFieldSize, kLogZero), exp(kLogZero + kGroupOrder, 0) {
    std::uint32_t x = 1;
    for (std::uint32_t i = 0; i < kGroupOrder; ++i) {
      if (i > 0 && x == 1) throw std::logic_error("GF(2^16) modulus is not primitive");
      exp[i] = static_cast<Symbol>(x);
      exp[i + kGroupOrder] = static_cast<Symbol>(x);
      log[x] = i;
      x <<= 1;
      if (x & kFieldSize) x ^= kModulus;
    }
  }
};

const Tables& tables() {
  static const Tables t;
  return t;
}

}  // namespace

Symbol mul(Symbol a, Symbol b) {
  if (a == 0 || b == 0) return 0;
  const auto& t = tables();
  return t.exp[t.log[a] + t.log[b]];
}

Symbol inv(Symbol a) {
  if (a == 0) throw ParameterError("zero has no multiplicative inverse");
  const auto& t = tables();
  return t.exp[(kGroupOrder - t.log[a]) % kGroupOrder];
}

Symbol div(Symbol a, Symbol b) { return mul(a, inv(b)); }

Symbol pow(Symbol a, std::uint64_t e) {
  if (e == 0) return 1;
  if (a == 0) return 0;
  const auto& t = tables();
  return t.exp[(static_cast<std::uint64_t>(t.log[a]) * (e % kGroupOrder)) % kGroupOrder];
}

Symbol mul_reference(Symbol a, Symbol b) {
  std::uint32_t acc = 0;
  std::uint32_t x = a;
  for (int bit = 0; bit < 16; ++bit) {
    if (b & (1u << bit)) acc ^= x;
    x <<= 1;
    if (x & kFieldSize) x ^= kModulus;
  }
  return static_cast<Symbol>(acc);
}

std::uint32_t log_of(Symbol a) { return tables().log[a]; }

Symbol exp_at(std::uint32_t index) { return tables().exp[index]; }

const std::uint32_t* log_table() { return tables().log.data(); }

const Symbol* exp_table() { return tables().exp.data(); }

void mul_add_region(Symbol coeff, std::span<const Symbol> in, std::span<Symbol> out) {
  if (coeff == 0) return;
  const auto& t = tables();
  const std::uint32_t lc = t.log[coeff];
  const std::size_t n = std::min(in.size(), out.size());
  for (std::size_t i = 0; i < n; ++i) out[i] ^= t.exp[lc + t.log[in[i]]];
}

}  // namespace fcrs::gf
