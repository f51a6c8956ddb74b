#include "doctest.h"

#include "fcrs/errors.hpp"
#include "fcrs/galois.hpp"

#include <random>

using namespace fcrs;

namespace {

// Carry-less product followed by reduction modulo x^16 + x^12 + x^3 + x + 1.
gf::Symbol clmul_oracle(gf::Symbol a, gf::Symbol b) {
  std::uint32_t prod = 0;
  for (int i = 0; i < 16; ++i)
    if (b >> i & 1) prod ^= static_cast<std::uint32_t>(a) << i;
  for (int bit = 30; bit >= 16; --bit)
    if (prod >> bit & 1) prod ^= 0x1100Bu << (bit - 16);
  return static_cast<gf::Symbol>(prod);
}

}  // namespace

TEST_CASE("annihilator and identity") {
  for (std::uint32_t a = 0; a < gf::kFieldSize; ++a) {
    const auto x = static_cast<gf::Symbol>(a);
    REQUIRE(gf::mul(x, 0) == 0);
    REQUIRE(gf::mul(0, x) == 0);
    REQUIRE(gf::mul(x, 1) == x);
  }
}

TEST_CASE("reduction of x^15 times x") {
  CHECK(gf::mul(0x8000, 0x0002) == 0x100B);
  CHECK(clmul_oracle(0x8000, 0x0002) == 0x100B);
  CHECK(gf::mul_reference(0x8000, 0x0002) == 0x100B);
}

TEST_CASE("table multiply agrees with carry-less oracle") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200000; ++i) {
    const auto a = static_cast<gf::Symbol>(rng());
    const auto b = static_cast<gf::Symbol>(rng());
    const auto want = clmul_oracle(a, b);
    REQUIRE(gf::mul(a, b) == want);
    REQUIRE(gf::mul_reference(a, b) == want);
  }
}

TEST_CASE("every nonzero element has an inverse") {
  for (std::uint32_t a = 1; a < gf::kFieldSize; ++a) {
    const auto x = static_cast<gf::Symbol>(a);
    REQUIRE(gf::mul(x, gf::inv(x)) == 1);
  }
  CHECK_THROWS_AS(gf::inv(0), ParameterError);
  CHECK_THROWS_AS(gf::div(5, 0), ParameterError);
}

TEST_CASE("field axioms on random triples") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50000; ++i) {
    const auto a = static_cast<gf::Symbol>(rng());
    const auto b = static_cast<gf::Symbol>(rng());
    const auto c = static_cast<gf::Symbol>(rng());
    REQUIRE(gf::mul(a, b) == gf::mul(b, a));
    REQUIRE(gf::mul(gf::mul(a, b), c) == gf::mul(a, gf::mul(b, c)));
    REQUIRE(gf::mul(a, gf::add(b, c)) == gf::add(gf::mul(a, b), gf::mul(a, c)));
    if (b != 0) REQUIRE(gf::mul(gf::div(a, b), b) == a);
  }
}

TEST_CASE("x generates the multiplicative group") {
  CHECK(gf::pow(2, gf::kGroupOrder) == 1);
  for (std::uint64_t p : {3u, 5u, 17u, 257u}) CHECK(gf::pow(2, gf::kGroupOrder / p) != 1);
  CHECK(gf::pow(0, 0) == 1);
  CHECK(gf::pow(0, 3) == 0);
  gf::Symbol acc = 1;
  for (int e = 0; e < 40; ++e) {
    REQUIRE(gf::pow(0x1234, e) == acc);
    acc = clmul_oracle(acc, 0x1234);
  }
}

TEST_CASE("log and exp tables are mutually inverse") {
  CHECK(gf::log_of(0) == gf::kLogZero);
  for (std::uint32_t a = 1; a < gf::kFieldSize; ++a) {
    const auto x = static_cast<gf::Symbol>(a);
    REQUIRE(gf::exp_at(gf::log_of(x)) == x);
  }
}

TEST_CASE("mul_add_region accumulates products") {
  std::mt19937_64 rng(3);
  std::vector<gf::Symbol> in(1000), out(1000), want(1000);
  for (std::size_t i = 0; i < in.size(); ++i) {
    in[i] = static_cast<gf::Symbol>(rng());
    out[i] = want[i] = static_cast<gf::Symbol>(rng());
  }
  in[5] = 0;
  for (gf::Symbol coeff : {gf::Symbol(0), gf::Symbol(1), gf::Symbol(0xBEEF)}) {
    gf::mul_add_region(coeff, in, out);
    for (std::size_t i = 0; i < in.size(); ++i) want[i] ^= clmul_oracle(coeff, in[i]);
    REQUIRE(out == want);
  }
}
