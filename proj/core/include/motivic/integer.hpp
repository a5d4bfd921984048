#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace motivic {

// Arbitrary-precision signed integer used for every multiplicity and
// polynomial coefficient in the library.
using Integer = mpz_class;

// C(n, k) by multiplicative accumulation; zero when k > n.
Integer binomial(std::uint64_t n, std::uint64_t k);

std::string to_decimal(const Integer& value);

// Parses an optionally signed decimal string. Throws std::invalid_argument.
Integer parse_decimal(const std::string& text);

}  // namespace motivic
