#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace clgen {

bool is_prime(uint64_t n);

// Prime factorization by trial division; pairs (prime, exponent), ascending.
std::vector<std::pair<uint64_t, unsigned>> factorize(uint64_t n);

std::vector<uint64_t> divisors(uint64_t n);

uint64_t ipow(uint64_t base, unsigned exp);

uint64_t gcd_u64(uint64_t a, uint64_t b);

uint64_t lcm_u64(uint64_t a, uint64_t b);

// Inverse of a modulo m (gcd(a, m) = 1 assumed).
uint64_t inverse_mod(uint64_t a, uint64_t m);

}  // namespace clgen
