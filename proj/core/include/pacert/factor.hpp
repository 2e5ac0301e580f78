#pragma once

#include "pacert/poly.hpp"

#include <cstdint>
#include <vector>

namespace pacert {

struct Factor {
    IntPoly poly;
    int multiplicity = 1;
    bool operator==(const Factor&) const = default;
};

// p = unit * prod factors[i].poly ^ multiplicity, unit an integer
// (sign times content). Factors primitive, positive lc, sorted.
struct Factorization {
    Integer unit;
    std::vector<Factor> factors;

    IntPoly expand() const;
    int total_degree() const;
};

struct FactorOptions {
    int max_recombination_log2 = 12;   // cap on subset count 2^k
    int primes_to_try = 6;
    std::uint64_t seed = 0x5eed;
};

Factorization factor_over_z(const IntPoly& p, const FactorOptions& opt = {});

// Factorization of a squarefree primitive polynomial with lc > 0.
std::vector<IntPoly> factor_squarefree(const IntPoly& f, const FactorOptions& opt = {});

// Certifies irreducibility over Z when f mod p is squarefree of full
// degree and irreducible for some small prime p. Returns the prime or 0.
std::uint64_t modular_irreducibility_witness(const IntPoly& f, int primes_to_try = 40);

namespace modp {

using Poly = std::vector<std::uint64_t>;  // ascending, trimmed

Poly reduce(const IntPoly& f, std::uint64_t p);
bool is_squarefree(const Poly& f, std::uint64_t p);
// Monic irreducible factors of a monic squarefree polynomial.
std::vector<Poly> factor_monic_squarefree(const Poly& f, std::uint64_t p, std::uint64_t seed);
bool is_irreducible(const Poly& f, std::uint64_t p);

} // namespace modp

} // namespace pacert
