#ifndef AINF_FP_HPP
#define AINF_FP_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ainf {

// Prime field F_p with canonical representatives in [0, p-1].
struct PrimeField {
    long long p;

    explicit PrimeField(long long prime) : p(prime) {
        if (!is_prime(prime))
            throw std::invalid_argument("PrimeField: modulus " + std::to_string(prime) +
                                        " is not prime");
    }

    static bool is_prime(long long n) {
        if (n < 2) return false;
        for (long long d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

    long long reduce(long long x) const {
        long long r = x % p;
        return r < 0 ? r + p : r;
    }

    long long add(long long a, long long b) const { return reduce(a + b); }
    long long sub(long long a, long long b) const { return reduce(a - b); }
    long long mul(long long a, long long b) const { return reduce(reduce(a) * reduce(b)); }
    long long neg(long long a) const { return reduce(-a); }

    long long pow(long long a, long long e) const {
        long long base = reduce(a), acc = 1;
        for (; e > 0; e >>= 1) {
            if (e & 1) acc = mul(acc, base);
            base = mul(base, base);
        }
        return acc;
    }

    long long inv(long long a) const {
        if (reduce(a) == 0) throw std::domain_error("PrimeField: inverse of zero");
        return pow(a, p - 2);
    }
};

}  // namespace ainf

#endif  // AINF_FP_HPP
