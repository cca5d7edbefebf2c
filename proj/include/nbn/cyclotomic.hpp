#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace nbn {

/// Exact element of Q(zeta_N), stored in the power basis 1, z, .., z^{phi(N)-1}
/// reduced modulo the N-th cyclotomic polynomial.
class Cyclo {
public:
    Cyclo();  // zero, conductor 1
    Cyclo(long value);  // NOLINT: integers embed implicitly
    static Cyclo rational(const mpq_class& q);
    static Cyclo root(int N, long k);  // zeta_N^k

    int conductor() const { return N_; }
    /// Same element written over Q(zeta_M); requires N | M.
    Cyclo lift(int M) const;
    const std::vector<mpq_class>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    bool is_integer() const;
    mpq_class rational_value() const;  // requires is_rational()
    long integer_value() const;         // requires is_integer()

    Cyclo operator+(const Cyclo& o) const;
    Cyclo operator-(const Cyclo& o) const;
    Cyclo operator-() const;
    Cyclo operator*(const Cyclo& o) const;
    Cyclo operator/(const Cyclo& o) const;
    Cyclo& operator+=(const Cyclo& o) { return *this = *this + o; }
    Cyclo& operator-=(const Cyclo& o) { return *this = *this - o; }
    Cyclo& operator*=(const Cyclo& o) { return *this = *this * o; }
    Cyclo inverse() const;  // throws std::domain_error on zero
    /// Galois automorphism zeta -> zeta^k, gcd(k, N) = 1.
    Cyclo galois(int k) const;
    Cyclo pow(long e) const;

    /// Image under Q(zeta_N) -> F_p sending zeta_N to root (root of order N mod p).
    std::uint64_t reduce_mod(std::uint64_t p, std::uint64_t root) const;

    /// Multiplicative order if this is a root of unity of order dividing bound, else 0.
    int root_order(int bound) const;

    std::string to_string() const;

    friend bool operator==(const Cyclo& a, const Cyclo& b);
    friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }

private:
    Cyclo(int N, std::vector<mpq_class> c);
    void normalize();
    int N_ = 1;
    std::vector<mpq_class> c_;
};

/// Integer coefficients of the N-th cyclotomic polynomial, constant term first.
const std::vector<long>& cyclotomic_polynomial(int N);
int euler_phi(int N);

// --- prime fields ------------------------------------------------------------------

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t invmod(std::uint64_t a, std::uint64_t p);
bool is_prime(std::uint64_t n);

/// Distinct primes p = 1 (mod N) below 2^62, descending from the top of the range.
std::vector<std::uint64_t> primes_one_mod(int N, int count);
/// An element of exact multiplicative order N modulo p (p = 1 mod N).
std::uint64_t root_of_unity_mod(int N, std::uint64_t p);

}  // namespace nbn
