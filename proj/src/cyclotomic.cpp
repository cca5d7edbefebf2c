#include "nbn/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace nbn {

namespace {

std::vector<long> poly_mul(const std::vector<long>& a, const std::vector<long>& b) {
    std::vector<long> r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

// Exact division of integer polynomials by a monic divisor.
std::vector<long> poly_div_exact(std::vector<long> num, const std::vector<long>& den) {
    const std::size_t dn = den.size() - 1;
    std::vector<long> q(num.size() - dn, 0);
    for (std::size_t k = q.size(); k-- > 0;) {
        const long lead = num[k + dn];
        q[k] = lead;
        for (std::size_t j = 0; j <= dn; ++j) num[k + j] -= lead * den[j];
    }
    return q;
}

int lcm_int(int a, int b) { return a / std::gcd(a, b) * b; }

}  // namespace

const std::vector<long>& cyclotomic_polynomial(int N) {
    if (N < 1) throw std::invalid_argument("cyclotomic conductor must be positive");
    static std::mutex mu;
    static std::map<int, std::vector<long>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(N);
        if (it != cache.end()) return it->second;
    }
    std::vector<long> num(static_cast<std::size_t>(N) + 1, 0);
    num[0] = -1;
    num[static_cast<std::size_t>(N)] = 1;
    std::vector<long> den{1};
    for (int d = 1; d < N; ++d)
        if (N % d == 0) den = poly_mul(den, cyclotomic_polynomial(d));
    auto phi = poly_div_exact(num, den);
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(N, std::move(phi)).first->second;
}

int euler_phi(int N) { return static_cast<int>(cyclotomic_polynomial(N).size()) - 1; }

// --- Cyclo ---------------------------------------------------------------------------

Cyclo::Cyclo() : N_(1), c_(1) {}

Cyclo::Cyclo(long value) : N_(1), c_(1) { c_[0] = value; }

Cyclo::Cyclo(int N, std::vector<mpq_class> c) : N_(N), c_(std::move(c)) { normalize(); }

Cyclo Cyclo::rational(const mpq_class& q) {
    Cyclo r;
    r.c_[0] = q;
    return r;
}

Cyclo Cyclo::root(int N, long k) {
    if (N < 1) throw std::invalid_argument("root of unity order must be positive");
    long e = k % N;
    if (e < 0) e += N;
    std::vector<mpq_class> c(static_cast<std::size_t>(e) + 1);
    c[static_cast<std::size_t>(e)] = 1;
    return Cyclo(N, std::move(c));
}

void Cyclo::normalize() {
    const auto& phi = cyclotomic_polynomial(N_);
    const std::size_t d = phi.size() - 1;
    for (std::size_t k = c_.size(); k-- > d;) {
        if (c_[k] == 0) continue;
        const mpq_class lead = c_[k];
        for (std::size_t j = 0; j <= d; ++j) c_[k - d + j] -= lead * phi[j];
    }
    c_.resize(d);
    for (auto& x : c_) x.canonicalize();
}

Cyclo Cyclo::lift(int M) const {
    if (M % N_ != 0) throw std::invalid_argument("lift target must be a multiple of the conductor");
    if (M == N_) return *this;
    const int step = M / N_;
    std::vector<mpq_class> c(static_cast<std::size_t>(step) * c_.size() + 1);
    for (std::size_t i = 0; i < c_.size(); ++i) c[i * static_cast<std::size_t>(step)] = c_[i];
    return Cyclo(M, std::move(c));
}

bool Cyclo::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool Cyclo::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

bool Cyclo::is_one() const { return is_rational() && c_[0] == 1; }

bool Cyclo::is_integer() const { return is_rational() && c_[0].get_den() == 1; }

mpq_class Cyclo::rational_value() const {
    if (!is_rational()) throw std::domain_error("cyclotomic value is not rational");
    return c_[0];
}

long Cyclo::integer_value() const {
    if (!is_integer()) throw std::domain_error("cyclotomic value is not an integer");
    return c_[0].get_num().get_si();
}

Cyclo Cyclo::operator+(const Cyclo& o) const {
    const int M = lcm_int(N_, o.N_);
    Cyclo a = lift(M);
    const Cyclo b = o.lift(M);
    for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
    return a;
}

Cyclo Cyclo::operator-() const {
    Cyclo a = *this;
    for (auto& x : a.c_) x = -x;
    return a;
}

Cyclo Cyclo::operator-(const Cyclo& o) const { return *this + (-o); }

Cyclo Cyclo::operator*(const Cyclo& o) const {
    const int M = lcm_int(N_, o.N_);
    const Cyclo a = lift(M);
    const Cyclo b = o.lift(M);
    if (a.c_.size() == 1) {
        Cyclo r = b;
        for (auto& x : r.c_) x *= a.c_[0];
        return r;
    }
    std::vector<mpq_class> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return Cyclo(M, std::move(c));
}

Cyclo Cyclo::galois(int k) const {
    if (std::gcd(k, N_) != 1) throw std::invalid_argument("galois exponent must be a unit mod N");
    std::vector<mpq_class> c(static_cast<std::size_t>(N_));
    for (std::size_t i = 0; i < c_.size(); ++i)
        c[(i * static_cast<std::size_t>(k)) % static_cast<std::size_t>(N_)] += c_[i];
    return Cyclo(N_, std::move(c));
}

Cyclo Cyclo::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    Cyclo conj(1L);
    for (int k = 2; k < N_; ++k)
        if (std::gcd(k, N_) == 1) conj *= galois(k);
    const Cyclo norm = *this * conj;
    const mpq_class inv = 1 / norm.rational_value();
    for (auto& x : conj.c_) x *= inv;
    return conj;
}

Cyclo Cyclo::operator/(const Cyclo& o) const { return *this * o.inverse(); }

Cyclo Cyclo::pow(long e) const {
    Cyclo base = e < 0 ? inverse() : *this;
    unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
    Cyclo r(1L);
    while (k) {
        if (k & 1) r *= base;
        base *= base;
        k >>= 1;
    }
    return r;
}

int Cyclo::root_order(int bound) const {
    Cyclo p = *this;
    for (int k = 1; k <= bound; ++k) {
        if (p.is_one()) return k;
        p *= *this;
    }
    return 0;
}

std::uint64_t Cyclo::reduce_mod(std::uint64_t p, std::uint64_t root) const {
    std::uint64_t acc = 0;
    std::uint64_t zpow = 1;
    for (const auto& q : c_) {
        if (q != 0) {
            const std::uint64_t num = mpz_fdiv_ui(q.get_num_mpz_t(), p);
            const std::uint64_t den = mpz_fdiv_ui(q.get_den_mpz_t(), p);
            if (den == 0) throw std::domain_error("denominator vanishes modulo p");
            acc = (acc + mulmod(mulmod(num, invmod(den, p), p), zpow, p)) % p;
        }
        zpow = mulmod(zpow, root, p);
    }
    return acc;
}

std::string Cyclo::to_string() const {
    if (is_rational()) return c_[0].get_str();
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << c_[i].get_str();
        if (i > 0) os << "*z" << N_ << '^' << i;
    }
    return os.str();
}

bool operator==(const Cyclo& a, const Cyclo& b) {
    if (a.N_ == b.N_) return a.c_ == b.c_;
    const int M = lcm_int(a.N_, b.N_);
    return a.lift(M).c_ == b.lift(M).c_;
}

// --- prime fields ----------------------------------------------------------------------

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
    if (a % p == 0) throw std::domain_error("inverse of zero modulo p");
    return powmod(a, p - 2, p);
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull})
        if (n % q == 0) return n == q;
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<std::uint64_t> primes_one_mod(int N, int count) {
    const std::uint64_t M = static_cast<std::uint64_t>(N < 2 ? 2 : N);
    std::uint64_t p = ((1ull << 62) - 1) / M * M + 1;
    std::vector<std::uint64_t> out;
    while (static_cast<int>(out.size()) < count) {
        p -= M;
        if (is_prime(p)) out.push_back(p);
    }
    return out;
}

std::uint64_t root_of_unity_mod(int N, std::uint64_t p) {
    if ((p - 1) % static_cast<std::uint64_t>(N) != 0)
        throw std::invalid_argument("p is not 1 mod N");
    std::vector<int> prime_factors;
    for (int q = 2, m = N; m > 1; ++q) {
        if (m % q) continue;
        prime_factors.push_back(q);
        while (m % q == 0) m /= q;
    }
    for (std::uint64_t g = 2;; ++g) {
        const std::uint64_t z = powmod(g, (p - 1) / static_cast<std::uint64_t>(N), p);
        bool exact = true;
        for (int q : prime_factors)
            if (powmod(z, static_cast<std::uint64_t>(N / q), p) == 1) exact = false;
        if (exact) return z;
    }
}

}  // namespace nbn
