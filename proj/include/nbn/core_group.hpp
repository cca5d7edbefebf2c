#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nbn {

/// Largest supported degree.
inline constexpr int kMaxDegree = 16;

class DegreeMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A bijection of {0..n-1}. Composition is (p*q)(i) = p(q(i)).
/// Indices are 0-based in the API; the text format is 1-based.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(int n);  // identity of degree n
    static Permutation from_images(const std::vector<int>& images);  // 0-based images
    static Permutation cycle(int n, const std::vector<int>& points);  // 0-based cycle

    int degree() const { return n_; }
    int operator()(int i) const { return img_[static_cast<std::size_t>(i)]; }

    Permutation operator*(const Permutation& rhs) const;
    Permutation inverse() const;
    bool is_identity() const;
    int order() const;
    std::vector<std::vector<int>> cycles() const;  // includes fixed points as 1-cycles

    friend bool operator==(const Permutation& a, const Permutation& b) {
        return a.n_ == b.n_ && a.img_ == b.img_;
    }
    friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }

    std::uint64_t packed() const;  // 4 bits per image

private:
    int n_ = 0;
    std::array<std::uint8_t, kMaxDegree> img_{};
};

/// Element of Z_2^n in additive notation.
class SignVector {
public:
    SignVector() = default;
    explicit SignVector(int n, std::uint32_t bits = 0);
    static SignVector from_bits(const std::vector<int>& bits);
    static SignVector all_ones(int n) { return SignVector(n, (1u << n) - 1u); }
    static SignVector unit(int n, int i) { return SignVector(n, 1u << i); }

    int degree() const { return n_; }
    int operator[](int i) const { return static_cast<int>((bits_ >> i) & 1u); }
    std::uint32_t bits() const { return bits_; }
    int weight() const;
    bool is_zero() const { return bits_ == 0; }

    SignVector operator+(const SignVector& rhs) const;
    SignVector with(int i, int value) const;

    friend bool operator==(const SignVector& a, const SignVector& b) {
        return a.n_ == b.n_ && a.bits_ == b.bits_;
    }
    friend bool operator!=(const SignVector& a, const SignVector& b) { return !(a == b); }

private:
    int n_ = 0;
    std::uint32_t bits_ = 0;
};

/// Left action (tau . a)_i = a_{tau^{-1}(i)}.
SignVector act(const Permutation& tau, const SignVector& a);

/// (a, tau) in B_n = Z_2^n x| S_n. Product (a,t)(b,m) = (a + t.b, t m).
class SignedPermutation {
public:
    SignedPermutation() = default;
    explicit SignedPermutation(int n) : sign_(n), perm_(n) {}
    SignedPermutation(SignVector sign, Permutation perm);

    int degree() const { return perm_.degree(); }
    const SignVector& sign() const { return sign_; }
    const Permutation& perm() const { return perm_; }

    SignedPermutation operator*(const SignedPermutation& rhs) const;
    SignedPermutation inverse() const;
    bool is_identity() const { return sign_.is_zero() && perm_.is_identity(); }
    int order() const;

    friend bool operator==(const SignedPermutation& a, const SignedPermutation& b) {
        return a.sign_ == b.sign_ && a.perm_ == b.perm_;
    }
    friend bool operator!=(const SignedPermutation& a, const SignedPermutation& b) {
        return !(a == b);
    }

private:
    SignVector sign_;
    Permutation perm_;
};

struct SignedPermutationHash {
    std::size_t operator()(const SignedPermutation& x) const noexcept;
};

/// x y x^{-1}
SignedPermutation conjugate(const SignedPermutation& x, const SignedPermutation& y);

struct SignedCycle {
    int length = 0;
    int parity = 0;  // sum of sign bits over the cycle support, mod 2
    friend auto operator<=>(const SignedCycle&, const SignedCycle&) = default;
};

/// Sorted multiset of signed cycles; a complete conjugacy invariant of B_n.
struct SignedCycleType {
    std::vector<SignedCycle> cycles;
    int degree() const;
    std::vector<int> lengths() const;  // sorted
    std::string to_string() const;     // e.g. "1+ 1- 3+"; '-' marks odd parity
    friend auto operator<=>(const SignedCycleType&, const SignedCycleType&) = default;
};

SignedCycleType signed_cycle_type(const SignedPermutation& x);

/// a#b and pi#tau, block-diagonal.
SignedPermutation juxtapose(const SignedPermutation& x, const SignedPermutation& y);
/// (a,tau) -> ((a_1..a_n,0), tau) in B_{n+1}.
SignedPermutation embed_phi(const SignedPermutation& x);
/// (a,tau) -> tau.
inline const Permutation& project_pi(const SignedPermutation& x) { return x.perm(); }
/// tau -> (0, tau).
SignedPermutation lift_unsigned(const Permutation& p);

/// x#1 and 1#y: the two block embeddings into B_{n+m}.
SignedPermutation nu_right(const SignedPermutation& x, int m);
SignedPermutation nu_left(int n, const SignedPermutation& y);

/// Cycle lengths of x and y are disjoint (as sets).
bool orthogonal(const SignedPermutation& x, const SignedPermutation& y);

// --- canonical text format -------------------------------------------------

std::string format_cycles(const Permutation& p);              // "(1 2 3)(4 5)" or "()"
std::string format(const SignedPermutation& x);               // "11010;(1 2 3)(4 5)"
Permutation parse_permutation(std::string_view text, int n);  // cycle notation
SignedPermutation parse_signed(std::string_view text);        // "<bits>;<cycles>"

/// Total order agreeing with lexicographic comparison of format().
bool canonical_less(const SignedPermutation& a, const SignedPermutation& b);
/// Sort by canonical order (keys computed once).
void sort_canonical(std::vector<SignedPermutation>& xs);

// --- ambient groups -----------------------------------------------------------

enum class GroupKind { Signed, Symmetric };

/// B_n (signed) or S_n embedded in B_n with zero signs.
struct Group {
    GroupKind kind = GroupKind::Signed;
    int n = 1;

    static Group signed_group(int n) { return {GroupKind::Signed, n}; }
    static Group symmetric(int n) { return {GroupKind::Symmetric, n}; }
    static Group parse(std::string_view name);  // "B5", "S4"

    std::string name() const;
    double order() const;  // may exceed 64 bits only in principle
    std::uint64_t order_exact() const;
    bool contains(const SignedPermutation& x) const;
    std::vector<SignedPermutation> generators() const;
    SignedPermutation identity() const { return SignedPermutation(n); }
    /// All elements; throws BudgetExceeded above cap.
    std::vector<SignedPermutation> elements(std::uint64_t cap) const;
    SignedPermutation random_element(std::mt19937_64& rng) const;
    /// Group-aware text: cycles only for S_n, full format for B_n.
    std::string format(const SignedPermutation& x) const;
    SignedPermutation parse_element(std::string_view text) const;

    friend bool operator==(const Group&, const Group&) = default;
};

/// Default enumeration cap, |G| <= 2^10 * 10!.
inline constexpr std::uint64_t kDefaultGroupCap = 1024ull * 3628800ull;

Permutation random_permutation(int n, std::mt19937_64& rng);
SignVector random_signs(int n, std::mt19937_64& rng);

}  // namespace nbn
