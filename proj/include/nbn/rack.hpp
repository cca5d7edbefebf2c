#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "nbn/conjugacy.hpp"

namespace nbn {

/// A finite rack on {0..m-1}. Either a conjugation rack on a class (x > y = x y x^{-1})
/// or an abstract rack given by its operation table.
class FiniteRack {
public:
    static FiniteRack from_class(std::shared_ptr<const ConjugacyClass> cls);
    static FiniteRack from_class(ConjugacyClass cls);
    /// table[x][y] = x > y; axioms are not checked here.
    static FiniteRack from_table(std::vector<std::vector<std::uint32_t>> table);

    std::size_t size() const { return m_; }
    std::uint32_t op(std::uint32_t x, std::uint32_t y) const;
    std::uint32_t sq(std::uint32_t x, std::uint32_t y) const { return op(x, op(y, op(x, y))); }
    /// Inverse of y -> x > y.
    std::uint32_t op_inverse(std::uint32_t x, std::uint32_t y) const;

    const ConjugacyClass* conjugation_class() const { return cls_.get(); }
    std::shared_ptr<const ConjugacyClass> shared_class() const { return cls_; }
    std::string label(std::uint32_t x) const;

private:
    std::size_t m_ = 0;
    std::shared_ptr<const ConjugacyClass> cls_;
    std::vector<std::uint32_t> table_;  // row-major, filled when small enough
    std::vector<SignedPermutation> inverses_;
};

/// Rack sizes up to this bound get a precomputed operation table.
inline constexpr std::size_t kRackTableLimit = 2048;

struct AxiomReport {
    bool ok = true;
    bool exhaustive = true;
    std::uint64_t checked = 0;
    std::string witness;
};

/// Self-distributivity and bijectivity of left translations; exhaustive when m <= exhaustive_limit,
/// otherwise `samples` random triples.
AxiomReport check_rack_axioms(const FiniteRack& rack, std::size_t exhaustive_limit = 512,
                              std::uint64_t samples = 200000, std::uint64_t seed = 1);

// --- closed forms in B_n -------------------------------------------------------------

/// sq(x, y) = x > (y > (x > y)) computed by group multiplication.
SignedPermutation sq_generic(const SignedPermutation& x, const SignedPermutation& y);

/// Sign part c of sq(a tau, b mu) by the general closed form.
SignVector sq_sign_general(const SignedPermutation& x, const SignedPermutation& y);

/// Sign part for commuting tau, mu:
/// c = a + tau mu.a + tau mu^2.a + mu.a + tau.b + tau^2 mu.b + tau mu.b.
/// Throws std::invalid_argument when tau and mu do not commute. `drop_term` omits the last
/// summand (fault injection for harness self-tests).
SignVector sq_sign_commuting(const SignedPermutation& x, const SignedPermutation& y,
                             bool drop_term = false);

/// For commuting tau, mu: sq(x, y) == y iff
/// a + tau mu.a + tau mu^2.a + mu.a == b + tau.b + tau^2 mu.b + tau mu.b.
bool sq_fixes_commuting(const SignedPermutation& x, const SignedPermutation& y);

/// Permutation part of sq(x, y): tau > (mu > (tau > mu)).
Permutation sq_perm(const Permutation& tau, const Permutation& mu);

/// Sign part when y = xi > x with tau xi = xi tau, xi.a = a and tau mu = mu tau:
/// c = a + tau mu^2.a + mu.a + tau.a + tau^2 mu.a.
SignVector sq_sign_conjugate_pair(const SignVector& a, const Permutation& tau, const Permutation& mu);

enum class SqPath { General, Commuting };
/// Closed form (c, lambda) for the requested path.
SignedPermutation sq_formula_bn(const SignedPermutation& x, const SignedPermutation& y, SqPath path);

// --- certificates ----------------------------------------------------------------------

struct TypeDCertificate {
    std::vector<std::uint32_t> R;
    std::vector<std::uint32_t> S;
    std::uint32_t r = 0;
    std::uint32_t s = 0;
};

struct CertificateCheck {
    bool ok = false;
    std::string reason;  // empty when ok
};

/// Nonempty, disjoint, R and S subracks, y > x in R and x > y in S, r in R, s in S, sq(r, s) != s.
CertificateCheck verify_certificate(const FiniteRack& rack, const TypeDCertificate& cert);

enum class SearchStatus { Found, Exhausted, BudgetExhausted };

struct SearchConfig {
    std::uint64_t seed = 1;
    std::uint64_t step_budget = 50'000'000;
    bool constructions = true;
    bool pullback = true;
    bool commuting_cosets = true;
    bool generated_subracks = true;
    EnumerationBudget budget;
};

struct SearchResult {
    SearchStatus status = SearchStatus::BudgetExhausted;
    std::optional<TypeDCertificate> certificate;
    std::string strategy;                 // strategy that produced the certificate
    std::vector<std::string> attempted;   // in order
    std::uint64_t steps = 0;
    std::vector<std::string> notes;
};

/// Strategies in fixed order: cycle-type constructions, pullback along the projection to S_n,
/// intersections with Z_2^n x| tau' for commuting conjugates tau', seeded-random generated-subrack
/// search. The last one is complete: when it runs to the end without a witness, the status is
/// Exhausted.
SearchResult find_type_d_certificate(const FiniteRack& rack, const SearchConfig& config = {});

/// Strategy entry points, exposed for tests and reports. Each returns a verified certificate or nothing.
std::optional<TypeDCertificate> certificate_from_cosets(const FiniteRack& rack, const Permutation& tau,
                                                        const Permutation& mu);
std::optional<TypeDCertificate> certificate_from_fixed_point_split(const FiniteRack& rack, int point);
std::optional<TypeDCertificate> certificate_from_generated_subracks(const FiniteRack& rack,
                                                                    std::uint64_t seed,
                                                                    std::uint64_t step_budget,
                                                                    SearchStatus* status,
                                                                    std::uint64_t* steps);

/// Indices of X that lie in Z_2^n x| tau.
std::vector<std::uint32_t> coset_slice(const FiniteRack& rack, const Permutation& tau);

// --- extension and pullback -----------------------------------------------------------------

struct ExtendedCertificate {
    FiniteRack rack;  // conjugation rack of x#y
    TypeDCertificate certificate;
};

/// R#y, S#y, r#y, s#y inside the class of x#y. Throws std::invalid_argument on an invalid input
/// certificate or a non-class rack.
ExtendedCertificate juxtaposition_extend_certificate(const FiniteRack& rack, const TypeDCertificate& cert,
                                                     const SignedPermutation& y,
                                                     const EnumerationBudget& budget = {});

struct HomCheck {
    bool ok = false;
    std::string reason;
};

/// hom[x > y] == hom[x] > hom[y] for all pairs, and hom surjective.
HomCheck verify_rack_epimorphism(const FiniteRack& X, const FiniteRack& Y,
                                 const std::vector<std::uint32_t>& hom);

/// Preimages of R and S with lifted r, s. Throws std::invalid_argument if hom is not an
/// epimorphism or the certificate does not verify.
TypeDCertificate pullback_type_d(const FiniteRack& X, const FiniteRack& Y,
                                 const std::vector<std::uint32_t>& hom, const TypeDCertificate& cert);

struct Projection {
    FiniteRack target;                // class of tau in S_n
    std::vector<std::uint32_t> hom;   // X index -> target index
};
/// (a, tau) -> tau from a B_n class rack onto the S_n class of tau.
Projection project_to_symmetric(const FiniteRack& rack, const EnumerationBudget& budget = {});

}  // namespace nbn
