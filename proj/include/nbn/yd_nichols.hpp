#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nbn/conjugacy.hpp"
#include "nbn/representation.hpp"

namespace nbn {

// --- Yetter-Drinfeld modules M(O_s, rho) --------------------------------------------------------

/// Basis g_i v_a with index i * d + a; i runs over the class, a over the rep.
struct YDModule {
    std::shared_ptr<const ConjugacyClass> cls;
    CosetSystem cosets;
    MatrixRep rho;

    std::size_t classes() const { return cls->size(); }
    std::size_t rep_degree() const { return rho.degree; }
    std::size_t dim() const { return cls->size() * rho.degree; }
    /// Coaction degree of a basis vector: the class index i with delta(g_i v) = t_i (x) g_i v.
    std::size_t degree_of(std::size_t basis) const { return basis / rho.degree; }
    /// h . (g_i v) = g_j (gamma . v) with h g_i = g_j gamma; D x D matrix.
    CMatrix action(const SignedPermutation& h) const;
};

/// Throws std::invalid_argument when rho is not a representation of the centralizer of cls->rep.
YDModule build_yd_module(std::shared_ptr<const ConjugacyClass> cls, CosetSystem cosets, MatrixRep rho);

struct StructureCheck {
    bool ok = false;
    bool exhaustive = true;
    std::uint64_t checked = 0;
    std::string witness;
};

/// Over every h of the group: h . w lies in the degree h t_i h^{-1}; over every pair (h, generator):
/// action(h g) == action(h) action(g).
StructureCheck check_yd_compatibility(const YDModule& module, std::uint64_t group_cap = 100000);

/// Transposition class of S_n with the fixed coset table and one of the characters used below.
enum class TranspositionCharacter {
    Trivial,   // eps
    SignSign,  // sgn (x) sgn: sgn of the whole permutation
    SwapSign,  // -1 exactly when {1, 2} is swapped
};
YDModule transposition_module(int n, TranspositionCharacter chi);

// --- braidings ------------------------------------------------------------------------------

/// Sparse D^2 x D^2 matrix; column x * D + y holds c(e_x (x) e_y).
struct Braiding {
    std::size_t dim = 0;
    std::vector<std::vector<std::pair<std::uint32_t, Cyclo>>> cols;

    bool integral() const;
    int conductor() const;
    CMatrix dense() const;
    static Braiding from_dense(const CMatrix& m);
};

/// c(g_i v (x) g_j w) = t_i . (g_j w) (x) g_i v.
Braiding braiding(const YDModule& module);
/// c(e_i (x) e_j) = q[i][j] e_j (x) e_i.
Braiding diagonal_braiding(const std::vector<std::vector<Cyclo>>& q);

/// (c (x) id)(id (x) c)(c (x) id) == (id (x) c)(c (x) id)(id (x) c) on basis triples; exhaustive when
/// D <= exhaustive_limit, otherwise `samples` seeded random triples.
StructureCheck check_braid_equation(const Braiding& c, std::size_t exhaustive_limit = 12,
                                    std::uint64_t samples = 2000, std::uint64_t seed = 1);
bool is_invertible(const Braiding& c);

// --- quantum symmetrizers -------------------------------------------------------------------------

using SparseVec = std::map<std::uint64_t, Cyclo>;

/// Columns S_k e_t for all basis tensors t of V^{(x)k}, from the factorization
/// S_k = (S_{k-1} (x) id) T_k with T_k = id + c_{k-1} + c_{k-1} c_{k-2} + ... + c_{k-1} ... c_1.
std::vector<SparseVec> symmetrizer_columns(const Braiding& c, int k);

/// Reduced word chosen for each w in S_k when lifting along c_1, ..., c_{k-1}.
enum class WordChoice { LeftmostDescent, RightmostDescent };
/// Columns of sum over w in S_k of the lift of a reduced word of w.
std::vector<SparseVec> symmetrizer_columns_by_words(const Braiding& c, int k, WordChoice choice);

struct NicholsOptions {
    std::uint64_t row_budget = 500000;     // largest D^k attempted
    std::size_t exact_block_cap = 1500;    // larger blocks use the mod-p path
    bool force_modp = false;
    std::vector<std::uint64_t> primes;     // two distinct primes p = 1 (mod N); empty picks the least two
};

enum class DimSemantics { Exact, ModP };

struct GradedDims {
    std::vector<std::uint64_t> dims;
    DimSemantics semantics = DimSemantics::Exact;
    std::vector<std::uint64_t> primes;  // used by the mod-p path
    bool budget_stop = false;           // dims end before max_degree because D^k exceeded the budget
    std::uint64_t total() const;
};

/// dims[k] = rank of the degree-k quantum symmetrizer for k <= max_degree. Block-diagonalized over
/// connected components of basis tensors; exact over Z or Q(zeta_N) when every block fits the cap,
/// otherwise rank modulo two primes p = 1 (mod N) that must agree (lower-bound semantics).
GradedDims nichols_graded_dim(const Braiding& c, int max_degree, const NicholsOptions& options = {});

// --- degree-two relations -----------------------------------------------------------------------

/// Basis of ker(id + c) in V (x) V (each vector has length D^2).
std::vector<std::vector<Cyclo>> degree2_relations(const Braiding& c);

/// On the transposition class: indices are points 1..n and a_{ij} is the basis vector of (i j).
/// Coefficients (alpha, beta) of a_{ij} a_{jk} + alpha a_{jk} a_{ki} + beta a_{ki} a_{ij} in
/// ker(id + c), when such a relation exists.
std::optional<std::pair<Cyclo, Cyclo>> triangle_relation(const YDModule& module, const Braiding& c, int i,
                                                         int j, int k);
/// lambda with a_{ij} a_{kl} - lambda a_{kl} a_{ij} in ker(id + c).
std::optional<Cyclo> commuting_relation(const YDModule& module, const Braiding& c, int i, int j, int k, int l);
/// a_{ij}^2 in ker(id + c).
bool square_relation(const YDModule& module, const Braiding& c, int i, int j);

/// chi(zeta_{ij}(t_{jk})) chi(zeta_{jk}(t_{ik})) chi(zeta_{ik}(t_{ij})) with the right coset factors
/// of the fixed transposition table.
int transposition_sign_product(const YDModule& module, int i, int j, int k);

struct SignTableRow {
    std::string condition;  // ordering of i, j, k, e.g. "2<i<j<k"
    int i = 0, j = 0, k = 0;
    SignedPermutation a, b, c;  // zeta_{ij}(t_{jk}), zeta_{jk}(t_{ik}), zeta_{ik}(t_{ij})
    int sign_sign[3] = {0, 0, 0};
    int swap_sign[3] = {0, 0, 0};
};
/// One representative triple per ordering pattern of {i, j, k} relative to the points 1, 2, at degree n.
std::vector<SignTableRow> transposition_sign_table(int n = 5);

// --- arrow modules -----------------------------------------------------------------------------

/// Arrows a^{(j)}_{x, y} from y to x with x y^{-1} in the class, as Hopf bimodule over the group;
/// the basis of the YD part is a^{(j)}_{t_i, 1} with index i * d + j.
struct ArrowYDModule {
    std::shared_ptr<const ConjugacyClass> cls;
    CosetSystem cosets;
    MatrixRep rho;

    std::size_t dim() const { return cls->size() * rho.degree; }
    /// Right action on a^{(j)}_{t_i, 1}: sum_p rho(zeta_i(h)^{-1})_{pj} a^{(p)}_{t_i h, h}, returned as the
    /// class index of h^{-1} t_i h and the coefficient column.
    std::pair<std::size_t, std::vector<Cyclo>> right_action(std::size_t i, std::size_t j,
                                                            const SignedPermutation& h) const;
    /// g > a = g . a . g^{-1} on the basis a^{(j)}_{t_i, 1}; D x D matrix.
    CMatrix adjoint(const SignedPermutation& g) const;
    /// Coaction degree: class index of the arrow's t_i.
    std::size_t degree_of(std::size_t basis) const { return basis / rho.degree; }
};

ArrowYDModule build_arrow_yd_module(std::shared_ptr<const ConjugacyClass> cls, CosetSystem cosets, MatrixRep rho);

/// (a . h1) . h2 == a . (h1 h2) on the YD basis for all h1, h2 in the generator set times the group.
StructureCheck check_arrow_right_action(const ArrowYDModule& arrow, std::uint64_t group_cap = 100000);

/// psi(g_i v_j) = a^{(j)}_{t_i, 1}: bijective, comodule map, and h . psi(w) == psi(h . w) for all h, w.
StructureCheck psi_isomorphism_check(const YDModule& yd, const ArrowYDModule& arrow,
                                     std::uint64_t group_cap = 100000);

}  // namespace nbn
