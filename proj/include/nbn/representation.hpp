#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nbn/conjugacy.hpp"
#include "nbn/cyclotomic.hpp"
#include "nbn/linalg.hpp"

namespace nbn {

using CMatrix = Matrix<Cyclo>;

CMatrix identity_matrix(std::size_t d);
CMatrix operator*(const CMatrix& a, const CMatrix& b);
CMatrix kronecker(const CMatrix& a, const CMatrix& b);
/// The scalar s when m == s * id, otherwise nothing.
std::optional<Cyclo> scalar_value(const CMatrix& m);

class InconsistentAssignment : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NonScalarImage : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A representation of a subgroup of a centralizer G^s, stored as a full evaluation table
/// aligned with group->elements. s = group->base is central.
struct MatrixRep {
    std::shared_ptr<const Centralizer> group;
    std::size_t degree = 0;
    std::vector<CMatrix> table;

    const CMatrix& operator()(const SignedPermutation& g) const;
    const CMatrix& at(std::size_t k) const { return table[k]; }
    /// lcm of the conductors of all entries.
    int conductor() const;
    /// Every entry is an integer.
    bool integral() const;
};

/// Subgroup of `cent` generated by `gens`, sharing its base.
std::shared_ptr<const Centralizer> subgroup_closure(const Centralizer& cent,
                                                    const std::vector<SignedPermutation>& gens);

/// Multiplicativity on every pair of the table and rho(identity) == id.
struct RepCheck {
    bool ok = false;
    std::string witness;
};
RepCheck check_homomorphism(const MatrixRep& rho);

/// Extends generator images along the Cayley graph; throws InconsistentAssignment when two paths
/// disagree (the assignment then does not define a homomorphism).
MatrixRep rep_from_generators(std::shared_ptr<const Centralizer> cent, const std::vector<CMatrix>& images);
/// Degree-one case: values[k] is the image of cent->generators[k].
MatrixRep char_rep(std::shared_ptr<const Centralizer> cent, const std::vector<Cyclo>& values);
/// Degree-one rep by evaluation; throws InconsistentAssignment if not multiplicative.
MatrixRep char_from_function(std::shared_ptr<const Centralizer> cent,
                             const std::function<Cyclo(const SignedPermutation&)>& f);

MatrixRep trivial_rep(std::shared_ptr<const Centralizer> cent);
/// sgn of the permutation part. On S_n^{(1 2)} this is sgn (x) sgn on S_2 x S_{n-2}.
MatrixRep sign_rep(std::shared_ptr<const Centralizer> cent);
/// -1 exactly on elements whose permutation part swaps the two given points (0-based).
MatrixRep swap_character(std::shared_ptr<const Centralizer> cent, int i, int j);
/// (-1)^{sum of a_k over k in w} on (a, tau); w must be invariant under the permutation parts.
MatrixRep sign_vector_character(std::shared_ptr<const Centralizer> cent, const SignVector& w);

/// rho1 (x) rho2 on B_{n+m}^{x#y} through the centralizer factorization:
/// rho(u#v) = rho1(u) (x) rho2(v). Throws std::invalid_argument when x and y are not orthogonal.
MatrixRep outer_tensor(const MatrixRep& rho1, const MatrixRep& rho2, const EnumerationBudget& budget = {});

/// Induction from the subgroup carried by rho to `whole`, along left coset representatives
/// `transversal` (whole = union of t H). Throws std::invalid_argument for an invalid transversal.
MatrixRep induced_rep(std::shared_ptr<const Centralizer> whole, const MatrixRep& rho,
                      const std::vector<SignedPermutation>& transversal);
/// Least element of each left coset t H.
std::vector<SignedPermutation> left_transversal(const Centralizer& whole, const Centralizer& sub);

/// Elements h of cent with chi(h z h^{-1}) == chi(z) for every pure sign element z of cent,
/// where chi(z) = (-1)^{z . w}.
std::shared_ptr<const Centralizer> sign_character_stabilizer(const Centralizer& cent, const SignVector& w);

/// Scalar q with rho(s) == q id for the central element s = rho.group->base.
/// Throws NonScalarImage otherwise.
Cyclo q_value(const MatrixRep& rho);
/// Order of a root of unity among the +-1 and cyclotomic values used here.
int scalar_order(const Cyclo& q);

// --- finiteness filter ---------------------------------------------------------------------

/// A cited fact dim B(O_x, rho) = infinity for reps with rho(x) = q id.
struct CitedPremise {
    SignedPermutation x;
    Cyclo q;
    std::string citation;
};

struct FilterOptions {
    bool type_d_factor = true;  // q2 == 1 with O_x of type D is a violation
    std::vector<CitedPremise> premises;
    std::uint64_t type_d_steps = 5'000'000;
};

struct FilterVerdict {
    bool violates = false;
    std::vector<std::string> fired;  // rule names, in evaluation order
    std::string reason;
};

/// Necessary conditions for dim B(O_{x#y}, rho1 (x) rho2) < infinity in terms of q1 = q-value of rho1
/// at x and q2 = q-value of rho2 at y:
///   "root-order":       ord(q_i) divides ord of its element
///   "q-product":        q1 q2 == -1
///   "small-order":      ord(y) <= 2 and q1 != 1 force q2 == 1, q1 == -1
///   "coprime-odd":      ord(x), ord(y) coprime and ord(y) odd force q2 == 1, q1 == -1
///   "finite-factor":    q2 == 1 forces dim B(O_x, rho1) < infinity, contradicted by a type-D class
///                       of x or by a cited premise
FilterVerdict finiteness_filter(const SignedPermutation& x, const SignedPermutation& y, const Cyclo& q1,
                                const Cyclo& q2, const FilterOptions& options = {});
FilterVerdict finiteness_filter(const MatrixRep& rho1, const MatrixRep& rho2, const FilterOptions& options = {});

/// The ten standard juxtaposition cases c tau # d xi with xi = id.
struct JuxtapositionCase {
    std::string label;  // "i" .. "x"
    SignedPermutation x;
    SignedPermutation y;
    std::vector<CitedPremise> premises;
};
std::vector<JuxtapositionCase> juxtaposition_cases();

/// Sign options (q1, q2) in {+1, -1}^2 admitted by the filter, in the order (+,+), (+,-), (-,+), (-,-).
std::vector<std::pair<int, int>> admitted_sign_options(const JuxtapositionCase& c, bool use_premises = true);

}  // namespace nbn
