#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nbn/cyclotomic.hpp"
#include "nbn/yd_nichols.hpp"

namespace nbn {

/// A word in the generators; each char holds a generator index (read as unsigned char).
using NCWord = std::string;
/// Homogeneous noncommutative polynomial as (word, coefficient) terms.
using NCPolynomial = std::vector<std::pair<NCWord, Cyclo>>;

struct NCPresentation {
    std::vector<std::string> generators;  // names, e.g. "x12"; index order is the monomial order
    std::vector<NCPolynomial> relations;  // each homogeneous of degree 1 or 2
    std::vector<std::string> notes;       // consistency findings from the builder
};

/// Index set of the generators.
enum class FkForm {
    Ordered,   // x_{ij} with i < j
    AllPairs,  // x_{ij} with i != j and x_{ij} = -x_{ji}
};

/// Fomin-Kirillov algebra E_n. Ordered form: x_{ij}^2 = 0; x_{ij} x_{jk} = x_{jk} x_{ik} + x_{ik} x_{ij} and
/// x_{jk} x_{ij} = x_{ik} x_{jk} + x_{ij} x_{ik} for i < j < k; x_{ij} x_{kl} = x_{kl} x_{ij} for disjoint pairs.
/// AllPairs form: a_algebra_presentation with alpha = beta = lambda = 1 and gamma = -1.
NCPresentation fk_presentation(int n, FkForm form = FkForm::Ordered);

/// Sign tables indexed by points 1..n: alpha, beta over ordered distinct triples, gamma over ordered
/// pairs, lambda over ordered distinct quadruples.
struct SignTables {
    int n = 0;
    std::map<std::array<int, 3>, int> alpha;
    std::map<std::array<int, 3>, int> beta;
    std::map<std::array<int, 2>, int> gamma;
    std::map<std::array<int, 4>, int> lambda;

    static SignTables constant(int n, int alpha, int beta, int gamma, int lambda);
};

/// A(alpha, beta, gamma, lambda) on x_{ij}, i != j: x_{ij}^2 = 0, x_{ij} = gamma_{ij} x_{ji};
/// x_{ij} x_{jk} + alpha_{ijk} x_{jk} x_{ki} + beta_{ijk} x_{ki} x_{ij} = 0;
/// x_{ij} x_{kl} = lambda_{ijkl} x_{kl} x_{ij}. Throws std::invalid_argument on entries outside {1, -1}
/// or missing entries. gamma_{ij} gamma_{ji} = -1 is accepted and recorded in notes.
NCPresentation a_algebra_presentation(const SignTables& tables);

/// Tables read off ker(id + c) of a transposition module: a_{ij} = a_{ji} (gamma = 1), alpha and beta
/// from the triangle relations, lambda from the commuting relations. Throws std::invalid_argument when
/// the module is not a character module or some triangle has no relation.
SignTables sign_tables_from_transpositions(const YDModule& module);

/// Relabels generators: generator k of the result is generator order[k] of p.
NCPresentation reorder_generators(const NCPresentation& p, const std::vector<std::size_t>& order);

struct GroebnerBasis {
    std::size_t generators = 0;
    int cap = 0;
    std::vector<NCPolynomial> elements;         // monic, leading term first, deglex order
    std::vector<std::size_t> new_per_degree;    // index d: elements of degree d
    bool zero_tail = false;                     // some degree <= cap has no normal words
};

/// Truncated Buchberger-Mora completion for homogeneous ideals under deglex with generator index order.
/// Every overlap of degree <= cap resolves; the result is interreduced. Throws std::invalid_argument when
/// cap < 2 or a relation is not homogeneous.
GroebnerBasis nc_groebner(const NCPresentation& p, int cap);

/// Normal form of a homogeneous polynomial modulo the basis.
NCPolynomial normal_form(const GroebnerBasis& g, const NCPolynomial& f);

struct HilbertData {
    std::vector<std::uint64_t> dims;  // through the last nonzero degree when terminated, else through cap
    bool terminated = false;          // a degree with no normal words was reached at most at cap + 1
    std::size_t basis_size = 0;
    bool whole_algebra = false;       // every generator lies in the ideal
    std::uint64_t total() const;
};

/// Dims by counting normal words of the truncated basis. Degree cap + 1 is inspected with the basis
/// through cap, which bounds it from above; zero there confirms the zero tail.
HilbertData hilbert_series(const NCPresentation& p, int cap);
HilbertData hilbert_series(const GroebnerBasis& g);

/// 12 for n <= 4, 8 for n = 5, 6 beyond.
int default_degree_cap(int n);

}  // namespace nbn
