#include "nbn/representation.hpp"

#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "nbn/rack.hpp"

namespace nbn {

// --- matrices -------------------------------------------------------------------------------

CMatrix identity_matrix(std::size_t d) {
    CMatrix m(d, d);
    for (std::size_t i = 0; i < d; ++i) m(i, i) = Cyclo(1L);
    return m;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix shapes do not match");
    CMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (!b(k, j).is_zero()) c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

CMatrix kronecker(const CMatrix& a, const CMatrix& b) {
    CMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j).is_zero()) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    if (!b(k, l).is_zero()) c(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
    return c;
}

std::optional<Cyclo> scalar_value(const CMatrix& m) {
    if (m.rows() != m.cols() || m.rows() == 0) return std::nullopt;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (i != j && !m(i, j).is_zero()) return std::nullopt;
            if (i == j && m(i, i) != m(0, 0)) return std::nullopt;
        }
    return m(0, 0);
}

// --- MatrixRep ------------------------------------------------------------------------------

const CMatrix& MatrixRep::operator()(const SignedPermutation& g) const { return table[group->index.at(g)]; }

int MatrixRep::conductor() const {
    int n = 1;
    for (const auto& m : table)
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) n = std::lcm(n, m(i, j).conductor());
    return n;
}

bool MatrixRep::integral() const {
    for (const auto& m : table)
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                if (!m(i, j).is_integer()) return false;
    return true;
}

std::shared_ptr<const Centralizer> subgroup_closure(const Centralizer& cent,
                                                    const std::vector<SignedPermutation>& gens) {
    auto sub = std::make_shared<Centralizer>();
    sub->group = cent.group;
    sub->base = cent.base;
    for (const auto& g : gens) {
        if (!cent.index.find(g)) throw std::invalid_argument("generator outside the centralizer");
        if (!g.is_identity()) sub->generators.push_back(g);
    }
    std::vector<SignedPermutation> elems{cent.group.identity()};
    std::unordered_map<SignedPermutation, bool, SignedPermutationHash> seen{{elems[0], true}};
    for (std::size_t k = 0; k < elems.size(); ++k)
        for (const auto& g : sub->generators) {
            auto y = g * elems[k];
            if (seen.emplace(y, true).second) elems.push_back(y);
        }
    sort_canonical(elems);
    sub->elements = std::move(elems);
    sub->index = ElementIndex(sub->elements);
    return sub;
}

RepCheck check_homomorphism(const MatrixRep& rho) {
    const auto& G = *rho.group;
    if (rho.table.size() != G.order()) return {false, "table size differs from group order"};
    if (!(rho(G.group.identity()) == identity_matrix(rho.degree))) return {false, "identity is not sent to id"};
    for (std::size_t a = 0; a < G.order(); ++a)
        for (std::size_t b = 0; b < G.order(); ++b)
            if (!(rho(G.elements[a] * G.elements[b]) == rho.table[a] * rho.table[b]))
                return {false, "not multiplicative at (" + G.group.format(G.elements[a]) + ", " +
                                   G.group.format(G.elements[b]) + ")"};
    return {true, {}};
}

MatrixRep rep_from_generators(std::shared_ptr<const Centralizer> cent, const std::vector<CMatrix>& images) {
    if (images.size() != cent->generators.size())
        throw std::invalid_argument("one image per generator is required");
    const std::size_t d = images.empty() ? 1 : images[0].rows();
    for (const auto& m : images)
        if (m.rows() != d || m.cols() != d) throw std::invalid_argument("images must be square of equal size");
    MatrixRep rho;
    rho.degree = d;
    rho.table.assign(cent->order(), CMatrix());
    std::vector<bool> set(cent->order(), false);
    const std::size_t e = cent->index.at(cent->group.identity());
    rho.table[e] = identity_matrix(d);
    set[e] = true;
    std::vector<std::size_t> queue{e};
    for (std::size_t q = 0; q < queue.size(); ++q) {
        const std::size_t k = queue[q];
        for (std::size_t g = 0; g < images.size(); ++g) {
            const std::size_t t = cent->index.at(cent->generators[g] * cent->elements[k]);
            CMatrix v = images[g] * rho.table[k];
            if (!set[t]) {
                rho.table[t] = std::move(v);
                set[t] = true;
                queue.push_back(t);
            } else if (!(rho.table[t] == v)) {
                throw InconsistentAssignment("generator images do not define a homomorphism at " +
                                             cent->group.format(cent->elements[t]));
            }
        }
    }
    if (queue.size() != cent->order()) throw std::invalid_argument("generators do not generate the group");
    rho.group = std::move(cent);
    return rho;
}

MatrixRep char_rep(std::shared_ptr<const Centralizer> cent, const std::vector<Cyclo>& values) {
    std::vector<CMatrix> images;
    for (const auto& v : values) images.emplace_back(1, 1, v);
    return rep_from_generators(std::move(cent), images);
}

MatrixRep char_from_function(std::shared_ptr<const Centralizer> cent,
                             const std::function<Cyclo(const SignedPermutation&)>& f) {
    MatrixRep rho;
    rho.degree = 1;
    for (const auto& g : cent->elements) rho.table.emplace_back(1, 1, f(g));
    rho.group = std::move(cent);
    const auto chk = check_homomorphism(rho);
    if (!chk.ok) throw InconsistentAssignment(chk.witness);
    return rho;
}

namespace {

int perm_sign(const Permutation& p) {
    int s = 1;
    for (const auto& c : p.cycles())
        if (c.size() % 2 == 0) s = -s;
    return s;
}

}  // namespace

MatrixRep trivial_rep(std::shared_ptr<const Centralizer> cent) {
    return char_from_function(std::move(cent), [](const SignedPermutation&) { return Cyclo(1L); });
}

MatrixRep sign_rep(std::shared_ptr<const Centralizer> cent) {
    return char_from_function(std::move(cent), [](const SignedPermutation& g) { return Cyclo(perm_sign(g.perm())); });
}

MatrixRep swap_character(std::shared_ptr<const Centralizer> cent, int i, int j) {
    return char_from_function(std::move(cent), [i, j](const SignedPermutation& g) {
        return Cyclo(g.perm()(i) == j ? -1L : 1L);
    });
}

MatrixRep sign_vector_character(std::shared_ptr<const Centralizer> cent, const SignVector& w) {
    return char_from_function(std::move(cent), [w](const SignedPermutation& g) {
        return Cyclo(SignVector(w.degree(), g.sign().bits() & w.bits()).weight() % 2 ? -1L : 1L);
    });
}

MatrixRep outer_tensor(const MatrixRep& rho1, const MatrixRep& rho2, const EnumerationBudget& budget) {
    const auto& x = rho1.group->base;
    const auto& y = rho2.group->base;
    auto f = centralizer_factorization(x, y, budget);
    if (!f.bijective) throw std::logic_error("centralizer factorization is not bijective: " + f.witness);
    if (f.left.order() != rho1.group->order() || f.right.order() != rho2.group->order())
        throw std::invalid_argument("outer tensor needs representations of the full centralizers");
    MatrixRep rho;
    rho.degree = rho1.degree * rho2.degree;
    for (const auto& [i, j] : f.factors)
        rho.table.push_back(kronecker(rho1(f.left.elements[i]), rho2(f.right.elements[j])));
    rho.group = std::make_shared<const Centralizer>(std::move(f.whole));
    return rho;
}

std::vector<SignedPermutation> left_transversal(const Centralizer& whole, const Centralizer& sub) {
    std::vector<SignedPermutation> reps;
    std::vector<bool> covered(whole.order(), false);
    for (std::size_t k = 0; k < whole.order(); ++k) {
        if (covered[k]) continue;
        reps.push_back(whole.elements[k]);
        for (const auto& h : sub.elements) covered[whole.index.at(whole.elements[k] * h)] = true;
    }
    return reps;
}

MatrixRep induced_rep(std::shared_ptr<const Centralizer> whole, const MatrixRep& rho,
                      const std::vector<SignedPermutation>& transversal) {
    const auto& H = *rho.group;
    const std::size_t r = transversal.size();
    if (r * H.order() != whole->order()) throw std::invalid_argument("transversal has the wrong size");
    std::vector<bool> covered(whole->order(), false);
    for (const auto& t : transversal)
        for (const auto& h : H.elements) {
            const auto k = whole->index.find(t * h);
            if (!k) throw std::invalid_argument("transversal element outside the group");
            if (covered[*k]) throw std::invalid_argument("transversal elements share a coset");
            covered[*k] = true;
        }
    const std::size_t d = rho.degree;
    MatrixRep ind;
    ind.degree = r * d;
    std::vector<SignedPermutation> tinv;
    for (const auto& t : transversal) tinv.push_back(t.inverse());
    for (const auto& g : whole->elements) {
        CMatrix m(r * d, r * d);
        for (std::size_t l = 0; l < r; ++l) {
            const auto gt = g * transversal[l];
            for (std::size_t k = 0; k < r; ++k) {
                const auto h = H.index.find(tinv[k] * gt);
                if (!h) continue;
                const auto& block = rho.table[*h];
                for (std::size_t a = 0; a < d; ++a)
                    for (std::size_t b = 0; b < d; ++b) m(k * d + a, l * d + b) = block(a, b);
                break;
            }
        }
        ind.table.push_back(std::move(m));
    }
    ind.group = std::move(whole);
    return ind;
}

std::shared_ptr<const Centralizer> sign_character_stabilizer(const Centralizer& cent, const SignVector& w) {
    auto chi = [&](const SignVector& z) { return SignVector(z.degree(), z.bits() & w.bits()).weight() % 2; };
    std::vector<SignVector> pure;
    for (const auto& g : cent.elements)
        if (g.perm().is_identity()) pure.push_back(g.sign());
    std::vector<SignedPermutation> keep;
    for (const auto& h : cent.elements) {
        bool ok = true;
        for (const auto& z : pure)
            if (chi(act(h.perm(), z)) != chi(z)) {
                ok = false;
                break;
            }
        if (ok) keep.push_back(h);
    }
    return subgroup_closure(cent, keep);
}

Cyclo q_value(const MatrixRep& rho) {
    const auto s = scalar_value(rho(rho.group->base));
    if (!s) throw NonScalarImage("the image of the central element is not scalar");
    return *s;
}

int scalar_order(const Cyclo& q) {
    const int o = q.root_order(1 << 12);
    if (o <= 0) throw std::invalid_argument("scalar is not a root of unity: " + q.to_string());
    return o;
}

// --- finiteness filter ------------------------------------------------------------------------

FilterVerdict finiteness_filter(const SignedPermutation& x, const SignedPermutation& y, const Cyclo& q1,
                                const Cyclo& q2, const FilterOptions& options) {
    FilterVerdict v;
    auto fire = [&](const std::string& rule, const std::string& why) {
        v.fired.push_back(rule);
        if (!v.violates) v.reason = why;
        v.violates = true;
    };
    const int ox = x.order();
    const int oy = y.order();
    const int o1 = scalar_order(q1);
    const int o2 = scalar_order(q2);
    if (ox % o1 != 0 || oy % o2 != 0) fire("root-order", "the order of a q-value does not divide its element's order");
    const Cyclo minus_one(-1L);
    const bool forced = q2.is_one() && q1 == minus_one;
    if (q1 * q2 != minus_one) fire("q-product", "q1 q2 != -1");
    if (oy <= 2 && !q1.is_one() && !forced) fire("small-order", "ord(y) <= 2 and q1 != 1 but (q1, q2) != (-1, 1)");
    if (std::gcd(ox, oy) == 1 && oy % 2 == 1 && !forced)
        fire("coprime-odd", "ord(x), ord(y) coprime with ord(y) odd but (q1, q2) != (-1, 1)");
    if (q2.is_one()) {
        for (const auto& p : options.premises)
            if (p.x == x && p.q == q1) fire("finite-factor", "cited premise: " + p.citation);
        if (options.type_d_factor && !x.perm().is_identity()) {
            SearchConfig cfg;
            cfg.step_budget = options.type_d_steps;
            const auto X = FiniteRack::from_class(conjugacy_class(Group::signed_group(x.degree()), x));
            if (find_type_d_certificate(X, cfg).status == SearchStatus::Found)
                fire("finite-factor", "q2 = 1 but the class of x is of type D");
        }
    }
    return v;
}

FilterVerdict finiteness_filter(const MatrixRep& rho1, const MatrixRep& rho2, const FilterOptions& options) {
    return finiteness_filter(rho1.group->base, rho2.group->base, q_value(rho1), q_value(rho2), options);
}

std::vector<JuxtapositionCase> juxtaposition_cases() {
    const auto sp = [](const char* s) { return parse_signed(s); };
    const std::string premise_citation =
        "dim B(O_x, rho1) is infinite for x = 0000;(1 2)(3 4) in B_4 when rho1(x) = -id";
    return {
        {"i", sp("00;(1 2)"), sp("1;()"), {}},
        {"ii", sp("00;(1 2)"), sp("11;()"), {}},
        {"iii", sp("11;(1 2)"), sp("00;()"), {}},
        {"iv", sp("000;(1 2 3)"), sp("11;()"), {}},
        {"v", sp("111;(1 2 3)"), sp("00;()"), {}},
        {"vi", sp("0000;(1 2)(3 4)"), sp("11;()"), {{sp("0000;(1 2)(3 4)"), Cyclo(-1L), premise_citation}}},
        {"vii", sp("1010;(1 2)(3 4)"), sp("11;()"), {}},
        {"viii", sp("1010;(1 2)(3 4)"), sp("00;()"), {}},
        {"ix", sp("1000;(1 2)(3 4)"), sp("11;()"), {}},
        {"x", sp("1000;(1 2)(3 4)"), sp("00;()"), {}},
    };
}

std::vector<std::pair<int, int>> admitted_sign_options(const JuxtapositionCase& c, bool use_premises) {
    FilterOptions opt;
    if (use_premises) opt.premises = c.premises;
    std::vector<std::pair<int, int>> out;
    for (auto [a, b] : std::vector<std::pair<int, int>>{{1, 1}, {1, -1}, {-1, 1}, {-1, -1}})
        if (!finiteness_filter(c.x, c.y, Cyclo(a), Cyclo(b), opt).violates) out.emplace_back(a, b);
    return out;
}

}  // namespace nbn
