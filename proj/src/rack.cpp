#include "nbn/rack.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace nbn {

// --- FiniteRack -------------------------------------------------------------------------

FiniteRack FiniteRack::from_class(std::shared_ptr<const ConjugacyClass> cls) {
    FiniteRack r;
    r.m_ = cls->size();
    r.cls_ = std::move(cls);
    r.inverses_.reserve(r.m_);
    for (const auto& e : r.cls_->elements) r.inverses_.push_back(e.inverse());
    if (r.m_ <= kRackTableLimit) {
        r.table_.resize(r.m_ * r.m_);
        for (std::size_t x = 0; x < r.m_; ++x)
            for (std::size_t y = 0; y < r.m_; ++y)
                r.table_[x * r.m_ + y] = static_cast<std::uint32_t>(
                    r.cls_->index.at(r.cls_->elements[x] * r.cls_->elements[y] * r.inverses_[x]));
    }
    return r;
}

FiniteRack FiniteRack::from_class(ConjugacyClass cls) {
    return from_class(std::make_shared<const ConjugacyClass>(std::move(cls)));
}

FiniteRack FiniteRack::from_table(std::vector<std::vector<std::uint32_t>> table) {
    FiniteRack r;
    r.m_ = table.size();
    r.table_.resize(r.m_ * r.m_);
    for (std::size_t x = 0; x < r.m_; ++x) {
        if (table[x].size() != r.m_) throw std::invalid_argument("rack table must be square");
        for (std::size_t y = 0; y < r.m_; ++y) {
            if (table[x][y] >= r.m_) throw std::invalid_argument("rack table entry out of range");
            r.table_[x * r.m_ + y] = table[x][y];
        }
    }
    return r;
}

std::uint32_t FiniteRack::op(std::uint32_t x, std::uint32_t y) const {
    if (!table_.empty()) return table_[static_cast<std::size_t>(x) * m_ + y];
    return static_cast<std::uint32_t>(
        cls_->index.at(cls_->elements[x] * cls_->elements[y] * inverses_[x]));
}

std::uint32_t FiniteRack::op_inverse(std::uint32_t x, std::uint32_t y) const {
    if (cls_)
        return static_cast<std::uint32_t>(
            cls_->index.at(inverses_[x] * cls_->elements[y] * cls_->elements[x]));
    for (std::uint32_t z = 0; z < m_; ++z)
        if (op(x, z) == y) return z;
    throw std::logic_error("left translation is not surjective");
}

std::string FiniteRack::label(std::uint32_t x) const {
    if (cls_) return cls_->group.format(cls_->elements[x]);
    return std::to_string(x);
}

AxiomReport check_rack_axioms(const FiniteRack& rack, std::size_t exhaustive_limit,
                              std::uint64_t samples, std::uint64_t seed) {
    AxiomReport rep;
    const auto m = static_cast<std::uint32_t>(rack.size());
    auto triple = [&](std::uint32_t x, std::uint32_t y, std::uint32_t z) {
        ++rep.checked;
        if (rack.op(x, rack.op(y, z)) != rack.op(rack.op(x, y), rack.op(x, z))) {
            rep.ok = false;
            rep.witness = "self-distributivity fails at (" + rack.label(x) + ", " + rack.label(y) +
                          ", " + rack.label(z) + ")";
            return false;
        }
        return true;
    };
    for (std::uint32_t x = 0; x < m; ++x) {
        std::vector<bool> hit(m, false);
        for (std::uint32_t y = 0; y < m; ++y) hit[rack.op(x, y)] = true;
        if (std::find(hit.begin(), hit.end(), false) != hit.end()) {
            rep.ok = false;
            rep.witness = "left translation by " + rack.label(x) + " is not bijective";
            return rep;
        }
    }
    if (rack.size() <= exhaustive_limit) {
        for (std::uint32_t x = 0; x < m; ++x)
            for (std::uint32_t y = 0; y < m; ++y)
                for (std::uint32_t z = 0; z < m; ++z)
                    if (!triple(x, y, z)) return rep;
        return rep;
    }
    rep.exhaustive = false;
    std::mt19937_64 rng(seed);
    for (std::uint64_t k = 0; k < samples; ++k)
        if (!triple(static_cast<std::uint32_t>(rng() % m), static_cast<std::uint32_t>(rng() % m),
                    static_cast<std::uint32_t>(rng() % m)))
            return rep;
    return rep;
}

// --- closed forms ------------------------------------------------------------------------

SignedPermutation sq_generic(const SignedPermutation& x, const SignedPermutation& y) {
    return conjugate(x, conjugate(y, conjugate(x, y)));
}

namespace {

Permutation pconj(const Permutation& x, const Permutation& y) { return x * y * x.inverse(); }

void require_commuting(const Permutation& t, const Permutation& m) {
    if (t * m != m * t) throw std::invalid_argument("closed form requires commuting permutations");
}

}  // namespace

Permutation sq_perm(const Permutation& tau, const Permutation& mu) {
    return pconj(tau, pconj(mu, pconj(tau, mu)));
}

SignVector sq_sign_general(const SignedPermutation& x, const SignedPermutation& y) {
    const auto& a = x.sign();
    const auto& b = y.sign();
    const auto& t = x.perm();
    const auto& m = y.perm();
    const Permutation tm = pconj(t, m);
    const Permutation mtm = pconj(m, tm);
    const Permutation tmtm = pconj(t, mtm);
    const SignVector inner = b + act(m, a + act(t, b) + act(tm, a)) + act(mtm, b);
    return a + act(t, inner) + act(tmtm, a);
}

SignVector sq_sign_commuting(const SignedPermutation& x, const SignedPermutation& y, bool drop_term) {
    const auto& a = x.sign();
    const auto& b = y.sign();
    const auto& t = x.perm();
    const auto& m = y.perm();
    require_commuting(t, m);
    SignVector c = a + act(t * m, a) + act(t * m * m, a) + act(m, a) + act(t, b) + act(t * t * m, b);
    if (!drop_term) c = c + act(t * m, b);
    return c;
}

bool sq_fixes_commuting(const SignedPermutation& x, const SignedPermutation& y) {
    const auto& a = x.sign();
    const auto& b = y.sign();
    const auto& t = x.perm();
    const auto& m = y.perm();
    require_commuting(t, m);
    const SignVector lhs = a + act(t * m, a) + act(t * m * m, a) + act(m, a);
    const SignVector rhs = b + act(t, b) + act(t * t * m, b) + act(t * m, b);
    return lhs == rhs;
}

SignVector sq_sign_conjugate_pair(const SignVector& a, const Permutation& tau, const Permutation& mu) {
    require_commuting(tau, mu);
    return a + act(tau * mu * mu, a) + act(mu, a) + act(tau, a) + act(tau * tau * mu, a);
}

SignedPermutation sq_formula_bn(const SignedPermutation& x, const SignedPermutation& y, SqPath path) {
    const SignVector c = path == SqPath::General ? sq_sign_general(x, y) : sq_sign_commuting(x, y);
    return SignedPermutation(c, sq_perm(x.perm(), y.perm()));
}

// --- certificates ----------------------------------------------------------------------

CertificateCheck verify_certificate(const FiniteRack& rack, const TypeDCertificate& cert) {
    const std::size_t m = rack.size();
    auto fail = [](std::string why) { return CertificateCheck{false, std::move(why)}; };
    if (cert.R.empty() || cert.S.empty()) return fail("R or S is empty");
    std::vector<std::uint8_t> where(m, 0);  // 1 = R, 2 = S
    for (auto x : cert.R) {
        if (x >= m) return fail("R index out of range");
        if (where[x]) return fail("duplicate index in R");
        where[x] = 1;
    }
    for (auto y : cert.S) {
        if (y >= m) return fail("S index out of range");
        if (where[y] == 1) return fail("R and S are not disjoint at " + rack.label(y));
        if (where[y] == 2) return fail("duplicate index in S");
        where[y] = 2;
    }
    if (cert.r >= m || where[cert.r] != 1) return fail("r is not in R");
    if (cert.s >= m || where[cert.s] != 2) return fail("s is not in S");
    for (auto x : cert.R)
        for (auto y : cert.R)
            if (where[rack.op(x, y)] != 1)
                return fail("R is not a subrack: " + rack.label(x) + " > " + rack.label(y));
    for (auto x : cert.S)
        for (auto y : cert.S)
            if (where[rack.op(x, y)] != 2)
                return fail("S is not a subrack: " + rack.label(x) + " > " + rack.label(y));
    for (auto x : cert.R)
        for (auto y : cert.S) {
            if (where[rack.op(y, x)] != 1)
                return fail("y > x leaves R for x = " + rack.label(x) + ", y = " + rack.label(y));
            if (where[rack.op(x, y)] != 2)
                return fail("x > y leaves S for x = " + rack.label(x) + ", y = " + rack.label(y));
        }
    if (rack.sq(cert.r, cert.s) == cert.s) return fail("sq(r, s) == s");
    return {true, {}};
}

std::vector<std::uint32_t> coset_slice(const FiniteRack& rack, const Permutation& tau) {
    const auto* cls = rack.conjugation_class();
    if (!cls) throw std::invalid_argument("coset slices need a conjugation rack");
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 0; i < cls->size(); ++i)
        if (cls->elements[i].perm() == tau) out.push_back(i);
    return out;
}

namespace {

std::optional<TypeDCertificate> first_witness(const FiniteRack& rack, std::vector<std::uint32_t> R,
                                              std::vector<std::uint32_t> S) {
    if (R.empty() || S.empty()) return std::nullopt;
    for (auto r : R)
        for (auto s : S)
            if (rack.sq(r, s) != s) {
                TypeDCertificate c{std::move(R), std::move(S), r, s};
                if (verify_certificate(rack, c).ok) return c;
                return std::nullopt;
            }
    return std::nullopt;
}

std::vector<std::uint32_t> orbit_under(const FiniteRack& rack, std::uint32_t start, std::uint32_t a,
                                       std::uint32_t b, std::uint64_t& steps) {
    std::vector<std::uint8_t> seen(rack.size(), 0);
    std::vector<std::uint32_t> orbit{start};
    seen[start] = 1;
    for (std::size_t k = 0; k < orbit.size(); ++k) {
        for (auto g : {a, b}) {
            const auto z = rack.op(g, orbit[k]);
            ++steps;
            if (!seen[z]) {
                seen[z] = 1;
                orbit.push_back(z);
            }
        }
    }
    std::sort(orbit.begin(), orbit.end());
    return orbit;
}

}  // namespace

std::optional<TypeDCertificate> certificate_from_cosets(const FiniteRack& rack, const Permutation& tau,
                                                        const Permutation& mu) {
    if (tau == mu || tau * mu != mu * tau) return std::nullopt;
    return first_witness(rack, coset_slice(rack, tau), coset_slice(rack, mu));
}

std::optional<TypeDCertificate> certificate_from_fixed_point_split(const FiniteRack& rack, int point) {
    const auto* cls = rack.conjugation_class();
    if (!cls) throw std::invalid_argument("fixed-point split needs a conjugation rack");
    std::vector<std::uint32_t> R;
    std::vector<std::uint32_t> S;
    for (std::uint32_t i = 0; i < cls->size(); ++i) {
        const auto& e = cls->elements[i];
        if (e.perm()(point) != point) continue;
        (e.sign()[point] ? S : R).push_back(i);
    }
    return first_witness(rack, std::move(R), std::move(S));
}

std::optional<TypeDCertificate> certificate_from_generated_subracks(const FiniteRack& rack,
                                                                    std::uint64_t seed,
                                                                    std::uint64_t step_budget,
                                                                    SearchStatus* status,
                                                                    std::uint64_t* steps) {
    std::uint64_t local = 0;
    std::uint64_t& count = steps ? *steps : local;
    std::vector<std::uint32_t> order(rack.size());
    std::iota(order.begin(), order.end(), 0u);
    std::mt19937_64 rng(seed);
    std::shuffle(order.begin(), order.end(), rng);
    const std::uint32_t r = 0;
    for (auto s : order) {
        if (count > step_budget) {
            if (status) *status = SearchStatus::BudgetExhausted;
            return std::nullopt;
        }
        ++count;
        if (rack.sq(r, s) == s) continue;
        auto R = orbit_under(rack, r, r, s, count);
        if (std::binary_search(R.begin(), R.end(), s)) continue;
        auto S = orbit_under(rack, s, r, s, count);
        TypeDCertificate c{std::move(R), std::move(S), r, s};
        if (!verify_certificate(rack, c).ok) throw std::logic_error("generated-subrack certificate failed");
        if (status) *status = SearchStatus::Found;
        return c;
    }
    if (status) *status = SearchStatus::Exhausted;
    return std::nullopt;
}

// --- extension and pullback -----------------------------------------------------------------

ExtendedCertificate juxtaposition_extend_certificate(const FiniteRack& rack, const TypeDCertificate& cert,
                                                     const SignedPermutation& y,
                                                     const EnumerationBudget& budget) {
    const auto* cls = rack.conjugation_class();
    if (!cls) throw std::invalid_argument("extension needs a conjugation rack");
    if (cls->group.kind != GroupKind::Signed) throw std::invalid_argument("extension needs a B_n class");
    const auto check = verify_certificate(rack, cert);
    if (!check.ok) throw std::invalid_argument("input certificate is invalid: " + check.reason);
    const SignedPermutation top = juxtapose(cls->rep, y);
    auto big = FiniteRack::from_class(conjugacy_class(Group::signed_group(top.degree()), top, budget));
    const auto* bc = big.conjugation_class();
    auto lift = [&](std::uint32_t i) {
        return static_cast<std::uint32_t>(bc->index.at(juxtapose(cls->elements[i], y)));
    };
    TypeDCertificate out;
    for (auto i : cert.R) out.R.push_back(lift(i));
    for (auto i : cert.S) out.S.push_back(lift(i));
    out.r = lift(cert.r);
    out.s = lift(cert.s);
    return {std::move(big), std::move(out)};
}

HomCheck verify_rack_epimorphism(const FiniteRack& X, const FiniteRack& Y,
                                 const std::vector<std::uint32_t>& hom) {
    if (hom.size() != X.size()) return {false, "map has the wrong length"};
    std::vector<bool> hit(Y.size(), false);
    for (auto v : hom) {
        if (v >= Y.size()) return {false, "map value out of range"};
        hit[v] = true;
    }
    for (std::uint32_t y = 0; y < Y.size(); ++y)
        if (!hit[y]) return {false, "not surjective: " + Y.label(y) + " has empty fiber"};
    for (std::uint32_t a = 0; a < X.size(); ++a)
        for (std::uint32_t b = 0; b < X.size(); ++b)
            if (hom[X.op(a, b)] != Y.op(hom[a], hom[b]))
                return {false, "not a rack map at (" + X.label(a) + ", " + X.label(b) + ")"};
    return {true, {}};
}

TypeDCertificate pullback_type_d(const FiniteRack& X, const FiniteRack& Y,
                                 const std::vector<std::uint32_t>& hom, const TypeDCertificate& cert) {
    const auto h = verify_rack_epimorphism(X, Y, hom);
    if (!h.ok) throw std::invalid_argument("pullback needs a rack epimorphism: " + h.reason);
    const auto c = verify_certificate(Y, cert);
    if (!c.ok) throw std::invalid_argument("certificate on the target is invalid: " + c.reason);
    std::vector<std::uint8_t> where(Y.size(), 0);
    for (auto y : cert.R) where[y] = 1;
    for (auto y : cert.S) where[y] = 2;
    TypeDCertificate out;
    std::optional<std::uint32_t> r;
    std::optional<std::uint32_t> s;
    for (std::uint32_t x = 0; x < X.size(); ++x) {
        if (where[hom[x]] == 1) out.R.push_back(x);
        if (where[hom[x]] == 2) out.S.push_back(x);
        if (!r && hom[x] == cert.r) r = x;
        if (!s && hom[x] == cert.s) s = x;
    }
    if (!r || !s) throw std::invalid_argument("empty fiber over r or s");
    out.r = *r;
    out.s = *s;
    return out;
}

Projection project_to_symmetric(const FiniteRack& rack, const EnumerationBudget& budget) {
    const auto* cls = rack.conjugation_class();
    if (!cls) throw std::invalid_argument("projection needs a conjugation rack");
    const int n = cls->group.n;
    const auto target_cls = conjugacy_class(Group::symmetric(n), lift_unsigned(cls->rep.perm()), budget);
    std::vector<std::uint32_t> hom;
    hom.reserve(cls->size());
    for (const auto& e : cls->elements)
        hom.push_back(static_cast<std::uint32_t>(target_cls.index.at(lift_unsigned(e.perm()))));
    return {FiniteRack::from_class(std::move(target_cls)), std::move(hom)};
}

// --- search ----------------------------------------------------------------------------------

namespace {

std::vector<std::vector<int>> nontrivial_cycles(const Permutation& p) {
    std::vector<std::vector<int>> out;
    for (auto& c : p.cycles())
        if (c.size() > 1) out.push_back(std::move(c));
    return out;
}

Permutation cycle_perm(int n, const std::vector<int>& c) { return Permutation::cycle(n, c); }

}  // namespace

SearchResult find_type_d_certificate(const FiniteRack& rack, const SearchConfig& config) {
    SearchResult res;
    const auto* cls = rack.conjugation_class();
    auto found = [&](TypeDCertificate c, std::string strategy) {
        res.status = SearchStatus::Found;
        res.certificate = std::move(c);
        res.strategy = std::move(strategy);
        return res;
    };

    if (cls && config.constructions) {
        res.attempted.push_back("constructions");
        const int n = cls->group.n;
        const Permutation tau = cls->rep.perm();
        const auto cyc = nontrivial_cycles(tau);
        // Single odd cycle of length n >= 5: slices over tau and tau^2.
        if (cyc.size() == 1 && static_cast<int>(cyc[0].size()) == n && n >= 5 && n % 2 == 1)
            if (auto c = certificate_from_cosets(rack, tau, tau * tau)) return found(*c, "single-cycle-square");
        // Two 3-cycles pi xi: slices over pi xi and pi^2 xi.
        if (cyc.size() == 2 && cyc[0].size() == 3 && cyc[1].size() == 3) {
            const Permutation pi = cycle_perm(n, cyc[0]);
            const Permutation xi = cycle_perm(n, cyc[1]);
            if (auto c = certificate_from_cosets(rack, tau, pi * pi * xi))
                return found(*c, "two-three-cycles");
        }
        // A 3-cycle pi times (a b)(c d): slices over pi (a b)(c d) and pi (a c)(b d).
        if (cyc.size() == 3) {
            std::vector<std::vector<int>> twos;
            std::vector<int> three;
            for (const auto& c : cyc) {
                if (c.size() == 2) twos.push_back(c);
                if (c.size() == 3) three = c;
            }
            if (twos.size() == 2 && !three.empty()) {
                const Permutation lambda = cycle_perm(n, {twos[0][0], twos[1][0]}) *
                                           cycle_perm(n, {twos[0][1], twos[1][1]});
                if (auto c = certificate_from_cosets(rack, tau, cycle_perm(n, three) * lambda))
                    return found(*c, "three-cycle-double-transposition");
            }
        }
        // Fixed points carrying different signs: split by the sign at a fixed point.
        bool plus = false;
        bool minus = false;
        for (int p = 0; p < n; ++p)
            if (tau(p) == p) (cls->rep.sign()[p] ? minus : plus) = true;
        if (plus && minus)
            for (int p = 0; p < n; ++p)
                if (tau(p) == p)
                    if (auto c = certificate_from_fixed_point_split(rack, p))
                        return found(*c, "fixed-point-split");
    }

    if (cls && config.pullback && cls->group.kind == GroupKind::Signed && !cls->rep.perm().is_identity()) {
        res.attempted.push_back("pullback");
        const auto proj = project_to_symmetric(rack, config.budget);
        SearchStatus st = SearchStatus::BudgetExhausted;
        std::uint64_t steps = 0;
        if (auto yc = certificate_from_generated_subracks(proj.target, config.seed, config.step_budget, &st, &steps)) {
            res.steps += steps;
            auto c = pullback_type_d(rack, proj.target, proj.hom, *yc);
            if (verify_certificate(rack, c).ok) return found(std::move(c), "pullback");
        }
        res.steps += steps;
    }

    if (cls && config.commuting_cosets && !cls->rep.perm().is_identity()) {
        res.attempted.push_back("commuting-cosets");
        const Permutation tau = cls->rep.perm();
        const auto sym = conjugacy_class(Group::symmetric(cls->group.n), lift_unsigned(tau), config.budget);
        for (const auto& e : sym.elements) {
            const Permutation& mu = e.perm();
            if (mu == tau || mu * tau != tau * mu) continue;
            if (auto c = certificate_from_cosets(rack, tau, mu)) return found(*c, "commuting-cosets");
        }
    }

    if (config.generated_subracks) {
        res.attempted.push_back("generated-subracks");
        SearchStatus st = SearchStatus::BudgetExhausted;
        std::uint64_t steps = 0;
        auto c = certificate_from_generated_subracks(rack, config.seed, config.step_budget, &st, &steps);
        res.steps += steps;
        if (c) return found(*c, "generated-subracks");
        res.status = st;
        if (st == SearchStatus::Exhausted)
            res.notes.push_back("every s with sq(r, s) != s lies in the orbit of r under <r, s>");
        else
            res.notes.push_back("step budget exhausted");
        return res;
    }
    res.status = SearchStatus::BudgetExhausted;
    res.notes.push_back("complete strategy disabled");
    return res;
}

}  // namespace nbn
