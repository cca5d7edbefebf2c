#include "nbn/quadratic_algebra.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "nbn/linalg.hpp"

namespace nbn {

namespace {

NCWord word(std::initializer_list<std::size_t> letters) {
    NCWord w;
    for (auto l : letters) w.push_back(static_cast<char>(l));
    return w;
}

std::string pair_name(int i, int j) { return "x" + std::to_string(i) + "_" + std::to_string(j); }

void check_sign(int v, const char* table) {
    if (v != 1 && v != -1) throw std::invalid_argument(std::string("sign table ") + table + " has an entry outside {1, -1}");
}

template <class Map, class Key>
int lookup(const Map& m, const Key& k, const char* table) {
    const auto it = m.find(k);
    if (it == m.end()) throw std::invalid_argument(std::string("sign table ") + table + " is missing an entry");
    check_sign(it->second, table);
    return it->second;
}

}  // namespace

NCPresentation fk_presentation(int n, FkForm form) {
    if (n < 2) throw std::invalid_argument("n must be at least 2");
    if (form == FkForm::AllPairs) return a_algebra_presentation(SignTables::constant(n, 1, 1, -1, 1));
    NCPresentation p;
    std::map<std::pair<int, int>, std::size_t> idx;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            idx[{i, j}] = p.generators.size();
            p.generators.push_back(pair_name(i, j));
        }
    auto x = [&](int i, int j) { return idx.at({i, j}); };
    for (const auto& [ij, g] : idx) p.relations.push_back({{word({g, g}), Cyclo(1L)}});
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k) {
                p.relations.push_back({{word({x(i, j), x(j, k)}), Cyclo(1L)},
                                       {word({x(j, k), x(i, k)}), Cyclo(-1L)},
                                       {word({x(i, k), x(i, j)}), Cyclo(-1L)}});
                p.relations.push_back({{word({x(j, k), x(i, j)}), Cyclo(1L)},
                                       {word({x(i, k), x(j, k)}), Cyclo(-1L)},
                                       {word({x(i, j), x(i, k)}), Cyclo(-1L)}});
            }
    for (const auto& [a, ga] : idx)
        for (const auto& [b, gb] : idx) {
            if (ga >= gb) continue;
            if (a.first == b.first || a.first == b.second || a.second == b.first || a.second == b.second) continue;
            p.relations.push_back({{word({ga, gb}), Cyclo(1L)}, {word({gb, ga}), Cyclo(-1L)}});
        }
    return p;
}

SignTables SignTables::constant(int n, int alpha, int beta, int gamma, int lambda) {
    SignTables t;
    t.n = n;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            t.gamma[{i, j}] = gamma;
            for (int k = 1; k <= n; ++k) {
                if (k == i || k == j) continue;
                t.alpha[{i, j, k}] = alpha;
                t.beta[{i, j, k}] = beta;
                for (int l = 1; l <= n; ++l)
                    if (l != i && l != j && l != k) t.lambda[{i, j, k, l}] = lambda;
            }
        }
    return t;
}

NCPresentation a_algebra_presentation(const SignTables& t) {
    const int n = t.n;
    if (n < 2) throw std::invalid_argument("n must be at least 2");
    NCPresentation p;
    std::map<std::pair<int, int>, std::size_t> idx;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j) {
                idx[{i, j}] = p.generators.size();
                p.generators.push_back(pair_name(i, j));
            }
    auto x = [&](int i, int j) { return idx.at({i, j}); };
    auto c = [](int v) { return Cyclo(static_cast<long>(v)); };
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            const int g = lookup(t.gamma, std::array<int, 2>{i, j}, "gamma");
            p.relations.push_back({{word({x(i, j), x(i, j)}), Cyclo(1L)}});
            p.relations.push_back({{word({x(i, j)}), Cyclo(1L)}, {word({x(j, i)}), c(-g)}});
            if (i < j && g * lookup(t.gamma, std::array<int, 2>{j, i}, "gamma") == -1)
                p.notes.push_back("gamma_" + std::to_string(i) + std::to_string(j) + " gamma_" + std::to_string(j) +
                                  std::to_string(i) + " = -1 forces x_" + std::to_string(i) + std::to_string(j) +
                                  " = 0");
        }
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k) {
                if (i == j || j == k || i == k) continue;
                const std::array<int, 3> key{i, j, k};
                p.relations.push_back({{word({x(i, j), x(j, k)}), Cyclo(1L)},
                                       {word({x(j, k), x(k, i)}), c(lookup(t.alpha, key, "alpha"))},
                                       {word({x(k, i), x(i, j)}), c(lookup(t.beta, key, "beta"))}});
            }
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k)
                for (int l = 1; l <= n; ++l) {
                    if (i == j || i == k || i == l || j == k || j == l || k == l) continue;
                    const int lam = lookup(t.lambda, std::array<int, 4>{i, j, k, l}, "lambda");
                    p.relations.push_back({{word({x(i, j), x(k, l)}), Cyclo(1L)}, {word({x(k, l), x(i, j)}), c(-lam)}});
                }
    return p;
}

SignTables sign_tables_from_transpositions(const YDModule& module) {
    if (module.rep_degree() != 1) throw std::invalid_argument("sign tables need a character module");
    const int n = module.cls->group.n;
    const auto c = braiding(module);
    auto sign_of = [](const Cyclo& v) {
        if (v == Cyclo(1L)) return 1;
        if (v == Cyclo(-1L)) return -1;
        throw std::invalid_argument("relation coefficient is not a sign");
    };
    SignTables t = SignTables::constant(n, 1, 1, 1, 1);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k) {
                if (i == j || j == k || i == k) continue;
                const auto r = triangle_relation(module, c, i, j, k);
                if (!r) throw std::invalid_argument("a triangle of transpositions carries no degree-two relation");
                t.alpha[{i, j, k}] = sign_of(r->first);
                t.beta[{i, j, k}] = sign_of(r->second);
                for (int l = 1; l <= n; ++l) {
                    if (l == i || l == j || l == k) continue;
                    const auto lam = commuting_relation(module, c, i, j, k, l);
                    if (!lam) throw std::invalid_argument("disjoint transpositions carry no commuting relation");
                    t.lambda[{i, j, k, l}] = sign_of(*lam);
                }
            }
    return t;
}

NCPresentation reorder_generators(const NCPresentation& p, const std::vector<std::size_t>& order) {
    const std::size_t m = p.generators.size();
    if (order.size() != m) throw std::invalid_argument("order must list every generator once");
    std::vector<std::size_t> where(m, m);
    for (std::size_t k = 0; k < m; ++k) {
        if (order[k] >= m || where[order[k]] != m) throw std::invalid_argument("order must list every generator once");
        where[order[k]] = k;
    }
    NCPresentation q;
    q.notes = p.notes;
    for (auto o : order) q.generators.push_back(p.generators[o]);
    for (const auto& r : p.relations) {
        NCPolynomial f;
        for (const auto& [w, v] : r) {
            NCWord u;
            for (char ch : w) u.push_back(static_cast<char>(where[static_cast<unsigned char>(ch)]));
            f.emplace_back(std::move(u), v);
        }
        q.relations.push_back(std::move(f));
    }
    return q;
}

// --- completion -------------------------------------------------------------------------------

namespace {

inline mpq_class to_k(const Cyclo& c, const mpq_class*) { return c.rational_value(); }
inline Cyclo to_k(const Cyclo& c, const Cyclo*) { return c; }
inline Cyclo from_k(const mpq_class& v) { return Cyclo::rational(v); }
inline Cyclo from_k(const Cyclo& v) { return v; }

/// Terms in descending deglex order.
template <class K>
using Terms = std::map<NCWord, K, std::greater<>>;

template <class K>
struct Element {
    NCWord lm;
    std::vector<std::pair<NCWord, K>> terms;  // descending; terms[0] = (lm, 1)
};

template <class K>
class Engine {
public:
    explicit Engine(std::size_t generators) : gens_(generators) {}

    std::size_t size() const { return basis_.size(); }
    const std::vector<Element<K>>& basis() const { return basis_; }

    /// Finds a basis element whose leading word occurs in w: (element, position).
    bool find_reducer(const NCWord& w, std::size_t& elem, std::size_t& pos) const {
        for (pos = 0; pos < w.size(); ++pos)
            for (std::size_t L = 1; L <= w.size() - pos && L < lengths_.size(); ++L) {
                if (!lengths_[L]) continue;
                const auto it = by_lm_.find(w.substr(pos, L));
                if (it != by_lm_.end()) {
                    elem = it->second;
                    return true;
                }
            }
        return false;
    }

    /// True when no suffix of w is a leading word (w's proper prefix is assumed normal).
    bool suffix_normal(const NCWord& w) const {
        for (std::size_t L = 1; L <= w.size() && L < lengths_.size(); ++L)
            if (lengths_[L] && by_lm_.count(w.substr(w.size() - L))) return false;
        return true;
    }

    std::vector<std::pair<NCWord, K>> reduce(Terms<K> f) const {
        std::vector<std::pair<NCWord, K>> out;
        while (!f.empty()) {
            auto node = f.extract(f.begin());
            std::size_t e = 0, pos = 0;
            if (!find_reducer(node.key(), e, pos)) {
                out.emplace_back(std::move(node.key()), std::move(node.mapped()));
                continue;
            }
            const auto& g = basis_[e];
            const NCWord left = node.key().substr(0, pos);
            const NCWord right = node.key().substr(pos + g.lm.size());
            const K coef = node.mapped();
            for (std::size_t t = 1; t < g.terms.size(); ++t) {
                NCWord w = left + g.terms[t].first + right;
                const K v = -(coef * g.terms[t].second);
                auto [it, fresh] = f.emplace(std::move(w), v);
                if (!fresh) {
                    it->second += v;
                    if (is_zero(it->second)) f.erase(it);
                }
            }
        }
        return out;
    }

    /// Adds a reduced nonzero polynomial, made monic.
    void insert(std::vector<std::pair<NCWord, K>> terms) {
        const K inv = one_like(terms[0].second) / terms[0].second;
        for (auto& [w, v] : terms) v *= inv;
        Element<K> e{terms[0].first, std::move(terms)};
        const std::size_t id = basis_.size();
        by_lm_[e.lm] = id;
        if (lengths_.size() <= e.lm.size()) lengths_.resize(e.lm.size() + 1, false);
        lengths_[e.lm.size()] = true;
        for (std::size_t t = 1; t < e.lm.size(); ++t) by_prefix_[prefix_key(e.lm.substr(0, t), e.lm.size())].push_back(id);
        basis_.push_back(std::move(e));
    }

    /// S-polynomials of total degree d among current elements.
    std::vector<Terms<K>> overlaps(std::size_t d) const {
        std::vector<Terms<K>> out;
        for (const auto& g1 : basis_) {
            const std::size_t p = g1.lm.size();
            for (std::size_t t = 1; t < p; ++t) {
                const std::size_t q = d - p + t;
                if (q <= t || d < p) continue;
                const auto it = by_prefix_.find(prefix_key(g1.lm.substr(p - t), q));
                if (it == by_prefix_.end()) continue;
                for (auto id2 : it->second) {
                    const auto& g2 = basis_[id2];
                    const NCWord right = g2.lm.substr(t);
                    const NCWord left = g1.lm.substr(0, p - t);
                    Terms<K> s;
                    for (std::size_t k = 1; k < g1.terms.size(); ++k) add(s, g1.terms[k].first + right, g1.terms[k].second);
                    for (std::size_t k = 1; k < g2.terms.size(); ++k) add(s, left + g2.terms[k].first, -g2.terms[k].second);
                    if (!s.empty()) out.push_back(std::move(s));
                }
            }
        }
        return out;
    }

    /// Tail-reduces every element against the others.
    void interreduce() {
        for (std::size_t k = 0; k < basis_.size(); ++k) {
            Terms<K> tail;
            for (std::size_t t = 1; t < basis_[k].terms.size(); ++t) tail.emplace(basis_[k].terms[t]);
            auto red = reduce(std::move(tail));
            basis_[k].terms.resize(1);
            for (auto& term : red) basis_[k].terms.push_back(std::move(term));
        }
    }

    static void add(Terms<K>& f, NCWord w, const K& v) {
        auto [it, fresh] = f.emplace(std::move(w), v);
        if (!fresh) {
            it->second += v;
            if (is_zero(it->second)) f.erase(it);
        }
    }

private:
    static std::string prefix_key(const NCWord& prefix, std::size_t length) {
        std::string k = prefix;
        k.push_back('\xff');
        k.push_back(static_cast<char>(length));
        return k;
    }

    std::size_t gens_;
    std::vector<Element<K>> basis_;
    std::unordered_map<NCWord, std::size_t> by_lm_;
    std::unordered_map<std::string, std::vector<std::size_t>> by_prefix_;
    std::vector<bool> lengths_;
};

template <class K>
std::uint64_t count_normal_words(const Engine<K>& e, std::size_t gens, std::vector<NCWord>& level) {
    std::vector<NCWord> next;
    for (const auto& w : level)
        for (std::size_t g = 0; g < gens; ++g) {
            NCWord u = w;
            u.push_back(static_cast<char>(g));
            if (e.suffix_normal(u)) next.push_back(std::move(u));
        }
    level = std::move(next);
    return level.size();
}

bool rational_presentation(const NCPresentation& p) {
    for (const auto& r : p.relations)
        for (const auto& [w, v] : r)
            if (!v.is_rational()) return false;
    return true;
}

template <class K>
GroebnerBasis complete(const NCPresentation& p, int cap) {
    if (cap < 2) throw std::invalid_argument("degree cap must be at least 2");
    const std::size_t m = p.generators.size();
    if (m >= 255) throw std::invalid_argument("too many generators");
    std::map<std::size_t, std::vector<Terms<K>>> inputs;
    for (const auto& r : p.relations) {
        Terms<K> f;
        std::size_t deg = 0;
        for (const auto& [w, v] : r) {
            if (f.empty()) deg = w.size();
            if (w.size() != deg) throw std::invalid_argument("relation is not homogeneous");
            for (char ch : w)
                if (static_cast<unsigned char>(ch) >= m) throw std::invalid_argument("relation uses an unknown generator");
            Engine<K>::add(f, w, to_k(v, static_cast<const K*>(nullptr)));
        }
        if (deg == 0 && !f.empty()) throw std::invalid_argument("relations must have positive degree");
        if (!f.empty()) inputs[deg].push_back(std::move(f));
    }
    Engine<K> e(m);
    GroebnerBasis out;
    out.generators = m;
    out.cap = cap;
    out.new_per_degree.assign(static_cast<std::size_t>(cap) + 1, 0);
    std::vector<NCWord> level{NCWord()};
    for (std::size_t d = 1; d <= static_cast<std::size_t>(cap); ++d) {
        auto cands = e.overlaps(d);
        if (inputs.count(d))
            for (const auto& f : inputs[d]) cands.push_back(f);
        for (auto& f : cands) {
            auto red = e.reduce(std::move(f));
            if (red.empty()) continue;
            e.insert(std::move(red));
            ++out.new_per_degree[d];
        }
        if (count_normal_words(e, m, level) == 0) {
            out.zero_tail = true;
            break;
        }
    }
    e.interreduce();
    for (const auto& el : e.basis()) {
        NCPolynomial f;
        for (const auto& [w, v] : el.terms) f.emplace_back(w, from_k(v));
        out.elements.push_back(std::move(f));
    }
    return out;
}

template <class K>
Engine<K> engine_of(const GroebnerBasis& g) {
    Engine<K> e(g.generators);
    for (const auto& f : g.elements) {
        std::vector<std::pair<NCWord, K>> terms;
        for (const auto& [w, v] : f) terms.emplace_back(w, to_k(v, static_cast<const K*>(nullptr)));
        e.insert(std::move(terms));
    }
    return e;
}

bool rational_basis(const GroebnerBasis& g) {
    for (const auto& f : g.elements)
        for (const auto& [w, v] : f)
            if (!v.is_rational()) return false;
    return true;
}

template <class K>
HilbertData hilbert_of(const GroebnerBasis& g) {
    const auto e = engine_of<K>(g);
    HilbertData h;
    h.basis_size = g.elements.size();
    h.dims.push_back(1);
    std::vector<NCWord> level{NCWord()};
    for (int d = 1; d <= g.cap + 1; ++d) {
        const auto count = count_normal_words(e, g.generators, level);
        if (count == 0) {
            h.terminated = true;
            break;
        }
        if (d <= g.cap) h.dims.push_back(count);
    }
    h.whole_algebra = h.dims.size() < 2;
    if (h.whole_algebra) h.dims.push_back(0);
    return h;
}

}  // namespace

GroebnerBasis nc_groebner(const NCPresentation& p, int cap) {
    return rational_presentation(p) ? complete<mpq_class>(p, cap) : complete<Cyclo>(p, cap);
}

NCPolynomial normal_form(const GroebnerBasis& g, const NCPolynomial& f) {
    auto run = [&](auto tag) {
        using K = decltype(tag);
        const auto e = engine_of<K>(g);
        Terms<K> t;
        for (const auto& [w, v] : f) Engine<K>::add(t, w, to_k(v, static_cast<const K*>(nullptr)));
        NCPolynomial out;
        for (const auto& [w, v] : e.reduce(std::move(t))) out.emplace_back(w, from_k(v));
        return out;
    };
    bool rational = rational_basis(g);
    for (const auto& [w, v] : f) rational = rational && v.is_rational();
    return rational ? run(mpq_class()) : run(Cyclo());
}

std::uint64_t HilbertData::total() const { return std::accumulate(dims.begin(), dims.end(), std::uint64_t{0}); }

HilbertData hilbert_series(const GroebnerBasis& g) {
    return rational_basis(g) ? hilbert_of<mpq_class>(g) : hilbert_of<Cyclo>(g);
}

HilbertData hilbert_series(const NCPresentation& p, int cap) { return hilbert_series(nc_groebner(p, cap)); }

int default_degree_cap(int n) { return n <= 4 ? 12 : (n == 5 ? 8 : 6); }

}  // namespace nbn
