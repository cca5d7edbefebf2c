#include "nbn/yd_nichols.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <unordered_map>

namespace nbn {

// --- YD modules ----------------------------------------------------------------------------------

CMatrix YDModule::action(const SignedPermutation& h) const {
    const std::size_t d = rho.degree;
    CMatrix m(dim(), dim());
    for (std::size_t i = 0; i < cls->size(); ++i) {
        const auto z = zeta(*cls, cosets, i, h);
        const auto& r = rho(z.gamma);
        for (std::size_t p = 0; p < d; ++p)
            for (std::size_t a = 0; a < d; ++a)
                if (!r(p, a).is_zero()) m(z.j * d + p, i * d + a) = r(p, a);
    }
    return m;
}

YDModule build_yd_module(std::shared_ptr<const ConjugacyClass> cls, CosetSystem cosets, MatrixRep rho) {
    if (!(rho.group->base == cls->rep)) throw std::invalid_argument("representation is not over the centralizer of the class representative");
    if (cosets.reps.size() != cls->size()) throw std::invalid_argument("coset table size differs from class size");
    for (std::size_t i = 0; i < cls->size(); ++i)
        if (!(conjugate(cosets.reps[i], cls->rep) == cls->elements[i]))
            throw std::invalid_argument("coset table entry does not conjugate the representative correctly");
    return {std::move(cls), std::move(cosets), std::move(rho)};
}

StructureCheck check_yd_compatibility(const YDModule& module, std::uint64_t group_cap) {
    StructureCheck res;
    const auto& G = module.cls->group;
    const auto elems = G.elements(group_cap);
    const auto gens = G.generators();
    std::vector<CMatrix> gen_action;
    for (const auto& g : gens) gen_action.push_back(module.action(g));
    const std::size_t D = module.dim();
    for (const auto& h : elems) {
        const auto A = module.action(h);
        for (std::size_t col = 0; col < D; ++col) {
            const std::size_t target = module.cls->index.at(conjugate(h, module.cls->elements[module.degree_of(col)]));
            for (std::size_t row = 0; row < D; ++row) {
                ++res.checked;
                if (!A(row, col).is_zero() && module.degree_of(row) != target) {
                    res.witness = "grading fails for h = " + G.format(h) + " on basis " + std::to_string(col);
                    return res;
                }
            }
        }
        for (std::size_t g = 0; g < gens.size(); ++g) {
            ++res.checked;
            if (!(module.action(h * gens[g]) == A * gen_action[g])) {
                res.witness = "action is not multiplicative at (" + G.format(h) + ", " + G.format(gens[g]) + ")";
                return res;
            }
        }
    }
    res.ok = true;
    return res;
}

YDModule transposition_module(int n, TranspositionCharacter chi) {
    auto preset = transposition_preset(n);
    auto cls = std::make_shared<const ConjugacyClass>(std::move(preset.cls));
    auto cent = std::make_shared<const Centralizer>(std::move(preset.cent));
    MatrixRep rho;
    switch (chi) {
        case TranspositionCharacter::Trivial: rho = trivial_rep(cent); break;
        case TranspositionCharacter::SignSign: rho = sign_rep(cent); break;
        case TranspositionCharacter::SwapSign: rho = swap_character(cent, 0, 1); break;
    }
    return build_yd_module(std::move(cls), std::move(preset.cosets), std::move(rho));
}

// --- braidings -----------------------------------------------------------------------------------

bool Braiding::integral() const {
    for (const auto& col : cols)
        for (const auto& [r, v] : col)
            if (!v.is_integer()) return false;
    return true;
}

int Braiding::conductor() const {
    int n = 1;
    for (const auto& col : cols)
        for (const auto& [r, v] : col) n = std::lcm(n, v.conductor());
    return n;
}

CMatrix Braiding::dense() const {
    CMatrix m(dim * dim, dim * dim);
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (const auto& [r, v] : cols[c]) m(r, c) = v;
    return m;
}

Braiding Braiding::from_dense(const CMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("braiding matrix must be square");
    std::size_t D = 0;
    while (D * D < m.rows()) ++D;
    if (D * D != m.rows()) throw std::invalid_argument("braiding matrix size must be a square D^2");
    Braiding b;
    b.dim = D;
    b.cols.resize(D * D);
    for (std::size_t c = 0; c < m.cols(); ++c)
        for (std::size_t r = 0; r < m.rows(); ++r)
            if (!m(r, c).is_zero()) b.cols[c].emplace_back(static_cast<std::uint32_t>(r), m(r, c));
    return b;
}

Braiding braiding(const YDModule& module) {
    const std::size_t d = module.rho.degree;
    const std::size_t D = module.dim();
    Braiding b;
    b.dim = D;
    b.cols.resize(D * D);
    for (std::size_t x = 0; x < D; ++x) {
        const std::size_t i = x / d;
        const auto& ti = module.cls->elements[i];
        for (std::size_t j = 0; j < module.cls->size(); ++j) {
            const auto z = zeta(*module.cls, module.cosets, j, ti);
            const auto& r = module.rho(z.gamma);
            for (std::size_t bb = 0; bb < d; ++bb) {
                auto& col = b.cols[x * D + j * d + bb];
                for (std::size_t p = 0; p < d; ++p)
                    if (!r(p, bb).is_zero())
                        col.emplace_back(static_cast<std::uint32_t>((z.j * d + p) * D + x), r(p, bb));
            }
        }
    }
    return b;
}

Braiding diagonal_braiding(const std::vector<std::vector<Cyclo>>& q) {
    Braiding b;
    b.dim = q.size();
    b.cols.resize(b.dim * b.dim);
    for (std::size_t x = 0; x < b.dim; ++x) {
        if (q[x].size() != b.dim) throw std::invalid_argument("braiding scalars must form a square table");
        for (std::size_t y = 0; y < b.dim; ++y)
            if (!q[x][y].is_zero()) b.cols[x * b.dim + y].emplace_back(static_cast<std::uint32_t>(y * b.dim + x), q[x][y]);
    }
    return b;
}

namespace {

// Coefficient traits for the three scalar paths.
inline bool nonzero(long long x) { return x != 0; }
inline bool nonzero(const Fp& x) { return x.v != 0; }
inline bool nonzero(const Cyclo& x) { return !x.is_zero(); }

template <class T>
struct TypedBraiding {
    std::size_t D = 0;
    std::vector<std::vector<std::pair<std::uint32_t, T>>> cols;
};

TypedBraiding<Cyclo> typed_cyclo(const Braiding& c) { return {c.dim, c.cols}; }

TypedBraiding<long long> typed_integer(const Braiding& c) {
    TypedBraiding<long long> t{c.dim, {}};
    t.cols.resize(c.cols.size());
    for (std::size_t k = 0; k < c.cols.size(); ++k)
        for (const auto& [r, v] : c.cols[k]) t.cols[k].emplace_back(r, v.integer_value());
    return t;
}

TypedBraiding<Fp> typed_modp(const Braiding& c, std::uint64_t p, std::uint64_t root) {
    TypedBraiding<Fp> t{c.dim, {}};
    t.cols.resize(c.cols.size());
    for (std::size_t k = 0; k < c.cols.size(); ++k)
        for (const auto& [r, v] : c.cols[k]) t.cols[k].emplace_back(r, Fp(v.reduce_mod(p, root), p));
    return t;
}

template <class T>
using Vec = std::map<std::uint64_t, T>;

std::vector<std::uint64_t> powers(std::uint64_t D, int k) {
    std::vector<std::uint64_t> pw(static_cast<std::size_t>(k) + 1, 1);
    for (int e = 1; e <= k; ++e) pw[static_cast<std::size_t>(e)] = pw[static_cast<std::size_t>(e) - 1] * D;
    return pw;
}

template <class T>
void add_into(Vec<T>& acc, std::uint64_t idx, const T& v) {
    auto [it, fresh] = acc.emplace(idx, v);
    if (!fresh) {
        it->second = it->second + v;
        if (!nonzero(it->second)) acc.erase(it);
    }
}

/// c acting on tensor positions pos, pos + 1 (0-based) of a k-fold tensor.
template <class T>
Vec<T> apply_c(const TypedBraiding<T>& c, const Vec<T>& v, int k, int pos, const std::vector<std::uint64_t>& pw) {
    const std::uint64_t D2 = c.D * c.D;
    const std::uint64_t stride = pw[static_cast<std::size_t>(k - 2 - pos)];
    Vec<T> out;
    for (const auto& [idx, coef] : v) {
        const std::uint64_t pair = (idx / stride) % D2;
        const std::uint64_t base = idx - pair * stride;
        for (const auto& [np, val] : c.cols[pair]) add_into(out, base + np * stride, val * coef);
    }
    return out;
}

template <class T>
Vec<T> add(const Vec<T>& a, const Vec<T>& b) {
    Vec<T> out = a;
    for (const auto& [i, v] : b) add_into(out, i, v);
    return out;
}

/// S_level acting on the first `level` factors.
template <class T>
Vec<T> apply_symmetrizer(const TypedBraiding<T>& c, Vec<T> v, int k, int level, const std::vector<std::uint64_t>& pw) {
    while (level > 1) {
        Vec<T> w = v;
        for (int j = 0; j + 1 < level; ++j) w = add(v, apply_c(c, w, k, j, pw));
        v = std::move(w);
        --level;
    }
    return v;
}

struct UnionFind {
    std::vector<std::uint32_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
    std::uint32_t find(std::uint32_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

/// Connected components of basis tensors of V^{(x)k} under the supports of all c_l.
std::vector<std::vector<std::uint32_t>> tensor_blocks(const Braiding& c, int k) {
    const auto pw = powers(c.dim, k);
    const std::uint64_t N = pw[static_cast<std::size_t>(k)];
    UnionFind uf(N);
    const std::uint64_t D2 = c.dim * c.dim;
    for (int pos = 0; pos + 1 < k; ++pos) {
        const std::uint64_t stride = pw[static_cast<std::size_t>(k - 2 - pos)];
        for (std::uint64_t idx = 0; idx < N; ++idx) {
            const std::uint64_t pair = (idx / stride) % D2;
            const std::uint64_t base = idx - pair * stride;
            for (const auto& [np, val] : c.cols[pair])
                uf.unite(static_cast<std::uint32_t>(idx), static_cast<std::uint32_t>(base + np * stride));
        }
    }
    std::vector<std::vector<std::uint32_t>> blocks;
    std::vector<std::int64_t> slot(N, -1);
    for (std::uint32_t idx = 0; idx < N; ++idx) {
        const auto r = uf.find(idx);
        if (slot[r] < 0) {
            slot[r] = static_cast<std::int64_t>(blocks.size());
            blocks.emplace_back();
        }
        blocks[static_cast<std::size_t>(slot[r])].push_back(idx);
    }
    return blocks;
}

template <class T>
std::vector<Vec<T>> block_columns(const TypedBraiding<T>& c, int k, const std::vector<std::uint32_t>& block,
                                  const T& one) {
    const auto pw = powers(c.D, k);
    std::vector<Vec<T>> cols;
    cols.reserve(block.size());
    for (auto t : block) cols.push_back(apply_symmetrizer(c, Vec<T>{{t, one}}, k, k, pw));
    return cols;
}

std::size_t rank_of_block_integer(const TypedBraiding<long long>& c, int k, const std::vector<std::uint32_t>& block) {
    std::unordered_map<std::uint32_t, std::size_t> local;
    for (std::size_t r = 0; r < block.size(); ++r) local[block[r]] = r;
    Matrix<mpz_class> m(block.size(), block.size());
    const auto cols = block_columns(c, k, block, 1LL);
    for (std::size_t col = 0; col < cols.size(); ++col)
        for (const auto& [idx, v] : cols[col]) m(local.at(static_cast<std::uint32_t>(idx)), col) = static_cast<long>(v);
    return rank_integer(std::move(m));
}

template <class F>
std::size_t rank_of_block_field(const TypedBraiding<F>& c, int k, const std::vector<std::uint32_t>& block, const F& one) {
    std::unordered_map<std::uint32_t, std::size_t> local;
    for (std::size_t r = 0; r < block.size(); ++r) local[block[r]] = r;
    Matrix<F> m(block.size(), block.size(), zero_like(one));
    const auto cols = block_columns(c, k, block, one);
    for (std::size_t col = 0; col < cols.size(); ++col)
        for (const auto& [idx, v] : cols[col]) m(local.at(static_cast<std::uint32_t>(idx)), col) = v;
    return rank_field(std::move(m));
}

}  // namespace

StructureCheck check_braid_equation(const Braiding& c, std::size_t exhaustive_limit, std::uint64_t samples,
                                    std::uint64_t seed) {
    StructureCheck res;
    const auto t = typed_cyclo(c);
    const auto pw = powers(c.dim, 3);
    auto check = [&](std::uint64_t idx) {
        ++res.checked;
        const Vec<Cyclo> v{{idx, Cyclo(1L)}};
        const auto lhs = apply_c(t, apply_c(t, apply_c(t, v, 3, 0, pw), 3, 1, pw), 3, 0, pw);
        const auto rhs = apply_c(t, apply_c(t, apply_c(t, v, 3, 1, pw), 3, 0, pw), 3, 1, pw);
        if (lhs != rhs) {
            res.witness = "braid equation fails on basis triple " + std::to_string(idx / pw[2]) + ", " +
                          std::to_string((idx / pw[1]) % c.dim) + ", " + std::to_string(idx % c.dim);
            return false;
        }
        return true;
    };
    const std::uint64_t N = pw[3];
    if (c.dim <= exhaustive_limit) {
        for (std::uint64_t idx = 0; idx < N; ++idx)
            if (!check(idx)) return res;
    } else {
        res.exhaustive = false;
        std::mt19937_64 rng(seed);
        for (std::uint64_t s = 0; s < samples; ++s)
            if (!check(rng() % N)) return res;
    }
    res.ok = true;
    return res;
}

bool is_invertible(const Braiding& c) {
    const auto t = typed_cyclo(c);
    for (const auto& block : tensor_blocks(c, 2)) {
        std::unordered_map<std::uint32_t, std::size_t> local;
        for (std::size_t r = 0; r < block.size(); ++r) local[block[r]] = r;
        CMatrix m(block.size(), block.size());
        for (std::size_t col = 0; col < block.size(); ++col)
            for (const auto& [r, v] : c.cols[block[col]]) m(local.at(r), col) = v;
        if (rank_field(std::move(m)) != block.size()) return false;
    }
    return true;
}

// --- symmetrizers ------------------------------------------------------------------------------------

std::vector<SparseVec> symmetrizer_columns(const Braiding& c, int k) {
    if (k < 0) throw std::invalid_argument("degree must be nonnegative");
    const auto t = typed_cyclo(c);
    const auto pw = powers(c.dim, k);
    std::vector<SparseVec> cols;
    for (std::uint64_t idx = 0; idx < pw[static_cast<std::size_t>(k)]; ++idx)
        cols.push_back(apply_symmetrizer(t, Vec<Cyclo>{{idx, Cyclo(1L)}}, k, k, pw));
    return cols;
}

std::vector<SparseVec> symmetrizer_columns_by_words(const Braiding& c, int k, WordChoice choice) {
    if (k < 0) throw std::invalid_argument("degree must be nonnegative");
    const auto t = typed_cyclo(c);
    const auto pw = powers(c.dim, k);
    std::vector<std::vector<int>> words;
    std::vector<int> w(static_cast<std::size_t>(k));
    std::iota(w.begin(), w.end(), 0);
    do {
        std::vector<int> arr = w;
        std::vector<int> word;
        while (true) {
            int pick = -1;
            for (int i = 0; i + 1 < k; ++i)
                if (arr[static_cast<std::size_t>(i)] > arr[static_cast<std::size_t>(i) + 1]) {
                    pick = i;
                    if (choice == WordChoice::LeftmostDescent) break;
                }
            if (pick < 0) break;
            std::swap(arr[static_cast<std::size_t>(pick)], arr[static_cast<std::size_t>(pick) + 1]);
            word.push_back(pick);
        }
        words.push_back(std::move(word));
    } while (std::next_permutation(w.begin(), w.end()));
    std::vector<SparseVec> cols;
    for (std::uint64_t idx = 0; idx < pw[static_cast<std::size_t>(k)]; ++idx) {
        Vec<Cyclo> sum;
        for (const auto& word : words) {
            Vec<Cyclo> v{{idx, Cyclo(1L)}};
            for (int s : word) v = apply_c(t, v, k, s, pw);
            sum = add(sum, v);
        }
        cols.push_back(std::move(sum));
    }
    return cols;
}

std::uint64_t GradedDims::total() const { return std::accumulate(dims.begin(), dims.end(), std::uint64_t{0}); }

GradedDims nichols_graded_dim(const Braiding& c, int max_degree, const NicholsOptions& options) {
    if (max_degree < 0) throw std::invalid_argument("max_degree must be nonnegative");
    GradedDims out;
    const bool integral = c.integral();
    const int N = c.conductor();
    if (!options.primes.empty()) {
        const auto& ps = options.primes;
        if (ps.size() != 2 || ps[0] == ps[1])
            throw std::invalid_argument("mod-p path needs two distinct primes");
        for (auto p : ps)
            if (!is_prime(p) || p % static_cast<std::uint64_t>(std::max(N, 2)) != 1)
                throw std::invalid_argument("prime " + std::to_string(p) + " is not 1 mod " + std::to_string(std::max(N, 2)));
    }
    std::optional<TypedBraiding<long long>> ti;
    std::optional<TypedBraiding<Cyclo>> tc;
    std::vector<std::pair<std::uint64_t, TypedBraiding<Fp>>> tp;
    auto modp = [&]() -> std::vector<std::pair<std::uint64_t, TypedBraiding<Fp>>>& {
        if (tp.empty()) {
            for (auto p : options.primes.empty() ? primes_one_mod(std::max(N, 2), 2) : options.primes) {
                tp.emplace_back(p, typed_modp(c, p, root_of_unity_mod(N, p)));
                out.primes.push_back(p);
            }
        }
        return tp;
    };
    std::uint64_t rows = 1;
    for (int k = 0; k <= max_degree; ++k) {
        if (k > 0) rows *= c.dim;
        if (rows > options.row_budget) {
            out.budget_stop = true;
            break;
        }
        if (k <= 1) {
            out.dims.push_back(rows);
            continue;
        }
        std::uint64_t rank = 0;
        for (const auto& block : tensor_blocks(c, k)) {
            if (!options.force_modp && block.size() <= options.exact_block_cap) {
                if (integral) {
                    if (!ti) ti = typed_integer(c);
                    rank += rank_of_block_integer(*ti, k, block);
                } else {
                    if (!tc) tc = typed_cyclo(c);
                    rank += rank_of_block_field(*tc, k, block, Cyclo(1L));
                }
                continue;
            }
            out.semantics = DimSemantics::ModP;
            std::vector<std::size_t> ranks;
            for (const auto& [p, tb] : modp()) ranks.push_back(rank_of_block_field(tb, k, block, Fp(1, p)));
            if (ranks[0] != ranks[1]) throw std::runtime_error("block ranks modulo two primes disagree");
            rank += ranks[0];
        }
        out.dims.push_back(rank);
    }
    return out;
}

// --- degree two -----------------------------------------------------------------------------------

std::vector<std::vector<Cyclo>> degree2_relations(const Braiding& c) {
    std::vector<std::vector<Cyclo>> basis;
    const std::size_t N = c.dim * c.dim;
    for (const auto& block : tensor_blocks(c, 2)) {
        std::unordered_map<std::uint32_t, std::size_t> local;
        for (std::size_t r = 0; r < block.size(); ++r) local[block[r]] = r;
        CMatrix m(block.size(), block.size());
        for (std::size_t col = 0; col < block.size(); ++col) {
            m(col, col) += Cyclo(1L);
            for (const auto& [r, v] : c.cols[block[col]]) m(local.at(r), col) += v;
        }
        for (const auto& v : nullspace(std::move(m), Cyclo(1L))) {
            std::vector<Cyclo> full(N);
            for (std::size_t r = 0; r < block.size(); ++r) full[block[r]] = v[r];
            basis.push_back(std::move(full));
        }
    }
    return basis;
}

namespace {

std::size_t transposition_index(const YDModule& module, int i, int j) {
    if (module.rho.degree != 1) throw std::invalid_argument("transposition relations need a character");
    const int n = module.cls->group.n;
    if (i < 1 || j < 1 || i > n || j > n || i == j) throw std::invalid_argument("transposition points out of range");
    return module.cls->index.at(lift_unsigned(Permutation::cycle(n, {i - 1, j - 1})));
}

/// Kernel of id + c restricted to span(e), when the span is c-invariant.
std::vector<std::vector<Cyclo>> local_kernel(const Braiding& c, const std::vector<std::uint32_t>& e) {
    CMatrix m(e.size(), e.size());
    for (std::size_t col = 0; col < e.size(); ++col) {
        m(col, col) += Cyclo(1L);
        for (const auto& [r, v] : c.cols[e[col]]) {
            const auto it = std::find(e.begin(), e.end(), r);
            if (it == e.end()) throw std::logic_error("span is not invariant under the braiding");
            m(static_cast<std::size_t>(it - e.begin()), col) += v;
        }
    }
    return nullspace(std::move(m), Cyclo(1L));
}

}  // namespace

std::optional<std::pair<Cyclo, Cyclo>> triangle_relation(const YDModule& module, const Braiding& c, int i, int j,
                                                         int k) {
    const auto D = static_cast<std::uint32_t>(c.dim);
    const auto ij = static_cast<std::uint32_t>(transposition_index(module, i, j));
    const auto jk = static_cast<std::uint32_t>(transposition_index(module, j, k));
    const auto ki = static_cast<std::uint32_t>(transposition_index(module, k, i));
    for (const auto& v : local_kernel(c, {ij * D + jk, jk * D + ki, ki * D + ij}))
        if (!v[0].is_zero()) return std::make_pair(v[1] / v[0], v[2] / v[0]);
    return std::nullopt;
}

std::optional<Cyclo> commuting_relation(const YDModule& module, const Braiding& c, int i, int j, int k, int l) {
    const auto D = static_cast<std::uint32_t>(c.dim);
    const auto a = static_cast<std::uint32_t>(transposition_index(module, i, j));
    const auto b = static_cast<std::uint32_t>(transposition_index(module, k, l));
    for (const auto& v : local_kernel(c, {a * D + b, b * D + a}))
        if (!v[0].is_zero()) return -(v[1] / v[0]);
    return std::nullopt;
}

bool square_relation(const YDModule& module, const Braiding& c, int i, int j) {
    const auto D = static_cast<std::uint32_t>(c.dim);
    const auto a = static_cast<std::uint32_t>(transposition_index(module, i, j));
    return !local_kernel(c, {a * D + a}).empty();
}

namespace {

SignedPermutation zeta_factor(const YDModule& module, int s, int t, int u, int v) {
    const int n = module.cls->group.n;
    const auto idx = transposition_index(module, s, t);
    return zeta_right(*module.cls, module.cosets, idx, lift_unsigned(Permutation::cycle(n, {u - 1, v - 1}))).gamma;
}

int char_value(const MatrixRep& rho, const SignedPermutation& g) {
    return static_cast<int>(rho(g)(0, 0).integer_value());
}

}  // namespace

int transposition_sign_product(const YDModule& module, int i, int j, int k) {
    return char_value(module.rho, zeta_factor(module, i, j, j, k)) *
           char_value(module.rho, zeta_factor(module, j, k, i, k)) *
           char_value(module.rho, zeta_factor(module, i, k, i, j));
}

std::vector<SignTableRow> transposition_sign_table(int n) {
    if (n < 5) throw std::invalid_argument("the sign table needs n >= 5");
    const auto ss = transposition_module(n, TranspositionCharacter::SignSign);
    const auto sw = transposition_module(n, TranspositionCharacter::SwapSign);
    const std::vector<std::tuple<std::string, int, int, int>> triples{
        {"2<i<j<k", 3, 4, 5},   {"i=1,j=2<k", 1, 2, 3}, {"i=1,2<j<k", 1, 3, 4}, {"i=2<j<k", 2, 3, 4},
        {"2<i<k<j", 3, 5, 4},   {"i=1,k=2<j", 1, 3, 2}, {"i=1,2<k<j", 1, 4, 3}, {"i=2<k<j", 2, 4, 3}};
    std::vector<SignTableRow> rows;
    for (const auto& [cond, i, j, k] : triples) {
        SignTableRow r;
        r.condition = cond;
        r.i = i;
        r.j = j;
        r.k = k;
        r.a = zeta_factor(ss, i, j, j, k);
        r.b = zeta_factor(ss, j, k, i, k);
        r.c = zeta_factor(ss, i, k, i, j);
        const SignedPermutation* abc[3] = {&r.a, &r.b, &r.c};
        for (int q = 0; q < 3; ++q) {
            r.sign_sign[q] = char_value(ss.rho, *abc[q]);
            r.swap_sign[q] = char_value(sw.rho, *abc[q]);
        }
        rows.push_back(std::move(r));
    }
    return rows;
}

// --- arrow modules --------------------------------------------------------------------------------------

ArrowYDModule build_arrow_yd_module(std::shared_ptr<const ConjugacyClass> cls, CosetSystem cosets, MatrixRep rho) {
    if (!(rho.group->base == cls->rep)) throw std::invalid_argument("representation is not over the centralizer of the class representative");
    if (cosets.reps.size() != cls->size()) throw std::invalid_argument("coset table size differs from class size");
    return {std::move(cls), std::move(cosets), std::move(rho)};
}

std::pair<std::size_t, std::vector<Cyclo>> ArrowYDModule::right_action(std::size_t i, std::size_t j,
                                                                       const SignedPermutation& h) const {
    const auto z = zeta_right(*cls, cosets, i, h);
    const auto zi = rho.group->index.find(z.gamma);
    if (!zi) throw std::logic_error("right coset factor is not in the centralizer");
    const auto& r = rho(z.gamma.inverse());
    std::vector<Cyclo> col(rho.degree);
    for (std::size_t p = 0; p < rho.degree; ++p) col[p] = r(p, j);
    return {z.j, std::move(col)};
}

CMatrix ArrowYDModule::adjoint(const SignedPermutation& g) const {
    const std::size_t d = rho.degree;
    CMatrix m(dim(), dim());
    const auto ginv = g.inverse();
    for (std::size_t i = 0; i < cls->size(); ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const auto [ip, col] = right_action(i, j, ginv);
            for (std::size_t p = 0; p < d; ++p)
                if (!col[p].is_zero()) m(ip * d + p, i * d + j) = col[p];
        }
    return m;
}

StructureCheck check_arrow_right_action(const ArrowYDModule& arrow, std::uint64_t group_cap) {
    StructureCheck res;
    const auto& G = arrow.cls->group;
    const std::size_t d = arrow.rho.degree;
    for (const auto& h1 : G.elements(group_cap))
        for (const auto& h2 : G.generators())
            for (std::size_t i = 0; i < arrow.cls->size(); ++i)
                for (std::size_t j = 0; j < d; ++j) {
                    ++res.checked;
                    const auto [i1, c1] = arrow.right_action(i, j, h1);
                    std::vector<Cyclo> composed(d);
                    std::size_t i2 = 0;
                    for (std::size_t p = 0; p < d; ++p) {
                        const auto [ip, cp] = arrow.right_action(i1, p, h2);
                        i2 = ip;
                        for (std::size_t q = 0; q < d; ++q) composed[q] += c1[p] * cp[q];
                    }
                    const auto [idirect, cdirect] = arrow.right_action(i, j, h1 * h2);
                    if (idirect != i2 || composed != cdirect) {
                        res.witness = "right action is not associative at h1 = " + G.format(h1) +
                                      ", h2 = " + G.format(h2) + ", i = " + std::to_string(i) +
                                      ", j = " + std::to_string(j);
                        return res;
                    }
                }
    res.ok = true;
    return res;
}

StructureCheck psi_isomorphism_check(const YDModule& yd, const ArrowYDModule& arrow, std::uint64_t group_cap) {
    StructureCheck res;
    if (yd.cls->elements != arrow.cls->elements || yd.rho.degree != arrow.rho.degree) {
        res.witness = "modules are over different classes or representations";
        return res;
    }
    const std::size_t D = yd.dim();
    for (std::size_t w = 0; w < D; ++w) {
        ++res.checked;
        if (yd.degree_of(w) != arrow.degree_of(w)) {
            res.witness = "coaction degrees differ on basis " + std::to_string(w);
            return res;
        }
    }
    const auto& G = yd.cls->group;
    for (const auto& h : G.elements(group_cap)) {
        const auto A = yd.action(h);
        const auto B = arrow.adjoint(h);
        for (std::size_t col = 0; col < D; ++col)
            for (std::size_t row = 0; row < D; ++row) {
                ++res.checked;
                if (A(row, col) != B(row, col)) {
                    res.witness = "module map fails at h = " + G.format(h) + ", i = " +
                                  std::to_string(col / yd.rho.degree + 1) + ", j = " +
                                  std::to_string(col % yd.rho.degree + 1);
                    return res;
                }
            }
    }
    res.ok = true;
    return res;
}

}  // namespace nbn
