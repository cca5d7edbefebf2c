#include "nbn/core_group.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <numeric>
#include <sstream>

namespace nbn {

namespace {

void require_degree(int n) {
    if (n < 1 || n > kMaxDegree)
        throw std::invalid_argument("degree out of range 1.." + std::to_string(kMaxDegree) +
                                    ": " + std::to_string(n));
}

void require_same(int a, int b, const char* what) {
    if (a != b)
        throw DegreeMismatch(std::string(what) + ": degree mismatch " + std::to_string(a) +
                             " vs " + std::to_string(b));
}

}  // namespace

// --- Permutation ----------------------------------------------------------------

Permutation::Permutation(int n) : n_(n) {
    require_degree(n);
    for (int i = 0; i < n; ++i) img_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
}

Permutation Permutation::from_images(const std::vector<int>& images) {
    const int n = static_cast<int>(images.size());
    Permutation p(n);
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int i = 0; i < n; ++i) {
        const int v = images[static_cast<std::size_t>(i)];
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("images do not form a bijection");
        seen[static_cast<std::size_t>(v)] = true;
        p.img_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(v);
    }
    return p;
}

Permutation Permutation::cycle(int n, const std::vector<int>& points) {
    Permutation p(n);
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (std::size_t k = 0; k < points.size(); ++k) {
        const int a = points[k];
        if (a < 0 || a >= n || seen[static_cast<std::size_t>(a)])
            throw std::invalid_argument("cycle entries must be distinct points of 1..n");
        seen[static_cast<std::size_t>(a)] = true;
        p.img_[static_cast<std::size_t>(a)] =
            static_cast<std::uint8_t>(points[(k + 1) % points.size()]);
    }
    return p;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
    require_same(n_, rhs.n_, "permutation product");
    Permutation r;
    r.n_ = n_;
    for (int i = 0; i < n_; ++i)
        r.img_[static_cast<std::size_t>(i)] = img_[rhs.img_[static_cast<std::size_t>(i)]];
    return r;
}

Permutation Permutation::inverse() const {
    Permutation r;
    r.n_ = n_;
    for (int i = 0; i < n_; ++i)
        r.img_[img_[static_cast<std::size_t>(i)]] = static_cast<std::uint8_t>(i);
    return r;
}

bool Permutation::is_identity() const {
    for (int i = 0; i < n_; ++i)
        if (img_[static_cast<std::size_t>(i)] != i) return false;
    return true;
}

int Permutation::order() const {
    int ord = 1;
    for (const auto& c : cycles()) ord = std::lcm(ord, static_cast<int>(c.size()));
    return ord;
}

std::vector<std::vector<int>> Permutation::cycles() const {
    std::vector<std::vector<int>> out;
    std::uint32_t seen = 0;
    for (int i = 0; i < n_; ++i) {
        if (seen & (1u << i)) continue;
        std::vector<int> c;
        for (int j = i; !(seen & (1u << j)); j = img_[static_cast<std::size_t>(j)]) {
            seen |= 1u << j;
            c.push_back(j);
        }
        out.push_back(std::move(c));
    }
    return out;
}

std::uint64_t Permutation::packed() const {
    std::uint64_t v = 0;
    for (int i = 0; i < n_; ++i)
        v |= static_cast<std::uint64_t>(img_[static_cast<std::size_t>(i)]) << (4 * i);
    return v;
}

// --- SignVector -----------------------------------------------------------------

SignVector::SignVector(int n, std::uint32_t bits) : n_(n), bits_(bits) {
    require_degree(n);
    if (n < 32 && (bits >> n) != 0) throw std::invalid_argument("sign bits beyond degree");
}

SignVector SignVector::from_bits(const std::vector<int>& bits) {
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] != 0 && bits[i] != 1) throw std::invalid_argument("sign bits must be 0/1");
        if (bits[i]) mask |= 1u << i;
    }
    return SignVector(static_cast<int>(bits.size()), mask);
}

int SignVector::weight() const { return std::popcount(bits_); }

SignVector SignVector::operator+(const SignVector& rhs) const {
    require_same(n_, rhs.n_, "sign addition");
    SignVector r;
    r.n_ = n_;
    r.bits_ = bits_ ^ rhs.bits_;
    return r;
}

SignVector SignVector::with(int i, int value) const {
    SignVector r = *this;
    r.bits_ = value ? (bits_ | (1u << i)) : (bits_ & ~(1u << i));
    return r;
}

SignVector act(const Permutation& tau, const SignVector& a) {
    require_same(tau.degree(), a.degree(), "permutation action");
    std::uint32_t out = 0;
    for (int j = 0; j < a.degree(); ++j)
        if (a[j]) out |= 1u << tau(j);
    return SignVector(a.degree(), out);
}

// --- SignedPermutation ------------------------------------------------------------

SignedPermutation::SignedPermutation(SignVector sign, Permutation perm)
    : sign_(sign), perm_(perm) {
    require_same(sign.degree(), perm.degree(), "signed permutation");
}

SignedPermutation SignedPermutation::operator*(const SignedPermutation& rhs) const {
    require_same(degree(), rhs.degree(), "multiply");
    return SignedPermutation(sign_ + act(perm_, rhs.sign_), perm_ * rhs.perm_);
}

SignedPermutation SignedPermutation::inverse() const {
    const Permutation inv = perm_.inverse();
    return SignedPermutation(act(inv, sign_), inv);
}

int SignedPermutation::order() const {
    SignedPermutation p = *this;
    int k = 1;
    while (!p.is_identity()) {
        p = p * *this;
        ++k;
    }
    return k;
}

std::size_t SignedPermutationHash::operator()(const SignedPermutation& x) const noexcept {
    std::uint64_t h = x.perm().packed() * 0x9E3779B97F4A7C15ull;
    h ^= (static_cast<std::uint64_t>(x.sign().bits()) << 5) + static_cast<std::uint64_t>(x.degree());
    h ^= h >> 29;
    h *= 0xBF58476D1CE4E5B9ull;
    h ^= h >> 32;
    return static_cast<std::size_t>(h);
}

SignedPermutation conjugate(const SignedPermutation& x, const SignedPermutation& y) {
    return x * y * x.inverse();
}

// --- cycle types ------------------------------------------------------------------

int SignedCycleType::degree() const {
    int n = 0;
    for (const auto& c : cycles) n += c.length;
    return n;
}

std::vector<int> SignedCycleType::lengths() const {
    std::vector<int> out;
    for (const auto& c : cycles) out.push_back(c.length);
    std::sort(out.begin(), out.end());
    return out;
}

std::string SignedCycleType::to_string() const {
    std::string s;
    for (const auto& c : cycles) {
        if (!s.empty()) s += ' ';
        s += std::to_string(c.length);
        s += c.parity ? '-' : '+';
    }
    return s;
}

SignedCycleType signed_cycle_type(const SignedPermutation& x) {
    SignedCycleType t;
    for (const auto& c : x.perm().cycles()) {
        int parity = 0;
        for (int i : c) parity ^= x.sign()[i];
        t.cycles.push_back({static_cast<int>(c.size()), parity});
    }
    std::sort(t.cycles.begin(), t.cycles.end());
    return t;
}

// --- juxtaposition and embeddings ---------------------------------------------------

SignedPermutation juxtapose(const SignedPermutation& x, const SignedPermutation& y) {
    const int n = x.degree();
    const int m = y.degree();
    require_degree(n + m);
    std::vector<int> img(static_cast<std::size_t>(n + m));
    for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = x.perm()(i);
    for (int i = 0; i < m; ++i) img[static_cast<std::size_t>(n + i)] = y.perm()(i) + n;
    const std::uint32_t bits = x.sign().bits() | (y.sign().bits() << n);
    return SignedPermutation(SignVector(n + m, bits), Permutation::from_images(img));
}

SignedPermutation embed_phi(const SignedPermutation& x) {
    return juxtapose(x, SignedPermutation(1));
}

SignedPermutation lift_unsigned(const Permutation& p) {
    return SignedPermutation(SignVector(p.degree()), p);
}

SignedPermutation nu_right(const SignedPermutation& x, int m) {
    return juxtapose(x, SignedPermutation(m));
}

SignedPermutation nu_left(int n, const SignedPermutation& y) {
    return juxtapose(SignedPermutation(n), y);
}

bool orthogonal(const SignedPermutation& x, const SignedPermutation& y) {
    auto lx = signed_cycle_type(x).lengths();
    auto ly = signed_cycle_type(y).lengths();
    for (int a : lx)
        if (std::find(ly.begin(), ly.end(), a) != ly.end()) return false;
    return true;
}

// --- text format ------------------------------------------------------------------

std::string format_cycles(const Permutation& p) {
    std::string s;
    for (const auto& c : p.cycles()) {
        if (c.size() < 2) continue;
        s += '(';
        for (std::size_t k = 0; k < c.size(); ++k) {
            if (k) s += ' ';
            s += std::to_string(c[k] + 1);
        }
        s += ')';
    }
    return s.empty() ? "()" : s;
}

std::string format(const SignedPermutation& x) {
    std::string s;
    for (int i = 0; i < x.degree(); ++i) s += x.sign()[i] ? '1' : '0';
    s += ';';
    s += format_cycles(x.perm());
    return s;
}

Permutation parse_permutation(std::string_view text, int n) {
    Permutation acc(n);
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    if (text.substr(pos) == "id") return acc;
    while (pos < text.size()) {
        if (text[pos] != '(') throw ParseError("expected '(' in cycle notation: " + std::string(text));
        ++pos;
        std::vector<int> pts;
        while (true) {
            skip_ws();
            if (pos >= text.size()) throw ParseError("unterminated cycle: " + std::string(text));
            if (text[pos] == ')') {
                ++pos;
                break;
            }
            if (text[pos] == ',') {
                ++pos;
                continue;
            }
            if (!std::isdigit(static_cast<unsigned char>(text[pos])))
                throw ParseError("bad character in cycle: " + std::string(text));
            int v = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                v = v * 10 + (text[pos++] - '0');
            if (v < 1 || v > n) throw ParseError("cycle entry out of range 1.." + std::to_string(n));
            pts.push_back(v - 1);
        }
        if (!pts.empty()) {
            try {
                // cycles are written left to right and composed as a product
                acc = acc * Permutation::cycle(n, pts);
            } catch (const std::invalid_argument& e) {
                throw ParseError(e.what());
            }
        }
        skip_ws();
    }
    return acc;
}

SignedPermutation parse_signed(std::string_view text) {
    const auto semi = text.find(';');
    if (semi == std::string_view::npos) throw ParseError("expected '<signs>;<cycles>': " + std::string(text));
    std::vector<int> bits;
    for (char ch : text.substr(0, semi)) {
        if (ch == '0' || ch == '1')
            bits.push_back(ch - '0');
        else if (!std::isspace(static_cast<unsigned char>(ch)))
            throw ParseError("sign string must be 0/1: " + std::string(text));
    }
    if (bits.empty() || static_cast<int>(bits.size()) > kMaxDegree)
        throw ParseError("sign string length must be 1.." + std::to_string(kMaxDegree));
    const int n = static_cast<int>(bits.size());
    return SignedPermutation(SignVector::from_bits(bits), parse_permutation(text.substr(semi + 1), n));
}

bool canonical_less(const SignedPermutation& a, const SignedPermutation& b) {
    return format(a) < format(b);
}

void sort_canonical(std::vector<SignedPermutation>& xs) {
    std::vector<std::pair<std::string, std::size_t>> keys;
    keys.reserve(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) keys.emplace_back(format(xs[i]), i);
    std::sort(keys.begin(), keys.end());
    std::vector<SignedPermutation> out;
    out.reserve(xs.size());
    for (const auto& k : keys) out.push_back(xs[k.second]);
    xs = std::move(out);
}

// --- Group ----------------------------------------------------------------------------

Group Group::parse(std::string_view name) {
    if (name.size() < 2 || (name[0] != 'B' && name[0] != 'S'))
        throw ParseError("group must be B<n> or S<n>: " + std::string(name));
    int n = 0;
    for (char ch : name.substr(1)) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) throw ParseError("bad group degree");
        n = n * 10 + (ch - '0');
    }
    require_degree(n);
    return {name[0] == 'B' ? GroupKind::Signed : GroupKind::Symmetric, n};
}

std::string Group::name() const {
    return (kind == GroupKind::Signed ? "B" : "S") + std::to_string(n);
}

std::uint64_t Group::order_exact() const {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return kind == GroupKind::Signed ? (f << n) : f;
}

double Group::order() const { return static_cast<double>(order_exact()); }

bool Group::contains(const SignedPermutation& x) const {
    if (x.degree() != n) return false;
    return kind == GroupKind::Signed || x.sign().is_zero();
}

std::vector<SignedPermutation> Group::generators() const {
    std::vector<SignedPermutation> g;
    if (n >= 2) {
        g.push_back(lift_unsigned(Permutation::cycle(n, {0, 1})));
        if (n >= 3) {
            std::vector<int> all(static_cast<std::size_t>(n));
            std::iota(all.begin(), all.end(), 0);
            g.push_back(lift_unsigned(Permutation::cycle(n, all)));
        }
    }
    if (kind == GroupKind::Signed) g.emplace_back(SignVector::unit(n, 0), Permutation(n));
    return g;
}

std::vector<SignedPermutation> Group::elements(std::uint64_t cap) const {
    if (order_exact() > cap)
        throw BudgetExceeded("group " + name() + " exceeds enumeration cap");
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 0);
    std::vector<SignedPermutation> out;
    out.reserve(static_cast<std::size_t>(order_exact()));
    const std::uint32_t sign_count = kind == GroupKind::Signed ? (1u << n) : 1u;
    do {
        const Permutation p = Permutation::from_images(img);
        for (std::uint32_t s = 0; s < sign_count; ++s) out.emplace_back(SignVector(n, s), p);
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

SignedPermutation Group::random_element(std::mt19937_64& rng) const {
    const Permutation p = random_permutation(n, rng);
    if (kind == GroupKind::Symmetric) return lift_unsigned(p);
    return SignedPermutation(random_signs(n, rng), p);
}

std::string Group::format(const SignedPermutation& x) const {
    return kind == GroupKind::Signed ? nbn::format(x) : format_cycles(x.perm());
}

SignedPermutation Group::parse_element(std::string_view text) const {
    SignedPermutation x = text.find(';') != std::string_view::npos
                              ? parse_signed(text)
                              : lift_unsigned(parse_permutation(text, n));
    if (!contains(x)) throw ParseError("element " + std::string(text) + " is not in " + name());
    return x;
}

Permutation random_permutation(int n, std::mt19937_64& rng) {
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 0);
    std::shuffle(img.begin(), img.end(), rng);
    return Permutation::from_images(img);
}

SignVector random_signs(int n, std::mt19937_64& rng) {
    return SignVector(n, static_cast<std::uint32_t>(rng() & ((1ull << n) - 1ull)));
}

}  // namespace nbn
