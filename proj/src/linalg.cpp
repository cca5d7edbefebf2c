#include "nbn/linalg.hpp"

namespace nbn {

Fp Fp::from_signed(long value, std::uint64_t modulus) {
    if (value >= 0) return Fp(static_cast<std::uint64_t>(value), modulus);
    return -Fp(static_cast<std::uint64_t>(-value), modulus);
}

std::size_t rank_integer(Matrix<mpz_class> m) {
    std::size_t row = 0;
    mpz_class prev = 1;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t piv = row;
        while (piv < m.rows() && m(piv, col) == 0) ++piv;
        if (piv == m.rows()) continue;
        m.swap_rows(row, piv);
        const mpz_class p = m(row, col);
        for (std::size_t r = row + 1; r < m.rows(); ++r) {
            const mpz_class f = m(r, col);
            for (std::size_t c = col + 1; c < m.cols(); ++c) {
                mpz_class v = p * m(r, c) - f * m(row, c);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                m(r, c) = std::move(v);
            }
            m(r, col) = 0;
        }
        prev = p;
        ++row;
    }
    return row;
}

}  // namespace nbn
