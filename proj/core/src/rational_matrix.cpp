#include "zetaverify/rational_matrix.hpp"

#include <utility>

#include "zetaverify/errors.hpp"

namespace zv {

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = BigRational(1);
    return m;
}

bool RationalMatrix::is_upper_triangular() const {
    if (!is_square())
        return false;
    for (std::size_t i = 1; i < rows_; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (!at(i, j).is_zero())
                return false;
    return true;
}

BigRational determinant(const RationalMatrix& m) {
    if (!m.is_square())
        throw NotSquare("determinant: matrix is not square");
    const std::size_t n = m.rows();
    if (n == 0)
        return BigRational(1);

    // Clear denominators row by row, then run fraction-free (Bareiss)
    // elimination over the integers.
    std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
    mpz_class row_scale_product = 1;
    for (std::size_t i = 0; i < n; ++i) {
        mpz_class lcm = 1;
        for (std::size_t j = 0; j < n; ++j)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m.at(i, j).denominator().get_mpz_t());
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = m.at(i, j).numerator() * (lcm / m.at(i, j).denominator());
        row_scale_product *= lcm;
    }

    int sign = 1;
    mpz_class prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t pivot = k;
            for (std::size_t r = k + 1; r < n; ++r) {
                if (a[r][k] != 0) {
                    pivot = r;
                    break;
                }
            }
            if (pivot == k)
                return BigRational(0);
            std::swap(a[k], a[pivot]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class t = a[k][k] * a[i][j] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }

    mpz_class det_scaled = a[n - 1][n - 1];
    if (sign < 0)
        det_scaled = -det_scaled;
    return BigRational(det_scaled, row_scale_product);
}

} // namespace zv
