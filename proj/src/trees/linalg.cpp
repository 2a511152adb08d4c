#include "mouldlab/linalg.hpp"

#include "mouldlab/errors.hpp"

namespace mouldlab {

namespace {

using IntMatrix = std::vector<std::vector<mpz_class>>;

IntMatrix integer_rows(const Matrix &a)
{
    IntMatrix m;
    m.reserve(a.size());
    for (const auto &row : a) {
        mpz_class l = 1;
        for (const auto &v : row)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
        std::vector<mpz_class> r;
        r.reserve(row.size());
        for (const auto &v : row)
            r.push_back(v.get_num() * (l / v.get_den()));
        m.push_back(std::move(r));
    }
    return m;
}

// Fraction-free elimination to row echelon form; returns pivot columns.
std::vector<std::size_t> bareiss(IntMatrix &m, std::size_t cols)
{
    std::vector<std::size_t> pivots;
    mpz_class prev = 1, t;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t p = row;
        while (p < m.size() && m[p][col] == 0)
            ++p;
        if (p == m.size())
            continue;
        std::swap(m[p], m[row]);
        const mpz_class &piv = m[row][col];
        for (std::size_t i = row + 1; i < m.size(); ++i) {
            auto &ri = m[i];
            const mpz_class f = ri[col];
            for (std::size_t j = col + 1; j < m[row].size(); ++j) {
                ri[j] *= piv;
                t = f * m[row][j];
                ri[j] -= t;
                mpz_divexact(ri[j].get_mpz_t(), ri[j].get_mpz_t(), prev.get_mpz_t());
            }
            ri[col] = 0;
        }
        prev = piv;
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

std::optional<std::vector<Rational>> solve_exact(const Matrix &a, const std::vector<Rational> &b)
{
    std::size_t n = a.size();
    if (b.size() != n)
        throw InvalidArgument("solve_exact: dimension mismatch");
    Matrix aug = a;
    for (std::size_t i = 0; i < n; ++i) {
        if (aug[i].size() != n)
            throw InvalidArgument("solve_exact: matrix is not square");
        aug[i].push_back(b[i]);
    }
    IntMatrix m = integer_rows(aug);
    auto pivots = bareiss(m, n);
    if (pivots.size() < n)
        return std::nullopt;
    std::vector<Rational> x(n);
    for (std::size_t k = n; k-- > 0;) {
        Rational acc = Rational(m[k][n]);
        for (std::size_t j = k + 1; j < n; ++j)
            acc -= Rational(m[k][j]) * x[j];
        x[k] = acc / Rational(m[k][k]);
    }
    return x;
}

int rank_exact(const Matrix &a)
{
    if (a.empty())
        return 0;
    IntMatrix m = integer_rows(a);
    return static_cast<int>(bareiss(m, a[0].size()).size());
}

} // namespace mouldlab
