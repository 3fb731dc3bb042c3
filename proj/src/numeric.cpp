#include "dpz/numeric.hpp"

#include <limits>
#include <numeric>

namespace dpz {

Int to_int(const BigInt& z) {
    if (z > std::numeric_limits<Int>::max() || z < std::numeric_limits<Int>::min())
        throw std::overflow_error("value does not fit in 64 bits");
    return static_cast<Int>(z);
}

Int to_int(const Rational& q) {
    if (boost::multiprecision::denominator(q) != 1)
        throw std::domain_error("rational " + to_string(q) + " is not an integer");
    return to_int(BigInt(boost::multiprecision::numerator(q)));
}

Int gcd(Int a, Int b) { return std::gcd(a, b); }

Int exact_sqrt(Int n) {
    if (n < 0) return -1;
    auto s = static_cast<Int>(boost::multiprecision::sqrt(BigInt(n)));
    return s * s == n ? s : -1;
}

std::string to_string(const Rational& q) { return q.str(); }

int rank_of(RatMatrix m) {
    int rank = 0;
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    for (std::size_t c = 0; c < cols && static_cast<std::size_t>(rank) < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[rank]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == static_cast<std::size_t>(rank) || m[r][c] == 0) continue;
            Rational f = m[r][c] / m[rank][c];
            for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
        }
        ++rank;
    }
    return rank;
}

RatMatrix identity(std::size_t n) {
    RatMatrix id(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
    return id;
}

RatMatrix inverse(const RatMatrix& m) {
    const std::size_t n = m.size();
    RatMatrix a = m;
    RatMatrix inv = identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        if (a[c].size() != n) throw std::invalid_argument("inverse: matrix is not square");
        std::size_t piv = c;
        while (piv < n && a[piv][c] == 0) ++piv;
        if (piv == n) throw std::domain_error("inverse: matrix is singular");
        std::swap(a[piv], a[c]);
        std::swap(inv[piv], inv[c]);
        Rational p = a[c][c];
        for (std::size_t k = 0; k < n; ++k) {
            a[c][k] /= p;
            inv[c][k] /= p;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0) continue;
            Rational f = a[r][c];
            for (std::size_t k = 0; k < n; ++k) {
                a[r][k] -= f * a[c][k];
                inv[r][k] -= f * inv[c][k];
            }
        }
    }
    return inv;
}

RatMatrix multiply(const RatMatrix& a, const RatMatrix& b) {
    const std::size_t n = a.size();
    const std::size_t inner = b.size();
    const std::size_t m = inner ? b[0].size() : 0;
    RatMatrix out(n, std::vector<Rational>(m, Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < inner; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

RatMatrix to_rational(const Matrix& m) {
    RatMatrix out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (Int v : m[i]) out[i].emplace_back(v);
    return out;
}

RatMatrix transpose(const RatMatrix& m) {
    if (m.empty()) return {};
    RatMatrix out(m[0].size(), std::vector<Rational>(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j) out[j][i] = m[i][j];
    return out;
}

}  // namespace dpz
