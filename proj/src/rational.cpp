#include "prym/rational.hpp"

#include <algorithm>

namespace prym {

bool is_integer(const Rational& x) {
    return boost::multiprecision::denominator(x) == 1;
}

Int to_integer(const Rational& x) {
    return boost::multiprecision::numerator(x);
}

RMat rmat_identity(std::size_t n) {
    RMat m(n, RVec(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

RMat rmat_mul(const RMat& a, const RMat& b) {
    std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    RMat out(n, RVec(m, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t t = 0; t < k; ++t) {
            if (a[i][t] == 0) continue;
            for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][t] * b[t][j];
        }
    }
    return out;
}

RMat rmat_transpose(const RMat& a) {
    std::size_t n = a.size(), m = a.empty() ? 0 : a[0].size();
    RMat out(m, RVec(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) out[j][i] = a[i][j];
    }
    return out;
}

RMat rmat_inverse(const RMat& a) {
    std::size_t n = a.size();
    RMat work = a;
    RMat inv = rmat_identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && work[piv][col] == 0) ++piv;
        if (piv == n) throw Error(ErrorCode::DegenerateForm, "singular matrix");
        std::swap(work[piv], work[col]);
        std::swap(inv[piv], inv[col]);
        Rational p = work[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            work[col][j] /= p;
            inv[col][j] /= p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || work[i][col] == 0) continue;
            Rational f = work[i][col];
            for (std::size_t j = 0; j < n; ++j) {
                work[i][j] -= f * work[col][j];
                inv[i][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

std::size_t rmat_rank(RMat a) {
    std::size_t n = a.size(), m = a.empty() ? 0 : a[0].size();
    std::size_t r = 0;
    for (std::size_t col = 0; col < m && r < n; ++col) {
        std::size_t piv = r;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) continue;
        std::swap(a[piv], a[r]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == r || a[i][col] == 0) continue;
            Rational f = a[i][col] / a[r][col];
            for (std::size_t j = col; j < m; ++j) a[i][j] -= f * a[r][j];
        }
        ++r;
    }
    return r;
}

RVec solve_left(const RMat& a, const RVec& b) {
    // c * a = b  <=>  a^T c^T = b^T; eliminate on the augmented transpose.
    std::size_t r = a.size(), m = a.empty() ? 0 : a[0].size();
    RMat aug(m, RVec(r + 1, Rational(0)));
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < m; ++j) aug[j][i] = a[i][j];
    }
    for (std::size_t j = 0; j < m; ++j) aug[j][r] = b[j];

    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < r && row < m; ++col) {
        std::size_t piv = row;
        while (piv < m && aug[piv][col] == 0) ++piv;
        if (piv == m) continue;
        std::swap(aug[piv], aug[row]);
        Rational p = aug[row][col];
        for (std::size_t j = 0; j <= r; ++j) aug[row][j] /= p;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == row || aug[i][col] == 0) continue;
            Rational f = aug[i][col];
            for (std::size_t j = 0; j <= r; ++j) aug[i][j] -= f * aug[row][j];
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (std::size_t i = row; i < m; ++i) {
        if (aug[i][r] != 0) {
            throw Error(ErrorCode::DegenerateForm, "inconsistent linear system");
        }
    }
    RVec c(r, Rational(0));
    for (std::size_t i = 0; i < pivot_col.size(); ++i) c[pivot_col[i]] = aug[i][r];
    return c;
}

Int common_denominator(const RMat& a) {
    Int l = 1;
    for (const auto& row : a) {
        for (const auto& x : row) {
            Int d = boost::multiprecision::denominator(x);
            l = boost::multiprecision::lcm(l, d);
        }
    }
    return l;
}

IMat hnf_rows(IMat m) {
    std::size_t rows = m.size(), cols = m.empty() ? 0 : m[0].size();
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        while (true) {
            std::size_t best = rows;
            for (std::size_t i = r; i < rows; ++i) {
                if (m[i][col] == 0) continue;
                if (best == rows ||
                    boost::multiprecision::abs(m[i][col]) < boost::multiprecision::abs(m[best][col])) {
                    best = i;
                }
            }
            if (best == rows) break;
            std::swap(m[best], m[r]);
            bool cleared = true;
            for (std::size_t i = r + 1; i < rows; ++i) {
                if (m[i][col] == 0) continue;
                Int q = m[i][col] / m[r][col];
                for (std::size_t j = 0; j < cols; ++j) m[i][j] -= q * m[r][j];
                if (m[i][col] != 0) cleared = false;
            }
            if (cleared) break;
        }
        if (r < rows && m[r][col] != 0) {
            if (m[r][col] < 0) {
                for (std::size_t j = 0; j < cols; ++j) m[r][j] = -m[r][j];
            }
            // canonical form: entries above a pivot lie in [0, pivot)
            for (std::size_t i = 0; i < r; ++i) {
                Int v = m[i][col];
                const Int& p = m[r][col];
                Int q = v / p;
                if (v - q * p < 0) q -= 1;
                if (q != 0) {
                    for (std::size_t j = 0; j < cols; ++j) m[i][j] -= q * m[r][j];
                }
            }
            ++r;
        }
    }
    m.resize(r);
    return m;
}

namespace {
IVec collect_divisors(const IMat& m, std::size_t n, std::size_t filled) {
    IVec d(n, Int(0));
    for (std::size_t i = 0; i < filled; ++i) d[i] = m[i][i];
    return d;
}
}  // namespace

IVec smith_divisors(IMat m, IMat* vinv) {
    std::size_t rows = m.size(), cols = m.empty() ? 0 : m[0].size();
    std::size_t n = std::min(rows, cols);
    if (vinv != nullptr) {
        vinv->assign(cols, IVec(cols, Int(0)));
        for (std::size_t i = 0; i < cols; ++i) (*vinv)[i][i] = 1;
    }
    auto col_swap = [&](std::size_t i, std::size_t j) {
        for (std::size_t rr = 0; rr < rows; ++rr) std::swap(m[rr][i], m[rr][j]);
        if (vinv != nullptr) std::swap((*vinv)[i], (*vinv)[j]);
    };
    auto col_addmul = [&](std::size_t dst, std::size_t src, const Int& k) {
        // column dst += k * column src  =>  row src of vinv -= k * row dst
        for (std::size_t rr = 0; rr < rows; ++rr) m[rr][dst] += k * m[rr][src];
        if (vinv != nullptr) {
            for (std::size_t j = 0; j < cols; ++j) (*vinv)[src][j] -= k * (*vinv)[dst][j];
        }
    };
    auto col_negate = [&](std::size_t i) {
        for (std::size_t rr = 0; rr < rows; ++rr) m[rr][i] = -m[rr][i];
        if (vinv != nullptr) {
            for (std::size_t j = 0; j < cols; ++j) (*vinv)[i][j] = -(*vinv)[i][j];
        }
    };

    for (std::size_t t = 0; t < n; ++t) {
        while (true) {
            std::size_t pi = rows, pj = cols;
            for (std::size_t i = t; i < rows; ++i) {
                for (std::size_t j = t; j < cols; ++j) {
                    if (m[i][j] == 0) continue;
                    if (pi == rows || boost::multiprecision::abs(m[i][j]) <
                                          boost::multiprecision::abs(m[pi][pj])) {
                        pi = i;
                        pj = j;
                    }
                }
            }
            if (pi == rows) return collect_divisors(m, n, t);
            std::swap(m[pi], m[t]);
            if (pj != t) col_swap(pj, t);

            bool again = false;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (m[i][t] == 0) continue;
                Int q = m[i][t] / m[t][t];
                for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
                if (m[i][t] != 0) again = true;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (m[t][j] == 0) continue;
                Int q = m[t][j] / m[t][t];
                col_addmul(j, t, -q);
                if (m[t][j] != 0) again = true;
            }
            if (again) continue;

            bool divides_all = true;
            for (std::size_t i = t + 1; i < rows && divides_all; ++i) {
                for (std::size_t j = t + 1; j < cols && divides_all; ++j) {
                    if (m[i][j] % m[t][t] != 0) {
                        for (std::size_t jj = t; jj < cols; ++jj) m[t][jj] += m[i][jj];
                        divides_all = false;
                    }
                }
            }
            if (divides_all) break;
        }
        if (m[t][t] < 0) col_negate(t);
    }
    return collect_divisors(m, n, n);
}

Int bareiss_determinant(IMat m) {
    std::size_t n = m.size();
    if (n == 0) return Int(1);
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t piv = k + 1;
            while (piv < n && m[piv][k] == 0) ++piv;
            if (piv == n) return Int(0);
            std::swap(m[piv], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

}  // namespace prym
