#include "mrt/exactq.hpp"

#include <algorithm>
#include <utility>

namespace mrt {

Echelon rref(QMatrix m) {
    Echelon out;
    const std::size_t nr = m.rows(), nc = m.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < nc && r < nr; ++c) {
        std::size_t p = r;
        while (p < nr && m(p, c) == 0) ++p;
        if (p == nr) continue;
        if (p != r)
            for (std::size_t j = 0; j < nc; ++j) std::swap(m(p, j), m(r, j));
        const Rat inv = 1 / m(r, c);
        for (std::size_t j = c; j < nc; ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < nr; ++i) {
            if (i == r || m(i, c) == 0) continue;
            const Rat f = m(i, c);
            for (std::size_t j = c; j < nc; ++j) m(i, j) -= f * m(r, j);
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.reduced = std::move(m);
    return out;
}

std::size_t rank(const QMatrix& m) { return rref(m).pivots.size(); }

std::size_t rank(const ZMatrix& m) { return smith_normal_form(m).rank; }

std::optional<QVector> in_span(const QVector& v, const std::vector<QVector>& basis) {
    const std::size_t n = v.size();
    for (const auto& b : basis)
        if (b.size() != n) throw std::invalid_argument("in_span: dimension mismatch");

    QMatrix aug(n, basis.size() + 1);
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (std::size_t i = 0; i < n; ++i) aug(i, j) = basis[j][i];
    for (std::size_t i = 0; i < n; ++i) aug(i, basis.size()) = v[i];

    const Echelon e = rref(std::move(aug));
    if (!e.pivots.empty() && e.pivots.back() == basis.size()) return std::nullopt;

    QVector coeffs(basis.size(), Rat(0));
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
        coeffs[e.pivots[r]] = e.reduced(r, basis.size());
    return coeffs;
}

std::vector<QVector> kernel_basis(const QMatrix& m) {
    const Echelon e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;

    std::vector<QVector> out;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        QVector v(m.cols(), Rat(0));
        v[f] = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
        auto lead = std::find_if(v.begin(), v.end(), [](const Rat& x) { return x != 0; });
        if (lead != v.end() && *lead < 0)
            for (auto& x : v) x = -x;
        out.push_back(std::move(v));
    }
    return out;
}

namespace {

void swap_rows(ZMatrix& a, std::size_t i, std::size_t k) {
    if (i == k) return;
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(i, j), a(k, j));
}

void swap_cols(ZMatrix& a, std::size_t j, std::size_t k) {
    if (j == k) return;
    for (std::size_t i = 0; i < a.rows(); ++i) std::swap(a(i, j), a(i, k));
}

// Smallest |entry| in the trailing block starting at (t, t); ties go to the
// first one in row-major order.
bool find_min_pivot(const ZMatrix& a, std::size_t t, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    Int best;
    for (std::size_t i = t; i < a.rows(); ++i)
        for (std::size_t j = t; j < a.cols(); ++j) {
            if (a(i, j) == 0) continue;
            Int v = abs(a(i, j));
            if (!found || v < best) {
                best = v;
                pi = i;
                pj = j;
                found = true;
            }
        }
    return found;
}

}  // namespace

SmithForm smith_normal_form(ZMatrix a) {
    SmithForm out;
    const std::size_t nr = a.rows(), nc = a.cols();
    std::size_t t = 0;
    while (t < std::min(nr, nc)) {
        std::size_t pi = 0, pj = 0;
        if (!find_min_pivot(a, t, pi, pj)) break;
        swap_rows(a, t, pi);
        swap_cols(a, t, pj);

        for (;;) {
            bool dirty = false;
            for (std::size_t i = t + 1; i < nr; ++i) {
                if (a(i, t) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
                for (std::size_t j = t; j < nc; ++j) a(i, j) -= q * a(t, j);
                if (a(i, t) != 0) dirty = true;
            }
            for (std::size_t j = t + 1; j < nc; ++j) {
                if (a(t, j) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
                for (std::size_t i = t; i < nr; ++i) a(i, j) -= q * a(i, t);
                if (a(t, j) != 0) dirty = true;
            }
            if (dirty) {
                // a remainder smaller than the pivot survived; move it in
                std::size_t bi = t, bj = t;
                Int best = abs(a(t, t));
                for (std::size_t i = t + 1; i < nr; ++i)
                    if (a(i, t) != 0 && abs(a(i, t)) < best) { best = abs(a(i, t)); bi = i; bj = t; }
                for (std::size_t j = t + 1; j < nc; ++j)
                    if (a(t, j) != 0 && abs(a(t, j)) < best) { best = abs(a(t, j)); bi = t; bj = j; }
                swap_rows(a, t, bi);
                swap_cols(a, t, bj);
                continue;
            }
            // divisibility: d_t must divide every remaining entry
            bool fixed = false;
            for (std::size_t i = t + 1; i < nr && !fixed; ++i)
                for (std::size_t j = t + 1; j < nc; ++j) {
                    if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
                        for (std::size_t k = t; k < nc; ++k) a(t, k) += a(i, k);
                        fixed = true;
                        break;
                    }
                }
            if (!fixed) break;
        }
        out.diagonal.push_back(abs(a(t, t)));
        ++t;
    }
    out.rank = out.diagonal.size();
    return out;
}

ZMatrix clear_denominators(const QMatrix& m) {
    ZMatrix z(m.rows(), m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) {
        Int l = 1;
        for (std::size_t i = 0; i < m.rows(); ++i) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
        for (std::size_t i = 0; i < m.rows(); ++i) {
            Rat scaled = m(i, j) * l;
            z(i, j) = scaled.get_num();
        }
    }
    return z;
}

QMatrix to_rational(const ZMatrix& m) {
    QMatrix q(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) q(i, j) = m(i, j);
    return q;
}

}  // namespace mrt
