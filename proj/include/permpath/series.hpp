#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "permpath/bigint.hpp"
#include "permpath/polynomial.hpp"

namespace permpath {

/// Truncated bivariate power series: a series in t whose coefficients are
/// polynomials in z over the exact rationals. All arithmetic is carried out
/// modulo t^{order+1}; dropped terms are never consulted.
class BivariateSeries {
 public:
    using Poly = Polynomial<BigRat>;

    explicit BivariateSeries(int order) : t_(static_cast<size_t>(order) + 1) {
        if (order < 0) throw std::invalid_argument("negative truncation order");
    }

    static BivariateSeries constant(const BigRat& c, int order) {
        BivariateSeries s(order);
        s.t_[0] = Poly::constant(c);
        return s;
    }

    int order() const { return static_cast<int>(t_.size()) - 1; }

    const Poly& coeff(int n) const {
        if (n < 0 || n > order()) throw std::out_of_range("series coefficient index");
        return t_[static_cast<size_t>(n)];
    }

    Poly& at(int n) {
        if (n < 0 || n > order()) throw std::out_of_range("series coefficient index");
        return t_[static_cast<size_t>(n)];
    }

    bool operator==(const BivariateSeries&) const = default;

    BivariateSeries& operator+=(const BivariateSeries& o) {
        check_order(o);
        for (size_t i = 0; i < t_.size(); ++i) t_[i] += o.t_[i];
        return *this;
    }

    BivariateSeries& operator-=(const BivariateSeries& o) {
        check_order(o);
        for (size_t i = 0; i < t_.size(); ++i) t_[i] -= o.t_[i];
        return *this;
    }

    friend BivariateSeries operator+(BivariateSeries a, const BivariateSeries& b) {
        return a += b;
    }
    friend BivariateSeries operator-(BivariateSeries a, const BivariateSeries& b) {
        return a -= b;
    }

    friend BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b) {
        a.check_order(b);
        BivariateSeries prod(a.order());
        for (size_t i = 0; i < a.t_.size(); ++i) {
            if (a.t_[i].is_zero()) continue;
            for (size_t j = 0; i + j < prod.t_.size(); ++j)
                if (!b.t_[j].is_zero()) prod.t_[i + j] += a.t_[i] * b.t_[j];
        }
        return prod;
    }

    BivariateSeries scaled(const BigRat& s) const {
        BivariateSeries out(order());
        for (size_t i = 0; i < t_.size(); ++i) out.t_[i] = t_[i].scaled(s);
        return out;
    }

    /// Series division, solving q term by term. The divisor's t-constant
    /// coefficient must divide exactly at every step (it is 1 or a z-monomial
    /// in every use here).
    BivariateSeries divide(const BivariateSeries& b) const {
        check_order(b);
        if (b.t_[0].is_zero())
            throw std::logic_error("series division by a divisor with zero constant term");
        BivariateSeries q(order());
        for (size_t n = 0; n < t_.size(); ++n) {
            Poly acc = t_[n];
            for (size_t i = 0; i < n; ++i)
                if (!q.t_[i].is_zero() && !b.t_[n - i].is_zero()) acc -= q.t_[i] * b.t_[n - i];
            q.t_[n] = acc.exact_div(b.t_[0]);
        }
        return q;
    }

    /// Square root with constant term 1, by iterative refinement
    /// X <- (X + S/X) / 2 seeded at 1; converges quadratically, iteration
    /// stops at the first fixed point of the truncated refinement.
    BivariateSeries sqrt() const {
        if (t_[0] != Poly::constant(BigRat(1)))
            throw std::logic_error("series sqrt requires constant term 1");
        BivariateSeries x = constant(BigRat(1), order());
        const BigRat half(1, 2);
        for (int iter = 0; iter < 128; ++iter) {
            BivariateSeries next = (x + divide(x)).scaled(half);
            if (next == x) return x;
            x = std::move(next);
        }
        throw std::logic_error("series sqrt failed to converge");
    }

    /// Exact division by t^k: the k lowest coefficients must vanish. The
    /// truncation order shrinks by k, since the top coefficients of the
    /// quotient are no longer determined.
    BivariateSeries divide_by_t(int k) const {
        if (k > order()) throw std::logic_error("division by t exceeds truncation order");
        for (int i = 0; i < k; ++i)
            if (!t_[static_cast<size_t>(i)].is_zero())
                throw std::logic_error("inexact division by t");
        BivariateSeries out(order() - k);
        for (size_t i = 0; i < out.t_.size(); ++i) out.t_[i] = t_[i + static_cast<size_t>(k)];
        return out;
    }

    /// Drops coefficients above the new (smaller) truncation order.
    BivariateSeries truncated(int new_order) const {
        if (new_order > order()) throw std::logic_error("cannot extend a truncated series");
        BivariateSeries out(new_order);
        for (size_t i = 0; i < out.t_.size(); ++i) out.t_[i] = t_[i];
        return out;
    }

    /// Exact division of every coefficient by z.
    BivariateSeries divide_by_z() const {
        static const Poly z({BigRat(0), BigRat(1)});
        BivariateSeries out(order());
        for (size_t i = 0; i < t_.size(); ++i) {
            if (t_[i].coeff(0) != BigRat(0)) throw std::logic_error("inexact division by z");
            out.t_[i] = t_[i].exact_div(z);
        }
        return out;
    }

 private:
    void check_order(const BivariateSeries& o) const {
        if (o.t_.size() != t_.size())
            throw std::logic_error("mismatched series truncation orders");
    }

    std::vector<Poly> t_;
};

}  // namespace permpath
