#pragma once

#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace permpath {

/// Dense univariate polynomial over an exact coefficient ring.
template <typename Coeff>
class Polynomial {
 public:
    Polynomial() = default;
    Polynomial(std::initializer_list<Coeff> coeffs) : c_(coeffs) { trim(); }
    explicit Polynomial(std::vector<Coeff> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Polynomial zero() { return Polynomial(); }
    static Polynomial constant(Coeff v) { return Polynomial({std::move(v)}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }

    Coeff coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return Coeff(0);
        return c_[static_cast<size_t>(i)];
    }

    const std::vector<Coeff>& coeffs() const { return c_; }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Coeff(0));
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Coeff(0));
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return zero();
        std::vector<Coeff> prod(a.c_.size() + b.c_.size() - 1, Coeff(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) prod[i + j] += a.c_[i] * b.c_[j];
        return Polynomial(std::move(prod));
    }

    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial scaled(const Coeff& s) const {
        std::vector<Coeff> out = c_;
        for (Coeff& x : out) x *= s;
        return Polynomial(std::move(out));
    }

    /// Multiplication by the variable to the k-th power.
    Polynomial shifted(int k) const {
        if (is_zero()) return zero();
        std::vector<Coeff> out(c_.size() + static_cast<size_t>(k), Coeff(0));
        for (size_t i = 0; i < c_.size(); ++i) out[i + static_cast<size_t>(k)] = c_[i];
        return Polynomial(std::move(out));
    }

    /// Exact polynomial division; throws std::logic_error on a nonzero
    /// remainder. Requires a field coefficient type (or exactness by luck).
    Polynomial exact_div(const Polynomial& d) const {
        if (d.is_zero()) throw std::logic_error("division by zero polynomial");
        std::vector<Coeff> rem = c_;
        std::vector<Coeff> quot;
        const int dd = d.degree();
        int rd = static_cast<int>(rem.size()) - 1;
        if (rd < dd) {
            if (!is_zero()) throw std::logic_error("inexact polynomial division");
            return zero();
        }
        quot.assign(static_cast<size_t>(rd - dd) + 1, Coeff(0));
        for (int i = rd; i >= dd; --i) {
            const Coeff q = rem[static_cast<size_t>(i)] / d.c_[static_cast<size_t>(dd)];
            quot[static_cast<size_t>(i - dd)] = q;
            if (q != Coeff(0))
                for (int j = 0; j <= dd; ++j)
                    rem[static_cast<size_t>(i - dd + j)] -= q * d.c_[static_cast<size_t>(j)];
        }
        for (const Coeff& x : rem)
            if (x != Coeff(0)) throw std::logic_error("inexact polynomial division");
        return Polynomial(std::move(quot));
    }

    bool operator==(const Polynomial&) const = default;

    std::string str(const std::string& var = "z") const {
        if (is_zero()) return "0";
        std::string out;
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == Coeff(0)) continue;
            if (!out.empty()) out += " + ";
            out += to_term(c_[i], static_cast<int>(i), var);
        }
        return out;
    }

 private:
    void trim() {
        while (!c_.empty() && c_.back() == Coeff(0)) c_.pop_back();
    }

    static std::string to_term(const Coeff& c, int power, const std::string& var) {
        std::string cs = coeff_str(c);
        if (power == 0) return cs;
        std::string vp = power == 1 ? var : var + "^" + std::to_string(power);
        if (cs == "1") return vp;
        return cs + "*" + vp;
    }

    static std::string coeff_str(const Coeff& c) {
        std::ostringstream os;
        os << c;
        return os.str();
    }

    std::vector<Coeff> c_;
};

}  // namespace permpath
