#pragma once

#include <string>
#include <vector>

#include "jacksf/fields.hpp"

namespace jacksf {

// Dense polynomial in the spectral variable u over the coefficient field F.
template <CoeffField F>
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(F constant) {
        if (!constant.is_zero())
            coeffs_.push_back(std::move(constant));
    }
    explicit UPoly(std::vector<F> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static UPoly zero() { return UPoly(); }
    static UPoly one() { return UPoly(F::one()); }
    // u + shift
    static UPoly linear(const F& shift) {
        UPoly p;
        p.coeffs_ = {shift, F::one()};
        return p;
    }
    // The Pochhammer symbol (u)_n = u(u+1)...(u+n-1); (u)_0 = 1.
    static UPoly pochhammer(int n) { return rising_product(0, n); }
    // (u+from)(u+from+1)...(u+to-1); empty range gives 1.
    static UPoly rising_product(int from, int to) {
        UPoly p = one();
        for (int j = from; j < to; ++j)
            p = p * linear(F::from_int(j));
        return p;
    }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == F::one(); }
    F coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(coeffs_.size()))
            return F::zero();
        return coeffs_[static_cast<size_t>(k)];
    }
    const F& leading() const {
        if (coeffs_.empty())
            throw internal_error("leading coefficient of zero polynomial");
        return coeffs_.back();
    }

    UPoly operator-() const {
        UPoly result = *this;
        for (auto& c : result.coeffs_)
            c = -c;
        return result;
    }
    friend UPoly operator+(const UPoly& a, const UPoly& b) {
        UPoly result = a;
        if (result.coeffs_.size() < b.coeffs_.size())
            result.coeffs_.resize(b.coeffs_.size(), F::zero());
        for (size_t i = 0; i < b.coeffs_.size(); ++i)
            result.coeffs_[i] = result.coeffs_[i] + b.coeffs_[i];
        result.trim();
        return result;
    }
    friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }
    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.is_zero() || b.is_zero())
            return UPoly();
        UPoly result;
        result.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, F::zero());
        for (size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i].is_zero())
                continue;
            for (size_t j = 0; j < b.coeffs_.size(); ++j)
                result.coeffs_[i + j] = result.coeffs_[i + j] + a.coeffs_[i] * b.coeffs_[j];
        }
        result.trim();
        return result;
    }
    friend UPoly operator*(const F& scalar, const UPoly& p) {
        UPoly result;
        if (scalar.is_zero())
            return result;
        result.coeffs_ = p.coeffs_;
        for (auto& c : result.coeffs_)
            c = scalar * c;
        result.trim();
        return result;
    }
    friend bool operator==(const UPoly& a, const UPoly& b) { return a.coeffs_ == b.coeffs_; }

    static void divmod(const UPoly& dividend, const UPoly& divisor, UPoly& quotient,
                       UPoly& remainder) {
        if (divisor.is_zero())
            throw division_by_zero("polynomial division by zero");
        quotient = UPoly();
        remainder = dividend;
        const int dd = divisor.degree();
        if (remainder.degree() >= dd)
            quotient.coeffs_.assign(static_cast<size_t>(remainder.degree() - dd) + 1, F::zero());
        while (remainder.degree() >= dd) {
            int shift = remainder.degree() - dd;
            F factor = remainder.leading() / divisor.leading();
            quotient.coeffs_[static_cast<size_t>(shift)] = factor;
            for (int i = 0; i <= dd; ++i)
                remainder.coeffs_[static_cast<size_t>(i + shift)] =
                    remainder.coeffs_[static_cast<size_t>(i + shift)] -
                    factor * divisor.coeffs_[static_cast<size_t>(i)];
            remainder.trim();
        }
        quotient.trim();
    }

    static UPoly gcd(UPoly a, UPoly b) {
        while (!b.is_zero()) {
            UPoly q, r;
            divmod(a, b, q, r);
            a = std::move(b);
            b = std::move(r);
        }
        if (!a.is_zero()) {
            F inv = F::one() / a.leading();
            a = inv * a;
        }
        return a;
    }

    F eval(const F& point) const {
        F value = F::zero();
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            value = value * point + *it;
        return value;
    }

    std::string to_string() const {
        if (is_zero())
            return "0";
        std::string out;
        for (int k = degree(); k >= 0; --k) {
            const F& c = coeffs_[static_cast<size_t>(k)];
            if (c.is_zero())
                continue;
            if (!out.empty())
                out += " + ";
            out += "(" + c.to_string() + ")";
            if (k == 1)
                out += "*u";
            else if (k > 1)
                out += "*u^" + std::to_string(k);
        }
        return out;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero())
            coeffs_.pop_back();
    }
    std::vector<F> coeffs_;
};

// Rational function of u over F, kept gcd-reduced with monic denominator.
template <CoeffField F>
class UPolyRat {
public:
    UPolyRat() : den_(UPoly<F>::one()) {}
    UPolyRat(UPoly<F> num, UPoly<F> den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero())
            throw division_by_zero("zero denominator in rational function of u");
        normalize();
    }
    static UPolyRat from_poly(UPoly<F> p) { return UPolyRat(std::move(p), UPoly<F>::one()); }
    static UPolyRat one() { return from_poly(UPoly<F>::one()); }

    const UPoly<F>& num() const { return num_; }
    const UPoly<F>& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend UPolyRat operator+(const UPolyRat& a, const UPolyRat& b) {
        return UPolyRat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend UPolyRat operator-(const UPolyRat& a, const UPolyRat& b) {
        return UPolyRat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend UPolyRat operator*(const UPolyRat& a, const UPolyRat& b) {
        return UPolyRat(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend UPolyRat operator/(const UPolyRat& a, const UPolyRat& b) {
        if (b.is_zero())
            throw division_by_zero("division by zero rational function");
        return UPolyRat(a.num_ * b.den_, a.den_ * b.num_);
    }
    friend bool operator==(const UPolyRat& a, const UPolyRat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    // Value at u = point.  Reduction happened at construction, so a vanishing
    // denominator here is a genuine pole.
    F eval(const F& point) const {
        F d = den_.eval(point);
        if (d.is_zero())
            throw pole_error("evaluation at a pole of a rational function of u");
        return num_.eval(point) / d;
    }

    std::string to_string() const {
        if (den_.is_one())
            return num_.to_string();
        return "[" + num_.to_string() + "] / [" + den_.to_string() + "]";
    }

private:
    void normalize() {
        if (num_.is_zero()) {
            den_ = UPoly<F>::one();
            return;
        }
        UPoly<F> g = UPoly<F>::gcd(num_, den_);
        if (g.degree() > 0) {
            UPoly<F> q, r;
            UPoly<F>::divmod(num_, g, q, r);
            num_ = q;
            UPoly<F>::divmod(den_, g, q, r);
            den_ = q;
        }
        F lead = den_.leading();
        if (!(lead == F::one())) {
            F inv = F::one() / lead;
            num_ = inv * num_;
            den_ = inv * den_;
        }
    }

    UPoly<F> num_;
    UPoly<F> den_;
};

// Coefficients e_0..e_ℓ with v = Σ_k e_k/(u)_k, found by matching the
// numerator of v·(u)_ℓ against the triangular basis (u+k)(u+k+1)...(u+ℓ-1).
// Requires den(v) | (u)_ℓ and deg num ≤ ℓ.
template <CoeffField F>
std::vector<F> expand_pochhammer(const UPolyRat<F>& v, int ell) {
    if (ell < 0)
        throw argument_error("negative Pochhammer depth");
    UPoly<F> q, r;
    UPoly<F>::divmod(UPoly<F>::pochhammer(ell), v.den(), q, r);
    if (!r.is_zero())
        throw argument_error("denominator does not divide the Pochhammer symbol (u)_ℓ");
    UPoly<F> scaled = v.num() * q;
    if (scaled.degree() > ell)
        throw argument_error("numerator degree exceeds the Pochhammer depth");
    std::vector<F> coeffs(static_cast<size_t>(ell) + 1, F::zero());
    for (int k = 0; k <= ell; ++k) {
        UPoly<F> basis = UPoly<F>::rising_product(k, ell); // degree ℓ-k
        F e = scaled.coeff(ell - k);
        coeffs[static_cast<size_t>(k)] = e;
        scaled = scaled - e * basis;
    }
    if (!scaled.is_zero())
        throw internal_error("Pochhammer-basis expansion left a remainder");
    return coeffs;
}

// Reconstructs Σ_k coeffs[k]/(u)_k as one reduced rational function; inverse
// of expand_pochhammer.
template <CoeffField F>
UPolyRat<F> pochhammer_series_value(const std::vector<F>& coeffs) {
    int ell = static_cast<int>(coeffs.size()) - 1;
    UPoly<F> num;
    for (int k = 0; k <= ell; ++k)
        num = num + coeffs[static_cast<size_t>(k)] * UPoly<F>::rising_product(k, ell);
    return UPolyRat<F>(num, UPoly<F>::pochhammer(ell));
}

} // namespace jacksf
