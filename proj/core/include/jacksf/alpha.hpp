#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "jacksf/rational.hpp"

namespace jacksf {

// Dense univariate polynomial in the formal parameter α with exact rational
// coefficients.  Canonical form: the coefficient vector carries no trailing
// zeros, so the zero polynomial is the empty vector.
class AlphaPoly {
public:
    AlphaPoly() = default;
    explicit AlphaPoly(Rat constant);
    explicit AlphaPoly(std::vector<Rat> coeffs); // coeffs[k] multiplies α^k
    AlphaPoly(std::initializer_list<Rat> coeffs);

    static AlphaPoly alpha_power(int k); // α^k

    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const;
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    Rat coeff(int k) const;
    const Rat& leading() const;

    AlphaPoly operator-() const;
    AlphaPoly& operator+=(const AlphaPoly& other);
    AlphaPoly& operator-=(const AlphaPoly& other);
    friend AlphaPoly operator+(AlphaPoly a, const AlphaPoly& b) { return a += b; }
    friend AlphaPoly operator-(AlphaPoly a, const AlphaPoly& b) { return a -= b; }
    friend AlphaPoly operator*(const AlphaPoly& a, const AlphaPoly& b);
    friend bool operator==(const AlphaPoly& a, const AlphaPoly& b) { return a.coeffs_ == b.coeffs_; }

    void scale(const Rat& factor);

    // Quotient and remainder with deg(rem) < deg(divisor).  Throws
    // division_by_zero when divisor is zero.
    static void divmod(const AlphaPoly& dividend, const AlphaPoly& divisor,
                       AlphaPoly& quotient, AlphaPoly& remainder);

    // Monic greatest common divisor (Euclid); gcd(0, 0) = 0.
    static AlphaPoly gcd(AlphaPoly a, AlphaPoly b);

    Rat eval(const Rat& point) const;

    // Human-readable form, e.g. "α^2-1", "2*α", "-1/2".  `var` names the
    // indeterminate so the same renderer serves the spectral variable u.
    std::string to_string(const char* var = "α") const;

private:
    void trim();
    std::vector<Rat> coeffs_;
};

// Element of the field Q(α): a reduced ratio of AlphaPoly with monic
// denominator.  The canonical form makes operator== a structural comparison.
class AlphaRat {
public:
    AlphaRat() : den_(Rat(1)) {} // zero
    AlphaRat(AlphaPoly num, AlphaPoly den);

    static AlphaRat zero() { return AlphaRat(); }
    static AlphaRat one() { return from_rat(Rat(1)); }
    static AlphaRat alpha();
    static AlphaRat from_rat(const Rat& value);
    static AlphaRat from_int(long value) { return from_rat(Rat(value)); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    const AlphaPoly& num() const { return num_; }
    const AlphaPoly& den() const { return den_; }

    AlphaRat operator-() const;
    friend AlphaRat operator+(const AlphaRat& a, const AlphaRat& b);
    friend AlphaRat operator-(const AlphaRat& a, const AlphaRat& b);
    friend AlphaRat operator*(const AlphaRat& a, const AlphaRat& b);
    friend AlphaRat operator/(const AlphaRat& a, const AlphaRat& b); // throws division_by_zero
    AlphaRat& operator+=(const AlphaRat& other) { return *this = *this + other; }
    AlphaRat& operator-=(const AlphaRat& other) { return *this = *this - other; }
    AlphaRat& operator*=(const AlphaRat& other) { return *this = *this * other; }
    AlphaRat& operator/=(const AlphaRat& other) { return *this = *this / other; }
    friend bool operator==(const AlphaRat& a, const AlphaRat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    AlphaRat inverse() const;

    // Exact value at α = point; throws pole_error when the denominator
    // vanishes there.
    Rat eval_at(const Rat& point) const;

    std::string to_string() const;

private:
    void normalize();
    AlphaPoly num_;
    AlphaPoly den_; // monic, nonzero, coprime to num_
};

AlphaRat pow(const AlphaRat& base, int exponent);

} // namespace jacksf
