#pragma once

#include <concepts>
#include <optional>
#include <string>

#include "jacksf/alpha.hpp"

namespace jacksf {

// The algebra layer is generic over the coefficient field.  A model supplies
// exact field arithmetic together with a distinguished element α: for
// AlphaRat that is the formal parameter, for NumericAlpha a fixed rational.
template <class F>
concept CoeffField = requires(const F a, const F b) {
    { F::zero() } -> std::convertible_to<F>;
    { F::one() } -> std::convertible_to<F>;
    { F::alpha() } -> std::convertible_to<F>;
    { F::from_rat(Rat(1)) } -> std::convertible_to<F>;
    { a + b } -> std::convertible_to<F>;
    { a - b } -> std::convertible_to<F>;
    { a* b } -> std::convertible_to<F>;
    { a / b } -> std::convertible_to<F>;
    { -a } -> std::convertible_to<F>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a == b } -> std::convertible_to<bool>;
    { a.to_string() } -> std::convertible_to<std::string>;
};

// Q with α specialized to a fixed rational value, set once per process before
// any computation.  Division by a vanished denominator reports a pole, since
// in this mode it always stems from the specialization.
class NumericAlpha {
public:
    NumericAlpha() : value_(0) {}
    explicit NumericAlpha(Rat value) : value_(std::move(value)) { value_.canonicalize(); }

    static void set_alpha(const Rat& value) { alpha_value() = value; }
    static NumericAlpha alpha() {
        if (!alpha_value())
            throw internal_error("NumericAlpha used before set_alpha()");
        return NumericAlpha(*alpha_value());
    }

    static NumericAlpha zero() { return NumericAlpha(Rat(0)); }
    static NumericAlpha one() { return NumericAlpha(Rat(1)); }
    static NumericAlpha from_rat(const Rat& value) { return NumericAlpha(value); }
    static NumericAlpha from_int(long value) { return NumericAlpha(Rat(value)); }

    const Rat& value() const { return value_; }
    bool is_zero() const { return value_ == 0; }
    bool is_one() const { return value_ == 1; }

    NumericAlpha operator-() const { return NumericAlpha(-value_); }
    friend NumericAlpha operator+(const NumericAlpha& a, const NumericAlpha& b) {
        return NumericAlpha(a.value_ + b.value_);
    }
    friend NumericAlpha operator-(const NumericAlpha& a, const NumericAlpha& b) {
        return NumericAlpha(a.value_ - b.value_);
    }
    friend NumericAlpha operator*(const NumericAlpha& a, const NumericAlpha& b) {
        return NumericAlpha(a.value_ * b.value_);
    }
    friend NumericAlpha operator/(const NumericAlpha& a, const NumericAlpha& b) {
        if (b.is_zero())
            throw pole_error("division by zero at the specialized α");
        return NumericAlpha(a.value_ / b.value_);
    }
    NumericAlpha& operator+=(const NumericAlpha& o) { value_ += o.value_; return *this; }
    NumericAlpha& operator-=(const NumericAlpha& o) { value_ -= o.value_; return *this; }
    NumericAlpha& operator*=(const NumericAlpha& o) { value_ *= o.value_; return *this; }
    NumericAlpha& operator/=(const NumericAlpha& o) { return *this = *this / o; }
    friend bool operator==(const NumericAlpha& a, const NumericAlpha& b) {
        return a.value_ == b.value_;
    }

    std::string to_string() const { return rat_to_string(value_); }

private:
    static std::optional<Rat>& alpha_value() {
        static std::optional<Rat> value;
        return value;
    }
    Rat value_;
};

template <CoeffField F>
F field_pow(const F& base, int exponent) {
    if (exponent < 0)
        return F::one() / field_pow(base, -exponent);
    F result = F::one();
    F acc = base;
    int e = exponent;
    while (e > 0) {
        if (e & 1)
            result = result * acc;
        acc = acc * acc;
        e >>= 1;
    }
    return result;
}

static_assert(CoeffField<AlphaRat>);
static_assert(CoeffField<NumericAlpha>);

} // namespace jacksf
