#include "jacksf/alpha.hpp"

#include <sstream>
#include <utility>

namespace jacksf {

AlphaPoly::AlphaPoly(Rat constant) {
    if (constant != 0) {
        constant.canonicalize();
        coeffs_.push_back(std::move(constant));
    }
}

AlphaPoly::AlphaPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
    // guard against mpq values constructed as uncanonicalized fractions
    for (auto& c : coeffs_)
        c.canonicalize();
    trim();
}

AlphaPoly::AlphaPoly(std::initializer_list<Rat> coeffs)
    : AlphaPoly(std::vector<Rat>(coeffs)) {}

AlphaPoly AlphaPoly::alpha_power(int k) {
    AlphaPoly p;
    p.coeffs_.assign(static_cast<size_t>(k) + 1, Rat(0));
    p.coeffs_.back() = 1;
    return p;
}

bool AlphaPoly::is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

Rat AlphaPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size()))
        return Rat(0);
    return coeffs_[static_cast<size_t>(k)];
}

const Rat& AlphaPoly::leading() const {
    if (coeffs_.empty())
        throw internal_error("leading coefficient of zero polynomial");
    return coeffs_.back();
}

void AlphaPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

AlphaPoly AlphaPoly::operator-() const {
    AlphaPoly result = *this;
    for (auto& c : result.coeffs_)
        c = -c;
    return result;
}

AlphaPoly& AlphaPoly::operator+=(const AlphaPoly& other) {
    if (coeffs_.size() < other.coeffs_.size())
        coeffs_.resize(other.coeffs_.size(), Rat(0));
    for (size_t i = 0; i < other.coeffs_.size(); ++i)
        coeffs_[i] += other.coeffs_[i];
    trim();
    return *this;
}

AlphaPoly& AlphaPoly::operator-=(const AlphaPoly& other) {
    if (coeffs_.size() < other.coeffs_.size())
        coeffs_.resize(other.coeffs_.size(), Rat(0));
    for (size_t i = 0; i < other.coeffs_.size(); ++i)
        coeffs_[i] -= other.coeffs_[i];
    trim();
    return *this;
}

AlphaPoly operator*(const AlphaPoly& a, const AlphaPoly& b) {
    if (a.is_zero() || b.is_zero())
        return AlphaPoly();
    AlphaPoly result;
    result.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0)
            continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j)
            result.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    result.trim();
    return result;
}

void AlphaPoly::scale(const Rat& factor) {
    if (factor == 0) {
        coeffs_.clear();
        return;
    }
    for (auto& c : coeffs_)
        c *= factor;
}

void AlphaPoly::divmod(const AlphaPoly& dividend, const AlphaPoly& divisor,
                       AlphaPoly& quotient, AlphaPoly& remainder) {
    if (divisor.is_zero())
        throw division_by_zero("polynomial division by zero");
    quotient = AlphaPoly();
    remainder = dividend;
    const int dd = divisor.degree();
    const Rat& lead = divisor.leading();
    if (remainder.degree() >= dd)
        quotient.coeffs_.assign(static_cast<size_t>(remainder.degree() - dd) + 1, Rat(0));
    while (remainder.degree() >= dd) {
        int shift = remainder.degree() - dd;
        Rat factor = remainder.leading() / lead;
        quotient.coeffs_[static_cast<size_t>(shift)] = factor;
        for (int i = 0; i <= dd; ++i)
            remainder.coeffs_[static_cast<size_t>(i + shift)] -= factor * divisor.coeffs_[static_cast<size_t>(i)];
        remainder.trim();
    }
    quotient.trim();
}

AlphaPoly AlphaPoly::gcd(AlphaPoly a, AlphaPoly b) {
    while (!b.is_zero()) {
        AlphaPoly q, r;
        divmod(a, b, q, r);
        // keeping remainders monic tames coefficient growth in the Euclid loop
        if (!r.is_zero())
            r.scale(Rat(1) / r.leading());
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero())
        a.scale(Rat(1) / a.leading()); // monic representative
    return a;
}

Rat AlphaPoly::eval(const Rat& point) const {
    Rat at = point;
    at.canonicalize();
    Rat value(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        value = value * at + *it;
    return value;
}

std::string AlphaPoly::to_string(const char* var) const {
    if (is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rat& c = coeffs_[static_cast<size_t>(k)];
        if (c == 0)
            continue;
        Rat abs_c = c < 0 ? Rat(-c) : c;
        if (first) {
            if (c < 0)
                out << "-";
            first = false;
        } else {
            out << (c < 0 ? "-" : "+");
        }
        if (k == 0) {
            out << rat_to_string(abs_c);
        } else {
            if (abs_c != 1)
                out << rat_to_string(abs_c) << "*";
            out << var;
            if (k > 1)
                out << "^" << k;
        }
    }
    return out.str();
}

AlphaRat::AlphaRat(AlphaPoly num, AlphaPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero())
        throw division_by_zero("zero denominator in Q(α) element");
    normalize();
}

AlphaRat AlphaRat::alpha() { return AlphaRat(AlphaPoly::alpha_power(1), AlphaPoly(Rat(1))); }

AlphaRat AlphaRat::from_rat(const Rat& value) {
    return AlphaRat(AlphaPoly(value), AlphaPoly(Rat(1)));
}

void AlphaRat::normalize() {
    if (num_.is_zero()) {
        den_ = AlphaPoly(Rat(1));
        return;
    }
    if (den_.degree() > 0 && num_.degree() > 0) {
        AlphaPoly g = AlphaPoly::gcd(num_, den_);
        if (g.degree() > 0) {
            AlphaPoly q, r;
            AlphaPoly::divmod(num_, g, q, r);
            num_ = q;
            AlphaPoly::divmod(den_, g, q, r);
            den_ = q;
        }
    }
    Rat lead = den_.leading();
    if (lead != 1) {
        den_.scale(Rat(1) / lead);
        num_.scale(Rat(1) / lead);
    }
}

AlphaRat AlphaRat::operator-() const {
    AlphaRat result = *this;
    result.num_ = -result.num_;
    return result;
}

AlphaRat operator+(const AlphaRat& a, const AlphaRat& b) {
    return AlphaRat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

AlphaRat operator-(const AlphaRat& a, const AlphaRat& b) {
    return AlphaRat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

AlphaRat operator*(const AlphaRat& a, const AlphaRat& b) {
    return AlphaRat(a.num_ * b.num_, a.den_ * b.den_);
}

AlphaRat operator/(const AlphaRat& a, const AlphaRat& b) {
    if (b.is_zero())
        throw division_by_zero("division by zero in Q(α)");
    return AlphaRat(a.num_ * b.den_, a.den_ * b.num_);
}

AlphaRat AlphaRat::inverse() const {
    if (is_zero())
        throw division_by_zero("inverse of zero in Q(α)");
    return AlphaRat(den_, num_);
}

Rat AlphaRat::eval_at(const Rat& point) const {
    Rat d = den_.eval(point);
    if (d == 0)
        throw pole_error("pole at α = " + rat_to_string(point));
    return num_.eval(point) / d;
}

std::string AlphaRat::to_string() const {
    if (den_.is_one())
        return num_.to_string();
    std::string n = num_.to_string();
    std::string d = den_.to_string();
    // Parenthesize multi-term, scaled or fractional factors so the result
    // reads as one ratio.
    auto composite = [](const std::string& s) {
        return s.find_first_of("+-", 1) != std::string::npos ||
               s.find_first_of("*/") != std::string::npos;
    };
    if (composite(n))
        n = "(" + n + ")";
    if (composite(d) || d.find('^') != std::string::npos)
        d = "(" + d + ")";
    return n + "/" + d;
}

AlphaRat pow(const AlphaRat& base, int exponent) {
    if (exponent < 0)
        return pow(base.inverse(), -exponent);
    AlphaRat result = AlphaRat::one();
    AlphaRat acc = base;
    int e = exponent;
    while (e > 0) {
        if (e & 1)
            result *= acc;
        acc *= acc;
        e >>= 1;
    }
    return result;
}

} // namespace jacksf
