#include "klrw/rational_function.hpp"

#include <stdexcept>

namespace klrw {

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (num_.nvars() != den_.nvars()) throw std::invalid_argument("variable-count mismatch");
    if (den_.is_zero()) throw std::invalid_argument("zero denominator");
    normalize();
}

void RationalFunction::normalize() {
    if (num_.is_zero()) {
        den_ = Polynomial::constant(num_.nvars(), 1);
        return;
    }
    if (auto q = num_.divided_exactly_by(den_)) {
        num_ = std::move(*q);
        den_ = Polynomial::constant(num_.nvars(), 1);
        return;
    }
    Rational c = den_.content();
    if (den_.leading_coefficient() < 0) c = -c;
    if (c != 1) {
        Rational inv = 1 / c;
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

bool RationalFunction::is_polynomial() const {
    return den_.is_constant() && den_.constant_value() == 1;
}

const Polynomial& RationalFunction::as_polynomial() const {
    if (!is_polynomial()) throw std::logic_error("rational function has a denominator: " + str());
    return num_;
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    if (den_ == o.den_) return RationalFunction(num_ + o.num_, den_);
    return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
    if (den_ == o.den_) return RationalFunction(num_ - o.num_, den_);
    return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
    if (o.is_zero()) throw std::invalid_argument("division by zero");
    return RationalFunction(num_ * o.den_, den_ * o.num_);
}

bool RationalFunction::operator==(const RationalFunction& o) const {
    return num_ * o.den_ == o.num_ * den_;
}

RationalFunction RationalFunction::permuted(const Permutation& w) const {
    return RationalFunction(num_.permuted(w), den_.permuted(w));
}

RationalFunction RationalFunction::shifted(const std::vector<Rational>& shift) const {
    return RationalFunction(num_.shifted(shift), den_.shifted(shift));
}

RationalFunction RationalFunction::embedded(int new_nvars, const std::vector<int>& var_map) const {
    return RationalFunction(num_.embedded(new_nvars, var_map), den_.embedded(new_nvars, var_map));
}

std::optional<int> RationalFunction::homogeneous_degree() const {
    auto dn = num_.homogeneous_degree();
    auto dd = den_.homogeneous_degree();
    if (!dn || !dd) return std::nullopt;
    if (num_.is_zero()) return 0;
    return *dn - *dd;
}

std::string RationalFunction::str() const {
    if (is_polynomial()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

} // namespace klrw
