#include "klrw/perm_operator.hpp"

#include <sstream>
#include <stdexcept>

namespace klrw {

PermOperator PermOperator::identity(int nvars) {
    PermOperator op(nvars);
    op.terms_.emplace(identity_permutation(nvars), RationalFunction::constant(nvars, 1));
    return op;
}

PermOperator PermOperator::multiplication(RationalFunction c) {
    PermOperator op(c.nvars());
    op.add_term(identity_permutation(c.nvars()), c);
    return op;
}

PermOperator PermOperator::permutation_op(int nvars, const Permutation& w) {
    PermOperator op(nvars);
    op.terms_.emplace(w, RationalFunction::constant(nvars, 1));
    return op;
}

PermOperator PermOperator::term(const RationalFunction& c, const Permutation& w) {
    PermOperator op(c.nvars());
    op.add_term(w, c);
    return op;
}

PermOperator PermOperator::divided_difference_op(int nvars, int k) {
    Polynomial den = Polynomial::variable(nvars, k + 1) - Polynomial::variable(nvars, k);
    RationalFunction c(Polynomial::constant(nvars, 1), den);
    PermOperator op(nvars);
    op.add_term(transposition(nvars, k), c);
    op.add_term(identity_permutation(nvars), -c);
    return op;
}

void PermOperator::add_term(const Permutation& w, const RationalFunction& c) {
    if (static_cast<int>(w.size()) != nvars_) throw std::invalid_argument("permutation size");
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

PermOperator PermOperator::operator+(const PermOperator& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("variable-count mismatch");
    PermOperator r = *this;
    for (const auto& [w, c] : o.terms_) r.add_term(w, c);
    return r;
}

PermOperator PermOperator::operator-(const PermOperator& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("variable-count mismatch");
    PermOperator r = *this;
    for (const auto& [w, c] : o.terms_) r.add_term(w, -c);
    return r;
}

PermOperator PermOperator::operator-() const {
    PermOperator r(nvars_);
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
}

PermOperator PermOperator::operator*(const Rational& c) const {
    PermOperator r(nvars_);
    if (c == 0) return r;
    for (const auto& [w, k] : terms_)
        r.terms_.emplace(w, k * RationalFunction::constant(nvars_, c));
    return r;
}

PermOperator PermOperator::scaled(const RationalFunction& c) const {
    PermOperator r(nvars_);
    for (const auto& [w, k] : terms_) r.add_term(w, c * k);
    return r;
}

PermOperator PermOperator::compose(const PermOperator& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("variable-count mismatch");
    PermOperator r(nvars_);
    for (const auto& [w, c] : terms_) {
        for (const auto& [v, d] : o.terms_) {
            r.add_term(klrw::compose(w, v), c * d.permuted(w));
        }
    }
    return r;
}

RationalFunction PermOperator::apply(const Polynomial& f) const {
    return apply(RationalFunction(f));
}

RationalFunction PermOperator::apply(const RationalFunction& f) const {
    if (f.nvars() != nvars_) throw std::invalid_argument("variable-count mismatch");
    RationalFunction r(nvars_);
    for (const auto& [w, c] : terms_) r = r + c * f.permuted(w);
    return r;
}

bool PermOperator::operator==(const PermOperator& o) const {
    if (nvars_ != o.nvars_) return false;
    if (terms_.size() != o.terms_.size()) return false;
    auto it = terms_.begin();
    auto jt = o.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt) {
        if (it->first != jt->first) return false;
        if (it->second != jt->second) return false;
    }
    return true;
}

std::optional<int> PermOperator::homogeneous_coefficient_degree() const {
    std::optional<int> deg;
    for (const auto& [w, c] : terms_) {
        auto d = c.homogeneous_degree();
        if (!d) return std::nullopt;
        if (!deg) deg = d;
        else if (*deg != *d) return std::nullopt;
    }
    return deg;
}

RationalFunction PermOperator::coefficient(const Permutation& w) const {
    auto it = terms_.find(w);
    if (it == terms_.end()) return RationalFunction(nvars_);
    return it->second;
}

std::string PermOperator::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first) out << "\n";
        first = false;
        out << "[";
        for (size_t i = 0; i < w.size(); ++i) {
            if (i) out << " ";
            out << (w[i] + 1);
        }
        out << "] " << c.str();
    }
    return out.str();
}

} // namespace klrw
