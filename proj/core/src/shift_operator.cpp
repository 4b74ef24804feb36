#include "klrw/shift_operator.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace klrw {

ShiftAlphabet::ShiftAlphabet(std::vector<int> row_sizes) : row_sizes_(std::move(row_sizes)) {
    offsets_.resize(row_sizes_.size());
    int acc = 0;
    for (size_t i = 0; i < row_sizes_.size(); ++i) {
        if (row_sizes_[i] < 0) throw std::invalid_argument("negative row size");
        offsets_[i] = acc;
        acc += row_sizes_[i];
    }
    nvars_ = acc;
}

ShiftAlphabet ShiftAlphabet::triangular(int rows) {
    std::vector<int> sizes(rows);
    std::iota(sizes.begin(), sizes.end(), 1);
    return ShiftAlphabet(std::move(sizes));
}

int ShiftAlphabet::index(int k, int l) const {
    if (k < 1 || k > rows() || l < 1 || l > row_sizes_[k - 1])
        throw std::out_of_range("alphabet coordinates");
    return offsets_[k - 1] + (l - 1);
}

std::pair<int, int> ShiftAlphabet::coords(int idx) const {
    for (int k = rows(); k >= 1; --k) {
        if (idx >= offsets_[k - 1]) return {k, idx - offsets_[k - 1] + 1};
    }
    throw std::out_of_range("alphabet index");
}

std::string ShiftAlphabet::var_name(int idx) const {
    auto [k, l] = coords(idx);
    return "x(" + std::to_string(k) + "," + std::to_string(l) + ")";
}

ShiftOperator::ShiftOperator(ShiftAlphabet alphabet) : alphabet_(std::move(alphabet)) {}

ShiftOperator ShiftOperator::identity(const ShiftAlphabet& a) {
    ShiftOperator op(a);
    op.terms_.emplace(ShiftVector(a.nvars(), 0), RationalFunction::constant(a.nvars(), 1));
    return op;
}

ShiftOperator ShiftOperator::multiplication(const ShiftAlphabet& a, const RationalFunction& c) {
    ShiftOperator op(a);
    op.add_term(ShiftVector(a.nvars(), 0), c);
    return op;
}

ShiftOperator ShiftOperator::shift(const ShiftAlphabet& a, int k, int l, int power) {
    ShiftOperator op(a);
    ShiftVector v(a.nvars(), 0);
    v[a.index(k, l)] = power;
    op.terms_.emplace(std::move(v), RationalFunction::constant(a.nvars(), 1));
    return op;
}

void ShiftOperator::add_term(const ShiftVector& a, const RationalFunction& c) {
    if (static_cast<int>(a.size()) != alphabet_.nvars())
        throw std::invalid_argument("shift vector size");
    if (c.is_zero()) return;
    auto it = terms_.find(a);
    if (it == terms_.end()) {
        terms_.emplace(a, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

ShiftOperator ShiftOperator::operator+(const ShiftOperator& o) const {
    if (!(alphabet_ == o.alphabet_)) throw std::invalid_argument("alphabet mismatch");
    ShiftOperator r = *this;
    for (const auto& [a, c] : o.terms_) r.add_term(a, c);
    return r;
}

ShiftOperator ShiftOperator::operator-(const ShiftOperator& o) const {
    if (!(alphabet_ == o.alphabet_)) throw std::invalid_argument("alphabet mismatch");
    ShiftOperator r = *this;
    for (const auto& [a, c] : o.terms_) r.add_term(a, -c);
    return r;
}

ShiftOperator ShiftOperator::operator-() const {
    ShiftOperator r(alphabet_);
    for (const auto& [a, c] : terms_) r.terms_.emplace(a, -c);
    return r;
}

ShiftOperator ShiftOperator::compose(const ShiftOperator& o) const {
    if (!(alphabet_ == o.alphabet_)) throw std::invalid_argument("alphabet mismatch");
    ShiftOperator r(alphabet_);
    const int n = alphabet_.nvars();
    for (const auto& [a, c] : terms_) {
        std::vector<Rational> shift(n);
        for (int i = 0; i < n; ++i) shift[i] = a[i];
        for (const auto& [b, d] : o.terms_) {
            ShiftVector ab(n);
            for (int i = 0; i < n; ++i) ab[i] = a[i] + b[i];
            r.add_term(ab, c * d.shifted(shift));
        }
    }
    return r;
}

bool ShiftOperator::operator==(const ShiftOperator& o) const {
    if (!(alphabet_ == o.alphabet_)) return false;
    if (terms_.size() != o.terms_.size()) return false;
    auto it = terms_.begin();
    auto jt = o.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt) {
        if (it->first != jt->first || it->second != jt->second) return false;
    }
    return true;
}

RationalFunction ShiftOperator::coefficient(const ShiftVector& a) const {
    auto it = terms_.find(a);
    if (it == terms_.end()) return RationalFunction(alphabet_.nvars());
    return it->second;
}

std::string ShiftOperator::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [a, c] : terms_) {
        if (!first) out << "\n";
        first = false;
        out << "phi[";
        bool any = false;
        for (size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0) continue;
            if (any) out << " ";
            any = true;
            auto [k, l] = alphabet_.coords(static_cast<int>(i));
            out << "(" << k << "," << l << ")^" << a[i];
        }
        if (!any) out << "id";
        out << "] " << c.str();
    }
    return out.str();
}

} // namespace klrw
