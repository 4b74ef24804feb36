#include "klrw/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace klrw {

bool GrlexGreater::operator()(const Exponents& a, const Exponents& b) const {
    int da = std::accumulate(a.begin(), a.end(), 0);
    int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da > db;
    return a > b;
}

Permutation identity_permutation(int n) {
    Permutation w(n);
    for (int i = 0; i < n; ++i) w[i] = i;
    return w;
}

Permutation transposition(int n, int k) {
    Permutation w = identity_permutation(n);
    std::swap(w[k], w[k + 1]);
    return w;
}

Permutation compose(const Permutation& w, const Permutation& v) {
    Permutation r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = w[v[i]];
    return r;
}

Permutation inverse(const Permutation& w) {
    Permutation r(w.size());
    for (size_t i = 0; i < w.size(); ++i) r[w[i]] = static_cast<int>(i);
    return r;
}

Polynomial::Polynomial(int nvars, const Rational& c) : nvars_(nvars) {
    if (c != 0) terms_.emplace(Exponents(nvars, 0), c);
}

Polynomial Polynomial::variable(int nvars, int index, int power) {
    if (index < 0 || index >= nvars) throw std::out_of_range("variable index");
    Exponents e(nvars, 0);
    e[index] = power;
    return monomial(nvars, std::move(e), 1);
}

Polynomial Polynomial::monomial(int nvars, Exponents e, const Rational& c) {
    Polynomial p(nvars);
    if (static_cast<int>(e.size()) != nvars) throw std::invalid_argument("exponent length");
    if (c != 0) p.terms_.emplace(std::move(e), c);
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 &&
            std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                        [](int e) { return e == 0; }));
}

Rational Polynomial::constant_value() const {
    if (terms_.empty()) return 0;
    if (!is_constant()) throw std::logic_error("not a constant polynomial");
    return terms_.begin()->second;
}

void Polynomial::check_same_ring(const Polynomial& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("variable-count mismatch");
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_same_ring(o);
    Polynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    check_same_ring(o);
    Polynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_same_ring(o);
    Polynomial r(nvars_);
    Exponents e(nvars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
    Polynomial r(nvars_);
    if (c == 0) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
}

Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

bool Polynomial::operator==(const Polynomial& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
}

bool Polynomial::operator<(const Polynomial& o) const {
    if (nvars_ != o.nvars_) return nvars_ < o.nvars_;
    auto it = terms_.begin();
    auto jt = o.terms_.begin();
    GrlexGreater gt;
    for (; it != terms_.end() && jt != o.terms_.end(); ++it, ++jt) {
        if (gt(it->first, jt->first)) return true;
        if (gt(jt->first, it->first)) return false;
        if (it->second != jt->second) return it->second < jt->second;
    }
    return it == terms_.end() && jt != o.terms_.end();
}

Polynomial Polynomial::permuted(const Permutation& w) const {
    if (static_cast<int>(w.size()) != nvars_) throw std::invalid_argument("permutation size");
    Polynomial r(nvars_);
    Exponents e(nvars_);
    for (const auto& [a, c] : terms_) {
        std::fill(e.begin(), e.end(), 0);
        for (int i = 0; i < nvars_; ++i) e[w[i]] = a[i];
        r.terms_.emplace(e, c);
    }
    return r;
}

Polynomial Polynomial::divided_difference(int k) const {
    if (k < 0 || k + 1 >= nvars_) throw std::out_of_range("divided difference index");
    Polynomial num = permuted(transposition(nvars_, k)) - *this;
    Polynomial den = variable(nvars_, k + 1) - variable(nvars_, k);
    auto q = num.divided_exactly_by(den);
    if (!q) throw std::logic_error("divided difference: division not exact");
    return *q;
}

bool Polynomial::is_symmetric(const std::vector<int>& block) const {
    for (size_t a = 0; a + 1 < block.size(); ++a) {
        for (size_t b = a + 1; b < block.size(); ++b) {
            Permutation w = identity_permutation(nvars_);
            std::swap(w[block[a]], w[block[b]]);
            if (permuted(w) != *this) return false;
        }
    }
    return true;
}

Polynomial Polynomial::shifted(const std::vector<Rational>& shift) const {
    if (static_cast<int>(shift.size()) != nvars_) throw std::invalid_argument("shift size");
    std::vector<Polynomial> images;
    images.reserve(nvars_);
    for (int i = 0; i < nvars_; ++i) {
        Polynomial im = variable(nvars_, i);
        if (shift[i] != 0) im = im + constant(nvars_, shift[i]);
        images.push_back(std::move(im));
    }
    return substituted(images);
}

Polynomial Polynomial::substituted(const std::vector<Polynomial>& images) const {
    if (static_cast<int>(images.size()) != nvars_) throw std::invalid_argument("image count");
    int target_vars = images.empty() ? nvars_ : images.front().nvars();
    Polynomial r(target_vars);
    for (const auto& [e, c] : terms_) {
        Polynomial term = constant(target_vars, c);
        for (int i = 0; i < nvars_; ++i) {
            for (int p = 0; p < e[i]; ++p) term = term * images[i];
        }
        r = r + term;
    }
    return r;
}

Polynomial Polynomial::embedded(int new_nvars, const std::vector<int>& var_map) const {
    if (static_cast<int>(var_map.size()) != nvars_) throw std::invalid_argument("var map size");
    Polynomial r(new_nvars);
    Exponents e(new_nvars);
    for (const auto& [a, c] : terms_) {
        std::fill(e.begin(), e.end(), 0);
        for (int i = 0; i < nvars_; ++i) e[var_map[i]] = a[i];
        r.terms_.emplace(e, c);
    }
    return r;
}

int Polynomial::total_degree() const {
    if (terms_.empty()) return -1;
    const Exponents& lead = terms_.begin()->first;
    return std::accumulate(lead.begin(), lead.end(), 0);
}

std::optional<int> Polynomial::homogeneous_degree() const {
    if (terms_.empty()) return 0;
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int de = std::accumulate(e.begin(), e.end(), 0);
        if (d < 0) d = de;
        else if (d != de) return std::nullopt;
    }
    return d;
}

Rational Polynomial::content() const {
    Integer num_gcd = 0, den_lcm = 1;
    for (const auto& [e, c] : terms_) {
        num_gcd = gcd(num_gcd, numerator(c));
        den_lcm = lcm(den_lcm, denominator(c));
    }
    if (num_gcd == 0) return 0;
    return Rational(num_gcd, den_lcm);
}

Rational Polynomial::leading_coefficient() const {
    if (terms_.empty()) return 0;
    return terms_.begin()->second;
}

std::optional<Polynomial> Polynomial::divided_exactly_by(const Polynomial& g) const {
    check_same_ring(g);
    if (g.is_zero()) throw std::invalid_argument("division by zero polynomial");
    Polynomial rem = *this;
    Polynomial quot(nvars_);
    const Exponents& glead = g.terms_.begin()->first;
    const Rational& gc = g.terms_.begin()->second;
    while (!rem.is_zero()) {
        const Exponents& rlead = rem.terms_.begin()->first;
        Exponents q(nvars_);
        for (int i = 0; i < nvars_; ++i) {
            q[i] = rlead[i] - glead[i];
            if (q[i] < 0) return std::nullopt;
        }
        Rational qc = rem.terms_.begin()->second / gc;
        Polynomial qmono = monomial(nvars_, q, qc);
        quot = quot + qmono;
        rem = rem - qmono * g;
    }
    return quot;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational ac = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        bool has_vars = std::any_of(e.begin(), e.end(), [](int x) { return x != 0; });
        if (ac != 1 || !has_vars) {
            out << to_string(ac);
            if (has_vars) out << "*";
        }
        bool first_var = true;
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (!first_var) out << "*";
            first_var = false;
            out << "Y" << (i + 1);
            if (e[i] > 1) out << "^" << e[i];
        }
    }
    return out.str();
}

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;
    int nvars;

    explicit Parser(const std::string& text, int nv) : s(text), nvars(nv) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("polynomial parse error at position " +
                                    std::to_string(pos) + ": " + what);
    }

    Integer parse_integer() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected digits");
        return Integer(s.substr(start, pos - start));
    }

    int parse_int() {
        Integer v = parse_integer();
        return static_cast<int>(v);
    }

    // factor := rational | Y<k>[^e]
    Polynomial parse_factor() {
        skip_ws();
        if (pos >= s.size()) fail("expected factor");
        if (s[pos] == 'Y') {
            ++pos;
            int idx = parse_int();
            if (idx < 1 || idx > nvars) fail("variable index out of range");
            int e = 1;
            if (eat('^')) e = parse_int();
            return Polynomial::variable(nvars, idx - 1, e);
        }
        Integer num = parse_integer();
        if (eat('/')) {
            Integer den = parse_integer();
            if (den == 0) fail("zero denominator");
            return Polynomial::constant(nvars, Rational(num, den));
        }
        return Polynomial::constant(nvars, Rational(num));
    }

    Polynomial parse_term() {
        Polynomial p = parse_factor();
        while (eat('*')) p = p * parse_factor();
        return p;
    }

    Polynomial parse_sum() {
        skip_ws();
        bool neg = false;
        if (eat('-')) neg = true;
        else eat('+');
        Polynomial p = parse_term();
        if (neg) p = -p;
        while (true) {
            skip_ws();
            if (pos >= s.size()) break;
            if (eat('+')) p = p + parse_term();
            else if (eat('-')) p = p - parse_term();
            else fail("expected '+' or '-'");
        }
        return p;
    }
};

} // namespace

Polynomial Polynomial::parse(int nvars, const std::string& text) {
    std::string trimmed = text;
    if (trimmed == "0") return zero(nvars);
    Parser parser(text, nvars);
    return parser.parse_sum();
}

} // namespace klrw
