#pragma once

#include "klrw/rational_function.hpp"

#include <map>
#include <vector>

namespace klrw {

// Variable family x_{k,l} arranged in rows, row k holding row_sizes[k-1]
// variables.  Used for the triangular alphabets of Gelfand-Tsetlin type,
// where row k has k entries.
class ShiftAlphabet {
public:
    explicit ShiftAlphabet(std::vector<int> row_sizes);
    static ShiftAlphabet triangular(int rows); // row k has k variables

    int rows() const { return static_cast<int>(row_sizes_.size()); }
    int row_size(int k) const { return row_sizes_[k - 1]; } // 1-based row
    int nvars() const { return nvars_; }
    int index(int k, int l) const; // 1-based (row, column) -> flat index
    std::pair<int, int> coords(int idx) const;
    bool operator==(const ShiftAlphabet& o) const { return row_sizes_ == o.row_sizes_; }

    std::string var_name(int idx) const;

private:
    std::vector<int> row_sizes_;
    std::vector<int> offsets_;
    int nvars_;
};

// Finite sum  sum_a c_a(x) . phi^a  with integer shift vectors a, coefficients
// kept fully to the left.  Composition uses the commutation rule
// phi_{i,j} x_{k,l} = (x_{k,l} + delta_{ik} delta_{jl}) phi_{i,j}, so moving a
// shift past a coefficient substitutes x -> x + a.
class ShiftOperator {
public:
    using ShiftVector = std::vector<int>;
    using TermMap = std::map<ShiftVector, RationalFunction>;

    explicit ShiftOperator(ShiftAlphabet alphabet);

    static ShiftOperator zero(const ShiftAlphabet& a) { return ShiftOperator(a); }
    static ShiftOperator identity(const ShiftAlphabet& a);
    static ShiftOperator multiplication(const ShiftAlphabet& a, const RationalFunction& c);
    // phi_{k,l}^power
    static ShiftOperator shift(const ShiftAlphabet& a, int k, int l, int power = 1);

    const ShiftAlphabet& alphabet() const { return alphabet_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    ShiftOperator operator+(const ShiftOperator& o) const;
    ShiftOperator operator-(const ShiftOperator& o) const;
    ShiftOperator operator-() const;

    ShiftOperator compose(const ShiftOperator& o) const;

    bool operator==(const ShiftOperator& o) const;
    bool operator!=(const ShiftOperator& o) const { return !(*this == o); }

    RationalFunction coefficient(const ShiftVector& a) const;
    void add_term(const ShiftVector& a, const RationalFunction& c);

    std::string str() const;

private:
    ShiftAlphabet alphabet_;
    TermMap terms_;
};

} // namespace klrw
