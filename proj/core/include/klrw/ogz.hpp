#pragma once

#include "klrw/ladder.hpp"
#include "klrw/shift_operator.hpp"

#include <string>
#include <vector>

namespace klrw {

// Shift-operator realization on the triangular alphabet x_{k,l}, k = 1..n+1,
// l = 1..k.
ShiftAlphabet ogz_alphabet(int n);

// X^+_i = -sum_{j<=i} [prod_k (x_{i,j}-x_{i+1,k}) / prod_{k!=j} (x_{i,j}-x_{i,k})] phi_{i,j}
// X^-_i = +sum_{j<=i} [prod_k (x_{i,j}-x_{i-1,k}) / prod_{k!=j} (x_{i,j}-x_{i,k})] phi_{i,j}^{-1}
ShiftOperator ogz_raising(int n, int i);
ShiftOperator ogz_lowering(int n, int i);

// Restricted summand with the regular denominator factors removed:
//   -sum_{j in I_{i+1}} [prod_{k=1}^{n+1} (x_{n,j}-x_{n+1,k})
//                        / prod_{p in I_{i+1}, p != j} (x_{n,j}-x_{n,p})]
//                       (x_{n,j}-i-1)^s  p({x_{n,k}-i : k in I_i})  phi_{n,j}
// where I_q = {j : row_values[j] = q} and p is symmetric in |I_i| variables.
ShiftOperator x_ips(int n, int i, const Polynomial& p, int s,
                    const std::vector<int>& row_values);

struct IntertwinerOptions {
    bool drop_c_factor = false; // perturbation control: omit one factor of C
};

struct IntertwinerReport {
    bool pass = true;
    std::vector<std::string> mismatches;
};

// Checks, term by term over j in I_{i+1}, that the lambda'-translated x_ips
// coefficient of phi_{n,j} equals
//   prod_{k=1}^{n+1} (Y_{n,j} + lambda'_{n,j} - x_{n+1,k})
// times the j-indexed coefficient of the ladder action of the corresponding
// one-rung diagram, with x_{n+1,*} formal.  row_n holds the bottom row of the
// source pattern sorted ascending; the raised entry is its last slot of
// value i.
IntertwinerReport check_intertwiner(int n, int i, const Polynomial& p, int s,
                                    const std::vector<int>& row_n,
                                    const IntertwinerOptions& opts = {});

} // namespace klrw
