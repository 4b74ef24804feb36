#pragma once

#include "klrw/word.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace klrw {

// Weakly increasing integer tuple.
using CentralCharacter = std::vector<int>;

// Finite-support weight sum c_k eps_k of sl_infinity.
class WeightSlInf {
public:
    WeightSlInf() = default;

    int coefficient(int k) const;
    void add(int k, int c);

    static WeightSlInf eps(int k);
    static WeightSlInf alpha(int i); // eps_{i+1} - eps_i

    WeightSlInf operator+(const WeightSlInf& o) const;
    WeightSlInf operator-(const WeightSlInf& o) const;
    bool operator==(const WeightSlInf& o) const { return coeffs_ == o.coeffs_; }

    std::string str() const;

private:
    std::map<int, int> coeffs_; // no zero entries stored
};

// mu_chi = sum_i eps_{chi_i}
WeightSlInf mu_of_chi(const CentralCharacter& chi);

// chi with an entry i raised to i+1 (resp. i+1 lowered to i), kept weakly
// increasing; nullopt when no such entry exists.
std::optional<CentralCharacter> chi_plus(const CentralCharacter& chi, int i);
std::optional<CentralCharacter> chi_minus(const CentralCharacter& chi, int i);
std::optional<CentralCharacter> chi_plus_power(const CentralCharacter& chi, int i, int a);
std::optional<CentralCharacter> chi_minus_power(const CentralCharacter& chi, int i, int a);

// Triangular integer array lambda_{k,j}, 1 <= j <= k <= n; rows stored sorted
// ascending.
class GTWeight {
public:
    explicit GTWeight(std::vector<std::vector<int>> rows);
    GTWeight(std::initializer_list<std::vector<int>> rows)
        : GTWeight(std::vector<std::vector<int>>(rows)) {}

    int n() const { return static_cast<int>(rows_.size()); }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    const std::vector<int>& row(int k) const { return rows_[k - 1]; } // 1-based
    const std::vector<int>& top_row() const { return rows_.back(); }

    bool operator==(const GTWeight& o) const { return rows_ == o.rows_; }

    std::string str() const;

private:
    std::vector<std::vector<int>> rows_;
};

// Interlacing: lambda_{k+1,1} <= lambda_{k,1} < lambda_{k+1,2} <= ... <
// lambda_{k+1,k+1} for all k.
bool is_gt_pattern(const GTWeight& lambda);

// All integral patterns with the given top row; guarded against blowup.
std::vector<GTWeight> enumerate_gt_patterns(const CentralCharacter& chi,
                                            std::size_t limit = 5000000);

// Sort Omega = {(row i, index k)} by (value ascending, row descending);
// equal (value, row) pairs become one divided-power group; the letters are
// the row indices, letter n marking red.
Word word_of_gt_weight(const GTWeight& lambda);

bool same_word_class(const GTWeight& a, const GTWeight& b);

} // namespace klrw
