#include "klrw/gt.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace klrw {

int WeightSlInf::coefficient(int k) const {
    auto it = coeffs_.find(k);
    return it == coeffs_.end() ? 0 : it->second;
}

void WeightSlInf::add(int k, int c) {
    auto it = coeffs_.find(k);
    if (it == coeffs_.end()) {
        if (c != 0) coeffs_.emplace(k, c);
    } else {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
}

WeightSlInf WeightSlInf::eps(int k) {
    WeightSlInf w;
    w.add(k, 1);
    return w;
}

WeightSlInf WeightSlInf::alpha(int i) {
    WeightSlInf w;
    w.add(i + 1, 1);
    w.add(i, -1);
    return w;
}

WeightSlInf WeightSlInf::operator+(const WeightSlInf& o) const {
    WeightSlInf r = *this;
    for (const auto& [k, c] : o.coeffs_) r.add(k, c);
    return r;
}

WeightSlInf WeightSlInf::operator-(const WeightSlInf& o) const {
    WeightSlInf r = *this;
    for (const auto& [k, c] : o.coeffs_) r.add(k, -c);
    return r;
}

std::string WeightSlInf::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, c] : coeffs_) {
        if (!first) out << (c < 0 ? " - " : " + ");
        else if (c < 0) out << "-";
        first = false;
        int a = std::abs(c);
        if (a != 1) out << a << "*";
        out << "eps(" << k << ")";
    }
    return out.str();
}

WeightSlInf mu_of_chi(const CentralCharacter& chi) {
    WeightSlInf w;
    for (int c : chi) w.add(c, 1);
    return w;
}

std::optional<CentralCharacter> chi_plus(const CentralCharacter& chi, int i) {
    auto it = std::find(chi.rbegin(), chi.rend(), i);
    if (it == chi.rend()) return std::nullopt;
    CentralCharacter r = chi;
    r[chi.size() - 1 - (it - chi.rbegin())] = i + 1;
    std::sort(r.begin(), r.end());
    return r;
}

std::optional<CentralCharacter> chi_minus(const CentralCharacter& chi, int i) {
    auto it = std::find(chi.begin(), chi.end(), i + 1);
    if (it == chi.end()) return std::nullopt;
    CentralCharacter r = chi;
    r[it - chi.begin()] = i;
    std::sort(r.begin(), r.end());
    return r;
}

std::optional<CentralCharacter> chi_plus_power(const CentralCharacter& chi, int i, int a) {
    CentralCharacter cur = chi;
    for (int k = 0; k < a; ++k) {
        auto next = chi_plus(cur, i);
        if (!next) return std::nullopt;
        cur = std::move(*next);
    }
    return cur;
}

std::optional<CentralCharacter> chi_minus_power(const CentralCharacter& chi, int i, int a) {
    CentralCharacter cur = chi;
    for (int k = 0; k < a; ++k) {
        auto next = chi_minus(cur, i);
        if (!next) return std::nullopt;
        cur = std::move(*next);
    }
    return cur;
}

GTWeight::GTWeight(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    for (size_t k = 0; k < rows_.size(); ++k) {
        if (rows_[k].size() != k + 1)
            throw std::invalid_argument("row " + std::to_string(k + 1) + " must have " +
                                        std::to_string(k + 1) + " entries");
        std::sort(rows_[k].begin(), rows_[k].end());
    }
}

std::string GTWeight::str() const {
    std::ostringstream out;
    out << "[";
    for (size_t k = 0; k < rows_.size(); ++k) {
        if (k) out << ",";
        out << "[";
        for (size_t j = 0; j < rows_[k].size(); ++j) {
            if (j) out << ",";
            out << rows_[k][j];
        }
        out << "]";
    }
    out << "]";
    return out.str();
}

bool is_gt_pattern(const GTWeight& lambda) {
    for (int k = 1; k < lambda.n(); ++k) {
        const auto& upper = lambda.row(k + 1); // k+1 entries
        const auto& lower = lambda.row(k);     // k entries
        for (int j = 0; j < k; ++j) {
            if (!(upper[j] <= lower[j] && lower[j] < upper[j + 1])) return false;
        }
    }
    return true;
}

std::vector<GTWeight> enumerate_gt_patterns(const CentralCharacter& chi, std::size_t limit) {
    int n = static_cast<int>(chi.size());
    std::vector<int> top = chi;
    std::sort(top.begin(), top.end());

    std::vector<std::vector<std::vector<int>>> partial = {{top}}; // rows from the top down
    for (int k = n - 1; k >= 1; --k) {
        std::vector<std::vector<std::vector<int>>> next;
        for (const auto& rows : partial) {
            const auto& upper = rows.back();
            std::vector<std::vector<int>> row_choices = {{}};
            for (int j = 0; j < k; ++j) {
                std::vector<std::vector<int>> extended;
                for (const auto& c : row_choices) {
                    for (int val = upper[j]; val < upper[j + 1]; ++val) {
                        auto c2 = c;
                        c2.push_back(val);
                        extended.push_back(std::move(c2));
                    }
                }
                row_choices = std::move(extended);
                if (row_choices.empty()) break;
            }
            for (auto& rc : row_choices) {
                auto rows2 = rows;
                rows2.push_back(std::move(rc));
                next.push_back(std::move(rows2));
                if (next.size() > limit) throw std::runtime_error("GT enumeration limit exceeded");
            }
        }
        partial = std::move(next);
    }

    std::vector<GTWeight> out;
    for (auto& rows : partial) {
        std::reverse(rows.begin(), rows.end());
        out.emplace_back(std::move(rows));
    }
    return out;
}

Word word_of_gt_weight(const GTWeight& lambda) {
    // (value, -row) ascending; equal keys merge into divided powers
    std::vector<std::pair<int, int>> keys; // (value, -row) with multiplicity via repeats
    for (int i = 1; i <= lambda.n(); ++i)
        for (int v : lambda.row(i)) keys.emplace_back(v, -i);
    std::sort(keys.begin(), keys.end());

    std::vector<Word::Entry> entries;
    for (size_t i = 0; i < keys.size();) {
        size_t j = i;
        while (j < keys.size() && keys[j] == keys[i]) ++j;
        entries.push_back({-keys[i].second, static_cast<int>(j - i)});
        i = j;
    }
    return Word(std::move(entries));
}

bool same_word_class(const GTWeight& a, const GTWeight& b) {
    if (a.n() != b.n()) return false;
    if (a.top_row() != b.top_row()) throw std::invalid_argument("top rows differ");
    return word_of_gt_weight(a) == word_of_gt_weight(b);
}

} // namespace klrw
