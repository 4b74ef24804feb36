#include "klrw/quiver.hpp"

#include <algorithm>
#include <stdexcept>

namespace klrw {

QuiverRep::QuiverRep(Problem p, std::vector<Matrix> maps_)
    : problem(std::move(p)), maps(std::move(maps_)) {
    if (static_cast<int>(maps.size()) != problem.m - 1)
        throw std::invalid_argument("expected m-1 maps");
    auto dim = [&](int i) { return i == problem.m ? problem.n : problem.v[i - 1]; };
    for (int i = 1; i < problem.m; ++i) {
        if (maps[i - 1].rows() != dim(i + 1) || maps[i - 1].cols() != dim(i))
            throw std::invalid_argument("map shape mismatch at arrow " + std::to_string(i));
    }
}

QuiverRep canonical_rep(const Segmentation& s) {
    const Problem& p = s.problem();
    auto dim = [&](int i) { return i == p.m ? p.n : p.v[i - 1]; };
    std::vector<Matrix> maps;
    for (int i = 1; i < p.m; ++i) {
        Matrix f(dim(i + 1), dim(i));
        const auto& row = s.down()[i - 1];
        for (int j = 0; j < dim(i); ++j)
            if (row[j] != -1) f.at(row[j], j) = 1;
        maps.push_back(std::move(f));
    }
    return QuiverRep(p, std::move(maps));
}

QuiverRep act(const GroupElement& g, const QuiverRep& r) {
    const Problem& p = r.problem;
    if (static_cast<int>(g.g.size()) != p.m) throw std::invalid_argument("expected m matrices");
    std::vector<Matrix> inv(p.m);
    for (int i = 0; i < p.m; ++i) {
        auto gi = g.g[i].inverse();
        if (!gi) throw std::invalid_argument("group element not invertible");
        inv[i] = std::move(*gi);
    }
    std::vector<Matrix> maps;
    for (int i = 1; i < p.m; ++i) maps.push_back(g.g[i] * r.maps[i - 1] * inv[i - 1]);
    return QuiverRep(p, std::move(maps));
}

namespace {

struct FlagData {
    std::vector<int> values; // distinct chi values p_1 < ... < p_l
    std::vector<int> cum;    // cumulative block sizes
};

FlagData chi_flag(const std::vector<int>& chi) {
    FlagData f;
    for (int c : chi) {
        if (f.values.empty() || f.values.back() != c) {
            f.values.push_back(c);
            f.cum.push_back(f.cum.empty() ? 1 : f.cum.back() + 1);
        } else {
            ++f.cum.back();
        }
    }
    return f;
}

int kernel_dimension(const Matrix& a) { return a.cols() - a.rank(); }

// dim f^{-1}(span of first d standard coordinates)
int preimage_dimension(const Matrix& f, int d) {
    if (d >= f.rows()) return f.cols();
    Matrix below(f.rows() - d, f.cols());
    for (int r = d; r < f.rows(); ++r)
        for (int c = 0; c < f.cols(); ++c) below.at(r - d, c) = f.at(r, c);
    return kernel_dimension(below);
}

// Columns: standard basis vectors indexed by idx.
Matrix standard_columns(int dim, const std::vector<int>& idx) {
    Matrix e(dim, static_cast<int>(idx.size()));
    for (size_t k = 0; k < idx.size(); ++k) e.at(idx[k], static_cast<int>(k)) = 1;
    return e;
}

struct QuotientSpace {
    Matrix projection; // q x v
    Matrix section;    // v x q, projection * section = id
};

// Quotient of C^v by the column span of w.
QuotientSpace quotient_by(const Matrix& w) {
    Matrix img = w.image_basis();
    std::vector<int> extend = complete_to_basis(img);
    Matrix basis = img.augmented(standard_columns(w.rows(), extend));
    auto inv = basis.inverse();
    if (!inv) throw std::logic_error("basis completion failed");
    int q = static_cast<int>(extend.size());
    Matrix proj(q, w.rows());
    for (int r = 0; r < q; ++r)
        for (int c = 0; c < w.rows(); ++c) proj.at(r, c) = inv->at(img.cols() + r, c);
    return {std::move(proj), standard_columns(w.rows(), extend)};
}

void classify_impl(int m, const std::vector<int>& v, int n, std::vector<int> chi,
                   const std::vector<Matrix>& maps, int offset,
                   std::vector<Segment>& unflavored, std::vector<FlavoredSegment>& flavored,
                   RankInvariants* top_invariants) {
    if (m == 1) {
        for (int c : chi) flavored.push_back({Segment(offset + 1, offset + 1), c});
        return;
    }
    auto dim = [&](int i) { return i == m ? n : v[i - 1]; };

    // composites F_k = f_{k;1}, F_1 = id
    std::vector<Matrix> comp(m + 1);
    comp[1] = Matrix::identity(dim(1));
    for (int k = 1; k < m; ++k) comp[k + 1] = maps[k - 1] * comp[k];

    FlagData flag = chi_flag(chi);
    const Matrix& fm1 = comp[m];

    // full segments [offset+1, offset+m] per charge
    int prev = kernel_dimension(fm1);
    std::vector<int> consumed(flag.values.size(), 0);
    std::vector<int> preimage_dims;
    for (size_t t = 0; t < flag.values.size(); ++t) {
        int d = preimage_dimension(fm1, flag.cum[t]);
        preimage_dims.push_back(d);
        consumed[t] = d - prev;
        prev = d;
        for (int c = 0; c < consumed[t]; ++c)
            flavored.push_back({Segment(offset + 1, offset + m), flag.values[t]});
    }

    // segments [offset+1, offset+k] for k < m
    std::vector<int> segment_ranks;
    for (int k = 1; k < m; ++k) {
        Matrix ker = comp[k + 1].kernel_basis();
        int r = (comp[k] * ker).rank();
        segment_ranks.push_back(r);
        for (int c = 0; c < r; ++c) unflavored.push_back(Segment(offset + 1, offset + k));
    }

    if (top_invariants) {
        top_invariants->segment_ranks = segment_ranks;
        top_invariants->preimage_dims = preimage_dims;
    }

    // quotient by the subrepresentation generated by C^{v_1}
    std::vector<QuotientSpace> quot(m + 1);
    for (int j = 2; j <= m; ++j) quot[j] = quotient_by(comp[j]);

    std::vector<Matrix> qmaps;
    for (int i = 2; i < m; ++i)
        qmaps.push_back(quot[i + 1].projection * maps[i - 1] * quot[i].section);

    // reduced chi and the adapted basis making the image flag standard
    std::vector<int> new_chi;
    for (size_t t = 0; t < flag.values.size(); ++t) {
        int block = flag.cum[t] - (t == 0 ? 0 : flag.cum[t - 1]);
        for (int c = 0; c < block - consumed[t]; ++c) new_chi.push_back(flag.values[t]);
    }

    const Matrix& pm = quot[m].projection;
    int qn = pm.rows();
    Matrix adapted(qn, 0);
    for (size_t t = 0; t < flag.values.size(); ++t) {
        for (int c = 0; c < flag.cum[t] && adapted.cols() < qn; ++c) {
            Matrix cand = pm.column(c);
            if (!adapted.in_column_span(cand)) adapted = adapted.augmented(cand);
        }
    }
    if (adapted.cols() != qn) throw std::logic_error("quotient flag basis incomplete");
    auto adapted_inv = adapted.inverse();
    if (!adapted_inv) throw std::logic_error("adapted basis not invertible");
    if (!qmaps.empty()) qmaps.back() = *adapted_inv * qmaps.back();

    std::vector<int> new_v;
    for (int j = 2; j < m; ++j) new_v.push_back(quot[j].projection.rows());

    classify_impl(m - 1, new_v, qn, new_chi, qmaps, offset + 1, unflavored, flavored, nullptr);
}

} // namespace

FlavoredMultisegment classify(const QuiverRep& r) {
    std::vector<Segment> unflavored;
    std::vector<FlavoredSegment> flavored;
    classify_impl(r.problem.m, r.problem.v, r.problem.n, r.problem.chi, r.maps, 0, unflavored,
                  flavored, nullptr);
    return FlavoredMultisegment(std::move(unflavored), std::move(flavored));
}

RankInvariants rank_invariants(const QuiverRep& r) {
    std::vector<Segment> unflavored;
    std::vector<FlavoredSegment> flavored;
    RankInvariants inv;
    classify_impl(r.problem.m, r.problem.v, r.problem.n, r.problem.chi, r.maps, 0, unflavored,
                  flavored, &inv);
    return inv;
}

namespace {

std::vector<int> chi_block_of(const Problem& p) {
    std::vector<int> block(p.n);
    int b = 0;
    for (int i = 0; i < p.n; ++i) {
        if (i > 0 && p.chi[i] != p.chi[i - 1]) ++b;
        block[i] = b;
    }
    return block;
}

} // namespace

int group_dimension(const Problem& p) {
    int d = 0;
    for (int vi : p.v) d += vi * vi;
    auto block = chi_block_of(p);
    for (int a = 0; a < p.n; ++a)
        for (int b = 0; b < p.n; ++b)
            if (block[a] <= block[b]) ++d;
    return d;
}

int rep_space_dimension(const Problem& p) {
    auto dim = [&](int i) { return i == p.m ? p.n : p.v[i - 1]; };
    int d = 0;
    for (int i = 1; i < p.m; ++i) d += dim(i) * dim(i + 1);
    return d;
}

int stabilizer_dimension(const QuiverRep& r) {
    const Problem& p = r.problem;
    auto dim = [&](int i) { return i == p.m ? p.n : p.v[i - 1]; };
    auto block = chi_block_of(p);

    // parameters: X_j entries for j < m, then the upper-triangular-by-block
    // entries of X_m
    std::vector<std::tuple<int, int, int>> params; // (space j, row, col)
    for (int j = 1; j < p.m; ++j)
        for (int a = 0; a < dim(j); ++a)
            for (int b = 0; b < dim(j); ++b) params.emplace_back(j, a, b);
    for (int a = 0; a < p.n; ++a)
        for (int b = 0; b < p.n; ++b)
            if (block[a] <= block[b]) params.emplace_back(p.m, a, b);

    int eqs = 0;
    for (int i = 1; i < p.m; ++i) eqs += dim(i + 1) * dim(i);

    Matrix system(eqs, static_cast<int>(params.size()));
    for (size_t c = 0; c < params.size(); ++c) {
        auto [j, a, b] = params[c];
        int row_base = 0;
        for (int i = 1; i < p.m; ++i) {
            const Matrix& f = r.maps[i - 1];
            // equation block i: X_{i+1} f_i - f_i X_i, entry (r, s)
            if (j == i + 1) {
                // (X f)_{r s} = X_{r a'} f_{a' s}: contribution f_{b s} at row a
                for (int s = 0; s < dim(i); ++s)
                    system.at(row_base + a * dim(i) + s, static_cast<int>(c)) += f.at(b, s);
            }
            if (j == i) {
                // -(f X)_{r s} = -f_{r a'} X_{a' s}: contribution -f_{r a} at col b
                for (int rr = 0; rr < dim(i + 1); ++rr)
                    system.at(row_base + rr * dim(i) + b, static_cast<int>(c)) -= f.at(rr, a);
            }
            row_base += dim(i + 1) * dim(i);
        }
    }
    return static_cast<int>(params.size()) - system.rank();
}

int orbit_dimension(const QuiverRep& r) {
    return group_dimension(r.problem) - stabilizer_dimension(r);
}

GroupElement random_group_element(const Problem& p, std::mt19937& rng) {
    auto dim = [&](int i) { return i == p.m ? p.n : p.v[i - 1]; };
    std::uniform_int_distribution<int> entry(-3, 3);
    auto block = chi_block_of(p);

    GroupElement g;
    for (int i = 1; i <= p.m; ++i) {
        int d = dim(i);
        Matrix m_(d, d);
        while (true) {
            for (int a = 0; a < d; ++a) {
                for (int b = 0; b < d; ++b) {
                    bool allowed = i < p.m || block[a] <= block[b];
                    m_.at(a, b) = allowed ? entry(rng) : 0;
                }
            }
            if (m_.inverse()) break;
        }
        g.g.push_back(m_);
    }
    return g;
}

} // namespace klrw
