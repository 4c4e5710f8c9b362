#include "halg/hilbert.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>

namespace halg {

namespace {

constexpr std::uint32_t kNoStd = 0xffffffffu;
constexpr std::uint64_t kDimLimit = std::uint64_t(1) << 26;

Flavor working_flavor(Flavor f) {
    return f == Flavor::commutative ? Flavor::commutative
                                    : Flavor::noncommutative;
}

SparseRow form_to_row(Flavor f, std::uint32_t n, const Form& form) {
    SparseRow row;
    row.reserve(form.terms.size());
    for (const auto& [m, c] : form.terms)
        row.emplace_back(static_cast<std::uint32_t>(monomial_index(f, n, m)), c);
    std::sort(row.begin(), row.end());
    return row;
}

mpz_class full_dim_z(Flavor f, std::uint32_t n, std::uint32_t d) {
    mpz_class r;
    if (f == Flavor::commutative)
        mpz_bin_uiui(r.get_mpz_t(), std::uint64_t(n) + d - (d ? 1 : 0), d);
    else
        mpz_ui_pow_ui(r.get_mpz_t(), n, d);
    return r;
}

/// Accumulator for assembling one sparse row out of many scaled
/// contributions; tracks touched indices so sparse rows stay cheap.
class RowScratch {
  public:
    RowScratch(std::size_t size, PrimeField field)
        : p_(field.modulus()), buf_(size, 0), mark_(size, 0) {}

    void accum(std::uint32_t idx, std::uint64_t delta) {
        if (!mark_[idx]) {
            mark_[idx] = 1;
            touched_.push_back(idx);
        }
        std::uint64_t s = buf_[idx] + delta;
        buf_[idx] = s >= p_ ? s - p_ : s;
    }
    void accum_mul(std::uint32_t idx, std::uint64_t a, std::uint64_t b) {
        accum(idx, (a * b) % p_);
    }

    SparseRow take() {
        std::sort(touched_.begin(), touched_.end());
        SparseRow out;
        out.reserve(touched_.size());
        for (std::uint32_t idx : touched_) {
            if (buf_[idx])
                out.emplace_back(idx, FieldElement{static_cast<std::uint32_t>(buf_[idx])});
            buf_[idx] = 0;
            mark_[idx] = 0;
        }
        touched_.clear();
        return out;
    }

  private:
    std::uint64_t p_;
    std::vector<std::uint64_t> buf_;
    std::vector<char> mark_;
    std::vector<std::uint32_t> touched_;
};

/// Degreewise quotient tower for the associative case.
///
/// A_d is presented as (V (x) A_{d-1}) / K_d in the running basis of
/// standard coordinates; K_d is spanned by the previous kernel basis
/// multiplied by the generators on the right, plus the degree-d
/// relations, reduced into rref. dim A_d falls out as n*a_{d-1} - rank.
class QuotientTower {
  public:
    QuotientTower(const Presentation& p, std::uint32_t trunc)
        : n_(p.n), field_(p.field), trunc_(trunc) {
        levels_.resize(trunc + 1);
        dims_.assign(trunc + 1, 0);
        qcache_.resize(trunc + 1);
        rm_.resize(trunc + 1);
        dims_[0] = 1;
        if (trunc >= 1) {
            dims_[1] = n_;
            auto& l1 = levels_[1];
            l1.std_index.assign(n_, 0);
            for (std::uint32_t i = 0; i < n_; ++i) {
                l1.std_index[i] = i;
                l1.std_coords.emplace_back(i, 0);
            }
        }
        std::map<std::uint32_t, std::vector<const Form*>> rels;
        for (const auto& f : p.relations)
            if (f.degree <= trunc) rels[f.degree].push_back(&f);

        for (std::uint32_t d = 2; d <= trunc; ++d) {
            std::uint64_t prev = dims_[d - 1];
            if (prev == 0) break;  // the algebra stays zero from here on
            std::uint64_t cols = prev * n_;
            if (cols > kDimLimit)
                throw std::length_error(
                    "degree bound too large for this presentation");
            RrefBuilder builder(cols, field_);
            RowScratch scratch(static_cast<std::size_t>(cols), field_);
            if (d >= 3) {
                const auto& kprev = levels_[d - 1];
                for (const auto& krow : kprev.krows) {
                    for (std::uint32_t j = 0; j < n_; ++j) {
                        for (const auto& [c, val] : krow) {
                            std::uint32_t head = c / dims_[d - 2];
                            std::uint32_t sigma = c % dims_[d - 2];
                            const SparseRow& rm = rm_row(d - 2, j, sigma);
                            std::uint64_t base = std::uint64_t(head) * prev;
                            for (const auto& [t, tv] : rm)
                                scratch.accum_mul(
                                    static_cast<std::uint32_t>(base + t),
                                    val.value, tv.value);
                        }
                        builder.add_row(scratch.take());
                    }
                }
            }
            if (auto it = rels.find(d); it != rels.end()) {
                for (const Form* f : it->second) {
                    for (const auto& [m, c] : f->terms) {
                        std::vector<std::uint32_t> tail(m.data.begin() + 1,
                                                        m.data.end());
                        const SparseRow qt = q_word(d - 1, tail);
                        std::uint64_t base = std::uint64_t(m.data[0]) * prev;
                        for (const auto& [t, tv] : qt)
                            scratch.accum_mul(static_cast<std::uint32_t>(base + t),
                                              c.value, tv.value);
                    }
                    builder.add_row(scratch.take());
                }
            }
            auto& level = levels_[d];
            MatrixOverField kmat = builder.to_matrix();
            level.pivots = builder.pivot_columns();
            level.krows = std::move(kmat.entries);
            dims_[d] = cols - level.pivots.size();
            level.std_index.assign(static_cast<std::size_t>(cols), kNoStd);
            level.std_coords.reserve(static_cast<std::size_t>(dims_[d]));
            std::size_t pi = 0;
            std::uint32_t run = 0;
            for (std::uint64_t c = 0; c < cols; ++c) {
                if (pi < level.pivots.size() && level.pivots[pi] == c) {
                    ++pi;
                    continue;
                }
                level.std_index[static_cast<std::size_t>(c)] = run++;
                level.std_coords.emplace_back(static_cast<std::uint32_t>(c / prev),
                                              static_cast<std::uint32_t>(c % prev));
            }
        }
    }

    const std::vector<std::uint64_t>& dims() const { return dims_; }

  private:
    struct Level {
        std::vector<std::pair<std::uint32_t, std::uint32_t>> std_coords;
        std::vector<std::uint32_t> pivots;
        std::vector<SparseRow> krows;
        std::vector<std::uint32_t> std_index;
    };

    // v over V (x) A_{e-1} -> A_e coordinates (kernel substitution).
    SparseRow subst(std::uint32_t e, const SparseRow& v) {
        const Level& level = levels_[e];
        RowScratch scratch(static_cast<std::size_t>(dims_[e]), field_);
        for (const auto& [c, val] : v) {
            std::uint32_t si = level.std_index[c];
            if (si != kNoStd) {
                scratch.accum(si, val.value);
                continue;
            }
            std::size_t ki =
                std::lower_bound(level.pivots.begin(), level.pivots.end(), c) -
                level.pivots.begin();
            const SparseRow& kr = level.krows[ki];
            std::uint64_t negval = field_.modulus() - val.value;
            for (std::size_t t = 0; t < kr.size(); ++t) {
                if (kr[t].first == c) continue;  // the pivot entry itself
                scratch.accum_mul(level.std_index[kr[t].first], negval,
                                  kr[t].second.value);
            }
        }
        return scratch.take();
    }

    // Standard basis element sigma of A_e times x_j, in A_{e+1} coords.
    const SparseRow& rm_row(std::uint32_t e, std::uint32_t j, std::uint32_t sigma) {
        auto& table = rm_[e];
        if (table.empty()) table.resize(n_);
        auto& col = table[j];
        if (col.empty()) col.resize(static_cast<std::size_t>(dims_[e]));
        auto& slot = col[sigma];
        if (slot) return *slot;
        SparseRow out;
        if (e == 0) {
            out.emplace_back(j, field_.one());
        } else {
            auto [head, tail] = levels_[e].std_coords[sigma];
            const SparseRow& prev = rm_row(e - 1, j, tail);
            SparseRow v;
            v.reserve(prev.size());
            std::uint64_t base = std::uint64_t(head) * dims_[e];
            for (const auto& [t, tv] : prev)
                v.emplace_back(static_cast<std::uint32_t>(base + t), tv);
            out = subst(e + 1, v);
        }
        auto& slot2 = rm_[e][j][sigma];  // rm_ may have grown during recursion
        slot2 = std::move(out);
        return *slot2;
    }

    // Arbitrary degree-e word in A_e coordinates.
    SparseRow q_word(std::uint32_t e, const std::vector<std::uint32_t>& w) {
        if (e == 0) return {{0, field_.one()}};
        if (e == 1) return {{w[0], field_.one()}};
        if (dims_[e] == 0) return {};
        auto it = qcache_[e].find(w);
        if (it != qcache_[e].end()) return it->second;
        std::vector<std::uint32_t> tail(w.begin() + 1, w.end());
        SparseRow sub = q_word(e - 1, tail);
        SparseRow v;
        v.reserve(sub.size());
        std::uint64_t base = std::uint64_t(w[0]) * dims_[e - 1];
        for (const auto& [t, tv] : sub)
            v.emplace_back(static_cast<std::uint32_t>(base + t), tv);
        SparseRow out = subst(e, v);
        qcache_[e].emplace(w, out);
        return out;
    }

    std::uint32_t n_;
    PrimeField field_;
    std::uint32_t trunc_;
    std::vector<Level> levels_;
    std::vector<std::uint64_t> dims_;
    std::vector<std::map<std::vector<std::uint32_t>, SparseRow>> qcache_;
    std::vector<std::vector<std::vector<std::optional<SparseRow>>>> rm_;
};

// Rows of generator multiples of the previous slice basis, in target
// degree d coordinates.
std::vector<SparseRow> degree_step_rows(Flavor f, std::uint32_t n,
                                        std::uint32_t d,
                                        const MatrixOverField& prev) {
    std::vector<SparseRow> out;
    if (f == Flavor::commutative) {
        auto monos = enumerate_monomials(f, n, d - 1);
        std::vector<std::vector<std::uint32_t>> mult(
            n, std::vector<std::uint32_t>(monos.size()));
        for (std::size_t c = 0; c < monos.size(); ++c) {
            for (std::uint32_t j = 0; j < n; ++j) {
                Monomial m = monos[c];
                ++m.data[j];
                mult[j][c] =
                    static_cast<std::uint32_t>(monomial_index(f, n, m));
            }
        }
        out.reserve(prev.entries.size() * n);
        for (const auto& row : prev.entries) {
            for (std::uint32_t j = 0; j < n; ++j) {
                SparseRow r;
                r.reserve(row.size());
                for (const auto& [c, v] : row) r.emplace_back(mult[j][c], v);
                out.push_back(std::move(r));
            }
        }
        return out;
    }
    std::uint64_t prev_cols = prev.cols;
    out.reserve(prev.entries.size() * 2 * n);
    for (const auto& row : prev.entries) {
        for (std::uint32_t j = 0; j < n; ++j) {
            SparseRow left;
            left.reserve(row.size());
            for (const auto& [c, v] : row)
                left.emplace_back(
                    static_cast<std::uint32_t>(std::uint64_t(j) * prev_cols + c), v);
            out.push_back(std::move(left));
            SparseRow right;
            right.reserve(row.size());
            for (const auto& [c, v] : row)
                right.emplace_back(
                    static_cast<std::uint32_t>(std::uint64_t(c) * n + j), v);
            out.push_back(std::move(right));
        }
    }
    return out;
}

HilbertResult hilbert_commutative(const Presentation& p, std::uint32_t trunc) {
    const Flavor f = Flavor::commutative;
    PowerSeries series(trunc);
    std::vector<mpz_class> slice(trunc + 1, 0);
    series[0] = 1;
    if (trunc >= 1) series[1] = p.n;
    std::map<std::uint32_t, std::vector<const Form*>> rels;
    for (const auto& form : p.relations)
        if (form.degree <= trunc) rels[form.degree].push_back(&form);

    bool full = false;
    MatrixOverField basis(monomial_count(f, p.n, 1), {}, p.field);
    for (std::uint32_t d = 2; d <= trunc; ++d) {
        mpz_class full_d = full_dim_z(f, p.n, d);
        if (full) {
            slice[d] = full_d;
            continue;
        }
        std::uint64_t cols = monomial_count(f, p.n, d);
        if (cols > kDimLimit)
            throw std::length_error("degree bound too large for this presentation");
        RrefBuilder builder(cols, p.field);
        for (auto& row : degree_step_rows(f, p.n, d, basis))
            builder.add_row(std::move(row));
        if (auto it = rels.find(d); it != rels.end())
            for (const Form* form : it->second)
                builder.add_row(form_to_row(f, p.n, *form));
        slice[d] = builder.rank();
        series[d] = mpq_class(full_d - slice[d]);
        if (builder.rank() == cols)
            full = true;
        else
            basis = builder.to_matrix();
    }
    return {std::move(series), std::move(slice), trunc};
}

HilbertResult hilbert_associative(const Presentation& p, std::uint32_t trunc) {
    QuotientTower tower(p, trunc);
    PowerSeries series(trunc);
    std::vector<mpz_class> slice(trunc + 1, 0);
    for (std::uint32_t d = 0; d <= trunc; ++d) {
        std::uint64_t a = tower.dims()[d];
        series[d] = mpq_class(static_cast<unsigned long>(a));
        slice[d] = full_dim_z(Flavor::noncommutative, p.n, d) -
                   mpz_class(static_cast<unsigned long>(a));
    }
    return {std::move(series), std::move(slice), trunc};
}

}  // namespace

std::vector<DegreeSliceBasis> ideal_slices(const Presentation& pin,
                                           std::uint32_t trunc) {
    Presentation p = pin.flavor == Flavor::lie ? expand_lie(pin) : pin;
    const Flavor f = working_flavor(p.flavor);
    std::map<std::uint32_t, std::vector<const Form*>> rels;
    for (const auto& form : p.relations)
        if (form.degree <= trunc) rels[form.degree].push_back(&form);

    std::vector<DegreeSliceBasis> out;
    out.push_back({0, MatrixOverField(monomial_count(f, p.n, 0), {}, p.field)});
    if (trunc >= 1)
        out.push_back({1, MatrixOverField(monomial_count(f, p.n, 1), {}, p.field)});
    for (std::uint32_t d = 2; d <= trunc; ++d) {
        std::uint64_t cols = monomial_count(f, p.n, d);
        if (cols > kDimLimit)
            throw std::length_error("degree bound too large for this presentation");
        const MatrixOverField& prev = out.back().basis;
        if (prev.rows == prev.cols) {
            // the ideal is everything from here on
            std::vector<SparseRow> rows(static_cast<std::size_t>(cols));
            for (std::uint64_t c = 0; c < cols; ++c)
                rows[static_cast<std::size_t>(c)] = {
                    {static_cast<std::uint32_t>(c), p.field.one()}};
            out.push_back({d, MatrixOverField(cols, std::move(rows), p.field)});
            continue;
        }
        RrefBuilder builder(cols, p.field);
        for (auto& row : degree_step_rows(f, p.n, d, prev))
            builder.add_row(std::move(row));
        if (auto it = rels.find(d); it != rels.end())
            for (const Form* form : it->second)
                builder.add_row(form_to_row(f, p.n, *form));
        out.push_back({d, builder.to_matrix()});
    }
    return out;
}

HilbertResult hilbert_series(const Presentation& p, std::uint32_t trunc) {
    if (p.flavor == Flavor::commutative) return hilbert_commutative(p, trunc);
    if (p.flavor == Flavor::lie)
        return hilbert_associative(expand_lie(p), trunc);
    return hilbert_associative(p, trunc);
}

PowerSeries lie_series(const Presentation& p, std::uint32_t trunc) {
    if (p.flavor != Flavor::lie)
        throw std::invalid_argument("lie_series requires a lie-flavor presentation");
    HilbertResult h = hilbert_series(p, trunc);
    PowerSeries L = log_op(h.series);
    for (std::size_t k = 0; k <= L.trunc(); ++k)
        if (L[k].get_den() != 1 || L[k] < 0)
            throw std::domain_error(
                "inconsistent truncation: log of the series is not a "
                "dimension series");
    return L;
}

TypeAnalysis algebra_type(const Presentation& pin, std::uint32_t trunc) {
    if (!pin.relations.empty() && trunc < pin.max_relation_degree())
        throw std::invalid_argument(
            "degree bound below the maximum relation degree");
    Presentation p = pin.flavor == Flavor::lie ? expand_lie(pin) : pin;
    const Flavor f = working_flavor(p.flavor);

    std::vector<std::size_t> order(p.relations.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return p.relations[a].degree < p.relations[b].degree;
    });

    std::vector<std::unique_ptr<RrefBuilder>> builders;  // per degree
    builders.push_back(
        std::make_unique<RrefBuilder>(monomial_count(f, p.n, 0), p.field));
    builders.push_back(
        std::make_unique<RrefBuilder>(monomial_count(f, p.n, 1), p.field));

    std::vector<std::uint32_t> accepted;
    std::vector<std::size_t> dropped;
    for (std::size_t idx : order) {
        const Form& form = p.relations[idx];
        while (builders.size() <= form.degree) {
            std::uint32_t d = static_cast<std::uint32_t>(builders.size());
            std::uint64_t cols = monomial_count(f, p.n, d);
            if (cols > kDimLimit)
                throw std::length_error(
                    "degree bound too large for this presentation");
            auto next = std::make_unique<RrefBuilder>(cols, p.field);
            MatrixOverField prev = builders[d - 1]->to_matrix();
            for (auto& row : degree_step_rows(f, p.n, d, prev))
                next->add_row(std::move(row));
            builders.push_back(std::move(next));
        }
        SparseRow row = form_to_row(f, p.n, form);
        if (builders[form.degree]->reduces_to_zero(row)) {
            dropped.push_back(idx);
        } else {
            builders[form.degree]->add_row(std::move(row));
            accepted.push_back(form.degree);
        }
    }
    std::sort(dropped.begin(), dropped.end());
    return {AlgebraType(p.n, std::move(accepted)), dropped.empty(),
            std::move(dropped)};
}

bool strongly_free_test(const Presentation& pin, std::uint32_t trunc) {
    if (pin.flavor == Flavor::commutative)
        throw std::invalid_argument(
            "strong freeness is defined for associative presentations");
    Presentation p = pin.flavor == Flavor::lie ? expand_lie(pin) : pin;
    HilbertResult h = hilbert_series(p, trunc);
    PowerSeries pt = anick_polynomial(type_of_presentation(p)).extended(trunc);
    return mul(h.series, pt) == PowerSeries::one(trunc);
}

Degree3Report degree3_span_test(const Presentation& pin) {
    Presentation p = pin.flavor == Flavor::lie ? expand_lie(pin) : pin;
    const Flavor f = working_flavor(p.flavor);
    for (const auto& form : p.relations)
        if (form.degree != 2)
            throw std::invalid_argument("degree3_span_test needs quadratic relations");

    std::uint64_t cols = monomial_count(f, p.n, 3);
    RrefBuilder builder(cols, p.field);
    std::uint64_t fed = 0;
    std::vector<SparseRow> rel_rows;
    for (const auto& form : p.relations)
        rel_rows.push_back(form_to_row(f, p.n, form));
    if (f == Flavor::commutative) {
        auto monos = enumerate_monomials(f, p.n, 2);
        for (const auto& row : rel_rows) {
            for (std::uint32_t j = 0; j < p.n; ++j) {
                SparseRow r;
                for (const auto& [c, v] : row) {
                    Monomial m = monos[c];
                    ++m.data[j];
                    r.emplace_back(
                        static_cast<std::uint32_t>(monomial_index(f, p.n, m)), v);
                }
                builder.add_row(std::move(r));
                ++fed;
            }
        }
    } else {
        std::uint64_t n2 = std::uint64_t(p.n) * p.n;
        for (const auto& row : rel_rows) {
            for (std::uint32_t j = 0; j < p.n; ++j) {
                SparseRow left, right;
                for (const auto& [c, v] : row) {
                    left.emplace_back(
                        static_cast<std::uint32_t>(std::uint64_t(j) * n2 + c), v);
                    right.emplace_back(
                        static_cast<std::uint32_t>(std::uint64_t(c) * p.n + j), v);
                }
                builder.add_row(std::move(left));
                builder.add_row(std::move(right));
                fed += 2;
            }
        }
    }
    std::uint64_t rank = builder.rank();
    return {rank == fed, rank == cols, rank};
}

}  // namespace halg
