#include "excomp/expcomp.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace excomp {

std::uint32_t kernel_degree_bound(std::size_t n) noexcept {
    std::uint32_t d = 0;
    while (monomial_count(d) <= n) ++d;
    return d;
}

std::vector<Monomial> monomials_up_to(std::uint32_t d) {
    std::vector<Monomial> out;
    out.reserve(monomial_count(d));
    for (std::uint32_t total = 0; total <= d; ++total)
        for (std::uint32_t j = 0; j <= total; ++j) out.push_back(Monomial{total - j, j});
    return out;
}

namespace {

// Incremental column echelon form. Every stored vector has a 1 at its
// pivot row and zeros at the pivots of the vectors stored before it, so a
// single pass in insertion order reduces a new column completely.
class ColumnEliminator {
public:
    ColumnEliminator(const Field& field, std::size_t rows, std::size_t max_cols)
        : field_(field), rows_(rows), max_cols_(max_cols) {}

    std::size_t rank() const noexcept { return basis_.size(); }

    // Returns the dependency (coefficients over columns 0..col_index) when
    // the column lies in the span of the earlier ones; stores it otherwise.
    std::optional<std::vector<Elem>> insert(std::vector<Elem> column, std::size_t col_index) {
        const Field& f = field_;
        std::vector<Elem> comb(max_cols_, Field::zero());
        comb[col_index] = Field::one();
        for (const Row& b : basis_) {
            const Elem c = column[b.pivot];
            if (c.is_zero()) continue;
            for (std::size_t r = b.pivot; r < rows_; ++r)
                if (!b.vec[r].is_zero()) column[r] = f.sub(column[r], f.mul(c, b.vec[r]));
            for (std::size_t k = 0; k < col_index; ++k)
                if (!b.comb[k].is_zero()) comb[k] = f.sub(comb[k], f.mul(c, b.comb[k]));
        }
        auto pivot = std::find_if(column.begin(), column.end(), [](Elem e) { return !e.is_zero(); });
        if (pivot == column.end()) return comb;

        const std::size_t row = static_cast<std::size_t>(pivot - column.begin());
        const Elem scale = f.inv(column[row]);
        for (std::size_t r = row; r < rows_; ++r) column[r] = f.mul(column[r], scale);
        for (std::size_t k = 0; k <= col_index; ++k) comb[k] = f.mul(comb[k], scale);
        basis_.push_back(Row{row, std::move(column), std::move(comb)});
        return std::nullopt;
    }

private:
    struct Row {
        std::size_t pivot;
        std::vector<Elem> vec;
        std::vector<Elem> comb;
    };

    const Field& field_;
    std::size_t rows_;
    std::size_t max_cols_;
    std::vector<Row> basis_;
};

// G^0..G^dmax mod x^N, each of length N.
std::vector<std::vector<Elem>> power_table(const Field& f, std::span<const Elem> g, std::uint32_t dmax) {
    const std::size_t n = g.size();
    std::vector<std::vector<Elem>> pw(dmax + 1, std::vector<Elem>(n, Field::zero()));
    pw[0][0] = Field::one();
    for (std::uint32_t j = 1; j <= dmax; ++j) {
        const auto& prev = pw[j - 1];
        auto& cur = pw[j];
        for (std::size_t a = 0; a < n; ++a) {
            if (prev[a].is_zero()) continue;
            for (std::size_t b = 0; a + b < n; ++b)
                if (!g[b].is_zero()) cur[a + b] = f.add(cur[a + b], f.mul(prev[a], g[b]));
        }
    }
    return pw;
}

BivariatePoly witness_from(const Field& f, const std::vector<Monomial>& monos, std::vector<Elem> comb) {
    auto first = std::find_if(comb.begin(), comb.end(), [](Elem e) { return !e.is_zero(); });
    const Elem scale = f.inv(*first);
    BivariatePoly h(f);
    for (std::size_t k = 0; k < comb.size(); ++k)
        if (!comb[k].is_zero()) h.set(monos[k], f.mul(comb[k], scale));
    return h;
}

} // namespace

ExpansionWitness expansion_complexity(const Field& field, std::span<const Elem> prefix) {
    const std::size_t n = prefix.size();
    if (n == 0) throw std::invalid_argument("expansion_complexity: N must be at least 1");
    ExpansionWitness out;
    out.n = n;
    if (std::all_of(prefix.begin(), prefix.end(), [](Elem s) { return s.is_zero(); })) return out;

    const std::uint32_t dmax = kernel_degree_bound(n);
    const auto powers = power_table(field, prefix, dmax);
    const auto monos = monomials_up_to(dmax);
    ColumnEliminator elim(field, n, monos.size());

    std::optional<std::vector<Elem>> dependency;
    for (std::size_t k = 0; k < monos.size(); ++k) {
        const Monomial mono = monos[k];
        if (dependency && mono.total_degree() > out.e) break;
        // coefficient vector of x^i G^j mod x^N
        std::vector<Elem> column(n, Field::zero());
        const auto& pw = powers[mono.y];
        for (std::size_t r = mono.x; r < n; ++r) column[r] = pw[r - mono.x];
        auto dep = elim.insert(std::move(column), k);
        if (dep && !dependency) {
            dependency = std::move(dep);
            out.e = mono.total_degree();
        }
    }
    if (!dependency) throw std::logic_error("expansion_complexity: no kernel found below the counting bound");

    out.monomial_count = monomial_count(out.e);
    out.matrix_rank = elim.rank();
    dependency->resize(out.monomial_count);
    out.h = witness_from(field, monos, std::move(*dependency));
    return out;
}

ExpansionWitness expansion_complexity(const Sequence& seq, std::size_t n) {
    if (n == 0 || n > seq.size())
        throw std::invalid_argument("expansion_complexity: N=" + std::to_string(n) + " outside 1.." +
                                    std::to_string(seq.size()));
    return expansion_complexity(seq.field(), std::span<const Elem>(seq.terms().data(), n));
}

std::vector<std::uint32_t> expansion_profile(const Sequence& seq, std::size_t nmax) {
    if (nmax > seq.size())
        throw std::invalid_argument("expansion_profile: N=" + std::to_string(nmax) + " exceeds prefix length " +
                                    std::to_string(seq.size()));
    std::vector<std::uint32_t> values;
    values.reserve(nmax);
    for (std::size_t n = 1; n <= nmax; ++n) {
        values.push_back(expansion_complexity(seq, n).e);
        if (n > 1) {
            const auto prev = values[n - 2], cur = values[n - 1];
            // an all-zero prefix has E_N = 0 by convention, yet y is its least annihilator
            if (cur < prev || cur > std::max<std::uint32_t>(prev, 1) + 1)
                throw std::logic_error("expansion_profile: growth law violated at N=" + std::to_string(n));
        }
    }
    return values;
}

std::optional<ExpansionWitness> brute_force_expansion(const Sequence& seq, std::size_t n, std::uint32_t d_max) {
    if (n == 0 || n > seq.size()) throw std::invalid_argument("brute_force_expansion: N outside the prefix");
    const Field& f = seq.field();
    const auto monos = monomials_up_to(d_max);
    std::uint64_t count = 1;
    for (std::size_t k = 0; k < monos.size(); ++k) {
        count *= f.order();
        if (count > kBruteForceCap)
            throw std::length_error("brute_force_expansion: q^" + std::to_string(monos.size()) +
                                    " candidates exceed the cap 2^20");
    }

    ExpansionWitness out;
    out.n = n;
    if (seq.zero_prefix(n)) return out;

    const TruncatedSeries g = seq.generating_series(n);
    std::optional<BivariatePoly> best;
    for (std::uint64_t code = 1; code < count; ++code) {
        BivariatePoly h(f);
        std::uint64_t rest = code;
        for (const Monomial& mono : monos) {
            h.set(mono, Elem{static_cast<std::uint32_t>(rest % f.order())});
            rest /= f.order();
        }
        const std::uint32_t deg = *h.total_degree();
        if (best && deg >= *best->total_degree()) continue;
        if (substitute(h, g, n).is_zero()) best = std::move(h);
    }
    if (!best) return std::nullopt;
    out.e = *best->total_degree();
    out.monomial_count = monomial_count(out.e);
    out.h = std::move(best);
    return out;
}

BivariatePoly truncation_witness(const Sequence& seq, std::size_t n) {
    if (n > seq.size()) throw std::invalid_argument("truncation_witness: N exceeds the prefix");
    const Field& f = seq.field();
    BivariatePoly h(f);
    h.set(Monomial{0, 1}, Field::one());
    for (std::size_t i = 0; i < n; ++i) h.add_term(Monomial{static_cast<std::uint32_t>(i), 0}, f.neg(seq[i]));
    return h;
}

std::uint32_t frobenius_exponent(std::uint32_t p, std::size_t n) {
    if (n < 2) throw std::invalid_argument("frobenius_exponent: N must be at least 2");
    std::uint32_t k = 0;
    std::uint64_t pk = 1;
    while (pk * p <= n - 1) {
        pk *= p;
        ++k;
    }
    return k;
}

std::size_t frobenius_bound(std::uint32_t p, std::size_t n) {
    std::size_t pk = 1;
    for (std::uint32_t i = frobenius_exponent(p, n); i > 0; --i) pk *= p;
    return (n - 1) / pk * pk;
}

BivariatePoly frobenius_witness(const Sequence& seq, std::size_t n) {
    const Field& f = seq.field();
    const std::uint32_t k = frobenius_exponent(f.characteristic(), n);
    std::uint32_t pk = 1;
    for (std::uint32_t i = 0; i < k; ++i) pk *= f.characteristic();
    const std::size_t top = (n - 1) / pk;
    if (top >= seq.size()) throw std::invalid_argument("frobenius_witness: N exceeds the prefix");

    BivariatePoly h(f);
    h.set(Monomial{0, pk}, Field::one());
    for (std::size_t i = 0; i <= top; ++i)
        h.add_term(Monomial{static_cast<std::uint32_t>(i * pk), 0}, f.neg(f.frobenius(seq[i], k)));
    return h;
}

} // namespace excomp
