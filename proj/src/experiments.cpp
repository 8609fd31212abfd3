#include "excomp/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <span>
#include <stdexcept>
#include <thread>

#include <boost/math/distributions/chi_squared.hpp>

#include "excomp/expcomp.hpp"
#include "excomp/lincomp.hpp"
#include "excomp/theorems.hpp"

namespace excomp {

namespace {

std::uint64_t checked_power(std::uint64_t q, std::size_t n, std::uint64_t cap) {
    std::uint64_t v = 1;
    for (std::size_t i = 0; i < n; ++i) {
        v *= q;
        if (v > cap) return cap + 1;
    }
    return v;
}

// Runs task(i) for i in [0, count) on `workers` threads. Tasks write to
// their own slots, so the caller merges in index order afterwards.
void run_tasks(std::size_t count, unsigned workers, const std::function<void(std::size_t)>& task) {
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    if (workers == 1) {
        for (std::size_t i = 0; i < count; ++i) task(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) task(i);
        });
    for (auto& t : pool) t.join();
}

// Depth of the top-level split: enough subtrees to keep every worker busy.
std::size_t split_depth(std::uint32_t q, std::size_t n, unsigned workers) {
    std::size_t depth = 0;
    std::uint64_t tasks = 1;
    while (depth < n && tasks < 8ull * std::max(1u, workers)) {
        tasks *= q;
        ++depth;
    }
    return depth;
}

std::uint32_t tn_bucket(const LinearFit& fit) { return static_cast<std::uint32_t>(fit.tn); }

// Depth-first walk over every extension of a fixed top prefix. Profiles of
// the current path are kept on the stack so each node is solved once.
class PrefixWalker {
public:
    using LeafFn = std::function<void(std::span<const Elem>, const std::vector<std::size_t>&,
                                      const std::vector<std::uint32_t>&, const LinearFit&)>;

    PrefixWalker(const Field& field, std::size_t n, LeafFn leaf)
        : field_(field), n_(n), leaf_(std::move(leaf)), terms_(n), profile_l_(n), profile_e_(n) {}

    void run(std::span<const Elem> top) {
        LfsrSynthesizer synth(field_);
        for (std::size_t d = 0; d < top.size(); ++d) {
            terms_[d] = top[d];
            synth.push(top[d]);
            record(d + 1, synth);
        }
        descend(top.size(), synth);
    }

private:
    void record(std::size_t depth, const LfsrSynthesizer& synth) {
        profile_l_[depth - 1] = synth.complexity();
        profile_e_[depth - 1] = expansion_complexity(field_, std::span<const Elem>(terms_.data(), depth)).e;
    }

    void descend(std::size_t depth, const LfsrSynthesizer& synth) {
        if (depth == n_) {
            leaf_(terms_, profile_l_, profile_e_, synth.fit());
            return;
        }
        for (std::uint32_t v = 0; v < field_.order(); ++v) {
            terms_[depth] = Elem{v};
            LfsrSynthesizer next = synth;
            next.push(Elem{v});
            record(depth + 1, next);
            descend(depth + 1, next);
        }
    }

    const Field& field_;
    std::size_t n_;
    LeafFn leaf_;
    std::vector<Elem> terms_;
    std::vector<std::size_t> profile_l_;
    std::vector<std::uint32_t> profile_e_;
};

std::vector<Elem> decode_prefix(std::uint64_t code, std::uint32_t q, std::size_t len) {
    // lexicographic: the first term is the most significant digit
    std::vector<Elem> out(len);
    for (std::size_t i = len; i-- > 0;) {
        out[i] = Elem{static_cast<std::uint32_t>(code % q)};
        code /= q;
    }
    return out;
}

std::vector<std::uint32_t> indices(std::span<const Elem> terms) {
    std::vector<std::uint32_t> out;
    out.reserve(terms.size());
    for (Elem e : terms) out.push_back(e.v);
    return out;
}

constexpr std::size_t kMaxRecordedExamples = 8;

} // namespace

void ExperimentConfig::validate() const {
    if (mode == ExperimentMode::Exhaustive) {
        if (n == 0) throw std::invalid_argument("experiment: N must be at least 1");
        if (checked_power(field.order(), n, kExhaustiveCap) > kExhaustiveCap)
            throw std::length_error("experiment: q^N = " + std::to_string(field.order()) + "^" + std::to_string(n) +
                                    " exceeds the exhaustive cap 2^20");
    } else {
        if (samples == 0) throw std::invalid_argument("experiment: Monte Carlo needs at least one sample");
        if (schedule.empty()) throw std::invalid_argument("experiment: empty N schedule");
        for (auto n_i : schedule)
            if (n_i == 0) throw std::invalid_argument("experiment: schedule entries must be positive");
    }
}

// ---------------------------------------------------------------- records

void DistributionRecord::merge(const DistributionRecord& other) {
    if (total == 0 && n == 0) n = other.n;
    total += other.total;
    for (const auto& [k, v] : other.e_counts) e_counts[k] += v;
    for (const auto& [k, v] : other.l_counts) l_counts[k] += v;
    for (const auto& [k, v] : other.tn_counts) tn_counts[k] += v;
}

double DistributionRecord::mean_ratio() const {
    if (total == 0) return 0.0;
    long double sum = 0;
    for (const auto& [e, c] : e_counts) sum += static_cast<long double>(e) * c;
    return static_cast<double>(sum / total / std::sqrt(static_cast<long double>(n)));
}

double DistributionRecord::median_ratio() const {
    if (total == 0) return 0.0;
    const std::uint64_t target = (total - 1) / 2;
    std::uint64_t seen = 0;
    for (const auto& [e, c] : e_counts) {
        seen += c;
        if (seen > target) return e / std::sqrt(static_cast<double>(n));
    }
    return 0.0;
}

double DistributionRecord::min_ratio() const {
    if (e_counts.empty()) return 0.0;
    return e_counts.begin()->first / std::sqrt(static_cast<double>(n));
}

std::vector<LowFraction> DistributionRecord::low_fractions() const {
    std::vector<LowFraction> out;
    for (const Epsilon& eps : kEpsilons) {
        LowFraction lf{eps, 0, 0.0};
        for (const auto& [e, c] : e_counts) {
            // E < sqrt((1-eps) N)  <=>  den E^2 < (den - num) N
            const std::uint64_t lhs = static_cast<std::uint64_t>(eps.den) * e * e;
            const std::uint64_t rhs = static_cast<std::uint64_t>(eps.den - eps.num) * n;
            if (lhs < rhs) lf.count += c;
        }
        lf.fraction = total == 0 ? 0.0 : static_cast<double>(lf.count) / static_cast<double>(total);
        out.push_back(lf);
    }
    return out;
}

// ---------------------------------------------------------------- exhaustive

ExhaustiveResult enumerate_all(const ExperimentConfig& cfg) {
    ExperimentConfig c = cfg;
    c.mode = ExperimentMode::Exhaustive;
    c.validate();
    const std::uint32_t q = c.field.order();
    const std::uint32_t p = c.field.characteristic();
    const std::size_t depth = split_depth(q, c.n, c.workers);
    const std::size_t tasks = static_cast<std::size_t>(checked_power(q, depth, kExhaustiveCap));

    std::vector<ExhaustiveResult> parts(tasks);
    run_tasks(tasks, c.workers, [&](std::size_t task) {
        ExhaustiveResult& res = parts[task];
        res.dist.n = c.n;
        PrefixWalker walker(c.field, c.n,
                            [&](std::span<const Elem> terms, const std::vector<std::size_t>& pl,
                                const std::vector<std::uint32_t>& pe, const LinearFit& fit) {
                                const std::uint32_t e = pe.back();
                                res.dist.total += 1;
                                res.dist.e_counts[e] += 1;
                                res.dist.l_counts[static_cast<std::uint32_t>(fit.L)] += 1;
                                res.dist.tn_counts[tn_bucket(fit)] += 1;

                                std::vector<BoundReport> reports = check_growth(pl, pe);
                                std::optional<std::size_t> val;
                                for (std::size_t i = 0; i < terms.size() && !val; ++i)
                                    if (!terms[i].is_zero()) val = i;
                                if (c.n >= 2) {
                                    if (val)
                                        for (auto& r : check_theorem4(fit.L, fit.tn, c.n, e)) reports.push_back(std::move(r));
                                    for (auto& r : check_misc_upper(pe, p, val)) reports.push_back(std::move(r));
                                }
                                bool bad = false;
                                for (const auto& r : reports) {
                                    if (r.outcome == Outcome::NotApplicable) continue;
                                    ++res.checks;
                                    if (r.outcome == Outcome::Fail) {
                                        ++res.violations;
                                        ++res.violations_by_claim[r.claim];
                                        bad = true;
                                    }
                                }
                                if (bad && res.violating_prefixes.size() < kMaxRecordedExamples)
                                    res.violating_prefixes.push_back(indices(terms));
                            });
        walker.run(decode_prefix(task, q, depth));
    });

    ExhaustiveResult out;
    out.dist.n = c.n;
    for (const auto& part : parts) {
        out.dist.merge(part.dist);
        out.checks += part.checks;
        out.violations += part.violations;
        for (const auto& [k, v] : part.violations_by_claim) out.violations_by_claim[k] += v;
        for (const auto& pfx : part.violating_prefixes)
            if (out.violating_prefixes.size() < kMaxRecordedExamples) out.violating_prefixes.push_back(pfx);
    }
    return out;
}

DistributionRecord enumerate_distribution(const ExperimentConfig& cfg) {
    ExperimentConfig c = cfg;
    c.mode = ExperimentMode::Exhaustive;
    c.validate();
    const std::uint32_t q = c.field.order();
    const std::size_t depth = split_depth(q, c.n, c.workers);
    const std::size_t tasks = static_cast<std::size_t>(checked_power(q, depth, kExhaustiveCap));

    std::vector<DistributionRecord> parts(tasks);
    run_tasks(tasks, c.workers, [&](std::size_t task) {
        DistributionRecord& rec = parts[task];
        rec.n = c.n;
        PrefixWalker walker(c.field, c.n,
                            [&](std::span<const Elem>, const std::vector<std::size_t>&,
                                const std::vector<std::uint32_t>& pe, const LinearFit& fit) {
                                rec.total += 1;
                                rec.e_counts[pe.back()] += 1;
                                rec.l_counts[static_cast<std::uint32_t>(fit.L)] += 1;
                                rec.tn_counts[tn_bucket(fit)] += 1;
                            });
        walker.run(decode_prefix(task, q, depth));
    });

    DistributionRecord out;
    out.n = c.n;
    for (const auto& part : parts) out.merge(part);
    return out;
}

LowExpansionCount count_low_expansion(const DistributionRecord& dist, std::uint32_t q, std::uint32_t b) {
    LowExpansionCount out;
    out.n = dist.n;
    out.b = b;
    for (const auto& [e, c] : dist.e_counts)
        if (e <= b) out.count += c;
    const std::uint64_t exponent = static_cast<std::uint64_t>(b) * b;
    out.bound_log2 = static_cast<double>(exponent) * std::log2(static_cast<double>(q));
    if (out.bound_log2 < 63.0) {
        std::uint64_t v = 1;
        for (std::uint64_t i = 0; i < exponent; ++i) v *= q;
        out.bound = v;
        out.ratio = static_cast<double>(out.count) / static_cast<double>(v);
        out.within_bound = out.count <= v;
    } else {
        out.ratio = static_cast<double>(out.count) / std::exp2(out.bound_log2);
        out.within_bound = true;
    }
    return out;
}

LowExpansionCount count_low_expansion(const ExperimentConfig& cfg, std::uint32_t b) {
    return count_low_expansion(enumerate_distribution(cfg), cfg.field.order(), b);
}

// ---------------------------------------------------------------- Monte Carlo

std::vector<Elem> sample_sequence(const Field& field, std::uint64_t seed, std::uint64_t index, std::size_t len) {
    std::seed_seq sseq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                       static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    std::mt19937_64 gen(sseq);
    const std::uint64_t q = field.order();
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() / q * q;
    std::vector<Elem> out(len);
    for (auto& term : out) {
        std::uint64_t draw;
        do draw = gen();
        while (draw >= limit);
        term = Elem{static_cast<std::uint32_t>(draw % q)};
    }
    return out;
}

MonteCarloResult monte_carlo(const ExperimentConfig& cfg) {
    ExperimentConfig c = cfg;
    c.mode = ExperimentMode::MonteCarlo;
    c.validate();
    const std::size_t max_n = *std::max_element(c.schedule.begin(), c.schedule.end());

    constexpr std::uint64_t kChunk = 64;
    const std::size_t tasks = static_cast<std::size_t>((c.samples + kChunk - 1) / kChunk);
    struct Part {
        std::vector<DistributionRecord> per_n;
        std::uint64_t kernel_violations = 0;
    };
    std::vector<Part> parts(tasks);
    run_tasks(tasks, c.workers, [&](std::size_t task) {
        Part& part = parts[task];
        part.per_n.resize(c.schedule.size());
        for (std::size_t s = 0; s < c.schedule.size(); ++s) part.per_n[s].n = c.schedule[s];
        const std::uint64_t begin = task * kChunk, end = std::min(c.samples, begin + kChunk);
        for (std::uint64_t j = begin; j < end; ++j) {
            const auto terms = sample_sequence(c.field, c.seed, j, max_n);
            for (std::size_t s = 0; s < c.schedule.size(); ++s) {
                const std::size_t n = c.schedule[s];
                const std::span<const Elem> pfx(terms.data(), n);
                const std::uint32_t e = expansion_complexity(c.field, pfx).e;
                const LinearFit fit = berlekamp_massey(c.field, pfx);
                DistributionRecord& rec = part.per_n[s];
                rec.total += 1;
                rec.e_counts[e] += 1;
                rec.l_counts[static_cast<std::uint32_t>(fit.L)] += 1;
                rec.tn_counts[tn_bucket(fit)] += 1;
                if (e > kernel_degree_bound(n)) ++part.kernel_violations;
            }
        }
    });

    MonteCarloResult out;
    out.per_n.resize(c.schedule.size());
    for (std::size_t s = 0; s < c.schedule.size(); ++s) out.per_n[s].n = c.schedule[s];
    for (const auto& part : parts) {
        for (std::size_t s = 0; s < c.schedule.size(); ++s) out.per_n[s].merge(part.per_n[s]);
        out.kernel_bound_violations += part.kernel_violations;
    }
    return out;
}

// ---------------------------------------------------------------- t_N ambiguity

AmbiguityScan tn_ambiguity_scan(const ExperimentConfig& cfg) {
    const std::uint32_t q = cfg.field.order();
    if (cfg.n == 0) throw std::invalid_argument("tn scan: N must be at least 1");
    if (checked_power(q, 2 * cfg.n, kExhaustiveCap) > kExhaustiveCap)
        throw std::length_error("tn scan: q^(2N) exceeds the enumeration cap 2^20");

    AmbiguityScan out;
    out.n = cfg.n;
    const std::uint64_t count = checked_power(q, cfg.n, kExhaustiveCap);
    for (std::uint64_t code = 0; code < count; ++code) {
        const auto terms = decode_prefix(code, q, cfg.n);
        ++out.prefixes;
        const bool zero = std::all_of(terms.begin(), terms.end(), [](Elem s) { return s.is_zero(); });
        if (zero || cfg.n < 2) {
            ++out.not_applicable;
            continue;
        }
        const LinearFit fit = berlekamp_massey(cfg.field, terms);
        const std::uint32_t e = expansion_complexity(cfg.field, terms).e;

        std::vector<std::size_t> attainable;
        std::size_t hold = 0, total = 0;
        for (const auto& c : all_recurrences(cfg.field, terms, fit.L)) {
            std::size_t tn = fit.L;
            for (std::size_t l = 0; l < c.size(); ++l)
                if (!c[l].is_zero()) {
                    tn = l;
                    break;
                }
            if (std::find(attainable.begin(), attainable.end(), tn) != attainable.end()) continue;
            attainable.push_back(tn);
            ++total;
            if (count_failures(check_theorem4(fit.L, tn, cfg.n, e)) == 0) ++hold;
        }

        const bool unique = attainable.size() == 1;
        (unique ? out.unique_tn : out.ambiguous_tn) += 1;
        if (cfg.n >= 2 * fit.L) (unique ? out.unique_when_n_ge_2l : out.ambiguous_when_n_ge_2l) += 1;
        if (hold == total)
            ++out.holds_for_all;
        else if (hold > 0)
            ++out.holds_for_some;
        else
            ++out.holds_for_none;
        if (count_failures(check_theorem4(fit.L, fit.tn, cfg.n, e)) == 0) ++out.holds_for_canonical;
        if (hold != total && out.exceptions.size() < kMaxRecordedExamples) out.exceptions.push_back(indices(terms));
    }
    return out;
}

// ---------------------------------------------------------------- chi-square

ChiSquareResult chi_square_test(const std::map<std::uint32_t, std::uint64_t>& observed,
                                const std::map<std::uint32_t, std::uint64_t>& reference) {
    std::uint64_t obs_total = 0, ref_total = 0;
    for (const auto& [k, v] : observed) obs_total += v;
    for (const auto& [k, v] : reference) ref_total += v;
    if (obs_total == 0 || ref_total == 0) throw std::invalid_argument("chi-square: empty sample");

    std::map<std::uint32_t, std::pair<double, double>> cells; // value -> (observed, expected)
    for (const auto& [k, v] : reference)
        cells[k].second = static_cast<double>(v) * static_cast<double>(obs_total) / static_cast<double>(ref_total);
    for (const auto& [k, v] : observed) cells[k].first = static_cast<double>(v);

    std::vector<std::pair<double, double>> bins;
    std::pair<double, double> acc{0.0, 0.0};
    for (const auto& [k, cell] : cells) {
        acc.first += cell.first;
        acc.second += cell.second;
        if (acc.second >= 5.0) {
            bins.push_back(acc);
            acc = {0.0, 0.0};
        }
    }
    if (acc.first > 0.0 || acc.second > 0.0) {
        if (bins.empty())
            bins.push_back(acc);
        else {
            bins.back().first += acc.first;
            bins.back().second += acc.second;
        }
    }

    ChiSquareResult out;
    out.bins = bins.size();
    if (bins.size() < 2) return out;
    for (const auto& [o, e] : bins) out.statistic += (o - e) * (o - e) / e;
    out.dof = bins.size() - 1;
    const boost::math::chi_squared dist(static_cast<double>(out.dof));
    out.p_value = boost::math::cdf(boost::math::complement(dist, out.statistic));
    return out;
}

} // namespace excomp
