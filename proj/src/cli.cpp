#include "excomp/cli.hpp"

#include <chrono>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "excomp/binomial.hpp"
#include "excomp/expcomp.hpp"
#include "excomp/experiments.hpp"
#include "excomp/report.hpp"
#include "excomp/seqfile.hpp"
#include "excomp/theorems.hpp"

namespace excomp::cli {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

struct Options {
    std::string input;
    std::optional<std::size_t> n;
    bool profile = false;
    bool witness = false;
    bool json_out = false;
    bool csv_out = false;

    std::uint32_t p = 0;
    std::uint32_t k = 0;
    std::optional<std::size_t> len;
    bool analyze = false;

    std::string mode = "exhaustive";
    std::string q = "2";
    std::vector<std::size_t> schedule;
    std::uint64_t samples = 1024;
    std::uint64_t seed = 0;
    unsigned workers = 1;
    bool tn_scan = false;
    std::vector<std::uint32_t> low_b;
    std::string out_prefix;
};

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::size_t resolve_n(const Options& o, const Sequence& seq) {
    const std::size_t n = o.n.value_or(seq.size());
    if (n == 0 || n > seq.size())
        throw std::invalid_argument("--n " + std::to_string(n) + " outside 1.." + std::to_string(seq.size()) +
                                    " (length of the input body)");
    return n;
}

json record_base(const char* command, const Sequence& seq, std::size_t n) {
    return json{{"command", command},
                {"field", field_json(seq.field())},
                {"inputDigest", body_digest(seq)},
                {"inputDigestAlgorithm", "sha256"},
                {"N", n}};
}

std::string coeff_list(const std::vector<Elem>& c) {
    std::string s;
    for (std::size_t i = 0; i < c.size(); ++i) s += (i ? " " : "") + std::to_string(c[i].v);
    return s;
}

int cmd_lincomp(const Options& o, std::ostream& out) {
    const auto start = Clock::now();
    const Sequence seq = load_sequence_file(o.input);
    const std::size_t n = resolve_n(o, seq);

    std::vector<LinearFit> rows;
    if (o.profile) {
        LfsrSynthesizer synth(seq.field());
        for (std::size_t i = 0; i < n; ++i) {
            synth.push(seq[i]);
            rows.push_back(synth.fit());
        }
    } else {
        rows.push_back(berlekamp_massey(seq, n));
    }
    const LinearFit& fit = rows.back();

    if (o.json_out) {
        json rec = record_base("lincomp", seq, n);
        rec["L_N"] = fit.L;
        rec["t_N"] = fit.tn;
        rec["recurrence"] = fit_json(fit)["coeffs"];
        if (o.profile) {
            json prof = json::array();
            for (const auto& r : rows) prof.push_back(fit_json(r));
            rec["profile"] = prof;
        }
        rec["timing"] = {{"seconds", seconds_since(start)}};
        out << rec.dump(2) << "\n";
    } else if (o.csv_out) {
        out << "N,L_N,t_N\n";
        for (const auto& r : rows) out << r.n << "," << r.L << "," << r.tn << "\n";
    } else {
        if (o.profile)
            for (const auto& r : rows) out << "N=" << r.n << " L_N=" << r.L << " t_N=" << r.tn << "\n";
        out << "field " << seq.field().name() << "\n"
            << "N=" << fit.n << "\nL_N=" << fit.L << "\nt_N=" << fit.tn << "\n"
            << "recurrence c_0..c_{L-1}: " << coeff_list(fit.coeffs) << "\n";
    }
    return kOk;
}

int cmd_expcomp(const Options& o, std::ostream& out, std::ostream& err) {
    const auto start = Clock::now();
    const Sequence seq = load_sequence_file(o.input);
    const std::size_t n = resolve_n(o, seq);

    std::vector<std::uint32_t> profile;
    if (o.profile) profile = expansion_profile(seq, n);
    const ExpansionWitness w = expansion_complexity(seq, n);

    // every emitted witness is re-checked by substitution before it leaves
    if (w.h && (!substitute(*w.h, seq.generating_series(n), n).is_zero() || w.h->total_degree() != w.e)) {
        err << "internal error: witness failed re-validation\n";
        return kViolation;
    }

    if (o.json_out) {
        json rec = record_base("expcomp", seq, n);
        rec["E_N"] = w.e;
        rec["matrixRank"] = w.matrix_rank;
        rec["monomialCount"] = w.monomial_count;
        if (o.witness) rec["witness"] = w.h ? witness_json(*w.h) : json(nullptr);
        if (o.profile) rec["profile"] = profile;
        rec["timing"] = {{"seconds", seconds_since(start)}};
        out << rec.dump(2) << "\n";
    } else if (o.csv_out) {
        out << "N,E_N\n";
        if (o.profile)
            for (std::size_t i = 0; i < profile.size(); ++i) out << i + 1 << "," << profile[i] << "\n";
        else
            out << n << "," << w.e << "\n";
    } else {
        if (o.profile)
            for (std::size_t i = 0; i < profile.size(); ++i) out << "N=" << i + 1 << " E_N=" << profile[i] << "\n";
        out << "field " << seq.field().name() << "\nN=" << n << "\nE_N=" << w.e << "\n";
        if (o.witness) out << "h(x,y) = " << (w.h ? w.h->to_string() : std::string("none (zero prefix)")) << "\n";
    }
    return kOk;
}

int cmd_binomial(const Options& o, std::ostream& out) {
    const BinomialSpec spec = BinomialSpec::make(o.p, o.k);
    if (!o.analyze) {
        out << format_sequence(generate(spec, o.len.value_or(spec.p)));
        return kOk;
    }
    const BinomialReport rep = analyze(spec);
    if (o.json_out) {
        out << binomial_json(rep).dump(2) << "\n";
    } else {
        out << "binomial p=" << spec.p << " k=" << spec.k << "\n"
            << "L=" << rep.L << " E_p=" << rep.e_p << "\n";
        for (const auto& c : rep.claims) out << (c.pass ? "PASS " : "FAIL ") << c.id << ": " << c.detail << "\n";
    }
    return rep.all_pass() ? kOk : kViolation;
}

int cmd_verify(const Options& o, std::ostream& out) {
    const auto start = Clock::now();
    const Sequence seq = load_sequence_file(o.input);
    const std::size_t n = resolve_n(o, seq);
    const auto reports = verify_prefix(seq, n);
    const std::size_t failures = count_failures(reports);

    if (o.json_out) {
        json rec = record_base("verify", seq, n);
        rec["bounds"] = bounds_json(reports);
        rec["failures"] = failures;
        rec["timing"] = {{"seconds", seconds_since(start)}};
        out << rec.dump(2) << "\n";
    } else {
        for (const auto& r : reports) {
            out << to_string(r.outcome) << " " << r.claim;
            for (const auto& [k, v] : r.inputs) out << " " << k << "=" << v;
            if (r.outcome == Outcome::NotApplicable)
                out << " (" << r.note << ")";
            else {
                out << " observed=" << r.observed << " " << to_string(r.relation);
                for (auto v : r.expected) out << " " << v;
            }
            out << "\n";
        }
        out << "failures=" << failures << "\n";
    }
    return failures == 0 ? kOk : kViolation;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << content;
}

int cmd_experiment(const Options& o, std::ostream& out) {
    ExperimentConfig cfg;
    std::pair<std::uint32_t, std::uint32_t> order;
    try {
        order = parse_field_order(o.q);
    } catch (const ParseError& e) {
        throw std::invalid_argument(std::string("--q: ") + e.what());
    }
    cfg.field = Field::make(order.first, order.second);
    cfg.seed = o.seed;
    cfg.samples = o.samples;
    cfg.workers = o.workers;
    cfg.tn_scan = o.tn_scan;

    json summary{{"command", "experiment"}, {"field", field_json(cfg.field)}};
    int code = kOk;

    if (o.mode == "exhaustive") {
        cfg.mode = ExperimentMode::Exhaustive;
        if (!o.n) throw std::invalid_argument("--n is required for exhaustive mode");
        cfg.n = *o.n;
        cfg.validate();
        const ExhaustiveResult res = enumerate_all(cfg);
        summary["mode"] = "exhaustive";
        summary["config"] = {{"N", cfg.n}};
        summary["result"] = exhaustive_json(res);

        std::vector<std::uint32_t> bs = o.low_b;
        if (bs.empty())
            for (std::uint32_t b = 0; b <= kernel_degree_bound(cfg.n); ++b) bs.push_back(b);
        json low = json::array();
        for (auto b : bs) low.push_back(low_count_json(count_low_expansion(res.dist, cfg.field.order(), b)));
        summary["low_expansion_counts"] = low;

        if (cfg.tn_scan) summary["t_N_scan"] = ambiguity_json(tn_ambiguity_scan(cfg));
        if (!o.out_prefix.empty()) write_file(o.out_prefix + ".csv", distribution_csv(res.dist));
        if (res.violations > 0) code = kViolation;
    } else if (o.mode == "mc") {
        cfg.mode = ExperimentMode::MonteCarlo;
        if (!o.schedule.empty())
            cfg.schedule = o.schedule;
        else if (o.n)
            cfg.schedule = {*o.n};
        cfg.validate();
        const MonteCarloResult res = monte_carlo(cfg);
        summary["mode"] = "mc";
        summary["config"] = {{"schedule", cfg.schedule}, {"samples", cfg.samples}, {"seed", cfg.seed}};
        summary["result"] = monte_carlo_json(res);
        if (!o.out_prefix.empty())
            for (const auto& d : res.per_n)
                write_file(o.out_prefix + ".N" + std::to_string(d.n) + ".csv", distribution_csv(d));
        if (res.kernel_bound_violations > 0) code = kViolation;
    } else {
        throw std::invalid_argument("--mode must be exhaustive or mc");
    }

    const std::string text = summary.dump(2) + "\n";
    if (!o.out_prefix.empty()) write_file(o.out_prefix + ".json", text);
    out << text;
    return code;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Linear and expansion complexity of sequences over finite fields"};
    app.name(args.empty() ? "excomp" : args.front());
    app.require_subcommand(1);
    Options o;

    auto add_format = [&](CLI::App* sub) {
        auto* j = sub->add_flag("--json", o.json_out, "JSON result record");
        auto* c = sub->add_flag("--csv", o.csv_out, "CSV rows");
        j->excludes(c);
    };

    auto* lin = app.add_subcommand("lincomp", "N-th linear complexity, t_N and a shortest recurrence");
    lin->add_option("--input", o.input, "sequence file")->required();
    lin->add_option("--n", o.n, "prefix length (default: whole body)");
    lin->add_flag("--profile", o.profile, "one row per N' <= N");
    add_format(lin);

    auto* exp = app.add_subcommand("expcomp", "N-th expansion complexity");
    exp->add_option("--input", o.input, "sequence file")->required();
    exp->add_option("--n", o.n, "prefix length (default: whole body)");
    exp->add_flag("--profile", o.profile, "E_N' for every N' <= N");
    exp->add_flag("--witness", o.witness, "print the normalized minimal polynomial h(x,y)");
    add_format(exp);

    auto* bin = app.add_subcommand("binomial", "binomial coefficient sequence C(i+k,k) mod p");
    bin->add_option("--p", o.p, "prime")->required();
    bin->add_option("--k", o.k, "1 <= k <= p-1")->required();
    bin->add_option("--len", o.len, "number of terms (default p)");
    bin->add_flag("--analyze", o.analyze, "check the predicted complexities");
    bin->add_flag("--json", o.json_out, "JSON report (with --analyze)");

    auto* ver = app.add_subcommand("verify", "run every applicable bound check");
    ver->add_option("--input", o.input, "sequence file")->required();
    ver->add_option("--n", o.n, "prefix length (default: whole body)");
    ver->add_flag("--json", o.json_out, "JSON result record");

    auto* ex = app.add_subcommand("experiment", "exhaustive or Monte Carlo distribution of E_N");
    ex->add_option("--mode", o.mode, "exhaustive | mc")->required()->check(CLI::IsMember({"exhaustive", "mc"}));
    ex->add_option("--q", o.q, "field order, p or p^m");
    ex->add_option("--n", o.n, "prefix length (exhaustive) or single schedule entry (mc)");
    ex->add_option("--schedule", o.schedule, "Monte Carlo prefix lengths")->delimiter(',');
    ex->add_option("--samples", o.samples, "Monte Carlo sample count");
    ex->add_option("--seed", o.seed, "64-bit seed");
    ex->add_option("--workers", o.workers, "worker threads; output does not depend on it");
    ex->add_flag("--tn-scan", o.tn_scan, "enumerate every shortest recurrence (exhaustive, small N)");
    ex->add_option("--low-b", o.low_b, "b values for #{E_N <= b} vs q^(b^2)")->delimiter(',');
    ex->add_option("--out", o.out_prefix, "write PREFIX.json and PREFIX[.N<n>].csv");

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? kOk : kParseError;
    }

    try {
        if (lin->parsed()) return cmd_lincomp(o, out);
        if (exp->parsed()) return cmd_expcomp(o, out, err);
        if (bin->parsed()) return cmd_binomial(o, out);
        if (ver->parsed()) return cmd_verify(o, out);
        if (ex->parsed()) return cmd_experiment(o, out);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kParseError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kPrecondition;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return kPrecondition;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kPrecondition;
    } catch (const std::length_error& e) {
        err << "error: " << e.what() << "\n";
        return kPrecondition;
    } catch (const std::logic_error& e) {
        err << "internal invariant violated: " << e.what() << "\n";
        return kViolation;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kPrecondition;
    }
    return kParseError;
}

} // namespace excomp::cli
