#include <algorithm>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "denum/corpus.hpp"
#include "denum/partition.hpp"
#include "denum/waves.hpp"

namespace {

using denum::Components;

std::string components_label(const Components& c) {
    std::ostringstream os;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) os << ',';
        os << c[i];
    }
    return os.str();
}

int cmd_count(const Components& c, long L, const std::string& format) {
    denum::DenumerantTable t = denum::denumerant_bruteforce(L, c);
    if (format == "json") {
        std::cout << t.to_json() << '\n';
    } else if (format == "csv") {
        std::cout << t.to_csv();
    } else {
        for (std::size_t l = 0; l < t.values.size(); ++l)
            std::cout << l << ',' << t.values[l].get_str() << '\n';
    }
    return 0;
}

int cmd_quasipoly(const Components& c) {
    std::cout << denum::quasipolynomial_to_json(denum::quasipolynomial(c)) << '\n';
    return 0;
}

int cmd_wave(const Components& c, long q, const std::string& format) {
    denum::Wave w = denum::wave(q, c);
    if (format == "json") {
        std::cout << denum::wave_to_json(w) << '\n';
        return 0;
    }
    for (long r = 0; r < w.q; ++r) {
        std::cout << r;
        const auto& coeffs = w.residue_polys[static_cast<std::size_t>(r)].coeffs();
        if (coeffs.empty()) std::cout << ",0";
        for (const auto& v : coeffs) std::cout << ',' << v.to_string();
        std::cout << '\n';
    }
    return 0;
}

int cmd_dedekind(long l, const Components& betas, long q, const std::string& format) {
    denum::Rational v = denum::fourier_dedekind(denum::DedekindSumSpec{l, betas, q});
    if (format == "json") {
        std::cout << "{\"l\":" << l << ",\"betas\":[";
        for (std::size_t i = 0; i < betas.size(); ++i) std::cout << (i ? "," : "") << betas[i];
        std::cout << "],\"q\":" << q << ",\"value\":\"" << v.to_string() << "\"}\n";
    } else {
        std::cout << v.to_string() << '\n';
    }
    return 0;
}

struct CaseResult {
    bool ok = true;
    long l = -1;
    std::string brute, series, waves;
};

// All three paths over l = 0..L; reports the smallest mismatching l.
CaseResult verify_case(const Components& c, long L, int workers) {
    denum::DenumerantTable brute = denum::denumerant_bruteforce(L, c);
    denum::DenumerantTable series = denum::denumerant_series(L, c);
    denum::QuasiPolynomial qp = denum::quasipolynomial(c);
    int nw = std::max(1, workers);
    std::vector<CaseResult> found(static_cast<std::size_t>(nw));
    auto run = [&](int w) {
        for (long l = w; l <= L; l += nw) {
            const denum::Int& b = brute.values[static_cast<std::size_t>(l)];
            const denum::Int& s = series.values[static_cast<std::size_t>(l)];
            denum::Rational wv = evaluate(qp, l);
            if (s == b && wv == denum::Rational(b)) continue;
            found[static_cast<std::size_t>(w)] =
                CaseResult{false, l, b.get_str(), s.get_str(), wv.to_string()};
            return;
        }
    };
    if (nw == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < nw; ++w) pool.emplace_back(run, w);
        for (auto& t : pool) t.join();
    }
    CaseResult best;
    for (const CaseResult& r : found)
        if (!r.ok && (best.ok || r.l < best.l)) best = r;
    return best;
}

std::string case_line(const Components& c, long L, const CaseResult& r) {
    std::ostringstream os;
    os << "d=" << components_label(c) << " L=" << L << ": ";
    if (r.ok)
        os << "OK";
    else
        os << "MISMATCH l=" << r.l << " brute=" << r.brute << " series=" << r.series
           << " waves=" << r.waves;
    return os.str();
}

int cmd_verify_single(const Components& c, long L, int workers) {
    CaseResult r = verify_case(c, L, workers);
    if (r.ok) {
        std::cout << "OK\n";
        return 0;
    }
    std::cout << "MISMATCH l=" << r.l << " brute=" << r.brute << " series=" << r.series
              << " waves=" << r.waves << '\n';
    return 1;
}

int cmd_verify_corpus(unsigned long seed, long L, int workers) {
    std::vector<Components> corpus = denum::seeded_corpus(seed, 30, 4, 10, true);
    std::vector<std::string> lines(corpus.size());
    std::vector<char> ok(corpus.size(), 1);
    int nw = std::max(1, workers);
    auto run = [&](int w) {
        for (std::size_t i = static_cast<std::size_t>(w); i < corpus.size(); i += nw) {
            CaseResult r = verify_case(corpus[i], L, 1);
            lines[i] = case_line(corpus[i], L, r);
            ok[i] = r.ok ? 1 : 0;
        }
    };
    if (nw == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < nw; ++w) pool.emplace_back(run, w);
        for (auto& t : pool) t.join();
    }
    bool all = true;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        std::cout << lines[i] << '\n';
        all = all && ok[i];
    }
    std::cout << (all ? "OK" : "FAIL") << '\n';
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact restricted-partition counts and Sylvester wave decompositions"};
    app.require_subcommand(1);

    Components comps, betas;
    long L = 100, q = 1, lval = 0;
    std::string format = "text";
    int workers = 1;
    unsigned long seed = 1;

    auto add_components = [&](CLI::App* sub, bool required) {
        auto* opt = sub->add_option("-d,--components", comps, "comma separated positive parts")
                        ->delimiter(',');
        if (required) opt->required();
        return opt;
    };
    auto add_format = [&](CLI::App* sub, std::vector<std::string> allowed) {
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember(allowed))
            ->capture_default_str();
    };

    CLI::App* count = app.add_subcommand("count", "denumerant table for l = 0..L");
    add_components(count, true);
    count->add_option("-L,--max-l", L, "largest l")->required()->check(CLI::NonNegativeNumber);
    add_format(count, {"text", "json", "csv"});

    CLI::App* quasipoly = app.add_subcommand("quasipoly", "full wave decomposition as JSON");
    add_components(quasipoly, true);
    add_format(quasipoly, {"text", "json"});

    CLI::App* wavecmd = app.add_subcommand("wave", "single wave's residue polynomials");
    add_components(wavecmd, true);
    wavecmd->add_option("-q,--period", q, "wave period")->required()->check(CLI::PositiveNumber);
    add_format(wavecmd, {"text", "json"});

    CLI::App* dedekind = app.add_subcommand("dedekind", "Fourier-Dedekind sum s_l(betas; q)");
    dedekind->add_option("-l,--value", lval, "index l (may be negative)")->required();
    dedekind->add_option("-b,--betas", betas, "comma separated betas, each coprime to q")
        ->required()
        ->delimiter(',');
    dedekind->add_option("-q,--period", q, "modulus q >= 2")->required();
    add_format(dedekind, {"text", "json"});

    CLI::App* verify = app.add_subcommand("verify", "cross-check all three computation paths");
    add_components(verify, false);
    verify->add_option("-L,--max-l", L, "largest l")->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    verify->add_option("--workers", workers, "worker threads")->check(CLI::PositiveNumber)
        ->capture_default_str();
    auto* seed_opt = verify->add_option("--seed", seed, "run the seeded random corpus instead");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (count->parsed()) return cmd_count(comps, L, format);
        if (quasipoly->parsed()) return cmd_quasipoly(comps);
        if (wavecmd->parsed()) return cmd_wave(comps, q, format);
        if (dedekind->parsed()) return cmd_dedekind(lval, betas, q, format);
        bool corpus_mode = seed_opt->count() > 0;
        if (corpus_mode && !comps.empty()) {
            std::cerr << "error: verify takes either -d or --seed, not both\n";
            return 2;
        }
        if (!corpus_mode && comps.empty()) {
            std::cerr << "error: verify needs -d or --seed\n";
            return 2;
        }
        return corpus_mode ? cmd_verify_corpus(seed, L, workers)
                           : cmd_verify_single(comps, L, workers);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
