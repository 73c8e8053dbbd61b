// Command-line surface: parse quiver/weight inputs, dispatch verification
// suites and computations, emit machine-readable JSON reports.
// Exit codes: 0 = pass, 1 = check failure, 2 = input error.

#include <chrono>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qha/cyclotomic.hpp"
#include "qha/klr.hpp"
#include "qha/orbits.hpp"
#include "qha/qanalog.hpp"
#include "qha/sl2_model.hpp"
#include "qha/suites.hpp"

namespace {

using nlohmann::json;

// path to a quiver JSON file, or a named shape (A1..A9, D4.., E6, E7, E8)
qha::CartanDatum load_quiver(const std::string& spec) {
    if (!spec.empty() && (spec[0] == 'A' || spec[0] == 'D' || spec[0] == 'E') &&
        spec.find('.') == std::string::npos && spec.find('/') == std::string::npos) {
        qha::CartanDatum datum = qha::CartanDatum::named(spec);
        datum.classify();
        return datum;
    }
    std::ifstream in(spec);
    if (!in)
        throw std::invalid_argument("cannot open quiver file '" + spec + "'");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("malformed quiver JSON: " + std::string(e.what()));
    }
    qha::CartanDatum datum = qha::CartanDatum::from_json(j);
    datum.classify();  // reject non-ADE graphs
    return datum;
}

json parse_inline_json(const std::string& text, const std::string& what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("malformed " + what + " JSON: " + std::string(e.what()));
    }
}

qha::Sequence parse_sequence(const qha::CartanDatum& datum, const std::string& text) {
    qha::Sequence out;
    std::string cur;
    std::istringstream is(text);
    while (std::getline(is, cur, ','))
        out.push_back(datum.index(cur));
    return out;
}

int emit_error(const std::string& message) {
    json j;
    j["error"] = message;
    std::cout << j.dump(2) << std::endl;
    return 2;
}

struct CommonFlags {
    bool no_timing = false;
};

int emit_suite(const qha::SuiteReport& rep, bool no_timing, double ms) {
    std::cout << rep.to_json(!no_timing, ms).dump(2) << std::endl;
    return rep.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic workbench for nil Hecke and KLR algebra verification"};
    app.require_subcommand(1);

    std::string suite_name;
    int opt_n = 0;
    unsigned seed = 0;
    int jobs = 1;
    CommonFlags flags;

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite_name, "subset|weyl|nilhecke|klr|cyclotomic|orbits")
        ->required();
    verify->add_option("--n", opt_n, "size bound override where applicable");
    verify->add_option("--seed", seed, "seed for randomized checks (default 0)");
    verify->add_option("--jobs", jobs, "worker fan-out (output independent of this)")
        ->check(CLI::PositiveNumber);
    verify->add_flag("--no-timing", flags.no_timing, "omit the timing field");

    long g_n = 0, g_k = 0;
    bool g_json = false;
    std::string g_eval;
    CLI::App* gaussian = app.add_subcommand("gaussian", "Gaussian binomial (point-count form)");
    gaussian->add_option("--n", g_n)->required();
    gaussian->add_option("--k", g_k)->required();
    gaussian->add_option("--eval", g_eval, "also evaluate at this rational q");
    gaussian->add_flag("--json", g_json, "emit a JSON report instead of the bare polynomial");

    std::string quiver_spec, seq_i, seq_j;
    long cutoff = 10;
    CLI::App* graded = app.add_subcommand("graded-dim", "graded dimension of Hom(e(i), e(j))");
    graded->add_option("--quiver", quiver_spec, "quiver JSON file or named shape (A2, D4, ...)")
        ->required();
    graded->add_option("--i", seq_i, "source sequence, comma-separated vertex labels")->required();
    graded->add_option("--j", seq_j, "target sequence, comma-separated vertex labels")->required();
    graded->add_option("--cutoff", cutoff, "series cutoff (<= 20)");
    graded->add_flag("--no-timing", flags.no_timing);

    std::string hw_text, nu_text, cutoffs_text = "8,12,16";
    CLI::App* cyclo = app.add_subcommand("cyclotomic", "cyclotomic quotient dimensions");
    cyclo->add_option("--quiver", quiver_spec)->required();
    cyclo->add_option("--highest-weight", hw_text, "dominant weight as JSON map vertex->int")
        ->required();
    cyclo->add_option("--nu", nu_text, "root vector as JSON map vertex->int")->required();
    cyclo->add_option("--cutoffs", cutoffs_text, "increasing degree cutoffs (default 8,12,16)");
    cyclo->add_flag("--no-timing", flags.no_timing);

    int q_field = 2;
    bool burnside = false;
    CLI::App* count = app.add_subcommand("count-reps", "orbit count of quiver representations");
    count->add_option("--quiver", quiver_spec)->required();
    count->add_option("--nu", nu_text)->required();
    count->add_option("--q", q_field, "field size in {2,3,4,5}");
    count->add_flag("--burnside", burnside, "also run the Burnside cross-check");
    count->add_flag("--no-timing", flags.no_timing);

    int w_n = 3;
    CLI::App* weyl = app.add_subcommand("weyl", "Weyl element invertibility and conjugation report");
    weyl->add_option("--n", w_n, "subset-model size")->required();
    weyl->add_flag("--no-timing", flags.no_timing);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            app.exit(e);
            return 0;
        }
        std::cerr << e.what() << std::endl;
        return 2;
    }

    const auto t0 = std::chrono::steady_clock::now();
    auto elapsed_ms = [&]() {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    };

    try {
        if (*verify) {
            qha::SuiteReport rep = qha::run_suite(suite_name, opt_n, seed, jobs);
            return emit_suite(rep, flags.no_timing, elapsed_ms());
        }
        if (*gaussian) {
            qha::LaurentPoly p = qha::gaussian_binomial(g_n, g_k);
            if (!g_json && g_eval.empty()) {
                std::cout << p.to_string() << std::endl;
                return 0;
            }
            json j;
            j["n"] = g_n;
            j["k"] = g_k;
            j["polynomial"] = p.to_string();
            j["terms"] = p.to_json();
            j["centered"] = qha::centered_gaussian(g_n, g_k).to_string();
            if (!g_eval.empty()) {
                qha::Rational x(g_eval);
                x.canonicalize();
                j["value"] = qha::to_string(p.evaluate(x));
            }
            std::cout << j.dump(2) << std::endl;
            return 0;
        }
        if (*graded) {
            qha::CartanDatum datum = load_quiver(quiver_spec);
            qha::KLRAlgebra alg(datum, qha::RelationConvention::standard(datum), false);
            qha::Sequence si = parse_sequence(datum, seq_i);
            qha::Sequence sj = parse_sequence(datum, seq_j);
            qha::SeriesTrunc s = alg.graded_dim_hom(si, sj, cutoff);
            json j;
            j["schema"] = 1;
            j["cutoff"] = cutoff;
            j["series"] = s.to_string();
            if (!flags.no_timing)
                j["timing_ms"] = elapsed_ms();
            std::cout << j.dump(2) << std::endl;
            return 0;
        }
        if (*cyclo) {
            qha::CartanDatum datum = load_quiver(quiver_spec);
            qha::KLRAlgebra alg(datum, qha::RelationConvention::standard(datum), false);
            qha::WeightVec lambda = qha::weight_from_json(datum, parse_inline_json(hw_text, "weight"));
            qha::RootVector nu = qha::root_from_json(datum, parse_inline_json(nu_text, "root"));
            std::vector<long> schedule;
            std::istringstream cs(cutoffs_text);
            std::string tok;
            while (std::getline(cs, tok, ','))
                schedule.push_back(std::stol(tok));
            qha::CyclotomicPresentation p{lambda, nu};
            qha::QuotientReport rep = qha::quotient_dims(alg, p, schedule);
            json j = rep.to_json();
            j["schema"] = 1;
            j["lambda"] = qha::vertex_map_to_json(datum, lambda);
            j["nu"] = qha::vertex_map_to_json(datum, nu);
            if (!flags.no_timing)
                j["timing_ms"] = elapsed_ms();
            std::cout << j.dump(2) << std::endl;
            return 0;
        }
        if (*count) {
            qha::CartanDatum datum = load_quiver(quiver_spec);
            qha::RootVector nu = qha::root_from_json(datum, parse_inline_json(nu_text, "root"));
            qha::OrbitReport rep = qha::enumerate_orbits(datum, nu, q_field, burnside);
            json j = rep.to_json(datum, nu);
            j["schema"] = 1;
            j["q"] = q_field;
            j["kostant"] = qha::kostant_count(datum, nu);
            if (!flags.no_timing)
                j["timing_ms"] = elapsed_ms();
            std::cout << j.dump(2) << std::endl;
            if (burnside && !rep.burnside_ok)
                return 1;
            return 0;
        }
        if (*weyl) {
            qha::SuiteReport rep = qha::suite_weyl(w_n);
            rep.suite = "weyl";
            return emit_suite(rep, flags.no_timing, elapsed_ms());
        }
    } catch (const std::invalid_argument& e) {
        return emit_error(e.what());
    } catch (const std::domain_error& e) {
        return emit_error(e.what());
    } catch (const qha::UnsupportedTypeError& e) {
        return emit_error(e.what());
    } catch (const std::exception& e) {
        json j;
        j["error"] = std::string("internal error: ") + e.what();
        std::cout << j.dump(2) << std::endl;
        return 1;
    }
    return 2;
}
