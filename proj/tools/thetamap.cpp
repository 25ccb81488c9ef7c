#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "theta/constructions.hpp"
#include "theta/invariants.hpp"
#include "theta/qseries.hpp"
#include "theta/rank2.hpp"

namespace {

using namespace theta;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// A gram argument is either a JSON file path or a construction name.
GramMatrix load_gram(const std::string& arg) {
    if (std::filesystem::exists(arg)) return parse_gram_json(slurp(arg));
    return construct(arg).gram;
}

// Tangent directions use the gram JSON shape with key "sym" (or "gram"),
// symmetry required, positive definiteness not.
SymMatrix load_sym(const std::string& path) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(slurp(path));
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("bad direction JSON: ") + e.what());
    }
    const char* key = j.contains("sym") ? "sym" : "gram";
    if (!j.is_object() || !j.contains("n") || !j.contains(key))
        throw InputError("direction JSON needs fields \"n\" and \"sym\"");
    const std::size_t n = j["n"].get<std::size_t>();
    const auto& rows = j[key];
    if (!rows.is_array() || rows.size() != n)
        throw InputError("direction JSON: \"sym\" must be an n x n array");
    RationalMatrix entries(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            entries[i][k] = parse_rational(rows[i][k].get<std::string>());
    return SymMatrix(entries);
}

Rational parse_bound(const std::string& text, bool defaulted) {
    Rational x = parse_rational(text);
    if (sgn(x) <= 0) throw InputError("bound must be positive");
    if (defaulted)
        std::cerr << "warning: using default bound X=10; zero verdicts are "
                     "truncated claims up to that exponent only\n";
    return x;
}

std::string diff_verdict(const std::optional<Rational>& d) {
    return d ? "DIFFER@" + render_rational(*d) : "EQUAL";
}

int run(int argc, char** argv) {
    CLI::App app{"Exact theta-series invariants of positive definite quadratic forms"};
    app.require_subcommand(1);

    std::string gram_arg, gram_arg2, direction_path, bound_str = "10", route = "direct";
    bool bound_set = false;

    auto add_bound = [&](CLI::App* cmd) {
        cmd->add_option("--bound", bound_str, "truncation exponent X (rational p/q)")
            ->each([&](const std::string&) { bound_set = true; });
    };

    auto* c_theta = app.add_subcommand("theta", "theta series up to the bound");
    c_theta->add_option("gram", gram_arg)->required();
    add_bound(c_theta);

    auto* c_t11 = app.add_subcommand("theta11", "the theta11 invariant");
    c_t11->add_option("gram", gram_arg)->required();
    c_t11->add_option("--route", route)
        ->check(CLI::IsMember({"direct", "harmonic", "both"}));
    add_bound(c_t11);

    auto* c_dtheta = app.add_subcommand("dtheta", "directional derivative of theta");
    c_dtheta->add_option("gram", gram_arg)->required();
    c_dtheta->add_option("--direction", direction_path, "symmetric direction JSON")
        ->required();
    add_bound(c_dtheta);

    auto* c_wr = app.add_subcommand("wronskian", "Wronskian of the tangent theta series");
    c_wr->add_option("gram", gram_arg)->required();
    add_bound(c_wr);

    auto* c_cl = app.add_subcommand("classify2", "rank-2 degeneracy trichotomy");
    c_cl->add_option("gram", gram_arg)->required();

    auto* c_con = app.add_subcommand("construct", "print a named lattice's Gram JSON");
    c_con->add_option("name", gram_arg)->required();

    auto* c_cmp = app.add_subcommand("compare", "compare theta and theta11");
    c_cmp->add_option("gram1", gram_arg)->required();
    c_cmp->add_option("gram2", gram_arg2)->required();
    add_bound(c_cmp);

    auto* c_sp = app.add_subcommand("spectrum", "length spectrum up to the bound");
    c_sp->add_option("gram", gram_arg)->required();
    add_bound(c_sp);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;  // input errors exit 1, --help exits 0
    }

    if (app.got_subcommand(c_theta)) {
        Rational x = parse_bound(bound_str, !bound_set);
        std::cout << render_qseries(theta_series(load_gram(gram_arg), x));
    } else if (app.got_subcommand(c_t11)) {
        Rational x = parse_bound(bound_str, !bound_set);
        GramMatrix a = load_gram(gram_arg);
        if (route == "direct") {
            std::cout << render_qseries(theta11_direct(a, x).series);
        } else if (route == "harmonic") {
            std::cout << render_qseries(theta11_harmonic(a, x).series);
        } else {
            QSeries d = theta11_direct(a, x).series;
            QSeries h = theta11_harmonic(a, x).series;
            std::cout << "# route=direct\n" << render_qseries(d);
            std::cout << "# route=harmonic\n" << render_qseries(h);
            std::cout << (d == h ? "AGREE" : "DISAGREE") << "\n";
        }
    } else if (app.got_subcommand(c_dtheta)) {
        Rational x = parse_bound(bound_str, !bound_set);
        std::cout << render_qseries(dtheta(load_gram(gram_arg), load_sym(direction_path), x));
    } else if (app.got_subcommand(c_wr)) {
        Rational x = parse_bound(bound_str, !bound_set);
        WronskianResult w = wronskian(load_gram(gram_arg), x);
        std::cout << "# raw_det\n" << render_qseries(w.raw_det);
        std::cout << "# gram_det=" << render_rational(w.gram_det) << "\n";
        std::cout << "# normalized_square\n" << render_qseries(w.normalized_square);
    } else if (app.got_subcommand(c_cl)) {
        Rank2Class r = classify_rank2(load_gram(gram_arg));
        std::string verdict = "NONDEGENERATE";
        if (r.verdict == Rank2Verdict::Vanishing) verdict = "VANISHING";
        if (r.verdict == Rank2Verdict::Degenerate) {
            const char* roman[] = {"", "i", "ii", "iii"};
            verdict = std::string("DEGENERATE(") + roman[r.degenerate_case] + ")";
        }
        std::cout << "rank2: " << verdict << "; reduced=[[" << render_rational(r.reduced.at(0, 0))
                  << "," << render_rational(r.reduced.at(0, 1)) << "],["
                  << render_rational(r.reduced.at(0, 1)) << ","
                  << render_rational(r.reduced.at(1, 1)) << "]]; tau=" << r.tau_re << "+"
                  << r.tau_im << "i\n";
    } else if (app.got_subcommand(c_con)) {
        std::cout << render_gram_json(construct(gram_arg).gram) << "\n";
    } else if (app.got_subcommand(c_cmp)) {
        Rational x = parse_bound(bound_str, !bound_set);
        InvariantComparison r =
            compare_invariants(load_gram(gram_arg), load_gram(gram_arg2), x);
        std::cout << "theta: " << diff_verdict(r.theta_first_diff) << "\n";
        std::cout << "theta11: " << diff_verdict(r.theta11_first_diff) << "\n";
    } else if (app.got_subcommand(c_sp)) {
        Rational x = parse_bound(bound_str, !bound_set);
        for (const auto& [norm, mult] : length_spectrum(load_gram(gram_arg), x))
            std::cout << render_rational(norm) << ":" << mult << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
