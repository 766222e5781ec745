#include "nodaljac/cli.hpp"

#include <algorithm>
#include <ostream>
#include <regex>

#include <CLI11.hpp>

#include "nodaljac/bench.hpp"
#include "nodaljac/io.hpp"
#include "nodaljac/selftest.hpp"

namespace nodaljac {

namespace {

mpz_class parse_scalar(const std::string& s) {
    static const std::regex decimal("-?[0-9]+");
    if (!std::regex_match(s, decimal))
        throw std::invalid_argument("scalar: malformed decimal '" + s + "'");
    return mpz_class(s, 10);
}

std::vector<int> parse_degree_list(const std::string& s) {
    std::vector<int> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        std::size_t comma = s.find(',', start);
        std::string item = comma == std::string::npos ? s.substr(start)
                                                      : s.substr(start, comma - start);
        try {
            std::size_t used = 0;
            int d = std::stoi(item, &used);
            if (used != item.size() || d < 1) throw std::invalid_argument("");
            out.push_back(d);
        } catch (...) {
            throw std::invalid_argument("degrees: malformed entry '" + item + "'");
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

std::mt19937_64 make_rng(bool seeded, std::uint64_t seed) {
    if (seeded) return std::mt19937_64(seed);
    std::random_device rd;
    std::seed_seq seq{rd(), rd(), rd(), rd()};
    return std::mt19937_64(seq);
}

} // namespace

int cli_dispatch(std::vector<std::string> args, std::ostream& out,
                 std::ostream& err) {
    CLI::App app{"group arithmetic on the Jacobians of nodal curves y^2 = x*f(x)^2"};
    app.require_subcommand(1);

    std::uint64_t p_val = 0, seed = 0;
    int degree = 0, reps = 5;
    std::string out_path, curve_path, elt_a, elt_b, elt_e, scalar_str, degrees_str;

    auto* cg = app.add_subcommand("curve-gen", "generate a random curve file");
    cg->add_option("--p", p_val, "odd prime modulus")->required();
    cg->add_option("--degree", degree, "degree of f")->required();
    auto* cg_seed = cg->add_option("--seed", seed, "RNG seed");
    cg->add_option("--out", out_path, "output curve file")->required();

    auto* re = app.add_subcommand("random-element", "print a random element");
    re->add_option("--curve", curve_path, "curve file")->required();
    auto* re_seed = re->add_option("--seed", seed, "RNG seed");

    auto* ad = app.add_subcommand("add", "add two elements");
    ad->add_option("--curve", curve_path, "curve file")->required();
    ad->add_option("--a", elt_a, "first element")->required();
    ad->add_option("--b", elt_b, "second element")->required();

    auto* sm = app.add_subcommand("smul", "scalar multiple of an element");
    sm->add_option("--curve", curve_path, "curve file")->required();
    sm->add_option("--n", scalar_str, "decimal scalar, any size and sign")->required();
    sm->add_option("--e", elt_e, "element")->required();

    auto* ng = app.add_subcommand("neg", "negate an element");
    ng->add_option("--curve", curve_path, "curve file")->required();
    ng->add_option("--e", elt_e, "element")->required();

    auto* va = app.add_subcommand("validate", "check an element string");
    va->add_option("--curve", curve_path, "curve file")->required();
    va->add_option("--e", elt_e, "element")->required();

    auto* od = app.add_subcommand("order", "print the group order");
    od->add_option("--curve", curve_path, "curve file")->required();

    auto* em = app.add_subcommand("embed", "print the divisor pair of an element");
    em->add_option("--curve", curve_path, "curve file")->required();
    em->add_option("--e", elt_e, "element")->required();

    auto* be = app.add_subcommand("bench", "run the timing sweep");
    be->add_option("--degrees", degrees_str, "comma-separated degree list");
    auto* be_p = be->add_option("--p", p_val, "odd prime modulus");
    be->add_option("--reps", reps, "repetitions per timing (median reported)");
    auto* be_seed = be->add_option("--seed", seed, "RNG seed");
    be->add_option("--out", out_path, "output CSV path")->required();

    auto* st = app.add_subcommand("selftest", "run the built-in verification suite");
    bool quick = false;
    st->add_flag("--quick", quick, "small-curve checks only");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (cg->parsed()) {
            PrimeModulus m(p_val);
            auto rng = make_rng(!cg_seed->empty(), seed);
            NodalCurve curve(m, random_irreducible(m, degree, rng));
            write_curve_file(curve, out_path);
            return 0;
        }
        if (re->parsed()) {
            NodalCurve curve = read_curve_file(curve_path);
            auto rng = make_rng(!re_seed->empty(), seed);
            out << element_to_string(curve, random_element(curve, rng)) << "\n";
            return 0;
        }
        if (ad->parsed()) {
            NodalCurve curve = read_curve_file(curve_path);
            JacElement a = element_from_string(curve, elt_a);
            JacElement b = element_from_string(curve, elt_b);
            out << element_to_string(curve, add(curve, a, b)) << "\n";
            return 0;
        }
        if (sm->parsed()) {
            NodalCurve curve = read_curve_file(curve_path);
            JacElement e = element_from_string(curve, elt_e);
            out << element_to_string(curve, scalar_mul(curve, parse_scalar(scalar_str), e))
                << "\n";
            return 0;
        }
        if (ng->parsed()) {
            NodalCurve curve = read_curve_file(curve_path);
            JacElement e = element_from_string(curve, elt_e);
            out << element_to_string(curve, neg(curve, e)) << "\n";
            return 0;
        }
        if (va->parsed()) {
            NodalCurve curve = read_curve_file(curve_path);
            ParsedElement pe = parse_element_text(curve, elt_e);
            if (!pe.identity && !element_validate(curve, pe.rep)) {
                err << "invalid element: h^2 ≡ x (mod f)\n";
                return 2;
            }
            out << "valid\n";
            return 0;
        }
        if (od->parsed()) {
            NodalCurve curve = read_curve_file(curve_path);
            out << group_order(curve).get_str() << "\n";
            return 0;
        }
        if (em->parsed()) {
            NodalCurve curve = read_curve_file(curve_path);
            JacElement e = element_from_string(curve, elt_e);
            out << divisor_to_string(to_mumford(curve, e)) << "\n";
            return 0;
        }
        if (be->parsed()) {
            BenchConfig cfg;
            if (!be_p->empty()) cfg.p = p_val;
            cfg.scalar = mpz_class(static_cast<unsigned long>(cfg.p));
            if (!degrees_str.empty()) cfg.degrees = parse_degree_list(degrees_str);
            cfg.repetitions = reps;
            if (!be_seed->empty()) cfg.seed = seed;
            std::vector<BenchRow> rows = run_benchmark(cfg, &err);
            if (rows.empty()) {
                err << "benchmark produced no rows\n";
                return 2;
            }
            write_report(rows, cfg, out_path);
            out << "wrote " << out_path << " and "
                << std::filesystem::path(out_path).replace_extension(".dat").string()
                << " (" << rows.size() << " of " << cfg.degrees.size()
                << " degrees)\n";
            return rows.size() == cfg.degrees.size() ? 0 : 2;
        }
        if (st->parsed()) {
            return selftest(quick, out) ? 0 : 2;
        }
        err << "unknown command\n";
        return 1;
    } catch (const IoError& ex) {
        err << "i/o error: " << ex.what() << "\n";
        return 3;
    } catch (const std::filesystem::filesystem_error& ex) {
        err << "i/o error: " << ex.what() << "\n";
        return 3;
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << "\n";
        return 2;
    }
}

} // namespace nodaljac
