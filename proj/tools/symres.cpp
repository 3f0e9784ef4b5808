// symres command line: exact symbolic-power and resurgence calculations
// for monomial ideals.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <symres/symres.hpp>

namespace {

using namespace symres;

struct GlobalOptions {
    bool json = false;
    unsigned threads = 1;
    std::string ring_text;
    std::string ideal_text;
};

RingPtr need_ring(const GlobalOptions& opts) {
    if (opts.ring_text.empty())
        throw domain_error("this command needs --ring \"x,y,z\"");
    return parse_ring(opts.ring_text);
}

MonomialIdeal need_ideal(const GlobalOptions& opts, const RingPtr& ring) {
    if (opts.ideal_text.empty())
        throw domain_error("this command needs --ideal \"(x^3, x*y^2, y^3*z)\"");
    return parse_ideal(opts.ideal_text, ring);
}

void print_ideal(const GlobalOptions& opts, const MonomialIdeal& ideal) {
    if (opts.json) {
        std::cout << ideal_to_json(ideal).dump(2) << "\n";
    } else {
        std::cout << "ring: ";
        const auto& names = ideal.ring()->names();
        for (std::size_t i = 0; i < names.size(); ++i) std::cout << (i ? "," : "") << names[i];
        std::cout << "\n" << ideal.str() << "\n";
    }
}

// certify-product part syntax: "<ideal literal>;<m>;<r>;<witness monomial>"
ProductPart parse_part(const std::string& text, const RingPtr& ring) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        std::size_t cut = text.find(';', start);
        fields.push_back(text.substr(start, cut - start));
        if (cut == std::string::npos) break;
        start = cut + 1;
    }
    if (fields.size() != 4)
        throw domain_error("part must be \"<ideal>;<m>;<r>;<witness>\", got '" + text + "'");
    ProductPart part{parse_ideal(fields[0], ring), std::stol(fields[1]), std::stol(fields[2]),
                     parse_monomial(fields[3], ring)};
    return part;
}

int run(int argc, char** argv) {
    CLI::App app{"exact symbolic powers, decompositions, containment certificates and "
                 "resurgence bounds for monomial ideals"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions opts;
    app.add_flag("--json", opts.json, "emit JSON instead of text");
    app.add_option("--threads", opts.threads, "worker threads where supported")
        ->check(CLI::PositiveNumber);
    app.add_option("--ring", opts.ring_text, "ring variables, e.g. \"x,y,z\"");
    app.add_option("--ideal", opts.ideal_text, "ideal expression over --ring");

    // parse
    auto* cmd_parse = app.add_subcommand("parse", "evaluate a session script");
    std::string session_text;
    cmd_parse->add_option("session", session_text, "e.g. \"ring x,y; I = (x^2, x*y); I^2\"")
        ->required();

    // symbolic / power
    auto* cmd_symbolic = app.add_subcommand("symbolic", "n-th symbolic power of --ideal");
    long sym_n = 1;
    bool blockwise = false;
    cmd_symbolic->add_option("n", sym_n, "exponent (>= 1)")->required();
    cmd_symbolic->add_flag("--blockwise", blockwise,
                           "use the binomial expansion over the variable blocks");

    auto* cmd_power = app.add_subcommand("power", "n-th ordinary power of --ideal");
    long pow_n = 1;
    cmd_power->add_option("n", pow_n, "exponent (>= 0)")->required();

    // contains
    auto* cmd_contains =
        app.add_subcommand("contains", "certificate for: symbolic power m inside ordinary power r");
    long con_m = 1, con_r = 1;
    cmd_contains->add_option("m", con_m, "symbolic exponent")->required();
    cmd_contains->add_option("r", con_r, "ordinary exponent")->required();

    // decompose / assprimes
    auto* cmd_decompose = app.add_subcommand("decompose", "primary decomposition of --ideal");
    bool irreducible = false;
    cmd_decompose->add_flag("--irreducible", irreducible,
                            "irreducible components instead of primary ones");

    auto* cmd_assprimes = app.add_subcommand("assprimes", "associated primes of --ideal");
    bool only_maximal = false;
    cmd_assprimes->add_flag("--maximal", only_maximal, "only the maximal members");

    // scan
    auto* cmd_scan = app.add_subcommand("scan", "containment verdicts on an m x r grid");
    long max_m = 1, max_r = 1;
    bool no_shortcuts = false;
    cmd_scan->add_option("--max-m", max_m, "largest symbolic exponent")->required();
    cmd_scan->add_option("--max-r", max_r, "largest ordinary exponent")->required();
    cmd_scan->add_flag("--no-shortcuts", no_shortcuts,
                       "evaluate every cell directly, no monotonicity pruning");

    // bounds
    auto* cmd_bounds = app.add_subcommand("bounds", "closed-form resurgence bounds");
    std::string bound_a, bound_b;
    long sup_nmax = 0, iterated_depth = 0, res11_nmax = 0;
    std::vector<long> star_md;
    cmd_bounds->add_option("--a", bound_a, "resurgence of the first summand (rational)");
    cmd_bounds->add_option("--b", bound_b, "resurgence of the second summand (rational)");
    cmd_bounds->add_option("--sup-nmax", sup_nmax,
                           "also enumerate (ma+nb)/(m+n-1) for 2 <= m,n <= N");
    cmd_bounds->add_option("--iterated", iterated_depth,
                           "bound sequence for k-fold iterated sums, k up to this depth");
    cmd_bounds->add_option("--star", star_md,
                           "m d: asymptotic resurgence m(d-m+1)/d of a star configuration")
        ->expected(2);
    cmd_bounds->add_option("--res11", res11_nmax,
                           "possible resurgences of a sum of two resurgence-1 ideals, "
                           "truncated at N");

    // certify-product
    auto* cmd_certify = app.add_subcommand(
        "certify-product", "combine per-block witnesses into one non-containment certificate");
    std::vector<std::string> part_texts;
    cmd_certify->add_option("--part", part_texts, "\"<ideal>;<m>;<r>;<witness>\"")
        ->required()
        ->take_all();

    // family
    auto* cmd_family = app.add_subcommand("family", "built-in ideal families");
    std::string family_kind;
    long fam_d = 0, fam_m = 0, fam_k = 0;
    cmd_family->add_option("kind", family_kind, "F | star | pm | iterated")->required();
    cmd_family->add_option("--d", fam_d, "family parameter d");
    cmd_family->add_option("--m", fam_m, "family parameter m");
    cmd_family->add_option("--k", fam_k, "number of copies for iterated");

    // verify-paper
    auto* cmd_verify =
        app.add_subcommand("verify-paper", "run the full reproduction suite and report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cmd_parse->parsed()) {
            Session session = parse_session(session_text);
            if (opts.json) {
                Json j;
                j["schema"] = json_schema_version;
                if (session.ring) j["ring"] = ring_to_json(session.ring);
                Json bindings = Json::object();
                for (const auto& [name, value] : session.bindings)
                    bindings[name] = ideal_to_json(value);
                j["bindings"] = std::move(bindings);
                if (session.last) j["last"] = ideal_to_json(*session.last);
                std::cout << j.dump(2) << "\n";
            } else {
                for (const auto& [name, value] : session.bindings)
                    std::cout << name << " = " << value.str() << "\n";
                if (session.last) std::cout << session.last->str() << "\n";
            }
            return 0;
        }

        if (cmd_symbolic->parsed()) {
            RingPtr ring = need_ring(opts);
            MonomialIdeal ideal = need_ideal(opts, ring);
            MonomialIdeal result = blockwise
                                       ? symbolic_power_blockwise(detect_blocks(ideal), sym_n)
                                       : symbolic_power(ideal, sym_n);
            print_ideal(opts, result);
            return 0;
        }

        if (cmd_power->parsed()) {
            RingPtr ring = need_ring(opts);
            print_ideal(opts, power(need_ideal(opts, ring), pow_n));
            return 0;
        }

        if (cmd_contains->parsed()) {
            RingPtr ring = need_ring(opts);
            ContainmentCertificate cert = check_containment(need_ideal(opts, ring), con_m, con_r);
            if (opts.json)
                std::cout << certificate_to_json(cert, ring).dump(2) << "\n";
            else
                std::cout << emit_text(cert) << "\n";
            return 0;
        }

        if (cmd_decompose->parsed()) {
            RingPtr ring = need_ring(opts);
            MonomialIdeal ideal = need_ideal(opts, ring);
            std::vector<MonomialIdeal> components;
            if (irreducible)
                for (const IrreducibleComponent& c : irreducible_decomposition(ideal))
                    components.push_back(c.to_ideal(ring));
            else
                components = primary_decomposition(ideal);
            if (opts.json) {
                Json j;
                j["schema"] = json_schema_version;
                Json list = Json::array();
                for (const MonomialIdeal& c : components) list.push_back(ideal_to_json(c));
                j["components"] = std::move(list);
                std::cout << j.dump(2) << "\n";
            } else {
                for (const MonomialIdeal& c : components) std::cout << c.str() << "\n";
            }
            return 0;
        }

        if (cmd_assprimes->parsed()) {
            RingPtr ring = need_ring(opts);
            MonomialIdeal ideal = need_ideal(opts, ring);
            std::vector<PrimeSupport> primes =
                only_maximal ? maximal_associated_primes(ideal) : associated_primes(ideal);
            if (opts.json) {
                Json j;
                j["schema"] = json_schema_version;
                Json list = Json::array();
                for (const PrimeSupport& p : primes) list.push_back(ideal_to_json(p.to_ideal(ring)));
                j["primes"] = std::move(list);
                std::cout << j.dump(2) << "\n";
            } else {
                for (const PrimeSupport& p : primes) std::cout << p.str(ring) << "\n";
            }
            return 0;
        }

        if (cmd_scan->parsed()) {
            RingPtr ring = need_ring(opts);
            ScanReport report =
                scan(need_ideal(opts, ring), max_m, max_r, !no_shortcuts, opts.threads);
            if (opts.json)
                std::cout << scan_report_to_json(report, ring).dump(2) << "\n";
            else
                std::cout << emit_text(report) << "\n";
            return 0;
        }

        if (cmd_bounds->parsed()) {
            Json j;
            j["schema"] = json_schema_version;
            std::string text;
            if (!star_md.empty()) {
                Rational value = rho_a_star_configuration(star_md[0], star_md[1]);
                j["rho_a"] = value.str();
                text = "asymptotic resurgence of the star configuration: " + value.str();
            } else if (res11_nmax > 0) {
                Json list = Json::array();
                text = "possible resurgences:";
                for (const Rational& v : res_set_11(res11_nmax)) {
                    list.push_back(v.str());
                    text += " " + v.str();
                }
                j["res_1_1"] = std::move(list);
            } else if (iterated_depth > 0) {
                if (bound_a.empty()) throw domain_error("--iterated needs --a");
                Json list = Json::array();
                text = "iterated-sum bounds:";
                for (const Rational& v :
                     iterated_sum_bound(Rational::from_string(bound_a), iterated_depth)) {
                    list.push_back(v.str());
                    text += " " + v.str();
                }
                j["iterated_bounds"] = std::move(list);
            } else {
                if (bound_a.empty() || bound_b.empty())
                    throw domain_error("bounds needs --a and --b");
                Rational a = Rational::from_string(bound_a);
                Rational b = Rational::from_string(bound_b);
                BoundReport report = sharp_sum_bound(a, b);
                j = bound_report_to_json(report);
                text = emit_text(report);
                if (sup_nmax >= 2) {
                    SupEvaluation eval = evaluate_max_sup(a, b, sup_nmax);
                    j["enumerated_max"] = eval.enumerated_max.str();
                    text += "\nenumerated maximum up to " + std::to_string(sup_nmax) + ": " +
                            eval.enumerated_max.str();
                }
            }
            std::cout << (opts.json ? j.dump(2) : text) << "\n";
            return 0;
        }

        if (cmd_certify->parsed()) {
            RingPtr ring = need_ring(opts);
            std::vector<ProductPart> parts;
            for (const std::string& text : part_texts) parts.push_back(parse_part(text, ring));
            ContainmentCertificate cert = product_witness(parts);
            if (opts.json)
                std::cout << certificate_to_json(cert, ring).dump(2) << "\n";
            else
                std::cout << emit_text(cert) << "\n";
            return 0;
        }

        if (cmd_family->parsed()) {
            MonomialIdeal ideal = MonomialIdeal::zero(make_ring({"x"}));
            if (family_kind == "F") {
                if (fam_d < 1) throw domain_error("family F needs --d");
                ideal = family_F(fam_d);
            } else if (family_kind == "star") {
                if (fam_m < 1 || fam_d < 1) throw domain_error("family star needs --m and --d");
                ideal = star_ideal(fam_m, fam_d);
            } else if (family_kind == "pm") {
                if (fam_m < 2) throw domain_error("family pm needs --m >= 2");
                ideal = pm_ideal(fam_m);
            } else if (family_kind == "iterated") {
                if (fam_k < 1) throw domain_error("family iterated needs --k");
                RingPtr ring = need_ring(opts);
                ideal = iterated_sum(need_ideal(opts, ring), fam_k);
            } else {
                throw domain_error("unknown family '" + family_kind +
                                   "' (expected F, star, pm or iterated)");
            }
            print_ideal(opts, ideal);
            return 0;
        }

        if (cmd_verify->parsed()) {
            return print_verification(std::cout, opts.threads);
        }
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

} // namespace

int main(int argc, char** argv) { return run(argc, argv); }
