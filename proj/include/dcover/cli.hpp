#pragma once

/// @file cli.hpp
/// The dcover command line. run() parses arguments, builds a Report and
/// returns the exit code: 0 when every check passes, 1 on a failed check,
/// 2 on usage, parse or domain errors.

#include "dcover/fibration.hpp"
#include "dcover/genus_change.hpp"
#include "dcover/geography.hpp"
#include "dcover/report.hpp"
#include "dcover/resolution/canonical.hpp"
#include "dcover/resolution/parser.hpp"
#include "dcover/verify.hpp"
#include "dcover/xi_calc.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace dcover::cli {

inline constexpr int exit_pass = 0;
inline constexpr int exit_check_failed = 1;
inline constexpr int exit_usage = 2;

namespace detail {

inline std::string join(const std::vector<std::string>& v, const std::string& sep = " ") {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
    return s;
}

/// "R=5", "j=1" or a bare number.
inline std::uint64_t keyed_number(const std::string& arg, const std::string& key) {
    std::string v = arg;
    if (v.rfind(key + "=", 0) == 0) v = v.substr(key.size() + 1);
    if (v.empty() || v.find_first_not_of("0123456789") != std::string::npos || v.size() > 18) {
        throw std::invalid_argument("expected " + key + "=<n>, got '" + arg + "'");
    }
    return std::stoull(v);
}

template <CoefficientField F>
void resolve_into(Report& r, const BranchGerm<F>& germ, const ResolutionOptions& opts) {
    ResolutionTrace trace;
    try {
        trace = canonical_resolution(germ, opts);
    } catch (const ResolutionError& e) {
        r.record("branch").add("field", germ.field().name()).add("input", germ.str());
        r.check("resolution terminates", false, e.what());
        return;
    }
    r.record("branch")
        .add("field", trace.field)
        .add("input", trace.input)
        .add("reduced", trace.reduced)
        .add("doubled", trace.doubled);
    if (trace.doubled != "1") {
        r.note("branch is not reduced: resolving B1 = " + trace.reduced + " after removing 2*B0 with B0 = " +
               trace.doubled);
    }
    long long xi = 0;
    long long k2 = 0;
    for (const auto& s : trace.steps) {
        std::vector<std::string> next;
        for (const auto& p : s.successors) {
            std::string e = p.center;
            if (p.field != s.field) e += "@" + p.field;
            if (p.points > 1) {
                e += "[" + std::to_string(p.points) + " conjugate points]";
            } else {
                e += "(m=" + std::to_string(p.multiplicity) + ")";
            }
            next.push_back(e);
        }
        r.record("step")
            .add("i", s.index)
            .add("chart", s.center)
            .add("field", s.field)
            .add("m", s.m)
            .add("l", s.l)
            .add("branch", s.equation)
            .add("on E", next.empty() ? std::string("-") : join(next, ", "));
        const long long l = s.l;
        xi += l * (l - 1) / 2;
        k2 += 2 * (l - 1) * (l - 1);
    }
    r.record("totals")
        .add("blow-ups", trace.steps.size())
        .add("xi", trace.xi)
        .add("chi defect", trace.chi_defect)
        .add("K2 defect", trace.k2_defect);
    if (trace.steps.empty()) {
        r.note("branch is regular at the origin after normalization");
    } else {
        const Negligibility n = is_negligible(germ, opts);
        if (n != Negligibility::not_negligible) {
            std::string kind = to_string(n);
            std::replace(kind.begin(), kind.end(), '_', ' ');
            r.note("negligible singularity, " + kind);
        }
    }
    r.check("xi = sum l(l-1)/2", xi == trace.xi, std::to_string(trace.xi));
    r.check("K2 defect = sum 2(l-1)^2", k2 == trace.k2_defect, std::to_string(trace.k2_defect));
    r.check("chi defect = -xi", trace.chi_defect == -trace.xi, std::to_string(trace.chi_defect));
}

inline void fibration_into(Report& r, const FibrationDatum& f) {
    r.record("datum")
        .add("p", f.p)
        .add("q", f.q)
        .add("points", f.points.size())
        .add("alpha", alpha_of(f))
        .add("d", d_of(f))
        .add("sum R", ramification_total(f));
    const auto v = validate(f);
    for (const auto& c : v.checks) r.check("valid: " + c.name, c.pass, c.detail);
    if (!v.ok()) return;
    for (std::size_t i = 0; i < f.points.size(); ++i) {
        const auto& b = f.points[i];
        r.record("point")
            .add("index", i)
            .add("class", to_string(b.cls))
            .add("type", b.lambda.str())
            .add("xi", xi_type(b.cls, b.lambda, f.p))
            .add("slack", xi_inequality_slack(b.cls, b.lambda, f.p));
    }
    const auto e = evidence_bound_check(f);
    r.record("chi")
        .add("chi(X0)", chi_normalized_cover(f))
        .add("sum xi", xi_total(f))
        .add("chi(X)", e.chi)
        .add("bound", e.bound)
        .add("chi - bound", e.chi - e.bound);
    r.check("chi(O_X) >= (p^2-4p-1)(q-1)/(4p)", e.pass, e.chi.str() + " vs " + e.bound.str());
}

inline void raynaud_into(Report& r, std::uint64_t p, std::uint64_t l) {
    const auto s = raynaud_invariants(p, l);
    const Rational ratio(s.chi, s.K2);
    r.record("raynaud")
        .add("p", p)
        .add("l", l)
        .add("q", *s.q)
        .add("g", *s.g)
        .add("chi", s.chi)
        .add("K2", s.K2)
        .add("c2", s.c2)
        .add("chi/K2", ratio);
    const std::string tag = " (p=" + std::to_string(p) + ", l=" + std::to_string(l) + ")";
    r.check("Noether 12chi = K2 + c2" + tag, noether_check(s));
    r.check("c2 = -4(q-1)" + tag, s.c2 == -4 * (BigInt(*s.q) - 1), s.c2.str());
    r.check("chi/K2 = kappa conjectural" + tag, ratio == kappa_conjectural(p), ratio.str());
    const auto sb = sb_lower_bound_check(s);
    if (sb.applicable) {
        r.check("K2 > 4(g-1)(q-1)/3" + tag, sb.pass, "slack " + sb.slack.str());
    } else {
        r.note("K2 > 4(g-1)(q-1)/3" + tag + ": " + sb.note);
    }
    const auto c0 = char0_reference_checks(s);
    r.record("reference").add("p", p).add("l", l).add("3c2 >= K2", c0.bmy).add("5K2 - c2 + 36 >= 0", c0.noether).add(
        "tag", c0.tag);
}

inline void kappa_into(Report& r, std::uint64_t from, std::uint64_t to) {
    for (auto p : primes_in_range(std::max<std::uint64_t>(from, 3), to)) {
        const auto k = kappa_report(p);
        auto& rec = r.record("kappa").add("p", p);
        rec.add("conjectural", k.conjectural ? k.conjectural->str() : std::string("-"));
        rec.add("proven lower", k.proven.value ? k.proven.value->str() : k.proven.note);
        rec.add("exact", k.proven.exact);
        rec.add("1/12 - conjectural", k.conjectural ? (Rational(1, 12) - *k.conjectural).str() : std::string("-"));
        if (k.conjectural && p >= 7) {
            r.check("conjectural > proven (p=" + std::to_string(p) + ")", *k.conjectural > *k.proven.value);
        }
        if (k.conjectural) {
            const Rational d = Rational(1, 12) - *k.conjectural;
            r.check("|conjectural - 1/12| < 1/p (p=" + std::to_string(p) + ")",
                    (d.sign() < 0 ? -d : d) < Rational(BigInt(1), BigInt(p)));
        }
    }
    r.record("limit").add("classical char 0", Rational(1, 9)).add("conjectural as p grows", Rational(1, 12));
}

struct Options {
    std::string format = "table";
    bool no_timestamp = false;
};

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    CLI::App app{"Invariants of flat double covers and hyperelliptic fibrations in characteristic p", "dcover"};
    app.require_subcommand(1);
    app.fallthrough();
    detail::Options g;
    app.add_option("--format", g.format, "table, records or json")->check(CLI::IsMember({"table", "records", "json"}));
    app.add_flag("--no-timestamp", g.no_timestamp, "omit the timestamp so reports are byte-identical");

    auto* resolve = app.add_subcommand("resolve", "canonical resolution of a branch germ");
    std::string germ_text;
    std::string field_spec = "Q";
    unsigned depth = 256;
    resolve->add_option("germ", germ_text, "polynomial in x and t vanishing at the origin")->required();
    resolve->add_option("--field", field_spec, "Q, F<p> or F<p>^<k>");
    resolve->add_option("--depth-limit", depth, "maximum number of blow-ups");

    auto* xi = app.add_subcommand("xi", "xi of the family x^a t^b (x^m - t^n) or of a singularity class");
    std::vector<std::uint64_t> family;
    std::string cls;
    std::string tame;
    std::vector<std::string> wild;
    std::uint64_t xi_p = 0;
    auto* fam_opt = xi->add_option("--family", family, "a b m n")->expected(4);
    auto* type_opt = xi->add_option("--type", cls, "I, II, III or IV");
    auto* tame_opt = xi->add_option("--tame", tame, "R=<n>");
    auto* wild_opt = xi->add_option("--wild", wild, "j=<n> R=<n>")->expected(2);
    xi->add_option("--p", xi_p, "characteristic");
    fam_opt->excludes(type_opt);
    tame_opt->excludes(wild_opt);

    auto* fib = app.add_subcommand("fibration", "validate a fibration datum and compute chi");
    std::string datum_file;
    bool generate = false;
    std::uint64_t fib_p = 5;
    std::uint64_t fib_q = 2;
    std::uint64_t seed = 1;
    fib->add_option("datum", datum_file, "JSON datum file, - for stdin");
    fib->add_flag("--generate", generate, "print a random valid datum instead");
    fib->add_option("--p", fib_p);
    fib->add_option("--q", fib_q);
    fib->add_option("--seed", seed);

    auto* ray = app.add_subcommand("raynaud", "invariants of the Raynaud surfaces");
    std::uint64_t ray_p = 5;
    std::vector<std::uint64_t> ray_l;
    std::size_t ray_count = 3;
    ray->add_option("--p", ray_p)->required();
    ray->add_option("--l", ray_l, "one or more l; default the smallest admissible");
    ray->add_option("--count", ray_count, "how many admissible l when --l is absent");

    auto* c3 = app.add_subcommand("char3", "the characteristic 3 family bound on c2");
    unsigned n_from = 2;
    unsigned n_to = 0;
    c3->add_option("--n", n_from, "first n (default 2)");
    c3->add_option("--to", n_to, "last n (default n)");

    auto* kap = app.add_subcommand("kappa", "conjectural and proven kappa_p");
    std::uint64_t k_from = 3;
    std::uint64_t k_to = 31;
    kap->add_option("--from", k_from);
    kap->add_option("--to", k_to);

    auto* gen = app.add_subcommand("genus", "genus change under inseparable base extension");
    std::uint64_t gen_p = 3;
    std::optional<std::uint64_t> gen_g;
    std::vector<std::uint64_t> drop;
    std::vector<std::uint64_t> tower;
    gen->add_option("--p", gen_p)->required();
    gen->add_option("--g", gen_g, "genus of a curve over a conic");
    gen->add_option("--drop", drop, "g(S) g(Y)")->expected(2);
    gen->add_option("--tower", tower, "genera of a tower of descents")->expected(3, 64);

    auto* ver = app.add_subcommand("verify", "run property suites");
    std::string suite = "all";
    std::size_t samples = 600;
    ver->add_option("suite", suite, "oracle, bound, kappa, raynaud, evidence, slack, genus or all");
    ver->add_option("--seed", seed);
    ver->add_option("--samples", samples, "generated fibration data");

    std::vector<std::string> argv_store{"dcover"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_store) argv.push_back(a.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_pass : exit_usage;
    }

    const std::string command = "dcover " + detail::join(args);
    try {
        std::optional<Report> rep;
        if (resolve->parsed()) {
            rep.emplace(command, germ_text + " over " + field_spec);
            const AnyField field = parse_field_spec(field_spec);
            const auto poly = parse_polynomial(germ_text);
            ResolutionOptions opts;
            opts.max_blowups = depth;
            if (std::holds_alternative<RationalField>(field)) {
                detail::resolve_into(*rep, BranchGerm<RationalField>(poly), opts);
            } else {
                detail::resolve_into(*rep, BranchGerm<GaloisField>(reduce_mod(poly, std::get<GaloisField>(field))),
                                     opts);
            }
        } else if (xi->parsed()) {
            if (!family.empty()) {
                rep.emplace(command, "family " + detail::join({std::to_string(family[0]), std::to_string(family[1]),
                                                               std::to_string(family[2]), std::to_string(family[3])}));
                if (family[0] > 1 || family[1] > 1) throw std::invalid_argument("family: a and b must be 0 or 1");
                const FamilyParams fp{static_cast<unsigned>(family[0]), static_cast<unsigned>(family[1]), family[2],
                                      family[3]};
                const long long v = xi_family(fp);
                auto& rec = rep->record("xi").add("a", fp.a).add("b", fp.b).add("m", fp.m).add("n", fp.n).add("xi", v);
                if (fp.m % 2 == 1) {
                    const Rational bound = xi_bound_family(fp);
                    rec.add("bound", bound).add("slack", bound - Rational(v));
                    rep->check("xi <= bound", Rational(v) <= bound, Rational(v).str() + " vs " + bound.str());
                } else {
                    rep->note("the bound needs m odd");
                }
            } else {
                if (cls.empty()) throw std::invalid_argument("xi needs --family or --type");
                if (tame.empty() == wild.empty()) throw std::invalid_argument("xi --type needs exactly one of --tame, --wild");
                if (xi_p == 0) throw std::invalid_argument("xi --type needs --p");
                const SingularityClass c = parse_class(cls);
                const RamificationType lam =
                    tame.empty() ? RamificationType::wild(detail::keyed_number(wild[0], "j"),
                                                          detail::keyed_number(wild[1], "R"))
                                 : RamificationType::tame(detail::keyed_number(tame, "R"));
                rep.emplace(command, "class " + cls + " " + lam.str() + " p=" + std::to_string(xi_p));
                const long long v = xi_type(c, lam, xi_p);
                const Rational slack = xi_inequality_slack(c, lam, xi_p);
                rep->record("xi").add("class", cls).add("type", lam.str()).add("p", xi_p).add("xi", v).add("slack",
                                                                                                          slack);
                rep->check("xi inequality slack >= 0", slack.sign() >= 0, slack.str());
            }
        } else if (fib->parsed()) {
            if (generate) {
                out << dump_datum(FibrationGenerator(seed)(fib_p, fib_q));
                return exit_pass;
            }
            if (datum_file.empty()) throw std::invalid_argument("fibration needs a datum file or --generate");
            std::string text;
            if (datum_file == "-") {
                text.assign(std::istreambuf_iterator<char>(std::cin), {});
            } else {
                std::ifstream in(datum_file, std::ios::binary);
                if (!in) throw std::invalid_argument("cannot read '" + datum_file + "'");
                text.assign(std::istreambuf_iterator<char>(in), {});
            }
            rep.emplace(command, text, datum_file == "-" ? "stdin" : datum_file);
            detail::fibration_into(*rep, parse_datum(text));
        } else if (ray->parsed()) {
            if (ray_l.empty()) ray_l = raynaud_admissible_l(ray_p, ray_count);
            std::vector<std::string> ls;
            for (auto l : ray_l) ls.push_back(std::to_string(l));
            rep.emplace(command, "p=" + std::to_string(ray_p) + " l=" + detail::join(ls, ","));
            for (auto l : ray_l) detail::raynaud_into(*rep, ray_p, l);
        } else if (c3->parsed()) {
            if (n_to == 0) n_to = n_from;
            if (n_to < n_from) throw std::invalid_argument("char3: --to must be at least --n");
            rep.emplace(command, "n=" + std::to_string(n_from) + ".." + std::to_string(n_to));
            for (unsigned n = n_from; n <= n_to; ++n) {
                const auto e = char3_example(n);
                const Rational ratio(e.c2_upper, e.q_minus_1);
                rep->record("char3")
                    .add("n", n)
                    .add("q-1", e.q_minus_1)
                    .add("m", e.m)
                    .add("c2 bound", e.c2_upper)
                    .add("bound/(q-1)", ratio);
                rep->check("bound/(q-1) > -4 (n=" + std::to_string(n) + ")", ratio > Rational(-4), ratio.str());
            }
        } else if (kap->parsed()) {
            if (k_to < k_from) throw std::invalid_argument("kappa: --to must be at least --from");
            rep.emplace(command, "p=" + std::to_string(k_from) + ".." + std::to_string(k_to));
            detail::kappa_into(*rep, k_from, k_to);
        } else if (gen->parsed()) {
            require_odd_prime(gen_p, "genus");
            if (!gen_g && drop.empty() && tower.empty()) throw std::invalid_argument("genus needs --g, --drop or --tower");
            rep.emplace(command, "p=" + std::to_string(gen_p));
            if (gen_g) {
                const auto qh = quasi_hyperelliptic_genus_ok(*gen_g, gen_p);
                auto& rec = rep->record("conic").add("p", gen_p).add("g", *gen_g).add("2g+2 = p^i + p^j",
                                                                                       to_string(qh.status));
                if (qh.status == Membership::yes) rec.add("i", qh.i).add("j", qh.j);
                const GenusChangeRecord gr{gen_p, *gen_g, 0};
                const bool tate = tate_divisibility(gr);
                rep->check("(p-1) | 2g (g=" + std::to_string(*gen_g) + ")", tate);
                if (tate && *gen_g > 0 && 2 * *gen_g >= gen_p - 1 && 2 * *gen_g < gen_p * gen_p - 1) rec.add("torsion degree", rational_curve_torsion(*gen_g, gen_p));
            }
            if (!drop.empty()) {
                const GenusChangeRecord gr{gen_p, drop[0], drop[1]};
                const bool tate = tate_divisibility(gr);
                auto& rec = rep->record("drop").add("p", gen_p).add("g(S)", drop[0]).add("g(Y)", drop[1]);
                if (tate) rec.add("torsion degree", torsion_degree(gr));
                rep->check("(p-1) | 2(g(S) - g(Y))", tate, std::to_string(2 * gr.drop()));
            }
            if (!tower.empty()) {
                std::vector<std::string> gs;
                for (auto v : tower) gs.push_back(std::to_string(v));
                rep->record("tower").add("p", gen_p).add("genera", detail::join(gs, ","));
                rep->check("p (g_i - g_i+1) <= g_i-1 - g_i", tower_monotonicity(tower, gen_p));
            }
        } else if (ver->parsed()) {
            rep.emplace(command, "suite " + suite + " seed " + std::to_string(seed));
            VerifyOptions vo;
            vo.seed = seed;
            vo.fibration_samples = samples;
            run_verify_suite(*rep, suite, vo);
        }
        if (!rep) throw std::invalid_argument("no subcommand");
        if (!g.no_timestamp) rep->stamp(utc_timestamp());
        out << rep->render(parse_report_format(g.format));
        return rep->ok() ? exit_pass : exit_check_failed;
    } catch (const ParseError& e) {
        err << "dcover: " << e.what() << "\n";
    } catch (const std::invalid_argument& e) {
        err << "dcover: error: " << e.what() << "\n";
    } catch (const std::domain_error& e) {
        err << "dcover: error: " << e.what() << "\n";
    } catch (const std::exception& e) {
        err << "dcover: internal error: " << e.what() << "\n";
    }
    return exit_usage;
}

}  // namespace dcover::cli
