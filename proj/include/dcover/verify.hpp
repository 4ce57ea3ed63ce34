#pragma once

/// @file verify.hpp
/// Property suites over the closed forms: oracle equivalence with the blow-up
/// algorithm, bound sweeps, kappa and Raynaud identities, generated fibration
/// data, xi slack and genus change.

#include "dcover/fibration.hpp"
#include "dcover/genus_change.hpp"
#include "dcover/geography.hpp"
#include "dcover/report.hpp"
#include "dcover/resolution/canonical.hpp"
#include "dcover/xi_calc.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <numeric>
#include <string>
#include <thread>
#include <vector>

namespace dcover {

/// Runs fn(i) for i in [0, n) on worker threads; results stay indexed by i.
template <class T, class Fn>
std::vector<T> parallel_map(std::size_t n, Fn fn, unsigned workers = 0) {
    std::vector<T> out(n);
    if (workers == 0) workers = std::max(1U, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(n, 1)));
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(workers);
    auto body = [&](unsigned w) {
        try {
            for (std::size_t i = next++; i < n; i = next++) out[i] = fn(i);
        } catch (...) {
            errors[w] = std::current_exception();
            next = n;
        }
    };
    if (workers == 1) {
        body(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(body, w);
        for (auto& t : pool) t.join();
    }
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return out;
}

/// x^a t^b (x^m - t^n) over the given field.
template <CoefficientField F>
BivariatePoly<F> family_branch(const F& field, unsigned a, unsigned b, unsigned m, unsigned n) {
    using P = BivariatePoly<F>;
    return P::term(field, field.one(), a + m, b) - P::term(field, field.one(), a, b + n);
}

struct VerifyOptions {
    std::uint64_t seed = 1;
    std::size_t fibration_samples = 600;
    unsigned workers = 0;
};

inline const std::vector<std::string>& verify_suites() {
    static const std::vector<std::string> names{"oracle", "bound", "kappa", "raynaud", "evidence", "slack", "genus"};
    return names;
}

namespace detail {

struct SweepTally {
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::string first;
};

inline void tally_into(Report& r, const std::string& suite, const std::string& what, const SweepTally& t) {
    r.record("sweep").add("suite", suite).add("property", what).add("cases", t.cases).add("failures", t.failures);
    r.check(suite + ": " + what, t.failures == 0 && t.cases > 0,
            t.failures ? "first failure " + t.first : std::to_string(t.cases) + " cases");
}

inline void verify_oracle(Report& r, const VerifyOptions& opt) {
    struct Case {
        unsigned a, b, m, n;
    };
    std::vector<Case> cases;
    for (unsigned a = 0; a <= 1; ++a) {
        for (unsigned b = 0; b <= 1; ++b) {
            for (unsigned m = 1; m <= 12; ++m) {
                for (unsigned n = 1; n <= 12; ++n) {
                    if (std::gcd(m, n) == 1) cases.push_back({a, b, m, n});
                }
            }
        }
    }
    const std::vector<std::uint64_t> fields{0, 5, 7, 13};
    for (std::uint64_t p : fields) {
        std::vector<Case> use;
        for (const auto& c : cases) {
            if (p == 0 || p > std::max(c.m, c.n)) use.push_back(c);
        }
        auto got = parallel_map<std::string>(
            use.size(),
            [&](std::size_t i) -> std::string {
                const auto& c = use[i];
                long long xi = 0;
                if (p == 0) {
                    xi = canonical_resolution(BranchGerm<RationalField>(family_branch(RationalField{}, c.a, c.b, c.m, c.n))).xi;
                } else {
                    xi = canonical_resolution(
                             BranchGerm<GaloisField>(family_branch(GaloisField::get(p), c.a, c.b, c.m, c.n)))
                             .xi;
                }
                const long long want = xi_family({c.a, c.b, c.m, c.n});
                if (xi == want) return {};
                return "(" + std::to_string(c.a) + "," + std::to_string(c.b) + "," + std::to_string(c.m) + "," +
                       std::to_string(c.n) + "): recursion " + std::to_string(want) + ", blow-ups " + std::to_string(xi);
            },
            opt.workers);
        SweepTally t;
        t.cases = use.size();
        for (const auto& s : got) {
            if (s.empty()) continue;
            if (t.failures++ == 0) t.first = s;
        }
        tally_into(r, "oracle", "xi_family = blow-up xi over " + (p == 0 ? std::string("Q") : "F" + std::to_string(p)),
                   t);
    }
}

inline void verify_bound(Report& r) {
    SweepTally t;
    for (unsigned a = 0; a <= 1; ++a) {
        for (unsigned b = 0; b <= 1; ++b) {
            for (std::uint64_t m = 1; m <= 31; m += 2) {
                for (std::uint64_t n = 1; n <= 31; ++n) {
                    if (std::gcd(m, n) != 1) continue;
                    ++t.cases;
                    const Rational xi(xi_family({a, b, m, n}));
                    const Rational bound = xi_bound_family({a, b, m, n});
                    if (xi > bound && t.failures++ == 0) {
                        t.first = "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(m) + "," +
                                  std::to_string(n) + "): " + xi.str() + " > " + bound.str();
                    }
                }
            }
        }
    }
    tally_into(r, "bound", "xi_family <= xi_bound_family", t);
    const Rational xi(xi_family({1, 1, 3, 2}));
    const Rational bound = xi_bound_family({1, 1, 3, 2});
    r.record("equality").add("a", 1).add("b", 1).add("m", 3).add("n", 2).add("xi", xi).add("bound", bound);
    r.check("bound: equality at (1,1,3,2)", xi == bound, xi.str() + " vs " + bound.str());
}

inline void verify_kappa(Report& r) {
    const Rational k5 = kappa_conjectural(5);
    r.check("kappa: conjectural(5) = 1/32", k5 == Rational(1, 32), k5.str());
    const auto l5 = kappa_proven_lower(5);
    r.check("kappa: proven(5) = 1/32", l5.value && *l5.value == Rational(1, 32) && l5.exact,
            l5.value ? l5.value->str() : "none");
    SweepTally gap;
    for (auto p : primes_in_range(7, 199)) {
        ++gap.cases;
        const Rational c = kappa_conjectural(p);
        const Rational l = *kappa_proven_lower(p).value;
        if (!(c > l) && gap.failures++ == 0) gap.first = "p=" + std::to_string(p);
    }
    tally_into(r, "kappa", "conjectural > proven for 7 <= p <= 199", gap);
    SweepTally lim;
    for (auto p : primes_in_range(100, 999)) {
        ++lim.cases;
        const Rational d = kappa_conjectural(p) - Rational(1, 12);
        const Rational dist = d.sign() < 0 ? -d : d;
        if (!(dist < Rational(BigInt(1), BigInt(p))) && lim.failures++ == 0) lim.first = "p=" + std::to_string(p);
    }
    tally_into(r, "kappa", "|conjectural - 1/12| < 1/p for 100 <= p <= 999", lim);
}

inline void verify_raynaud(Report& r) {
    for (std::uint64_t p : {5ULL, 7ULL, 11ULL, 13ULL}) {
        for (auto l : raynaud_admissible_l(p)) {
            const auto s = raynaud_invariants(p, l);
            const Rational ratio(s.chi, s.K2);
            const bool kappa_ok = ratio == kappa_conjectural(p);
            const bool c2_ok = 12 * s.chi - s.K2 == s.c2 && s.c2 == -4 * (BigInt(*s.q) - 1);
            r.record("raynaud")
                .add("p", p)
                .add("l", l)
                .add("chi", s.chi)
                .add("K2", s.K2)
                .add("c2", s.c2)
                .add("q", *s.q)
                .add("chi/K2", ratio);
            r.check("raynaud p=" + std::to_string(p) + " l=" + std::to_string(l) + ": chi/K2 = kappa", kappa_ok,
                    ratio.str());
            r.check("raynaud p=" + std::to_string(p) + " l=" + std::to_string(l) + ": 12chi - K2 = c2 = -4(q-1)", c2_ok,
                    s.c2.str());
        }
    }
}

inline FibrationDatum hand_fibration_datum() {
    FibrationDatum f{5, 2, {}};
    for (int i = 0; i < 5; ++i) f.points.push_back({SingularityClass::I, RamificationType::tame(1)});
    f.points.push_back({SingularityClass::III, RamificationType::tame(1)});
    return f;
}

inline void verify_evidence(Report& r, const VerifyOptions& opt) {
    FibrationGenerator gen(opt.seed);
    std::vector<FibrationDatum> data;
    const std::vector<std::uint64_t> ps{5, 7, 11};
    for (std::size_t i = 0; i < opt.fibration_samples; ++i) {
        data.push_back(gen(ps[i % ps.size()], 2 + (i / ps.size()) % 19));
    }
    std::size_t wild = 0;
    for (const auto& f : data) {
        wild += std::any_of(f.points.begin(), f.points.end(), [](const BranchPointDatum& b) { return b.lambda.is_wild(); });
    }
    auto res = parallel_map<std::string>(
        data.size(),
        [&](std::size_t i) -> std::string {
            const auto e = evidence_bound_check(data[i]);
            if (e.pass) return {};
            return "sample " + std::to_string(i) + ": chi " + e.chi.str() + " < " + e.bound.str();
        },
        opt.workers);
    SweepTally t;
    t.cases = data.size();
    for (const auto& s : res) {
        if (!s.empty() && t.failures++ == 0) t.first = s;
    }
    r.record("generated").add("seed", opt.seed).add("samples", data.size()).add("with wild points", wild);
    tally_into(r, "evidence", "chi(O_X) >= (p^2-4p-1)(q-1)/(4p)", t);
    const auto hand = hand_fibration_datum();
    const Rational chi = chi_smooth_model(hand);
    r.check("evidence: hand datum (p=5, q=2) has chi = 3", chi == Rational(3), chi.str());
}

inline void verify_slack(Report& r) {
    SweepTally t;
    const SingularityClass classes[] = {SingularityClass::I, SingularityClass::II, SingularityClass::III,
                                        SingularityClass::IV};
    auto one = [&](SingularityClass c, const RamificationType& lam, std::uint64_t p) {
        ++t.cases;
        const Rational s = xi_inequality_slack(c, lam, p);
        if (s.sign() < 0 && t.failures++ == 0) t.first = to_string(c) + " " + lam.str() + " p=" + std::to_string(p);
    };
    for (std::uint64_t p : {5ULL, 7ULL, 11ULL}) {
        for (auto c : classes) {
            for (std::uint64_t R = 0; R <= 4 * p; ++R) {
                if ((R + 1) % p != 0) one(c, RamificationType::tame(R), p);
            }
            for (std::uint64_t j = 1; j <= 3; ++j) {
                for (std::uint64_t R = p * j; R <= p * j + p - 2; ++R) one(c, RamificationType::wild(j, R), p);
            }
        }
    }
    tally_into(r, "slack", "xi inequality slack >= 0", t);
    for (std::uint64_t p : {5ULL, 7ULL, 11ULL}) {
        const Rational s = xi_inequality_slack(SingularityClass::III, RamificationType::wild(1, p), p);
        r.check("slack: equality at III wild j=1 R=" + std::to_string(p), s.sign() == 0, s.str());
    }
}

inline void verify_genus(Report& r) {
    SweepTally deg;
    for (std::uint64_t p : {3ULL, 5ULL, 7ULL, 11ULL}) {
        for (std::uint64_t g = 1; g <= 60; ++g) {
            if (2 * g >= p * p - 1 || 2 * g < p - 1 || (2 * g) % (p - 1) != 0) continue;
            ++deg.cases;
            const Rational want(BigInt(2 * p * g), BigInt(p - 1));
            const bool ok = Rational(BigInt(rational_curve_torsion(g, p))) == want &&
                            Rational(BigInt(torsion_degree({p, g, 0}))) == want;
            if (!ok && deg.failures++ == 0) deg.first = "p=" + std::to_string(p) + " g=" + std::to_string(g);
        }
    }
    tally_into(r, "genus", "torsion degree = 2pg/(p-1)", deg);
    SweepTally qh;
    for (std::uint64_t p : {3ULL, 5ULL, 7ULL}) {
        for (std::uint64_t g = 0; g <= 200; ++g) {
            ++qh.cases;
            const auto q = quasi_hyperelliptic_genus_ok(g, p);
            bool ok = q.status != Membership::unknown;
            if (q.status == Membership::yes) ok = ok && tate_divisibility({p, g, 0});
            if (!ok && qh.failures++ == 0) qh.first = "p=" + std::to_string(p) + " g=" + std::to_string(g);
        }
    }
    tally_into(r, "genus", "quasi-hyperelliptic genera satisfy Tate divisibility", qh);
}

}  // namespace detail

/// Runs one suite (or "all") into the report. Unknown names throw.
inline void run_verify_suite(Report& r, const std::string& suite, const VerifyOptions& opt = {}) {
    if (suite == "all") {
        for (const auto& s : verify_suites()) run_verify_suite(r, s, opt);
        return;
    }
    if (suite == "oracle") return detail::verify_oracle(r, opt);
    if (suite == "bound") return detail::verify_bound(r);
    if (suite == "kappa") return detail::verify_kappa(r);
    if (suite == "raynaud") return detail::verify_raynaud(r);
    if (suite == "evidence") return detail::verify_evidence(r, opt);
    if (suite == "slack") return detail::verify_slack(r);
    if (suite == "genus") return detail::verify_genus(r);
    throw std::invalid_argument("unknown suite '" + suite + "'");
}

}  // namespace dcover
