#pragma once

/// @file fibration.hpp
/// Numerical data of a hyperelliptic fibration of genus (p-1)/2 over a curve
/// of genus q, given by the classes and ramification types of the branch
/// points of h : C -> P^1, and the resulting chi values.

#include "dcover/exactmath/primes.hpp"
#include "dcover/exactmath/rational.hpp"
#include "dcover/xi_calc.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace dcover {

struct BranchPointDatum {
    SingularityClass cls = SingularityClass::I;
    RamificationType lambda;

    /// 1 for classes II and IV.
    unsigned d() const noexcept { return class_b(cls); }
    bool in_pole_set() const noexcept { return class_a(cls) == 1; }
};

struct FibrationDatum {
    std::uint64_t p = 5;
    std::uint64_t q = 2;
    std::vector<BranchPointDatum> points;
};

/// Sum over class III/IV points of R+1 (tame) or p*j (wild).
inline std::uint64_t alpha_of(const FibrationDatum& f) {
    std::uint64_t a = 0;
    for (const auto& b : f.points) {
        if (!b.in_pole_set()) continue;
        a += b.lambda.is_wild() ? f.p * b.lambda.j : b.lambda.R + 1;
    }
    return a;
}

inline std::uint64_t d_of(const FibrationDatum& f) {
    std::uint64_t d = 0;
    for (const auto& b : f.points) d += b.d();
    return d;
}

inline std::uint64_t ramification_total(const FibrationDatum& f) {
    std::uint64_t s = 0;
    for (const auto& b : f.points) s += b.lambda.R;
    return s;
}

struct Check {
    std::string name;
    bool pass = true;
    std::string detail;
};

struct ValidationReport {
    std::vector<Check> checks;

    bool ok() const {
        for (const auto& c : checks) {
            if (!c.pass) return false;
        }
        return true;
    }
    std::string first_failure() const {
        for (const auto& c : checks) {
            if (!c.pass) return c.name + ": " + c.detail;
        }
        return "";
    }
};

inline ValidationReport validate(const FibrationDatum& f) {
    ValidationReport r;
    const bool p_ok = f.p >= 5 && is_prime(f.p);
    r.checks.push_back({"p is a prime >= 5", p_ok, "p=" + std::to_string(f.p)});
    r.checks.push_back({"q >= 2", f.q >= 2, "q=" + std::to_string(f.q)});
    if (!p_ok) return r;
    for (std::size_t i = 0; i < f.points.size(); ++i) {
        const auto& b = f.points[i];
        const std::string who = "point " + std::to_string(i) + " (" + to_string(b.cls) + ", " + b.lambda.str() + ")";
        auto v = b.lambda.violations(f.p);
        for (const auto& fl : b.lambda.flags(f.p)) v.push_back(fl);
        if (!v.empty()) r.checks.push_back({"ramification type", false, who + ": " + v.front()});
        if (b.cls == SingularityClass::I && b.lambda.R == 0) {
            r.checks.push_back({"class I is ramified", false, who + ": R must be >= 1"});
        }
    }
    const std::uint64_t alpha = alpha_of(f);
    const std::uint64_t d = d_of(f);
    const std::uint64_t sum_r = ramification_total(f);
    const std::uint64_t hurwitz = 2 * alpha + 2 * (f.q - 1);
    r.checks.push_back({"Hurwitz 2*alpha + 2(q-1) = sum R", f.q >= 1 && hurwitz == sum_r,
                        std::to_string(hurwitz) + " vs " + std::to_string(sum_r)});
    r.checks.push_back({"alpha + d even", (alpha + d) % 2 == 0,
                        "alpha=" + std::to_string(alpha) + ", d=" + std::to_string(d)});
    r.checks.push_back({"alpha >= 1", alpha >= 1, "alpha=" + std::to_string(alpha)});
    return r;
}

namespace detail {

inline void require_valid(const FibrationDatum& f) {
    const auto r = validate(f);
    if (!r.ok()) throw std::invalid_argument("invalid fibration datum: " + r.first_failure());
}

inline Rational require_integral(const Rational& v, const char* what) {
    if (!v.is_integer()) throw std::logic_error(std::string(what) + " is not an integer: " + v.str());
    return v;
}

}  // namespace detail

/// (p-3)(q-1)/2 + (p-1)/4 * alpha + sum_b ((p-1) d_b / 4 - xi_b), without validation.
inline Rational chi_fine_formula(const FibrationDatum& f) {
    const BigInt p = f.p;
    Rational chi = Rational((p - 3) * (BigInt(f.q) - 1), BigInt(2)) + Rational((p - 1) * alpha_of(f), BigInt(4));
    for (const auto& b : f.points) {
        chi += Rational((p - 1) * b.d(), BigInt(4)) - Rational(xi_type(b.cls, b.lambda, f.p));
    }
    return chi;
}

/// chi(O_{X0}) = (p-3)(q-1)/2 + (p-1)(alpha+d)/4.
inline Rational chi_normalized_cover(const FibrationDatum& f) {
    detail::require_valid(f);
    const BigInt p = f.p;
    const Rational v = Rational((p - 3) * (f.q - 1), BigInt(2)) + Rational((p - 1) * (alpha_of(f) + d_of(f)), BigInt(4));
    return detail::require_integral(v, "chi(O_X0)");
}

/// chi(O_X) of the smooth model.
inline Rational chi_smooth_model(const FibrationDatum& f) {
    detail::require_valid(f);
    return detail::require_integral(chi_fine_formula(f), "chi(O_X)");
}

inline long long xi_total(const FibrationDatum& f) {
    long long s = 0;
    for (const auto& b : f.points) s += xi_type(b.cls, b.lambda, f.p);
    return s;
}

struct EvidenceResult {
    Rational chi;
    Rational bound;
    bool pass = false;
};

/// chi(O_X) >= (p^2 - 4p - 1)(q - 1)/(4p).
inline EvidenceResult evidence_bound_check(const FibrationDatum& f) {
    const Rational chi = chi_smooth_model(f);
    const BigInt p = f.p;
    const Rational bound((p * p - 4 * p - 1) * (f.q - 1), 4 * p);
    return {chi, bound, chi >= bound};
}

/// Random data that satisfy validate(): a few pole points (class III/IV),
/// some class II points, parity fixed with an unramified class II point, and
/// the Hurwitz deficit filled with class I points.
class FibrationGenerator {
public:
    explicit FibrationGenerator(std::uint64_t seed) : rng_(seed) {}

    FibrationDatum operator()(std::uint64_t p, std::uint64_t q) {
        require_odd_prime(p, "generator");
        if (p < 5 || q < 2) throw std::invalid_argument("generator needs p >= 5 and q >= 2");
        for (;;) {
            FibrationDatum f{p, q, {}};
            const unsigned poles = 1 + pick(3);
            for (unsigned i = 0; i < poles; ++i) {
                const auto cls = pick(2) == 0 ? SingularityClass::III : SingularityClass::IV;
                f.points.push_back({cls, pick(3) == 0 ? random_wild(p) : random_tame(p, 2 * p)});
            }
            const unsigned twos = pick(3);
            for (unsigned i = 0; i < twos; ++i) f.points.push_back({SingularityClass::II, random_tame(p, p)});
            if ((alpha_of(f) + d_of(f)) % 2 == 1) f.points.push_back({SingularityClass::II, RamificationType::tame(0)});
            const std::uint64_t need = 2 * alpha_of(f) + 2 * (q - 1);
            std::uint64_t have = ramification_total(f);
            if (have > need) continue;
            while (have < need) {
                const std::uint64_t gap = need - have;
                RamificationType lam = RamificationType::tame(1);
                if (gap >= 2 * p && pick(6) == 0) {
                    lam = random_wild_first(p);
                } else {
                    lam = RamificationType::tame(1 + pick(static_cast<unsigned>(std::min<std::uint64_t>(gap, p - 2))));
                }
                if (lam.R > gap) lam = RamificationType::tame(1);
                f.points.push_back({SingularityClass::I, lam});
                have += lam.R;
            }
            if (validate(f).ok()) return f;
        }
    }

private:
    unsigned pick(unsigned n) { return static_cast<unsigned>(rng_() % n); }

    RamificationType random_tame(std::uint64_t p, std::uint64_t max_r) {
        for (;;) {
            const std::uint64_t R = rng_() % (max_r + 1);
            if ((R + 1) % p != 0) return RamificationType::tame(R);
        }
    }
    RamificationType random_wild(std::uint64_t p) {
        const std::uint64_t j = 1 + rng_() % 2;
        return RamificationType::wild(j, p * j + rng_() % (p - 1));
    }
    RamificationType random_wild_first(std::uint64_t p) { return RamificationType::wild(1, p + rng_() % (p - 1)); }

    std::mt19937_64 rng_;
};

using ordered_json = nlohmann::ordered_json;

inline ordered_json to_json(const FibrationDatum& f) {
    ordered_json j;
    j["p"] = f.p;
    j["q"] = f.q;
    j["points"] = ordered_json::array();
    for (const auto& b : f.points) {
        ordered_json e;
        e["class"] = to_string(b.cls);
        e["kind"] = b.lambda.is_wild() ? "wild" : "tame";
        e["R"] = b.lambda.R;
        if (b.lambda.is_wild()) e["j"] = b.lambda.j;
        j["points"].push_back(std::move(e));
    }
    return j;
}

/// Canonical text: two-space indentation and a trailing newline.
inline std::string dump_datum(const FibrationDatum& f) { return to_json(f).dump(2) + "\n"; }

namespace detail {

inline std::uint64_t json_nat(const ordered_json& j, const char* key) {
    if (!j.contains(key)) throw std::invalid_argument(std::string("datum: missing field '") + key + "'");
    const auto& v = j.at(key);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
        throw std::invalid_argument(std::string("datum: field '") + key + "' must be a natural number");
    }
    return v.get<std::uint64_t>();
}

inline void only_keys(const ordered_json& j, std::initializer_list<const char*> keys, const std::string& where) {
    for (const auto& [k, v] : j.items()) {
        bool known = false;
        for (const char* allowed : keys) known = known || k == allowed;
        if (!known) throw std::invalid_argument("datum: unknown field '" + k + "' in " + where);
    }
}

}  // namespace detail

inline FibrationDatum datum_from_json(const ordered_json& j) {
    if (!j.is_object()) throw std::invalid_argument("datum: expected an object");
    detail::only_keys(j, {"p", "q", "points"}, "datum");
    FibrationDatum f;
    f.p = detail::json_nat(j, "p");
    f.q = detail::json_nat(j, "q");
    if (!j.contains("points") || !j.at("points").is_array()) throw std::invalid_argument("datum: 'points' must be an array");
    for (const auto& e : j.at("points")) {
        if (!e.is_object()) throw std::invalid_argument("datum: each point must be an object");
        detail::only_keys(e, {"class", "kind", "R", "j"}, "point");
        if (!e.contains("class") || !e.at("class").is_string()) throw std::invalid_argument("datum: point needs 'class'");
        if (!e.contains("kind") || !e.at("kind").is_string()) throw std::invalid_argument("datum: point needs 'kind'");
        BranchPointDatum b;
        b.cls = parse_class(e.at("class").get<std::string>());
        const auto kind = e.at("kind").get<std::string>();
        const std::uint64_t R = detail::json_nat(e, "R");
        if (kind == "tame") {
            if (e.contains("j")) throw std::invalid_argument("datum: tame point must not carry 'j'");
            b.lambda = RamificationType::tame(R);
        } else if (kind == "wild") {
            b.lambda = RamificationType::wild(detail::json_nat(e, "j"), R);
        } else {
            throw std::invalid_argument("datum: kind must be 'tame' or 'wild', got '" + kind + "'");
        }
        f.points.push_back(b);
    }
    return f;
}

inline FibrationDatum parse_datum(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("datum: ") + e.what());
    }
    return datum_from_json(j);
}

}  // namespace dcover
