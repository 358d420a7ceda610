#include "CLI11.hpp"
#include "json.hpp"

#include "dynheight/fatou.hpp"
#include "dynheight/fixtures.hpp"
#include "dynheight/preperiodic.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

using json = nlohmann::ordered_json;
using namespace dynheight;

namespace {

constexpr unsigned kDigits = 25;

std::string real_str(const Real& r) { return r.str(kDigits); }

json ball_json(const RBall& b) {
    return json{{"value", real_str(b.mid)}, {"error_bound", real_str(b.rad)}};
}

std::vector<Int> parse_coeff_list(const std::string& s) {
    std::vector<Int> out;
    std::string cur;
    for (char c : s + ",") {
        if (c == ',') {
            if (cur.empty()) throw algebra_error("empty coefficient in list: " + s);
            out.emplace_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    return out;
}

ProjPointQ parse_point(const std::string& s) {
    if (s == "inf" || s == "infinity") return ProjPointQ::infinity();
    return ProjPointQ::from_affine(Rat(s));
}

struct MapSource {
    std::string fixture;
    std::string num, den;
    std::string file;
};

RationalMap load_map(const MapSource& src) {
    int given = (!src.fixture.empty()) + (!src.num.empty() || !src.den.empty()) +
                (!src.file.empty());
    if (given != 1)
        throw algebra_error("specify the map via exactly one of --fixture, --num/--den, "
                            "--map-file");
    if (!src.fixture.empty()) return fixtures::by_name(src.fixture);
    if (!src.file.empty()) {
        std::ifstream in(src.file);
        if (!in) throw algebra_error("cannot open map file: " + src.file);
        json j = json::parse(in);
        auto coeffs = [](const json& arr) {
            std::vector<Int> v;
            for (const auto& c : arr)
                v.emplace_back(c.is_string() ? Int(c.get<std::string>())
                                             : Int(c.get<long long>()));
            return v;
        };
        return RationalMap::from_affine(coeffs(j.at("num")), coeffs(j.at("den")));
    }
    if (src.num.empty() || src.den.empty())
        throw algebra_error("--num and --den must be given together");
    return RationalMap::from_affine(parse_coeff_list(src.num), parse_coeff_list(src.den));
}

json form_json(const HomForm& f) {
    json arr = json::array();
    for (const Int& c : f.coeffs()) arr.push_back(c.str());
    return arr;
}

json place_key_list(const std::set<Int>& primes) {
    json arr = json::array();
    for (const Int& p : primes) arr.push_back(p.str());
    return arr;
}

void emit(const json& j, bool as_json) {
    if (as_json) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    // flat human-readable rendering of the same content
    std::function<void(const json&, const std::string&)> walk =
        [&](const json& node, const std::string& prefix) {
            if (node.is_object()) {
                for (auto it = node.begin(); it != node.end(); ++it)
                    walk(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key());
            } else if (node.is_array()) {
                size_t i = 0;
                for (const auto& el : node) walk(el, prefix + "[" + std::to_string(i++) + "]");
            } else {
                std::cout << prefix << " = "
                          << (node.is_string() ? node.get<std::string>() : node.dump())
                          << "\n";
            }
        };
    walk(j, "");
}

AlgebraicSet catalog_union(const PreperiodicCatalog& cat) {
    if (cat.entries.empty()) throw algebra_error("empty preperiodic catalog");
    std::optional<HomForm> prod;
    for (const CatalogEntry& e : cat.entries)
        prod = prod ? *prod * e.set.form() : e.set.form();
    return AlgebraicSet(*prod);
}

json green_report_json(const GreenReport& rep) {
    json per = json::object();
    for (const auto& [place, ball] : rep.per_place) {
        json entry = ball_json(ball);
        auto it = rep.exact.find(place);
        if (it != rep.exact.end()) {
            entry["rational"] = it->second.str();
            entry["times"] = "log " + place.p.str();
        }
        per[place.key()] = entry;
    }
    return json{{"per_place", per},
                {"total", ball_json(rep.total)},
                {"set_size", rep.set_size},
                {"orbit_size", rep.orbit_size}};
}

struct Options {
    MapSource src;
    std::string point = "inf";
    unsigned precision = 256;
    double tol = 1e-10;
    bool as_json = false;
    int max_m = 2;
    long long prime_budget = 100;
    double truncation = 10.0;
    std::vector<long long> s_primes;
};

int run(int argc, char** argv) {
    CLI::App app{"canonical heights, Green pairings, and dynamical certificates on P^1(Q)"};
    app.require_subcommand(1);

    Options opt;
    if (const char* env = std::getenv("DYNHEIGHT_PRECISION")) opt.precision = std::stoul(env);

    auto add_common = [&](CLI::App* sub, bool needs_point) {
        sub->add_option("--fixture", opt.src.fixture,
                        "built-in map name (example1, example2, example3, psi)");
        sub->add_option("--num", opt.src.num, "numerator coefficients, descending, comma-separated");
        sub->add_option("--den", opt.src.den, "denominator coefficients, descending, comma-separated");
        sub->add_option("--map-file", opt.src.file, "JSON file with num/den coefficient arrays");
        sub->add_option("--precision", opt.precision, "working precision in bits (>= 64)");
        sub->add_option("--tol", opt.tol, "target tolerance for approximate quantities");
        sub->add_flag("--json", opt.as_json, "emit JSON instead of flat text");
        if (needs_point)
            sub->add_option("--point", opt.point, "rational point: inf, an integer, or a/b");
        return sub;
    };

    CLI::App* analyze = add_common(app.add_subcommand(
        "analyze", "degree, resultant, and reduction type of the map"), false);
    CLI::App* height = add_common(app.add_subcommand(
        "height", "canonical height of a rational point, by two independent methods"), true);
    CLI::App* preper = add_common(app.add_subcommand(
        "preperiodic", "catalog of preperiodic point batches up to max-m"), false);
    preper->add_option("--max-m", opt.max_m, "largest iterate index m in the (m,n) sweep");
    CLI::App* gamma = add_common(app.add_subcommand(
        "gamma", "place-by-place Green pairing average of a catalog union against a point"), true);
    gamma->add_option("--max-m", opt.max_m, "largest iterate index m in the (m,n) sweep");
    CLI::App* verify = add_common(app.add_subcommand(
        "verify-identity", "check that the Green average equals the canonical height"), true);
    verify->add_option("--m,--max-m", opt.max_m, "largest iterate index m in the (m,n) sweep");
    verify->add_option("-S,--primes", opt.s_primes,
                       "finite places of S (the archimedean place is always included)");
    CLI::App* sint = add_common(app.add_subcommand(
        "s-integral", "S-integrality of each catalog batch with respect to a point"), true);
    sint->add_option("--max-m", opt.max_m, "largest iterate index m in the (m,n) sweep");
    sint->add_option("-S,--primes", opt.s_primes,
                     "finite places of S (the archimedean place is always included)");
    CLI::App* fatou = add_common(app.add_subcommand(
        "fatou", "per-place Fatou membership certificates for a point"), true);
    fatou->add_option("--prime-budget", opt.prime_budget, "largest prime checked individually");
    CLI::App* trend = add_common(app.add_subcommand(
        "equidist-trend", "truncated Green averages over growing catalogs"), true);
    trend->add_option("--max-m", opt.max_m, "largest iterate index m in the (m,n) sweep");
    trend->add_option("--truncation", opt.truncation, "truncation level M");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (opt.precision < 64) throw algebra_error("precision must be at least 64 bits");
        if (!(opt.tol > 0)) throw algebra_error("tolerance must be positive");
        set_precision_bits(opt.precision);
        Real tol(opt.tol);
        RationalMap map = load_map(opt.src);

        if (analyze->parsed()) {
            json j{{"degree", map.degree()},
                   {"num", form_json(map.F())},
                   {"den", form_json(map.G())},
                   {"resultant", map.res().str()},
                   {"bad_primes", place_key_list(bad_primes(map))}};
            emit(j, opt.as_json);
            return 0;
        }

        if (height->parsed()) {
            ProjPointQ p = parse_point(opt.point);
            CanonicalHeightResult lim = canonical_height_limit(map, p, tol);
            CanonicalHeightResult loc = canonical_height_local(map, p, tol);
            json j{{"point", opt.point},
                   {"weil_height", real_str(weil_height_point(p))},
                   {"canonical_height_limit",
                    json{{"value", real_str(lim.value)},
                         {"error_bound", real_str(lim.error_bound)}}},
                   {"canonical_height_local",
                    json{{"value", real_str(loc.value)},
                         {"error_bound", real_str(loc.error_bound)}}}};
            emit(j, opt.as_json);
            return 0;
        }

        if (preper->parsed()) {
            PreperiodicCatalog cat = enumerate_preperiodic_sets(map, opt.max_m);
            json entries = json::array();
            for (const CatalogEntry& e : cat.entries)
                entries.push_back(json{{"m", e.m},
                                       {"n", e.n},
                                       {"size", e.set.size()},
                                       {"raw_degree", e.raw_degree},
                                       {"all_integral", e.all_integral},
                                       {"form", form_json(e.set.form())}});
            json j{{"entries", entries},
                   {"cumulative_size", cat.cumulative_size},
                   {"budget_exceeded", cat.budget_exceeded}};
            emit(j, opt.as_json);
            return 0;
        }

        if (gamma->parsed()) {
            ProjPointQ p = parse_point(opt.point);
            PreperiodicCatalog cat = enumerate_preperiodic_sets(map, opt.max_m);
            GreenReport rep = gamma_total(map, catalog_union(cat), AlgebraicSet::of_point(p), tol);
            emit(green_report_json(rep), opt.as_json);
            return 0;
        }

        if (verify->parsed()) {
            ProjPointQ p = parse_point(opt.point);
            PreperiodicCatalog cat = enumerate_preperiodic_sets(map, opt.max_m);
            GreenReport rep = gamma_total(map, catalog_union(cat), AlgebraicSet::of_point(p), tol);
            CanonicalHeightResult h = canonical_height_limit(map, p, tol);
            Real residual = abs(rep.total.mid - h.value);
            Real bound = rep.total.rad + h.error_bound + tol;
            std::set<Int> s_set;
            for (long long q : opt.s_primes) s_set.insert(Int(q));
            for (const Int& q : bad_primes(map)) s_set.insert(q);
            bool ok = residual <= bound;
            json j{{"gamma", ball_json(rep.total)},
                   {"canonical_height",
                    json{{"value", real_str(h.value)}, {"error_bound", real_str(h.error_bound)}}},
                   {"residual", real_str(residual)},
                   {"combined_bound", real_str(bound)},
                   {"s_primes", place_key_list(s_set)},
                   {"verified", ok}};
            emit(j, opt.as_json);
            return ok ? 0 : 2;
        }

        if (sint->parsed()) {
            ProjPointQ p = parse_point(opt.point);
            PreperiodicCatalog cat = enumerate_preperiodic_sets(map, opt.max_m);
            std::set<Int> s_set;
            for (long long q : opt.s_primes) s_set.insert(Int(q));
            AlgebraicSet orbit = AlgebraicSet::of_point(p);
            json entries = json::array();
            bool all = true;
            for (const CatalogEntry& e : cat.entries) {
                IntegralityVerdict v = s_integral_test(map, e.set, orbit, s_set);
                all = all && v.integral;
                json wit = json::array();
                for (const auto& [q, val] : v.witnesses)
                    wit.push_back(json{{"prime", q.str()}, {"valuation", val}});
                entries.push_back(json{{"m", e.m},
                                       {"n", e.n},
                                       {"integral", v.integral},
                                       {"witnesses", wit}});
            }
            emit(json{{"entries", entries}, {"all_integral", all}}, opt.as_json);
            return 0;
        }

        if (fatou->parsed()) {
            ProjPointQ p = parse_point(opt.point);
            FatouReport rep = totally_fatou_report(map, p, Int(opt.prime_budget), tol);
            json per = json::object();
            for (const auto& [place, entry] : rep.per_place)
                per[place.key()] = json{{"certified", entry.certified}, {"note", entry.note}};
            emit(json{{"per_place", per}, {"others_certified", rep.others_certified}},
                 opt.as_json);
            return 0;
        }

        if (trend->parsed()) {
            ProjPointQ p = parse_point(opt.point);
            PreperiodicCatalog cat = enumerate_preperiodic_sets(map, opt.max_m);
            std::vector<TrendRow> rows =
                equidistribution_report(map, p, cat, Real(opt.truncation), tol);
            json arr = json::array();
            for (const TrendRow& r : rows)
                arr.push_back(json{{"cumulative_degree", r.cumulative_degree},
                                   {"average", ball_json(r.truncated_average)}});
            emit(json{{"rows", arr}}, opt.as_json);
            return 0;
        }
    } catch (const map_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    } catch (const green_error& e) {
        std::cerr << "unsupported case: " << e.what() << "\n";
        return 1;
    } catch (const algebra_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    } catch (const numeric_error& e) {
        std::cerr << "numeric error (raise --precision): " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
