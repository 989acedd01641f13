#include "core/verify.hpp"

#include <algorithm>
#include <atomic>
#include <nlohmann/json.hpp>
#include <sstream>
#include <thread>

#include "core/bijections.hpp"
#include "core/counting.hpp"
#include "core/errors.hpp"
#include "core/gleason.hpp"
#include "core/rows.hpp"
#include "core/shiftdyn.hpp"
#include "core/words.hpp"

namespace qnp::verify {

using ordered_json = nlohmann::ordered_json;

namespace {

class Cell {
public:
    Cell(std::string suite, int n, std::vector<Check>& out)
        : suite_(std::move(suite)), n_(n), out_(out) {}

    void check(const std::string& name, bool pass, const std::string& detail = "") {
        out_.push_back({suite_, name, n_, pass, pass ? "" : detail});
    }

    template <typename Fn>
    void guarded(const std::string& name, Fn&& fn) {
        try {
            fn();
        } catch (const std::exception& e) {
            check(name, false, e.what());
        }
    }

private:
    std::string suite_;
    int n_;
    std::vector<Check>& out_;
};

std::vector<BitString> class_members_starting_one(const InversionClass& y) {
    std::vector<BitString> out;
    const BitString& c = y.canonical();
    for (const BitString& base : {c, c.inverted()})
        for (int k = 0; k < c.size(); ++k) {
            BitString r = base.rotated_left(k);
            if (r.bit(0) == 1 && std::find(out.begin(), out.end(), r) == out.end())
                out.push_back(r);
        }
    return out;
}

void run_dynamics(int n, const Config&, std::vector<Check>& out) {
    Cell cell("dynamics", n, out);

    cell.guarded("semiconjugacy", [&] {
        bool ok = true, sig_ok = true;
        std::string detail;
        for (std::uint64_t v = 0; v < (1ull << n) && ok; ++v) {
            BitString s(v, n);
            auto lhs = shiftdyn::pm_twisted_shift(shiftdyn::omega(s));
            auto rhs = shiftdyn::omega(s.rotated_left(1));
            if (lhs != rhs) {
                ok = false;
                detail = "mismatch at " + s.str();
            }
            if ((shiftdyn::omega(s).signature() == -1) != (s.weight() % 2 == 1)) sig_ok = false;
        }
        cell.check("semiconjugacy", ok, detail);
        cell.check("signature_parity", sig_ok, "signature disagrees with weight parity");
    });

    cell.guarded("orbit_freeness", [&] {
        bool distinct = true, structure = true, leading = true;
        std::string detail;
        for (const auto& cls : words::enumerate_classes(words::ClassSet::Nbar, n)) {
            BitString t = class_members_starting_one(cls).front();
            if (words::classify(cls) == words::ClassKind::Nbar2) {
                for (const BitString& w : shiftdyn::f_orbit(t))
                    if (w.bit(0) != 1) leading = false;
            } else {
                auto orbit = shiftdyn::ftilde_orbit(t);
                const int half = n / 2;
                for (int i = 0; i < half; ++i) {
                    const auto& a = orbit[static_cast<size_t>(i)];
                    const auto& b = orbit[static_cast<size_t>(i + half)];
                    if (a.word != b.word || a.sign == b.sign) structure = false;
                    if (a.word.bit(0) != 1) leading = false;
                }
            }
        }
        cell.check("orbit_freeness", distinct, detail);
        cell.check("extended_orbit_structure", structure,
                   "halves of an extended orbit do not mirror");
        cell.check("orbit_leading_one", leading, "twisted-shift orbit left the 1-leading cone");
    });

    if (n >= 2) cell.guarded("doubling_classes", [&] {
        auto classes = gleason::enumerate_dbar(n);
        cell.check("dbar_count", classes.size() == counting::gamma(n),
                   "expected gamma_n involution classes");
        bool cyc_ok = true, tag_ok = true;
        for (const auto& dc : classes) {
            for (const auto& cyc : dc.cycles)
                for (size_t i = 0; i < cyc.size(); ++i)
                    if (doubling_map(cyc[i]) != cyc[(i + 1) % cyc.size()]) cyc_ok = false;
            // self-paired exactly when the digit class is reflexive
            bool self = dc.kind == words::ClassKind::Nbar1;
            if (self != (dc.cycles.size() == 1)) tag_ok = false;
            if (!self && dc.cycles.size() == 2) {
                // the two cycles are swapped by x -> -x
                const auto& a = dc.cycles[0];
                const auto& b = dc.cycles[1];
                for (const Angle& x : a) {
                    Angle neg{(x.denominator() - x.numerator) % x.denominator(), x.period};
                    if (std::find(b.begin(), b.end(), neg) == b.end()) tag_ok = false;
                }
            }
        }
        cell.check("dbar_cycles_double", cyc_ok, "cycle member not the double of its predecessor");
        cell.check("dbar_involution_pairing", tag_ok, "involution pairing broken");
    });
}

void run_bijections(int n, const Config&, std::vector<Check>& out) {
    Cell cell("bijections", n, out);
    const auto cups = bij::enumerate_cup(n);
    const auto tildeplus = words::enumerate_necklaces(words::NecklaceSet::NTildePlus, n);
    const auto nbar = words::enumerate_classes(words::ClassSet::Nbar, n);
    const std::uint64_t g = counting::gamma(n);

    cell.check("cup_count", cups.size() == g,
               "|CUP| = " + std::to_string(cups.size()) + ", gamma = " + std::to_string(g));
    cell.check("set_counts", tildeplus.size() == g && nbar.size() == g,
               "|NTilde+| or |Nbar| differs from gamma");

    cell.guarded("round_trips", [&] {
        for (const auto& x : tildeplus)
            if (bij::theta_plus(bij::psi_plus(x)) != x)
                throw ConsistencyError("theta(psi(<" + x.str() + ">)) differs");
        for (const auto& y : nbar)
            if (bij::psi_plus(bij::theta_plus(y)) != y)
                throw ConsistencyError("psi(theta(" + y.str() + ")) differs");
        cell.check("round_trips", true);
    });

    cell.guarded("cycle_identities", [&] {
        for (const auto& x : tildeplus)
            if (bij::phi(bij::lambda_map(bij::psi_plus(x))) != x)
                throw ConsistencyError("phi.lambda.psi+ moved <" + x.str() + ">");
        for (const auto& sigma : cups)
            if (bij::lambda_map(bij::psi_plus(bij::phi(sigma))) != sigma)
                throw ConsistencyError("lambda.psi+.phi moved " + sigma.str());
        for (const auto& y : nbar)
            if (bij::psi_plus(bij::phi(bij::lambda_map(y))) != y)
                throw ConsistencyError("psi+.phi.lambda moved " + y.str());
        cell.check("cycle_identities", true);
    });

    cell.guarded("psi_restriction", [&] {
        for (const auto& x : tildeplus) {
            bool doubled = !x.primitive();
            auto kind = words::classify(bij::psi_plus(x));
            bool want1 = doubled;
            if ((kind == words::ClassKind::Nbar1) != want1)
                throw ConsistencyError("psi+ image of <" + x.str() + "> in the wrong part");
        }
        cell.check("psi_restriction", true);
    });

    cell.guarded("lambda_representative_independence", [&] {
        for (const auto& y : nbar) {
            const Cup expect = bij::lambda_map(y);
            for (const BitString& t : class_members_starting_one(y)) {
                Cup got = words::classify(y) == words::ClassKind::Nbar2
                              ? [&] {
                                    auto orbit = shiftdyn::f_orbit(t);
                                    std::vector<BitString> sorted = orbit;
                                    std::sort(sorted.begin(), sorted.end());
                                    std::vector<int> cyc;
                                    for (const auto& w : orbit)
                                        cyc.push_back(static_cast<int>(
                                                          std::lower_bound(sorted.begin(),
                                                                           sorted.end(), w) -
                                                          sorted.begin()) +
                                                      1);
                                    return Cup::from_cycle(cyc);
                                }()
                              : [&] {
                                    auto orbit = shiftdyn::ftilde_orbit(t);
                                    auto sorted = orbit;
                                    std::sort(sorted.begin(), sorted.end());
                                    std::vector<int> cyc;
                                    for (const auto& w : orbit)
                                        cyc.push_back(static_cast<int>(
                                                          std::lower_bound(sorted.begin(),
                                                                           sorted.end(), w) -
                                                          sorted.begin()) +
                                                      1);
                                    return Cup::from_cycle(cyc);
                                }();
                if (got != expect)
                    throw ConsistencyError("lambda depends on the representative for " + y.str());
            }
        }
        cell.check("lambda_representative_independence", true);
    });

    cell.guarded("orbit_minimum_is_predecessor", [&] {
        // the 1-leading version of xi(A(sigma)) is the image under the
        // twisted shift of its orbit's lexicographic minimum
        for (const auto& sigma : cups) {
            BitString t = bij::xi(bij::a_of_sigma(sigma));
            BitString u = t.bit(0) == 1 ? t : t.inverted();
            InversionClass cls(u);
            if (words::classify(cls) == words::ClassKind::Nbar2) {
                auto orbit = shiftdyn::f_orbit(u);
                BitString m = *std::min_element(orbit.begin(), orbit.end());
                if (shiftdyn::twisted_shift(m) != u)
                    throw ConsistencyError("orbit minimum is not the predecessor of " + u.str());
            } else {
                auto orbit = shiftdyn::ftilde_orbit(u);
                auto m = *std::min_element(orbit.begin(), orbit.end());
                if (shiftdyn::extended_twisted_shift(m).word != u)
                    throw ConsistencyError("extended orbit minimum is not the predecessor of " +
                                           u.str());
            }
        }
        cell.check("orbit_minimum_is_predecessor", true);
    });

    cell.guarded("satellite_matches_doubling", [&] {
        for (const auto& sigma : cups)
            if (bij::is_satellite_cup(sigma) != !is_primitive(bij::a_of_sigma(sigma)))
                throw ConsistencyError("satellite test disagrees at " + sigma.str());
        cell.check("satellite_matches_doubling", true);
    });
}

void run_weiss_rogers(int n, const Config&, std::vector<Check>& out) {
    Cell cell("weiss_rogers", n, out);
    cell.guarded("inverse_pair", [&] {
        for (const auto& x : words::enumerate_necklaces(words::NecklaceSet::NMinus, n))
            if (bij::wr_psi(bij::wr_phi(x)) != x)
                throw ConsistencyError("Psi.Phi moved <" + x.str() + ">");
        for (const auto& sigma : bij::enumerate_cup(n))
            if (bij::wr_phi(bij::wr_psi(sigma)) != sigma)
                throw ConsistencyError("Phi.Psi moved " + sigma.str());
        cell.check("inverse_pair", true);
    });
}

void run_gf2(int n, const Config& config, std::vector<Check>& out) {
    Cell cell("gf2", n, out);
    cell.guarded("irreducible_counts", [&] {
        auto iminus = gf2::enumerate_irreducibles(gf2::IrreducibleSet::IMinus, n);
        auto itilde = gf2::enumerate_irreducibles(gf2::IrreducibleSet::ITildePlus, n);
        const std::uint64_t g = counting::gamma(n);
        cell.check("irreducible_counts", iminus.size() == g && itilde.size() == g,
                   "|I-| = " + std::to_string(iminus.size()) + ", |I~+| = " +
                       std::to_string(itilde.size()) + ", gamma = " + std::to_string(g));

        gf2::NormalBasis basis = config.basis_for(n);
        auto image_matches = [&](words::NecklaceSet ns, const std::vector<gf2::GF2Poly>& want,
                                 const char* name) {
            std::vector<gf2::GF2Poly> image;
            bool parity_ok = true;
            for (const auto& x : words::enumerate_necklaces(ns, n)) {
                gf2::GF2Poly f = gf2::reutenauer(x, basis);
                int d = f.degree();
                int trace = f.coeff(d - 1);
                int core_weight = x.primitive() ? x.weight() : x.canonical().first_half().weight();
                if (trace != core_weight % 2) parity_ok = false;
                image.push_back(std::move(f));
            }
            std::sort(image.begin(), image.end());
            if (std::adjacent_find(image.begin(), image.end()) != image.end())
                cell.check(name, false, "correspondence is not injective");
            else
                cell.check(name, image == want, "image set differs");
            cell.check(std::string(name) + "_trace_parity", parity_ok,
                       "trace bit does not match weight parity");
        };
        image_matches(words::NecklaceSet::NMinus,
                      gf2::enumerate_irreducibles(gf2::IrreducibleSet::IMinus, n),
                      "reutenauer_onto_iminus");
        image_matches(words::NecklaceSet::NTildePlus,
                      gf2::enumerate_irreducibles(gf2::IrreducibleSet::ITildePlus, n),
                      "reutenauer_onto_itildeplus");
    });

    cell.guarded("gleason_factor_set", [&] {
        auto factors = gf2::factor(gleason::gleason_mod2(n));
        bool squarefree = true, dichotomy = true;
        std::vector<gf2::GF2Poly> set;
        for (auto& [f, mult] : factors) {
            if (mult != 1) squarefree = false;
            int d = f.degree();
            if (!((d == n && gf2::is_centered(f)) ||
                  (n % 2 == 0 && d == n / 2 && !gf2::is_centered(f))))
                dichotomy = false;
            set.push_back(std::move(f));
        }
        std::sort(set.begin(), set.end());
        cell.check("gleason_mod2_squarefree", squarefree, "repeated factor");
        cell.check("factor_degree_dichotomy", dichotomy,
                   "factor of unexpected degree or centering");
        cell.check("factors_equal_itildeplus",
                   set == gf2::enumerate_irreducibles(gf2::IrreducibleSet::ITildePlus, n),
                   "factor set of the mod-2 Gleason polynomial is not ITilde+");
    });
}

void run_gleason(int n, const Config& config, std::vector<Check>& out) {
    Cell cell("gleason", n, out);

    cell.guarded("product_identity", [&] {
        IntPoly prod = IntPoly::monomial(0);
        for (int d = 1; d <= n; ++d)
            if (n % d == 0) prod = prod * gleason::gleason_poly(d);
        cell.check("product_identity", prod == gleason::qn(n),
                   "product of divisor polynomials differs from Q_n");
    });

    cell.guarded("mod2_crosscheck", [&] {
        const IntPoly& g = gleason::gleason_poly(n);
        gf2::GF2Poly reduced;
        for (int i = 0; i <= g.degree(); ++i)
            if (mpz_odd_p(g.coeff(i).get_mpz_t())) reduced.set_coeff(i, 1);
        cell.check("mod2_crosscheck", reduced == gleason::gleason_mod2(n),
                   "native mod-2 recursion disagrees with big-integer reduction");
    });

    cell.guarded("headline_counts", [&] {
        const std::uint64_t g = counting::gamma(n);
        auto centers = gleason::real_roots(n, config.precision);
        auto factors = gf2::factor(gleason::gleason_mod2(n));
        cell.check("headline_counts", centers.size() == g && factors.size() == g,
                   std::to_string(centers.size()) + " roots vs " +
                       std::to_string(factors.size()) + " factors vs gamma " + std::to_string(g));

        bool brackets_ok = true, widths_ok = true;
        const IntPoly& poly = gleason::gleason_poly(n);
        for (const auto& hc : centers) {
            int slo = poly.sign_at_dyadic(hc.bracket.lo, hc.bracket.k);
            int shi = poly.sign_at_dyadic(hc.bracket.hi, hc.bracket.k);
            if (slo * shi >= 0) brackets_ok = false;
            if (hc.bracket.hi_value() - hc.bracket.lo_value() >
                static_cast<long double>(config.precision))
                widths_ok = false;
        }
        cell.check("bracket_signs", brackets_ok, "bracket without an exact sign change");
        cell.check("bracket_widths", widths_ok, "bracket wider than the precision target");

        bool order_ok = true, closest_ok = true;
        for (size_t i = 0; i + 1 < centers.size(); ++i) {
            if (!(centers[i].value < centers[i + 1].value)) order_ok = false;
            // ascending c must give strictly descending kneading angles
            const Angle &a = centers[i].kneading_angle, &b = centers[i + 1].kneading_angle;
            if (!(a.numerator > b.numerator)) order_ok = false;
        }
        for (const auto& hc : centers) {
            // the kneading angle is the orbit member closest to 1/2:
            // minimize |2a - (2^n - 1)| over the doubling orbit
            const Angle theta = hc.kneading_angle;
            auto dist = [&](const Angle& x) {
                std::int64_t d = 2 * static_cast<std::int64_t>(x.numerator) -
                                 static_cast<std::int64_t>(x.denominator());
                return d < 0 ? -d : d;
            };
            Angle cur = theta;
            for (int i = 0; i < n; ++i) {
                if (dist(cur) < dist(theta)) closest_ok = false;
                cur = doubling_map(cur);
            }
        }
        cell.check("milnor_thurston_order", order_ok,
                   "centers and kneading angles are not anti-monotone");
        cell.check("angle_closest_to_half", closest_ok,
                   "kneading angle is not the closest orbit member to 1/2");

        gf2::NormalBasis basis = config.basis_for(n);
        for (const auto& hc : centers) rows::assemble_row(hc, basis);
        cell.check("orbit_correspondence", true);
    });
}

void run_counting(int n, const Config&, std::vector<Check>& out) {
    Cell cell("counting", n, out);
    static const std::uint64_t table_one[11] = {0, 1, 1, 1, 2, 3, 5, 9, 16, 28, 51};

    cell.guarded("gamma", [&] {
        const std::uint64_t g = counting::gamma(n);
        if (n <= 10)
            cell.check("gamma_table", g == table_one[n],
                       "gamma_" + std::to_string(n) + " = " + std::to_string(g));
        std::uint64_t classes = words::enumerate_classes(words::ClassSet::Nbar, n).size();
        cell.check("gamma_counts_classes", g == classes,
                   "gamma = " + std::to_string(g) + ", classes = " + std::to_string(classes));
    });

    cell.guarded("appendix", [&] {
        auto r = counting::appendix_counts(n);
        std::uint64_t p = 0, c = 0, xi = 0, eps = 0;
        for (std::uint64_t v = 0; v < (1ull << n); ++v) {
            BitString s(v, n);
            if (!is_primitive(s)) continue;
            ++p;
            bool refl = is_reflexive(s);
            if (refl) ++xi;
            if (necklace_canonical(s) == s) {
                ++c;
                if (refl) ++eps;
            }
        }
        cell.check("appendix_formulas", r.p == p && r.c == c && r.xi == xi && r.epsilon == eps,
                   "formula and enumeration disagree");
        cell.check("appendix_verdict", r.appendix_verdict,
                   n % 2 ? "c != 2 gamma" : "epsilon + delta != gamma");
    });

    if (n % 2 == 0) cell.guarded("lemma_alternating", [&] {
        const int half = n / 2;
        for (std::uint64_t v = 0; v < (1ull << half); ++v) {
            BitString h(v, half);
            BitString s(h.packed() << half | h.inverted().packed(), n);
            bool nonprim = !is_primitive(s);
            bool alt = false;
            for (int m = 3; m <= half; m += 2)
                if (half % m == 0 && is_k_alternating(h, m)) alt = true;
            if (nonprim != alt)
                throw ConsistencyError("alternating criterion fails at " + h.str());
        }
        cell.check("lemma_alternating", true);
    });

    if (n >= 2 && n <= 24) cell.guarded("subset_sums", [&] {
        auto r = counting::subset_sum_counts(n);
        cell.check("s1_equals_gamma", r.s1_verdict.value_or(false),
                   "|S1| = " + std::to_string(*r.s1) + " vs gamma");
        cell.check("s1_by_size_matches_cup", r.s1k_verdict.value_or(false),
                   "size-k subset counts do not match the shifted CUP tallies");
        cell.check("s0_equals_odd_necklaces", r.s0_verdict.value_or(false),
                   "|S0| = " + std::to_string(*r.s0) + ", |T-| = " + std::to_string(*r.t_minus));
    });
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"bijections", "weiss_rogers", "gf2",
                                                "gleason",    "counting",     "dynamics"};
    return names;
}

int default_budget(const std::string& suite) {
    if (suite == "gleason") return 10;
    if (suite == "gf2") return 12;
    if (suite == "counting") return 16;
    return 14;
}

std::vector<Check> run(const std::vector<std::string>& suites, std::optional<int> max_n,
                       int jobs, const Config& config) {
    std::vector<std::string> wanted = suites;
    if (wanted.empty()) wanted = suite_names();
    for (const auto& s : wanted)
        if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end())
            throw UsageError("unknown suite '" + s + "'");

    struct Task {
        std::string suite;
        int n;
    };
    std::vector<Task> tasks;
    for (const auto& s : suite_names()) {
        if (std::find(wanted.begin(), wanted.end(), s) == wanted.end()) continue;
        int budget = max_n.value_or(default_budget(s));
        for (int n = 1; n <= budget; ++n) tasks.push_back({s, n});
    }

    std::vector<std::vector<Check>> results(tasks.size());
    auto run_task = [&](size_t i) {
        const Task& t = tasks[i];
        try {
            if (t.suite == "bijections")
                run_bijections(t.n, config, results[i]);
            else if (t.suite == "weiss_rogers")
                run_weiss_rogers(t.n, config, results[i]);
            else if (t.suite == "gf2")
                run_gf2(t.n, config, results[i]);
            else if (t.suite == "gleason")
                run_gleason(t.n, config, results[i]);
            else if (t.suite == "counting")
                run_counting(t.n, config, results[i]);
            else
                run_dynamics(t.n, config, results[i]);
        } catch (const std::exception& e) {
            results[i].push_back({t.suite, "cell", t.n, false, e.what()});
        }
    };

    if (jobs <= 1) {
        for (size_t i = 0; i < tasks.size(); ++i) run_task(i);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        for (int w = 0; w < jobs; ++w)
            pool.emplace_back([&] {
                for (size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1))
                    run_task(i);
            });
        for (auto& th : pool) th.join();
    }

    std::vector<Check> out;
    for (auto& r : results) out.insert(out.end(), r.begin(), r.end());
    std::sort(out.begin(), out.end(), [](const Check& a, const Check& b) {
        if (a.suite != b.suite) return a.suite < b.suite;
        if (a.n != b.n) return a.n < b.n;
        return a.name < b.name;
    });
    return out;
}

std::string render_plain(const std::vector<Check>& checks) {
    std::ostringstream out;
    size_t failed = 0;
    for (const auto& c : checks) {
        out << (c.pass ? "PASS" : "FAIL") << ' ' << c.suite << '/' << c.name << " n=" << c.n;
        if (!c.pass) {
            out << " : " << c.detail;
            ++failed;
        }
        out << '\n';
    }
    out << checks.size() - failed << " of " << checks.size() << " checks passed\n";
    return out.str();
}

std::string render_json(const std::vector<Check>& checks) {
    ordered_json arr = ordered_json::array();
    for (const auto& c : checks) {
        ordered_json item;
        item["suite"] = c.suite;
        item["name"] = c.name;
        item["n"] = c.n;
        item["pass"] = c.pass;
        if (!c.pass) item["detail"] = c.detail;
        arr.push_back(std::move(item));
    }
    return arr.dump(2) + "\n";
}

std::string render_csv(const std::vector<Check>& checks) {
    std::string out = "suite,name,n,pass,detail\n";
    for (const auto& c : checks) {
        std::string detail = c.detail;
        for (char& ch : detail)
            if (ch == ',' || ch == '\n') ch = ';';
        out += c.suite + "," + c.name + "," + std::to_string(c.n) + "," +
               (c.pass ? "true" : "false") + "," + detail + "\n";
    }
    return out;
}

}  // namespace qnp::verify
