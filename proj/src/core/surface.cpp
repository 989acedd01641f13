#include "core/surface.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>
#include <sstream>

#include "core/bijections.hpp"
#include "core/counting.hpp"
#include "core/errors.hpp"
#include "core/gleason.hpp"
#include "core/rows.hpp"
#include "core/shiftdyn.hpp"
#include "core/words.hpp"

namespace qnp::surface {

using ordered_json = nlohmann::ordered_json;

Format parse_format(const std::string& text) {
    if (text.empty() || text == "plain") return Format::Plain;
    if (text == "json") return Format::Json;
    if (text == "csv") return Format::Csv;
    throw UsageError("unknown format '" + text + "' (plain, json, csv)");
}

namespace {
std::string lines_or_json(const std::vector<std::string>& items, Format fmt) {
    if (fmt == Format::Json) {
        ordered_json arr = ordered_json::array();
        for (const auto& s : items) arr.push_back(s);
        return arr.dump(2) + "\n";
    }
    std::string out;
    for (const auto& s : items) out += s + "\n";
    return out;
}

std::string lowercase(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(tolower(c)); });
    return s;
}
}  // namespace

std::string enumerate_sets(const std::string& set_name, int n, Format fmt, const Config& config) {
    const std::string name = lowercase(set_name);
    std::vector<std::string> items;
    if (name == "n-" || name == "n+" || name == "n~+") {
        auto set = name == "n-"    ? words::NecklaceSet::NMinus
                   : name == "n+"  ? words::NecklaceSet::NPlus
                                   : words::NecklaceSet::NTildePlus;
        for (const auto& x : words::enumerate_necklaces(set, n)) items.push_back(x.str());
    } else if (name == "nbar" || name == "nbar1" || name == "nbar2") {
        auto set = name == "nbar"    ? words::ClassSet::Nbar
                   : name == "nbar1" ? words::ClassSet::Nbar1
                                     : words::ClassSet::Nbar2;
        for (const auto& x : words::enumerate_classes(set, n)) items.push_back(x.str());
    } else if (name == "cup") {
        for (const auto& sigma : bij::enumerate_cup(n)) items.push_back(sigma.str());
    } else if (name == "i-" || name == "i~+") {
        auto set = name == "i-" ? gf2::IrreducibleSet::IMinus : gf2::IrreducibleSet::ITildePlus;
        for (const auto& f : gf2::enumerate_irreducibles(set, n)) items.push_back(f.str());
    } else if (name == "dbar") {
        if (fmt == Format::Json) {
            ordered_json arr = ordered_json::array();
            for (const auto& dc : gleason::enumerate_dbar(n)) {
                ordered_json item;
                item["class"] = dc.cls.str();
                item["kind"] = dc.kind == words::ClassKind::Nbar1 ? "Dbar1" : "Dbar2";
                ordered_json cycles = ordered_json::array();
                for (const auto& cyc : dc.cycles) {
                    ordered_json angles = ordered_json::array();
                    for (const Angle& a : cyc) angles.push_back(a.str());
                    cycles.push_back(std::move(angles));
                }
                item["cycles"] = std::move(cycles);
                arr.push_back(std::move(item));
            }
            return arr.dump(2) + "\n";
        }
        for (const auto& dc : gleason::enumerate_dbar(n)) {
            std::string line = dc.cls.str();
            line += dc.kind == words::ClassKind::Nbar1 ? " Dbar1" : " Dbar2";
            for (const auto& cyc : dc.cycles) {
                line += "  ";
                for (size_t i = 0; i < cyc.size(); ++i) {
                    if (i) line += " -> ";
                    line += cyc[i].str();
                }
            }
            items.push_back(std::move(line));
        }
    } else {
        throw UsageError("unknown set '" + set_name +
                         "' (n-, n+, n~+, nbar, nbar1, nbar2, cup, i-, i~+, dbar)");
    }
    (void)config;
    return lines_or_json(items, fmt);
}

namespace {
std::string wrap_result(const std::string& map_name, const std::string& input,
                        const std::string& result, Format fmt) {
    if (fmt == Format::Json) {
        ordered_json obj;
        obj["map"] = map_name;
        obj["input"] = input;
        obj["result"] = result;
        return obj.dump(2) + "\n";
    }
    return result + "\n";
}

InversionClass parse_class(const std::string& text) {
    std::string body = text;
    if (body.size() >= 2 && body.front() == '[' && body.back() == ']')
        body = body.substr(1, body.size() - 2);
    return InversionClass(BitString::parse(body));
}

Necklace parse_necklace(const std::string& text) {
    std::string body = text;
    if (body.size() >= 2 && body.front() == '<' && body.back() == '>')
        body = body.substr(1, body.size() - 2);
    return Necklace(BitString::parse(body));
}
}  // namespace

std::string apply_map(const std::string& map_name, const std::string& input, int n,
                      Format fmt, const Config& config) {
    const std::string name = lowercase(map_name);
    std::string result;
    if (name == "xi") {
        result = bij::xi(BitString::parse(input)).str();
    } else if (name == "xi-inv") {
        result = bij::xi_inv(BitString::parse(input)).str();
    } else if (name == "rotate") {
        result = BitString::parse(input).rotated_left(1).str();
    } else if (name == "invert") {
        result = BitString::parse(input).inverted().str();
    } else if (name == "twisted-shift") {
        result = shiftdyn::twisted_shift(BitString::parse(input)).str();
    } else if (name == "extended-twisted-shift") {
        result = shiftdyn::extended_twisted_shift(SignedBitString::parse(input)).str();
    } else if (name == "omega") {
        result = shiftdyn::omega(BitString::parse(input)).str();
    } else if (name == "pm-twisted-shift") {
        result = shiftdyn::pm_twisted_shift(shiftdyn::PmSequence::parse(input)).str();
    } else if (name == "psi-plus") {
        result = bij::psi_plus(parse_necklace(input)).str();
    } else if (name == "theta-plus") {
        result = bij::theta_plus(parse_class(input)).str();
    } else if (name == "phi") {
        result = bij::phi(Cup::parse(input)).str();
    } else if (name == "lambda") {
        result = bij::lambda_map(parse_class(input)).str();
    } else if (name == "wr-phi") {
        result = bij::wr_phi(parse_necklace(input)).str();
    } else if (name == "wr-psi") {
        result = bij::wr_psi(Cup::parse(input)).str();
    } else if (name == "itinerary") {
        result = bij::itinerary(Cup::parse(input)).itin_order();
    } else if (name == "a-of-sigma") {
        result = bij::a_of_sigma(Cup::parse(input)).str();
    } else if (name == "reutenauer") {
        if (n < 1) throw UsageError("reutenauer needs --n for the field degree");
        result = gf2::reutenauer(parse_necklace(input), config.basis_for(n)).str();
    } else if (name == "kneading-sequence") {
        result = gleason::kneading_sequence(Itinerary::parse(input)).str();
    } else if (name == "kneading-angle") {
        result = gleason::kneading_angle(BitString::parse(input)).str();
    } else if (name == "doubling") {
        result = doubling_map(Angle::parse(input)).str();
    } else if (name == "fold") {
        result = fold_min(Angle::parse(input)).str();
    } else if (name == "fold-max") {
        result = fold_max(Angle::parse(input)).str();
    } else {
        throw UsageError("unknown map '" + map_name + "'");
    }
    return wrap_result(name, input, result, fmt);
}

std::string gleason_text(int n, bool mod2, bool factored, Format fmt) {
    if (n < 1 || n > (mod2 ? 18 : 16))
        throw UsageError("gleason polynomial display supports n up to " +
                         std::string(mod2 ? "18" : "16"));
    std::string poly =
        mod2 ? gleason::gleason_mod2(n).str('c') : gleason::gleason_poly(n).str('c');
    std::vector<std::string> factors;
    if (factored) {
        for (const auto& [f, mult] : gf2::factor(gleason::gleason_mod2(n)))
            for (int i = 0; i < mult; ++i) factors.push_back(f.str('c'));
    }
    if (fmt == Format::Json) {
        ordered_json obj;
        obj["n"] = n;
        obj["mod2"] = mod2;
        obj["poly"] = poly;
        if (factored) obj["mod2_factors"] = factors;
        return obj.dump(2) + "\n";
    }
    std::string out = poly + "\n";
    if (factored) {
        out += "mod-2 factors:";
        for (const auto& f : factors) out += " (" + f + ")";
        out += "\n";
    }
    return out;
}

std::string count_text(int n, Format fmt) {
    counting::CountReport r = counting::count_report(n);
    if (fmt == Format::Json) {
        ordered_json obj;
        obj["n"] = r.n;
        obj["gamma"] = r.gamma;
        obj["p"] = r.p;
        obj["c"] = r.c;
        obj["xi"] = r.xi;
        obj["epsilon"] = r.epsilon;
        obj["delta"] = r.delta;
        obj["appendix_verdict"] = r.appendix_verdict;
        if (r.s0) obj["s0"] = *r.s0;
        if (r.s1) obj["s1"] = *r.s1;
        if (r.t_minus) obj["t_minus"] = *r.t_minus;
        if (!r.s1_by_k.empty()) obj["s1_by_k"] = r.s1_by_k;
        if (!r.cup_by_k.empty()) obj["cup_by_k"] = r.cup_by_k;
        if (r.s1_verdict) obj["s1_verdict"] = *r.s1_verdict;
        if (r.s1k_verdict) obj["s1k_verdict"] = *r.s1k_verdict;
        if (r.s0_verdict) obj["s0_verdict"] = *r.s0_verdict;
        return obj.dump(2) + "\n";
    }
    std::ostringstream out;
    out << "n       = " << r.n << '\n';
    out << "gamma   = " << r.gamma << '\n';
    out << "p       = " << r.p << '\n';
    out << "c       = " << r.c << '\n';
    out << "xi      = " << r.xi << '\n';
    out << "epsilon = " << r.epsilon << '\n';
    out << "delta   = " << r.delta << '\n';
    out << "appendix verdict: " << (r.appendix_verdict ? "ok" : "FAIL") << '\n';
    if (r.s0) {
        out << "s0      = " << *r.s0 << '\n';
        out << "s1      = " << *r.s1 << '\n';
        out << "t_minus = " << *r.t_minus << '\n';
        auto list = [&](const char* label, const std::vector<std::uint64_t>& v, int base) {
            out << label << " =";
            for (size_t i = 0; i < v.size(); ++i)
                out << ' ' << base + static_cast<int>(i) << ':' << v[i];
            out << '\n';
        };
        list("s1_by_k ", r.s1_by_k, 0);
        list("cup_by_k", r.cup_by_k, 1);
        out << "s1 verdict: " << (*r.s1_verdict ? "ok" : "FAIL") << '\n';
        out << "s1_by_k verdict: " << (*r.s1k_verdict ? "ok" : "FAIL") << '\n';
        out << "s0 verdict: " << (*r.s0_verdict ? "ok" : "FAIL") << '\n';
    }
    return out.str();
}

std::string table_text(int n, Format fmt, const Config& config) {
    if (n < 1) throw UsageError("table needs n >= 1");
    if (n > config.table_budget)
        throw UsageError("table budget is n <= " + std::to_string(config.table_budget) +
                         "; raise it with --max-n");
    auto rows = rows::build_table(n, config);
    switch (fmt) {
        case Format::Json: return rows::render_json(rows);
        case Format::Csv: return rows::render_csv(rows);
        default: return rows::render_plain(rows);
    }
}

}  // namespace qnp::surface
