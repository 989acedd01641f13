#include "core/rows.hpp"

#include <cmath>
#include <nlohmann/json.hpp>

#include "core/bijections.hpp"
#include "core/errors.hpp"
#include "core/shiftdyn.hpp"

namespace qnp::rows {

using ordered_json = nlohmann::ordered_json;

std::string CorrespondenceRow::c_display() const {
    // digit prefix of the decimal expansion, 4 places
    long double v = c;
    std::string out;
    if (v < 0) {
        out += '-';
        v = -v;
    }
    auto whole = static_cast<long long>(std::floor(v));
    out += std::to_string(whole);
    out += '.';
    long double frac = v - static_cast<long double>(whole);
    for (int i = 0; i < 4; ++i) {
        frac *= 10;
        int digit = static_cast<int>(std::floor(frac));
        digit = std::clamp(digit, 0, 9);
        out += static_cast<char>('0' + digit);
        frac -= digit;
    }
    return out;
}

namespace {
// lexicographically smallest member of [t] beginning with 1
BitString smallest_member_starting_one(const BitString& t) {
    bool found = false;
    BitString best;
    for (const BitString& base : {t, t.inverted()})
        for (int k = 0; k < t.size(); ++k) {
            BitString r = base.rotated_left(k);
            if (r.bit(0) != 1) continue;
            if (!found || r < best) {
                best = r;
                found = true;
            }
        }
    if (!found) throw ConsistencyError("class without a member starting with 1");
    return best;
}
}  // namespace

CorrespondenceRow assemble_row(const gleason::HyperbolicCenter& center,
                               const gf2::NormalBasis& basis) {
    const BitString& t = center.kneading_word;
    const Cup& sigma = center.orbit_permutation;
    const int n = center.n;
    if (basis.field().n() != n) throw UsageError("normal basis degree does not match the row");

    // orbit ranks must reproduce lambda of the kneading class, with the
    // first orbit point smallest
    InversionClass cls(t);
    if (bij::lambda_map(cls) != sigma)
        throw ConsistencyError("orbit rank permutation disagrees with the symbolic route");
    // r_1 = 1: f_c(0) is the smallest point of the orbit
    for (long double v : center.orbit)
        if (v < center.orbit.front())
            throw ConsistencyError("f_c(0) is not the smallest orbit point");
    // the centre's own itinerary is Itin(sigma) rotated to lead with '*'
    if (bij::itinerary(sigma).kappa_order() != center.kappa.kappa_order())
        throw ConsistencyError("critical-orbit itinerary disagrees with Itin(sigma)");
    // kneading word t: starts with 0, its inversion is the smallest class
    // member starting with 1, and psi+ sends phi(sigma) to [t]
    if (t.bit(0) != 0) throw ConsistencyError("kneading word does not start with 0");
    if (smallest_member_starting_one(t) != t.inverted())
        throw ConsistencyError("inverted kneading word is not minimal in its class");
    if (bij::psi_plus(bij::phi(sigma)) != cls)
        throw ConsistencyError("phi(sigma) does not map back to the kneading class");

    CorrespondenceRow row;
    row.n = n;
    row.c = center.value;
    row.bracket_lo = center.bracket.lo_str();
    row.bracket_hi = center.bracket.hi_str();
    row.d1 = center.kneading_angle;
    row.p1 = sigma;
    row.n3 = t;
    const BitString u = t.bit(n - 1) == 0 ? t : t.inverted();
    row.n2 = bij::xi_inv(u);
    if (Necklace(row.n2) != bij::phi(sigma))
        throw ConsistencyError("xi^-1 of the kneading word misses phi(sigma)");
    row.n1 = bij::wr_psi_string(sigma);
    row.m2 = gf2::reutenauer(Necklace(row.n2), basis);
    return row;
}

std::vector<CorrespondenceRow> build_table(int n, const Config& config) {
    gf2::NormalBasis basis = config.basis_for(n);
    std::vector<CorrespondenceRow> rows;
    for (const auto& center : gleason::real_roots(n, config.precision))
        rows.push_back(assemble_row(center, basis));
    return rows;
}

namespace {
std::vector<std::vector<std::string>> cell_matrix(const std::vector<CorrespondenceRow>& rows) {
    std::vector<std::vector<std::string>> out{{"M1", "M2", "D1", "P1", "N1", "N2", "N3"}};
    for (const auto& r : rows)
        out.push_back({r.c_display(), r.m2.str(), r.d1.str(), r.p1.str(), r.n1.str(),
                       r.n2.str(), r.n3.str()});
    return out;
}
}  // namespace

std::string render_plain(const std::vector<CorrespondenceRow>& rows) {
    auto cells = cell_matrix(rows);
    std::vector<size_t> width(cells[0].size(), 0);
    for (const auto& line : cells)
        for (size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());
    std::string out;
    for (const auto& line : cells) {
        for (size_t i = 0; i < line.size(); ++i) {
            if (i) out += " | ";
            out += line[i];
            if (i + 1 < line.size()) out += std::string(width[i] - line[i].size(), ' ');
        }
        out += '\n';
    }
    return out;
}

std::string render_csv(const std::vector<CorrespondenceRow>& rows) {
    auto cells = cell_matrix(rows);
    cells[0] = {"m1", "m2", "d1", "p1", "n1", "n2", "n3"};
    std::string out;
    for (const auto& line : cells) {
        for (size_t i = 0; i < line.size(); ++i) {
            if (i) out += ',';
            bool quote = line[i].find(',') != std::string::npos;
            if (quote) out += '"';
            out += line[i];
            if (quote) out += '"';
        }
        out += '\n';
    }
    return out;
}

std::string render_json(const std::vector<CorrespondenceRow>& rows) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : rows) {
        ordered_json row;
        row["n"] = r.n;
        row["m1"] = static_cast<double>(r.c);
        row["m1_display"] = r.c_display();
        row["bracket"] = {r.bracket_lo, r.bracket_hi};
        row["m2"] = r.m2.str();
        row["d1"] = r.d1.str();
        row["d1_reduced"] = r.d1.str_reduced();
        row["p1"] = r.p1.str();
        row["n1"] = r.n1.str();
        row["n2"] = r.n2.str();
        row["n3"] = r.n3.str();
        arr.push_back(std::move(row));
    }
    return arr.dump(2) + "\n";
}

}  // namespace qnp::rows
