#pragma once

#include <string>
#include <vector>

#include "core/config.hpp"
#include "core/gleason.hpp"

namespace qnp::rows {

struct CorrespondenceRow {
    int n = 0;
    long double c = 0;
    std::string bracket_lo, bracket_hi;
    gf2::GF2Poly m2;
    Angle d1;
    Cup p1;
    BitString n1, n2, n3;

    std::string c_display() const;  // decimal expansion cut at 4 digits
};

// Builds one row from an isolated center and cross-checks the orbit data
// against the combinatorial route (rank permutation vs lambda, itinerary
// rotation, class membership, minimality of the inverted kneading word).
CorrespondenceRow assemble_row(const gleason::HyperbolicCenter& center,
                               const gf2::NormalBasis& basis);

// One row per real root of G_n, ascending in c.
std::vector<CorrespondenceRow> build_table(int n, const Config& config);

std::string render_plain(const std::vector<CorrespondenceRow>& rows);
std::string render_csv(const std::vector<CorrespondenceRow>& rows);
std::string render_json(const std::vector<CorrespondenceRow>& rows);

}  // namespace qnp::rows
