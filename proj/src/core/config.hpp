#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include "core/gf2field.hpp"

namespace qnp {

struct Config {
    std::map<int, gf2::GF2Poly> modulus_override;
    std::map<int, std::uint64_t> beta_exponent_override;
    double precision = 1e-12;
    int table_budget = 10;

    gf2::GF2Poly modulus_for(int n) const {
        auto it = modulus_override.find(n);
        return it != modulus_override.end() ? it->second : gf2::default_modulus(n);
    }

    std::optional<std::uint64_t> beta_hint_for(int n) const {
        auto it = beta_exponent_override.find(n);
        if (it != beta_exponent_override.end()) return it->second;
        return gf2::default_beta_exponent_hint(n);
    }

    gf2::NormalBasis basis_for(int n) const {
        return gf2::find_normal_basis(n, modulus_for(n), beta_hint_for(n));
    }
};

}  // namespace qnp
