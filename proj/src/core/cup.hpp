#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace qnp {

// Single n-cycle whose image sequence decreases on [1,m] and increases on
// [m,n], where sigma(m) = 1.
class CyclicUnimodalPermutation {
public:
    CyclicUnimodalPermutation() = default;
    // images[i-1] = sigma(i); validates cyclicity and unimodality
    explicit CyclicUnimodalPermutation(std::vector<int> images);

    // cycle notation starting at 1: "(165324)", or comma-separated for n >= 10
    static CyclicUnimodalPermutation parse(std::string_view text);
    static CyclicUnimodalPermutation from_cycle(const std::vector<int>& cycle_from_one);

    int size() const { return static_cast<int>(images_.size()); }
    int apply(int k) const { return images_[static_cast<size_t>(k) - 1]; }
    int turning_point() const { return m_; }  // the m with sigma(m) = 1

    std::vector<int> cycle_from_one() const;
    const std::vector<int>& images() const { return images_; }

    bool operator==(const CyclicUnimodalPermutation&) const = default;
    auto operator<=>(const CyclicUnimodalPermutation& o) const { return images_ <=> o.images_; }

    std::string str() const;

private:
    std::vector<int> images_;
    int m_ = 0;
};

using Cup = CyclicUnimodalPermutation;

// Symbol word over {+,-,*}; exactly one '*'. Stored with the '*' last
// ("Itin order"); kappa order puts it first.
struct Itinerary {
    std::string symbols;

    int size() const { return static_cast<int>(symbols.size()); }
    std::string itin_order() const;
    std::string kappa_order() const;

    static Itinerary parse(std::string_view text);

    bool operator==(const Itinerary&) const = default;
};

}  // namespace qnp
