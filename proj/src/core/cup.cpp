#include "core/cup.hpp"

#include <algorithm>

#include "core/errors.hpp"

namespace qnp {

CyclicUnimodalPermutation::CyclicUnimodalPermutation(std::vector<int> images)
    : images_(std::move(images)) {
    const int n = static_cast<int>(images_.size());
    if (n < 1) throw UsageError("empty permutation");
    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    for (int v : images_) {
        if (v < 1 || v > n || seen[static_cast<size_t>(v)])
            throw UsageError("not a permutation of 1..n");
        seen[static_cast<size_t>(v)] = 1;
    }
    int x = 1, period = 0;
    do {
        x = apply(x);
        ++period;
    } while (x != 1 && period <= n);
    if (period != n) throw UsageError("permutation is not a single n-cycle");
    m_ = [&] {
        for (int k = 1; k <= n; ++k)
            if (apply(k) == 1) return k;
        throw UsageError("no preimage of 1");
    }();
    for (int i = 1; i < m_; ++i)
        if (apply(i) <= apply(i + 1)) throw UsageError("permutation is not unimodal");
    for (int i = m_; i < n; ++i)
        if (apply(i) >= apply(i + 1)) throw UsageError("permutation is not unimodal");
}

CyclicUnimodalPermutation CyclicUnimodalPermutation::from_cycle(
    const std::vector<int>& cycle_from_one) {
    const int n = static_cast<int>(cycle_from_one.size());
    if (n < 1) throw UsageError("empty cycle");
    std::vector<int> images(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        int from = cycle_from_one[static_cast<size_t>(i)];
        int to = cycle_from_one[static_cast<size_t>((i + 1) % n)];
        if (from < 1 || from > n) throw UsageError("cycle entry out of range");
        if (images[static_cast<size_t>(from) - 1] != 0) throw UsageError("repeated cycle entry");
        images[static_cast<size_t>(from) - 1] = to;
    }
    for (int v : images)
        if (v == 0) throw UsageError("cycle does not cover 1..n");
    return CyclicUnimodalPermutation(std::move(images));
}

CyclicUnimodalPermutation CyclicUnimodalPermutation::parse(std::string_view text) {
    if (text.size() < 3 || text.front() != '(' || text.back() != ')')
        throw UsageError("permutation must be written in cycle notation, e.g. (1432)");
    std::string_view body = text.substr(1, text.size() - 2);
    std::vector<int> cycle;
    if (body.find(',') != std::string_view::npos) {
        size_t pos = 0;
        while (pos <= body.size()) {
            size_t comma = body.find(',', pos);
            std::string tok(body.substr(pos, comma == std::string_view::npos ? comma : comma - pos));
            if (tok.empty()) throw UsageError("empty cycle entry");
            cycle.push_back(std::stoi(tok));
            if (comma == std::string_view::npos) break;
            pos = comma + 1;
        }
    } else {
        for (char ch : body) {
            if (ch < '1' || ch > '9') throw UsageError("cycle digits must be 1..9; use commas for n >= 10");
            cycle.push_back(ch - '0');
        }
    }
    if (cycle.empty() || cycle.front() != 1) throw UsageError("cycle must start at 1");
    return from_cycle(cycle);
}

std::vector<int> CyclicUnimodalPermutation::cycle_from_one() const {
    std::vector<int> out;
    out.reserve(images_.size());
    int x = 1;
    for (int i = 0; i < size(); ++i) {
        out.push_back(x);
        x = apply(x);
    }
    return out;
}

std::string CyclicUnimodalPermutation::str() const {
    std::vector<int> cyc = cycle_from_one();
    std::string out = "(";
    for (size_t i = 0; i < cyc.size(); ++i) {
        if (size() >= 10 && i) out += ',';
        out += std::to_string(cyc[i]);
    }
    return out + ")";
}

std::string Itinerary::itin_order() const { return symbols; }

std::string Itinerary::kappa_order() const {
    return symbols.back() + symbols.substr(0, symbols.size() - 1);
}

Itinerary Itinerary::parse(std::string_view text) {
    if (text.empty()) throw UsageError("empty itinerary");
    int stars = 0;
    for (char ch : text) {
        if (ch == '*')
            ++stars;
        else if (ch != '+' && ch != '-')
            throw UsageError("itinerary symbols are '+', '-', '*'");
    }
    if (stars != 1) throw UsageError("itinerary must contain exactly one '*'");
    std::string s(text);
    if (s.front() == '*') s = s.substr(1) + '*';  // kappa order -> itin order
    if (s.back() != '*') throw UsageError("the '*' must be first or last");
    return Itinerary{s};
}

}  // namespace qnp
