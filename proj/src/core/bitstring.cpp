#include "core/bitstring.hpp"

#include <bit>

#include "core/errors.hpp"

namespace qnp {

namespace {
std::uint64_t mask(int length) {
    return length == 64 ? ~0ull : (1ull << length) - 1;
}
}  // namespace

BitString::BitString(std::uint64_t bits, int length) : bits_(bits), length_(length) {
    if (length < 1 || length > kMaxLength)
        throw UsageError("bit string length must be in [1, " + std::to_string(kMaxLength) +
                         "], got " + std::to_string(length));
    if (bits_ & ~mask(length_)) throw UsageError("bit string has bits beyond its length");
}

BitString BitString::parse(std::string_view text) {
    if (text.empty()) throw UsageError("empty bit string");
    std::uint64_t bits = 0;
    for (char ch : text) {
        if (ch != '0' && ch != '1')
            throw UsageError(std::string("bit string may contain only '0'/'1', got '") + ch + "'");
        bits = bits << 1 | static_cast<std::uint64_t>(ch == '1');
    }
    return BitString(bits, static_cast<int>(text.size()));
}

std::strong_ordering BitString::operator<=>(const BitString& other) const {
    if (length_ != other.length_)
        throw UsageError("comparing bit strings of different lengths");
    return bits_ <=> other.bits_;
}

BitString BitString::rotated_left(int k) const {
    k %= length_;
    if (k < 0) k += length_;
    if (k == 0) return *this;
    std::uint64_t hi = bits_ >> (length_ - k);
    return BitString(((bits_ << k) & mask(length_)) | hi, length_);
}

BitString BitString::inverted() const {
    return BitString(~bits_ & mask(length_), length_);
}

BitString BitString::doubled() const {
    if (2 * length_ > kMaxLength) throw UsageError("doubled string exceeds maximum length");
    return BitString(bits_ << length_ | bits_, 2 * length_);
}

BitString BitString::first_half() const {
    if (length_ % 2) throw UsageError("half of an odd-length string");
    return BitString(bits_ >> (length_ / 2), length_ / 2);
}

bool BitString::is_doubled() const {
    return length_ % 2 == 0 && first_half().doubled() == *this;
}

int BitString::weight() const {
    return std::popcount(bits_);
}

std::string BitString::str() const {
    std::string out(static_cast<size_t>(length_), '0');
    for (int i = 0; i < length_; ++i)
        if (bit(i)) out[static_cast<size_t>(i)] = '1';
    return out;
}

bool is_primitive(const BitString& s) {
    for (int k = 1; k < s.size(); ++k)
        if (s.rotated_left(k) == s) return false;
    return true;
}

bool is_reflexive(const BitString& s) {
    const BitString inv = s.inverted();
    for (int k = 0; k < s.size(); ++k)
        if (s.rotated_left(k) == inv) return true;
    return false;
}

bool is_k_alternating(const BitString& s, int k) {
    if (k < 1 || s.size() % k != 0)
        throw UsageError("block count " + std::to_string(k) + " does not divide length " +
                         std::to_string(s.size()));
    const int block = s.size() / k;
    std::uint64_t first = s.packed() >> (s.size() - block);
    std::uint64_t blockmask = block == 64 ? ~0ull : (1ull << block) - 1;
    for (int j = 0; j < k; ++j) {
        std::uint64_t piece = (s.packed() >> (s.size() - (j + 1) * block)) & blockmask;
        std::uint64_t want = j % 2 == 0 ? first : ~first & blockmask;
        if (piece != want) return false;
    }
    return true;
}

BitString necklace_canonical(const BitString& s) {
    BitString best = s;
    for (int k = 1; k < s.size(); ++k) {
        BitString r = s.rotated_left(k);
        if (r < best) best = r;
    }
    return best;
}

BitString class_canonical(const BitString& s) {
    BitString a = necklace_canonical(s);
    BitString b = necklace_canonical(s.inverted());
    return a < b ? a : b;
}

SignedBitString SignedBitString::parse(std::string_view text) {
    if (text.size() < 2 || (text.back() != '+' && text.back() != '-'))
        throw UsageError("signed bit string must end in '+' or '-', e.g. 100011-");
    return {BitString::parse(text.substr(0, text.size() - 1)),
            text.back() == '+' ? Sign::Plus : Sign::Minus};
}

}  // namespace qnp
