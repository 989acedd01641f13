#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace qnp {

// Fixed-length binary word. Bit s1 (the leftmost symbol of the text form)
// sits at the most significant position of the packed field, so that for
// equal lengths the packed value orders words lexicographically.
class BitString {
public:
    static constexpr int kMaxLength = 32;

    BitString() = default;
    BitString(std::uint64_t bits, int length);

    static BitString parse(std::string_view text);

    int size() const { return length_; }
    // position 0 is the leftmost symbol
    int bit(int pos) const { return static_cast<int>(bits_ >> (length_ - 1 - pos)) & 1; }
    std::uint64_t packed() const { return bits_; }

    BitString rotated_left(int k) const;
    BitString inverted() const;
    BitString doubled() const;          // s -> ss
    BitString first_half() const;       // defined for even length
    bool is_doubled() const;            // s == hh for the length/2 prefix h

    int weight() const;

    bool operator==(const BitString&) const = default;
    std::strong_ordering operator<=>(const BitString& other) const;

    std::string str() const;

private:
    std::uint64_t bits_ = 0;
    int length_ = 0;
};

bool is_primitive(const BitString& s);
bool is_reflexive(const BitString& s);
bool is_k_alternating(const BitString& s, int k);

// Lexicographically smallest rotation.
BitString necklace_canonical(const BitString& s);
// Smallest over all rotations of s and of its inversion.
BitString class_canonical(const BitString& s);

class Necklace {
public:
    Necklace() = default;
    explicit Necklace(const BitString& any_representative)
        : rep_(necklace_canonical(any_representative)) {}

    const BitString& canonical() const { return rep_; }
    int size() const { return rep_.size(); }
    int weight() const { return rep_.weight(); }
    bool primitive() const { return is_primitive(rep_); }

    bool operator==(const Necklace&) const = default;
    auto operator<=>(const Necklace& o) const { return rep_ <=> o.rep_; }

    std::string str() const { return rep_.str(); }

private:
    BitString rep_;
};

class InversionClass {
public:
    InversionClass() = default;
    explicit InversionClass(const BitString& any_representative)
        : rep_(class_canonical(any_representative)) {}

    const BitString& canonical() const { return rep_; }
    int size() const { return rep_.size(); }
    bool primitive() const { return is_primitive(rep_); }

    bool operator==(const InversionClass&) const = default;
    auto operator<=>(const InversionClass& o) const { return rep_ <=> o.rep_; }

    std::string str() const { return "[" + rep_.str() + "]"; }

private:
    BitString rep_;
};

enum class Sign : int { Minus = 0, Plus = 1 };

inline Sign flipped(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }

// Extended binary string s^± ordered word-first, with s^- < s^+.
struct SignedBitString {
    BitString word;
    Sign sign = Sign::Minus;

    bool operator==(const SignedBitString&) const = default;
    std::strong_ordering operator<=>(const SignedBitString& o) const {
        if (auto c = word <=> o.word; c != 0) return c;
        return static_cast<int>(sign) <=> static_cast<int>(o.sign);
    }

    std::string str() const { return word.str() + (sign == Sign::Plus ? "+" : "-"); }
    static SignedBitString parse(std::string_view text);
};

}  // namespace qnp
