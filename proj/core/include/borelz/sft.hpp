#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace borelz {

using Symbol = std::uint32_t;
using Word = std::vector<Symbol>;

// Base-b radix encoding of a fixed-length word, position 0 most significant.
using WordCode = std::uint64_t;

// Largest code space the engine accepts: every word of the window length must
// encode strictly below this.
inline constexpr std::uint64_t kMaxCodeSpace = std::uint64_t{1} << 63;

class Alphabet {
public:
    explicit Alphabet(std::uint32_t size);

    std::uint32_t size() const noexcept { return size_; }
    bool contains(Symbol s) const noexcept { return s < size_; }

    friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
    std::uint32_t size_;
};

// Positive members a_1 < ... < a_n of a symmetric generating set of Z.
class GeneratorSet {
public:
    // Sorts and validates; throws InvalidArgument on an empty list, a
    // nonpositive entry, a duplicate, or gcd != 1.
    explicit GeneratorSet(std::vector<std::uint32_t> positives);

    const std::vector<std::uint32_t>& values() const noexcept { return values_; }
    std::size_t size() const noexcept { return values_.size(); }
    std::uint32_t min() const noexcept { return values_.front(); }
    std::uint32_t max() const noexcept { return values_.back(); }
    bool contains(std::uint32_t a) const noexcept;

    // "1,5,8"
    std::string to_string() const;
    static GeneratorSet parse(const std::string& text);

    friend bool operator==(const GeneratorSet&, const GeneratorSet&) = default;
    friend auto operator<=>(const GeneratorSet&, const GeneratorSet&) = default;

private:
    std::vector<std::uint32_t> values_;
};

// b^len, or nullopt when it reaches kMaxCodeSpace.
std::optional<std::uint64_t> code_space(std::uint32_t alphabet, std::uint32_t len);

WordCode encode(std::span<const Symbol> word, std::uint32_t alphabet);
Word decode(WordCode code, std::uint32_t alphabet, std::uint32_t len);

// "0 1 2" / "012"-style rendering used by reports and DOT labels. Symbols
// above 9 are separated by spaces, otherwise concatenated.
std::string format_word(std::span<const Symbol> word, std::uint32_t alphabet);

// Subshift of finite type over {0..b-1} with forbidden patterns all of length
// window_len. Two backings: an explicit sorted code list, or a coloring rule
// (window p is forbidden iff p(i) == p(i+a) for some generator a) whose
// forbidden list is only materialized on request.
class Sft {
public:
    Sft(Alphabet alphabet, std::uint32_t window_len, std::vector<WordCode> forbidden);

    static Sft coloring(const GeneratorSet& gens, Alphabet colors);

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    std::uint32_t window_len() const noexcept { return window_len_; }
    std::uint64_t code_space() const noexcept { return code_space_; }

    // Set for SFTs produced by coloring_sft.
    const std::optional<GeneratorSet>& coloring_rule() const noexcept { return rule_; }

    bool is_forbidden(WordCode code) const;
    bool is_forbidden(std::span<const Symbol> window) const;

    // Sorted ascending. Enumerates the whole code space for rule-backed SFTs.
    std::vector<WordCode> forbidden() const;
    std::uint64_t forbidden_count() const;

private:
    bool rule_forbids(std::span<const Symbol> window) const;

    Alphabet alphabet_;
    std::uint32_t window_len_;
    std::uint64_t code_space_;
    std::vector<WordCode> forbidden_;
    std::optional<GeneratorSet> rule_;
};

// Brings patterns of mixed length to a common window length (the longest
// pattern) by extending shorter ones to the right with every suffix.
Sft normalize(Alphabet alphabet, const std::vector<Word>& patterns);

Sft coloring_sft(const GeneratorSet& gens, Alphabet colors);

// True iff no forbidden pattern occurs as a contiguous subword. Words shorter
// than the window are always allowed.
bool is_allowed(const Sft& sft, std::span<const Symbol> word);

} // namespace borelz
