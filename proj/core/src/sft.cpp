#include "borelz/sft.hpp"

#include "borelz/errors.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace borelz {

Alphabet::Alphabet(std::uint32_t size) : size_(size) {
    if (size == 0) {
        throw InvalidArgument("alphabet size must be at least 1");
    }
}

GeneratorSet::GeneratorSet(std::vector<std::uint32_t> positives) : values_(std::move(positives)) {
    if (values_.empty()) {
        throw InvalidArgument("generator set is empty");
    }
    std::sort(values_.begin(), values_.end());
    if (values_.front() == 0) {
        throw InvalidArgument("generators must be positive (0 is never a generator)");
    }
    if (std::adjacent_find(values_.begin(), values_.end()) != values_.end()) {
        throw InvalidArgument("generators must be distinct");
    }
    std::uint32_t g = 0;
    for (auto a : values_) {
        g = std::gcd(g, a);
    }
    if (g != 1) {
        throw InvalidArgument("generators " + to_string() + " have gcd " + std::to_string(g) +
                              "; a generating set of Z needs gcd 1");
    }
}

bool GeneratorSet::contains(std::uint32_t a) const noexcept {
    return std::binary_search(values_.begin(), values_.end(), a);
}

std::string GeneratorSet::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(values_[i]);
    }
    return out;
}

GeneratorSet GeneratorSet::parse(const std::string& text) {
    std::vector<std::uint32_t> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        auto first = item.find_first_not_of(" \t");
        auto last = item.find_last_not_of(" \t");
        if (first == std::string::npos) {
            throw InvalidArgument("empty entry in generator list '" + text + "'");
        }
        item = item.substr(first, last - first + 1);
        if (item.empty() || !std::all_of(item.begin(), item.end(), [](unsigned char c) { return std::isdigit(c); })) {
            throw InvalidArgument("generator '" + item + "' is not a positive integer");
        }
        unsigned long value = std::stoul(item);
        if (value > 1'000'000) {
            throw InvalidArgument("generator '" + item + "' is out of range");
        }
        out.push_back(static_cast<std::uint32_t>(value));
    }
    return GeneratorSet(std::move(out));
}

std::optional<std::uint64_t> code_space(std::uint32_t alphabet, std::uint32_t len) {
    std::uint64_t total = 1;
    for (std::uint32_t i = 0; i < len; ++i) {
        if (total > (kMaxCodeSpace - 1) / alphabet) {
            return std::nullopt;
        }
        total *= alphabet;
    }
    return total;
}

WordCode encode(std::span<const Symbol> word, std::uint32_t alphabet) {
    WordCode code = 0;
    for (auto s : word) {
        code = code * alphabet + s;
    }
    return code;
}

Word decode(WordCode code, std::uint32_t alphabet, std::uint32_t len) {
    Word out(len);
    for (std::uint32_t i = len; i-- > 0;) {
        out[i] = static_cast<Symbol>(code % alphabet);
        code /= alphabet;
    }
    return out;
}

std::string format_word(std::span<const Symbol> word, std::uint32_t alphabet) {
    std::string out;
    bool spaced = alphabet > 10;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (spaced && i) out += ' ';
        out += std::to_string(word[i]);
    }
    return out;
}

namespace {

std::uint64_t require_code_space(std::uint32_t alphabet, std::uint32_t len) {
    auto space = code_space(alphabet, len);
    if (!space) {
        throw CapacityError("window codes " + std::to_string(alphabet) + "^" + std::to_string(len) +
                                " do not fit in 63 bits",
                            0, kMaxCodeSpace);
    }
    return *space;
}

} // namespace

Sft::Sft(Alphabet alphabet, std::uint32_t window_len, std::vector<WordCode> forbidden)
    : alphabet_(alphabet), window_len_(window_len), forbidden_(std::move(forbidden)) {
    if (window_len_ == 0) {
        throw InvalidArgument("window length must be at least 1");
    }
    code_space_ = require_code_space(alphabet_.size(), window_len_);
    std::sort(forbidden_.begin(), forbidden_.end());
    forbidden_.erase(std::unique(forbidden_.begin(), forbidden_.end()), forbidden_.end());
    if (!forbidden_.empty() && forbidden_.back() >= code_space_) {
        throw InvalidArgument("forbidden code " + std::to_string(forbidden_.back()) + " outside " +
                              std::to_string(alphabet_.size()) + "^" + std::to_string(window_len_));
    }
}

Sft Sft::coloring(const GeneratorSet& gens, Alphabet colors) {
    Sft sft(colors, gens.max() + 1, {});
    sft.rule_ = gens;
    return sft;
}

bool Sft::rule_forbids(std::span<const Symbol> window) const {
    for (auto a : rule_->values()) {
        for (std::size_t i = 0; i + a < window.size(); ++i) {
            if (window[i] == window[i + a]) {
                return true;
            }
        }
    }
    return false;
}

bool Sft::is_forbidden(WordCode code) const {
    if (rule_) {
        return rule_forbids(decode(code, alphabet_.size(), window_len_));
    }
    return std::binary_search(forbidden_.begin(), forbidden_.end(), code);
}

bool Sft::is_forbidden(std::span<const Symbol> window) const {
    if (window.size() != window_len_) {
        throw InvalidArgument("window of length " + std::to_string(window.size()) + " checked against window length " +
                              std::to_string(window_len_));
    }
    for (auto s : window) {
        if (!alphabet_.contains(s)) {
            throw InvalidArgument("symbol " + std::to_string(s) + " outside alphabet of size " +
                                  std::to_string(alphabet_.size()));
        }
    }
    if (rule_) {
        return rule_forbids(window);
    }
    return std::binary_search(forbidden_.begin(), forbidden_.end(), encode(window, alphabet_.size()));
}

std::vector<WordCode> Sft::forbidden() const {
    if (!rule_) {
        return forbidden_;
    }
    std::vector<WordCode> out;
    Word window(window_len_, 0);
    for (WordCode code = 0; code < code_space_; ++code) {
        if (rule_forbids(window)) {
            out.push_back(code);
        }
        // increment the radix counter in place
        for (std::uint32_t i = window_len_; i-- > 0;) {
            if (++window[i] < alphabet_.size()) break;
            window[i] = 0;
        }
    }
    return out;
}

std::uint64_t Sft::forbidden_count() const {
    return rule_ ? forbidden().size() : forbidden_.size();
}

Sft normalize(Alphabet alphabet, const std::vector<Word>& patterns) {
    std::uint32_t len = 1;
    for (const auto& p : patterns) {
        if (p.empty()) {
            throw InvalidArgument("empty pattern");
        }
        for (auto s : p) {
            if (!alphabet.contains(s)) {
                throw InvalidArgument("symbol " + std::to_string(s) + " outside alphabet of size " +
                                      std::to_string(alphabet.size()));
            }
        }
        len = std::max<std::uint32_t>(len, static_cast<std::uint32_t>(p.size()));
    }
    require_code_space(alphabet.size(), len);

    std::vector<WordCode> codes;
    for (const auto& p : patterns) {
        auto pad = static_cast<std::uint32_t>(len - p.size());
        std::uint64_t fan = *code_space(alphabet.size(), pad);
        WordCode base = encode(p, alphabet.size()) * fan;
        for (std::uint64_t suffix = 0; suffix < fan; ++suffix) {
            codes.push_back(base + suffix);
        }
    }
    return Sft(alphabet, len, std::move(codes));
}

Sft coloring_sft(const GeneratorSet& gens, Alphabet colors) {
    return Sft::coloring(gens, colors);
}

bool is_allowed(const Sft& sft, std::span<const Symbol> word) {
    for (auto s : word) {
        if (!sft.alphabet().contains(s)) {
            throw InvalidArgument("symbol " + std::to_string(s) + " outside alphabet of size " +
                                  std::to_string(sft.alphabet().size()));
        }
    }
    const auto len = sft.window_len();
    for (std::size_t i = 0; i + len <= word.size(); ++i) {
        if (sft.is_forbidden(word.subspan(i, len))) {
            return false;
        }
    }
    return true;
}

} // namespace borelz
