#include "borelz/formats.hpp"

#include "borelz/errors.hpp"

#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace borelz {

namespace {

class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    // Next line that is neither blank nor a comment.
    bool next(std::string& line) {
        while (std::getline(in_, line)) {
            ++number_;
            auto first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos || line[first] == '#') continue;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw InvalidArgument("line " + std::to_string(number_) + ": " + what);
    }

    std::uint64_t number(const std::string& token) const {
        if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos) {
            fail("expected a nonnegative integer, got '" + token + "'");
        }
        try {
            return std::stoull(token);
        } catch (const std::out_of_range&) {
            fail("integer '" + token + "' out of range");
        }
    }

    std::uint32_t number32(const std::string& token) const {
        auto v = number(token);
        if (v > std::numeric_limits<std::uint32_t>::max()) fail("integer '" + token + "' out of range");
        return static_cast<std::uint32_t>(v);
    }

    std::vector<std::string> tokens(const std::string& line) const {
        std::istringstream ss(line);
        std::vector<std::string> out;
        std::string t;
        while (ss >> t) out.push_back(t);
        return out;
    }

    Word symbols(const std::vector<std::string>& toks, std::size_t from) const {
        Word w;
        for (std::size_t i = from; i < toks.size(); ++i) w.push_back(number32(toks[i]));
        return w;
    }

private:
    std::istream& in_;
    std::size_t number_ = 0;
};

void write_symbols(std::ostream& out, std::span<const Symbol> w) {
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out << ' ';
        out << w[i];
    }
}

} // namespace

Sft read_sft(std::istream& in) {
    LineReader r(in);
    std::string line;
    if (!r.next(line)) r.fail("empty SFT file");
    auto head = r.tokens(line);
    if (head.size() != 2 || head[0] != "alphabet") r.fail("expected 'alphabet <size>'");
    const auto b = r.number32(head[1]);
    if (b == 0) r.fail("alphabet size must be at least 1");

    std::vector<Word> patterns;
    while (r.next(line)) {
        auto w = r.symbols(r.tokens(line), 0);
        for (auto s : w) {
            if (s >= b) r.fail("symbol " + std::to_string(s) + " outside alphabet of size " + std::to_string(b));
        }
        patterns.push_back(std::move(w));
    }
    return normalize(Alphabet(b), patterns);
}

void write_sft(std::ostream& out, const Sft& sft) {
    out << "alphabet " << sft.alphabet().size() << '\n';
    for (auto code : sft.forbidden()) {
        write_symbols(out, decode(code, sft.alphabet().size(), sft.window_len()));
        out << '\n';
    }
}

WitnessFile read_witness(std::istream& in) {
    LineReader r(in);
    std::string line;
    if (!r.next(line)) r.fail("empty witness file");
    auto head = r.tokens(line);
    if (head.size() != 4 || head[0] != "gamma") r.fail("expected 'gamma n p q'");
    WitnessFile w;
    w.n = r.number32(head[1]);
    w.p = r.number32(head[2]);
    w.q = r.number32(head[3]);
    if (!r.next(line)) r.fail("missing 'g' line");
    auto body = r.tokens(line);
    if (body.empty() || body[0] != "g") r.fail("expected 'g' followed by labels");
    w.labeling = r.symbols(body, 1);
    return w;
}

void write_witness(std::ostream& out, const TwoTilesGraph& gamma, std::span<const Symbol> labeling) {
    out << "gamma " << gamma.n() << ' ' << gamma.p() << ' ' << gamma.q() << '\n';
    out << 'g';
    for (auto s : labeling) out << ' ' << s;
    out << '\n';
}

TileFile read_tiles(std::istream& in) {
    LineReader r(in);
    std::string line;
    if (!r.next(line)) r.fail("empty tile file");
    auto head = r.tokens(line);
    if (head.size() != 2 || head[0] != "tiles") r.fail("expected 'tiles ell'");
    TileFile t;
    t.ell = r.number32(head[1]);
    if (!r.next(line)) r.fail("missing c1 line");
    t.c1 = r.symbols(r.tokens(line), 0);
    if (!r.next(line)) r.fail("missing c2 line");
    t.c2 = r.symbols(r.tokens(line), 0);
    return t;
}

void write_tiles(std::ostream& out, const TilePair& tiles) {
    out << "tiles " << tiles.ell << '\n';
    write_symbols(out, tiles.c1);
    out << '\n';
    write_symbols(out, tiles.c2);
    out << '\n';
}

std::string sniff_certificate_kind(std::istream& in) {
    const auto start = in.tellg();
    LineReader r(in);
    std::string line;
    std::string kind;
    if (r.next(line)) {
        auto toks = r.tokens(line);
        if (!toks.empty()) kind = toks[0];
    }
    in.clear();
    in.seekg(start);
    if (kind != "gamma" && kind != "tiles") {
        throw InvalidArgument("not a certificate file (expected a 'gamma' or 'tiles' header)");
    }
    return kind;
}

} // namespace borelz
