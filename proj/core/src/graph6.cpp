#include "symcol/graph6.hpp"

#include <vector>

#include "symcol/errors.hpp"

namespace symcol {

namespace {

constexpr int kBias = 63;
constexpr int kMaxShort = 62;
constexpr int kMaxMedium = 258047;

int decode_byte(char c) {
    const int value = static_cast<unsigned char>(c) - kBias;
    if (value < 0 || value > 63)
        throw InputError("graph6: byte " + std::to_string(static_cast<unsigned char>(c)) +
                         " outside the printable range 63..126");
    return value;
}

} // namespace

Graph parse_graph6(std::string_view text) {
    if (!text.empty() && text.back() == '\n') text.remove_suffix(1);
    if (text.empty()) throw InputError("graph6: empty input");

    std::size_t pos = 0;
    long n = 0;
    if (text[0] != '~') {
        n = decode_byte(text[0]);
        pos = 1;
    } else {
        if (text.size() >= 2 && text[1] == '~')
            throw InputError("graph6: eight-byte size prefix is not supported");
        if (text.size() < 4) throw InputError("graph6: truncated size prefix");
        n = (static_cast<long>(decode_byte(text[1])) << 12) |
            (static_cast<long>(decode_byte(text[2])) << 6) | decode_byte(text[3]);
        if (n <= kMaxShort) throw InputError("graph6: non-minimal size prefix");
        pos = 4;
    }

    const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - (n > 0)) / 2;
    const std::size_t expected = (bits + 5) / 6;
    if (text.size() - pos != expected)
        throw InputError("graph6: expected " + std::to_string(expected) + " data bytes for n=" +
                         std::to_string(n) + ", found " + std::to_string(text.size() - pos));

    std::vector<Edge> edges;
    std::size_t k = 0;
    for (long j = 1; j < n; ++j)
        for (long i = 0; i < j; ++i, ++k) {
            const int byte = decode_byte(text[pos + k / 6]);
            if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
        }
    for (std::size_t p = pos; p < text.size(); ++p) decode_byte(text[p]);
    if (bits % 6 != 0) {
        const int last = decode_byte(text.back());
        if (last & ((1 << (6 - bits % 6)) - 1)) throw InputError("graph6: non-zero padding bits");
    }
    return Graph(static_cast<int>(n), edges);
}

std::string serialize_graph6(const Graph& g) {
    const int n = g.order();
    if (n < 0 || n > kMaxMedium)
        throw InputError("graph6: order " + std::to_string(n) + " exceeds supported range");
    std::string out;
    if (n <= kMaxShort) {
        out.push_back(static_cast<char>(n + kBias));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
        out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
        out.push_back(static_cast<char>((n & 63) + kBias));
    }
    int acc = 0;
    int filled = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + kBias));
                acc = 0;
                filled = 0;
            }
        }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
    return out;
}

} // namespace symcol
