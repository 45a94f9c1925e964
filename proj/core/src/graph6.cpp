#include "triquad/graph6.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace triquad {

namespace {

constexpr int g6_max_n = 62;  // short form only

std::size_t payload_bytes(int n) {
    const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    return (bits + 5) / 6;
}

}  // namespace

std::string to_graph6(const Graph& g) {
    const int n = g.vertex_count();
    if (n > g6_max_n)
        throw std::invalid_argument("graph6 short form requires n <= 62, got " +
                                    std::to_string(n));
    std::string out;
    out.reserve(1 + payload_bytes(n));
    out.push_back(static_cast<char>(n + 63));
    int group = 0, filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            group = group << 1 | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(group + 63));
                group = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0)  // pad with trailing zeros
        out.push_back(static_cast<char>((group << (6 - filled)) + 63));
    return out;
}

Graph parse_graph6(std::string_view text) {
    if (!text.empty() && text.back() == '\n') text.remove_suffix(1);
    if (text.empty()) throw Graph6Error("empty graph6 input");
    for (std::size_t i = 0; i < text.size(); ++i) {
        const unsigned char c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126)
            throw Graph6Error("byte " + std::to_string(static_cast<int>(c)) +
                              " at offset " + std::to_string(i) +
                              " outside graph6 range 63..126");
    }
    if (text[0] == '~')
        throw Graph6Error("long-form graph6 (n > 62) is not supported");
    const int n = text[0] - 63;
    const std::size_t expect = payload_bytes(n);
    if (text.size() - 1 < expect)
        throw Graph6Error("truncated graph6 payload: need " +
                          std::to_string(expect) + " bytes, got " +
                          std::to_string(text.size() - 1));
    if (text.size() - 1 > expect)
        throw Graph6Error("trailing bytes after graph6 payload");

    std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
    std::size_t bit = 0;
    const std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
    for (std::size_t b = 1; b < text.size(); ++b) {
        const int group = text[b] - 63;
        for (int k = 5; k >= 0; --k, ++bit) {
            const int value = group >> k & 1;
            if (bit >= nbits) {
                if (value) throw Graph6Error("nonzero padding bits");
                continue;
            }
            if (value) {
                // bit index -> (i, j): columns j = 1..n-1, rows i = 0..j-1
                std::size_t p = bit;
                int j = 1;
                while (p >= static_cast<std::size_t>(j)) {
                    p -= static_cast<std::size_t>(j);
                    ++j;
                }
                const int i = static_cast<int>(p);
                rows[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
                rows[static_cast<std::size_t>(j)] |= std::uint64_t{1} << i;
            }
        }
    }
    return Graph::from_rows(n, rows);
}

}  // namespace triquad
