#include "sombor/graph6.hpp"

#include <istream>
#include <sstream>

namespace sombor {

namespace {

constexpr int kOffset = 63;   // printable range starts at '?'
constexpr int kMaxByte = 126; // '~' introduces multi-byte sizes

std::size_t data_bytes_for(int n) {
    const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    return (bits + 5) / 6;
}

} // namespace

Graph parse_graph6(std::string_view record) {
    if (record.empty()) throw MalformedHeaderError("empty graph6 record");
    for (char c : record) {
        const int b = static_cast<unsigned char>(c);
        if (b < kOffset || b > kMaxByte)
            throw MalformedHeaderError("byte out of graph6 range: code " + std::to_string(b));
    }
    const int first = static_cast<unsigned char>(record[0]);
    if (first == kMaxByte)
        throw MalformedHeaderError("multi-byte size fields (n > 62) are not supported");
    const int n = first - kOffset;

    const std::size_t need = data_bytes_for(n);
    if (record.size() - 1 < need)
        throw TruncatedBitsError("graph6 record for n=" + std::to_string(n) + " needs " +
                                 std::to_string(need) + " data bytes, got " +
                                 std::to_string(record.size() - 1));
    if (record.size() - 1 > need)
        throw MalformedHeaderError("graph6 record has trailing bytes");

    std::vector<std::pair<int, int>> edges;
    std::size_t bit = 0;
    const std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row, ++bit) {
            const int byte = static_cast<unsigned char>(record[1 + bit / 6]) - kOffset;
            if (byte & (1 << (5 - static_cast<int>(bit % 6)))) edges.emplace_back(row, col);
        }
    }
    // padding bits must be zero
    for (; bit < need * 6; ++bit) {
        const int byte = static_cast<unsigned char>(record[1 + bit / 6]) - kOffset;
        if (byte & (1 << (5 - static_cast<int>(bit % 6))))
            throw NonCanonicalPaddingError("nonzero padding bit in graph6 record");
    }
    (void)nbits;
    return Graph::from_edge_list(n, edges);
}

std::string write_graph6(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 62) throw TooLargeError("graph6 writer supports n <= 62, got n=" + std::to_string(n));
    std::string out;
    out.push_back(static_cast<char>(n + kOffset));
    int acc = 0;
    int nbits = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            acc = (acc << 1) | (g.has_edge(row, col) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + kOffset));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + kOffset));
    return out;
}

std::string_view strip_graph6_line(std::string_view line) {
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n' || line.back() == ' '))
        line.remove_suffix(1);
    while (!line.empty() && line.front() == ' ') line.remove_prefix(1);
    constexpr std::string_view header = ">>graph6<<";
    if (line.substr(0, header.size()) == header) line.remove_prefix(header.size());
    return line;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        const auto rec = strip_graph6_line(line);
        if (rec.empty()) continue;
        out.push_back(parse_graph6(rec));
    }
    return out;
}

std::vector<Graph> read_edge_list_stream(std::istream& in) {
    std::vector<Graph> out;
    std::string line;
    long line_no = 0;
    auto next_line = [&](std::string& dst) {
        while (std::getline(in, dst)) {
            ++line_no;
            if (dst.find_first_not_of(" \t\r\n") != std::string::npos) return true;
        }
        return false;
    };
    while (next_line(line)) {
        std::istringstream head(line);
        int n = 0, m = 0;
        if (!(head >> n >> m) || n < 0 || m < 0)
            throw Error("line " + std::to_string(line_no) + ": expected header \"n m\"");
        std::vector<std::pair<int, int>> edges;
        edges.reserve(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) {
            if (!next_line(line))
                throw Error("line " + std::to_string(line_no) + ": unexpected end of edge list");
            std::istringstream row(line);
            int u = 0, v = 0;
            if (!(row >> u >> v))
                throw Error("line " + std::to_string(line_no) + ": expected edge \"u v\"");
            edges.emplace_back(u, v);
        }
        try {
            out.push_back(Graph::from_edge_list(n, edges));
        } catch (const Error& e) {
            throw Error("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return out;
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

} // namespace sombor
