#include <graphbounds/graph.hpp>

#include <graphbounds/errors.hpp>

#include <cctype>
#include <charconv>
#include <limits>
#include <optional>

namespace graphbounds
{
    namespace
    {
        constexpr unsigned char graph6_bias = 63;
        constexpr unsigned char graph6_max = 126;
        constexpr std::uint64_t graph6_long_limit = 258048;

        auto trim(std::string_view text) -> std::string_view
        {
            while (! text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
                text.remove_suffix(1);
            while (! text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
                text.remove_prefix(1);
            return text;
        }
    }

    auto parse_graph6(std::string_view text) -> Graph
    {
        std::size_t offset = 0;
        text = trim(text);
        constexpr std::string_view header = ">>graph6<<";
        if (text.starts_with(header)) {
            text.remove_prefix(header.size());
            offset = header.size();
        }

        std::size_t pos = 0;
        auto next = [&] () -> unsigned {
            if (pos >= text.size())
                throw ParseError("graph6: truncated input", offset + pos);
            auto c = static_cast<unsigned char>(text[pos]);
            if (c < graph6_bias || c > graph6_max)
                throw ParseError("graph6: byte out of range", offset + pos);
            ++pos;
            return c - graph6_bias;
        };

        if (text.empty())
            throw ParseError("graph6: empty input", offset);

        std::uint64_t n = next();
        if (n == 63) {
            if (pos < text.size() && static_cast<unsigned char>(text[pos]) == graph6_max)
                throw ParseError("graph6: n >= 258048 is not supported", offset + pos);
            n = 0;
            for (int i = 0; i < 3; ++i)
                n = (n << 6) | next();
            if (n >= graph6_long_limit)
                throw ParseError("graph6: malformed long-form header", offset);
        }

        std::vector<Edge> edges;
        std::uint64_t bits_needed = n * (n - (n > 0)) / 2;
        std::uint64_t bytes_needed = (bits_needed + 5) / 6;
        if (text.size() - pos < bytes_needed)
            throw ParseError("graph6: truncated bit string", offset + text.size());
        if (text.size() - pos > bytes_needed)
            throw ParseError("graph6: trailing bytes after bit string", offset + pos + bytes_needed);

        std::uint64_t bit = 0;
        unsigned current = 0;
        for (Vertex j = 1; j < n; ++j)
            for (Vertex i = 0; i < j; ++i) {
                if (bit % 6 == 0)
                    current = next();
                if ((current >> (5 - bit % 6)) & 1)
                    edges.emplace_back(i, j);
                ++bit;
            }
        return Graph::from_edges(static_cast<Vertex>(n), edges);
    }

    auto encode_graph6(const Graph & g) -> std::string
    {
        std::uint64_t n = g.n();
        if (n >= graph6_long_limit)
            throw DomainError("graph6: n >= 258048 is not supported");

        std::string out;
        if (n < 63)
            out.push_back(static_cast<char>(n + graph6_bias));
        else {
            out.push_back(static_cast<char>(graph6_max));
            for (int shift = 12; shift >= 0; shift -= 6)
                out.push_back(static_cast<char>(((n >> shift) & 63) + graph6_bias));
        }

        unsigned current = 0, filled = 0;
        for (Vertex j = 1; j < n; ++j)
            for (Vertex i = 0; i < j; ++i) {
                current = (current << 1) | (g.adjacent(i, j) ? 1 : 0);
                if (++filled == 6) {
                    out.push_back(static_cast<char>(current + graph6_bias));
                    current = filled = 0;
                }
            }
        if (filled != 0)
            out.push_back(static_cast<char>((current << (6 - filled)) + graph6_bias));
        return out;
    }

    auto parse_edge_list(std::string_view text) -> Graph
    {
        std::size_t line_number = 0;
        std::optional<std::uint64_t> n;
        std::vector<Edge> edges;

        auto read_numbers = [&] (std::string_view line) {
            std::vector<std::uint64_t> values;
            std::size_t i = 0;
            while (i < line.size()) {
                while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
                    ++i;
                if (i == line.size())
                    break;
                std::uint64_t value = 0;
                auto [end, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
                if (ec != std::errc{})
                    throw ParseError("edge list: unparsable line", line_number);
                i = static_cast<std::size_t>(end - line.data());
                if (i < line.size() && ! std::isspace(static_cast<unsigned char>(line[i])))
                    throw ParseError("edge list: unparsable line", line_number);
                values.push_back(value);
            }
            return values;
        };

        while (! text.empty()) {
            auto newline = text.find('\n');
            auto line = trim(text.substr(0, newline));
            text.remove_prefix(newline == std::string_view::npos ? text.size() : newline + 1);
            ++line_number;

            if (line.empty() || line.front() == '#')
                continue;

            auto values = read_numbers(line);
            if (! n) {
                if (values.size() != 1)
                    throw ParseError("edge list: first line must hold the vertex count", line_number);
                if (values[0] > std::numeric_limits<Vertex>::max() / 2)
                    throw ParseError("edge list: vertex count too large", line_number);
                n = values[0];
                continue;
            }
            if (values.size() != 2)
                throw ParseError("edge list: expected 'u v'", line_number);
            if (values[0] >= *n || values[1] >= *n)
                throw ParseError("edge list: vertex out of range", line_number);
            if (values[0] == values[1])
                throw ParseError("edge list: loop edge", line_number);
            edges.emplace_back(static_cast<Vertex>(values[0]), static_cast<Vertex>(values[1]));
        }

        if (! n)
            throw ParseError("edge list: missing vertex count", line_number);
        return Graph::from_edges(static_cast<Vertex>(*n), edges);
    }
}
