#include <pcpk/acd.hh>
#include <pcpk/error.hh>

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <vector>

using std::string;
using std::string_view;
using std::to_string;
using std::vector;

namespace pcpk
{
    namespace
    {
        auto split_tokens(string_view line) -> vector<string_view>
        {
            vector<string_view> tokens;
            std::size_t i = 0;
            while (i < line.size()) {
                while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
                    ++i;
                std::size_t start = i;
                while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r')
                    ++i;
                if (i > start)
                    tokens.push_back(line.substr(start, i - start));
            }
            return tokens;
        }

        auto syntax_error(std::size_t line_number, const string & what) -> Error
        {
            return Error(Errc::SyntaxError, "line " + to_string(line_number) + ": " + what);
        }

        auto quoted(string_view s) -> string
        {
            string result = "\"";
            for (char c : s) {
                if (c == '"' || c == '\\')
                    result += '\\';
                result += c;
            }
            return result + "\"";
        }
    }

    auto natural_less(string_view a, string_view b) -> bool
    {
        auto is_digit = [] (char c) { return c >= '0' && c <= '9'; };
        std::size_t i = 0, j = 0;
        while (i < a.size() && j < b.size()) {
            if (is_digit(a[i]) && is_digit(b[j])) {
                std::size_t i_end = i, j_end = j;
                while (i_end < a.size() && is_digit(a[i_end])) ++i_end;
                while (j_end < b.size() && is_digit(b[j_end])) ++j_end;
                auto da = a.substr(i, i_end - i), db = b.substr(j, j_end - j);
                auto strip = [] (string_view s) { while (s.size() > 1 && s.front() == '0') s.remove_prefix(1); return s; };
                auto sa = strip(da), sb = strip(db);
                if (sa.size() != sb.size())
                    return sa.size() < sb.size();
                if (sa != sb)
                    return sa < sb;
                if (da.size() != db.size())
                    return da.size() < db.size();
                i = i_end;
                j = j_end;
            }
            else {
                if (a[i] != b[j])
                    return a[i] < b[j];
                ++i;
                ++j;
            }
        }
        return (a.size() - i) < (b.size() - j);
    }

    auto parse_acd(string_view text) -> ColoredDigraph
    {
        vector<string> labels;
        std::unordered_map<string, Vertex> index;
        vector<RawArc> arcs;
        bool seen_header = false;

        std::size_t line_number = 0;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            auto end = text.find('\n', pos);
            if (end == string_view::npos)
                end = text.size();
            auto line = text.substr(pos, end - pos);
            pos = end + 1;
            ++line_number;

            if (auto hash = line.find('#') ; hash != string_view::npos)
                line = line.substr(0, hash);
            auto tokens = split_tokens(line);
            if (tokens.empty())
                continue;

            if (! seen_header) {
                if (tokens.size() != 2 || tokens[0] != "acd")
                    throw syntax_error(line_number, "expected header 'acd 1'");
                if (tokens[1] != "1")
                    throw syntax_error(line_number, "unsupported ACD version '" + string(tokens[1]) + "'");
                seen_header = true;
                continue;
            }

            if (tokens[0] == "v") {
                if (tokens.size() != 2)
                    throw syntax_error(line_number, "vertex declaration takes exactly one label");
                string label(tokens[1]);
                if (! index.emplace(label, labels.size()).second)
                    throw syntax_error(line_number, "vertex '" + label + "' declared twice");
                labels.push_back(label);
            }
            else if (tokens[0] == "a") {
                if (tokens.size() != 4)
                    throw syntax_error(line_number, "arc declaration is 'a <src> <dst> <color>'");
                std::int64_t color = 0;
                auto c = tokens[3];
                auto [ptr, ec] = std::from_chars(c.data(), c.data() + c.size(), color);
                if (ec != std::errc{} || ptr != c.data() + c.size())
                    throw syntax_error(line_number, "color '" + string(c) + "' is not an integer");
                if (color < 1)
                    throw syntax_error(line_number, "color must be at least 1");
                auto src = index.find(string(tokens[1]));
                if (src == index.end())
                    throw Error(Errc::UnknownVertexLabel, "line " + to_string(line_number) + ": '" + string(tokens[1]) + "'");
                auto dst = index.find(string(tokens[2]));
                if (dst == index.end())
                    throw Error(Errc::UnknownVertexLabel, "line " + to_string(line_number) + ": '" + string(tokens[2]) + "'");
                arcs.push_back(RawArc{ src->second, dst->second, color });
            }
            else
                throw syntax_error(line_number, "unknown statement '" + string(tokens[0]) + "'");
        }

        if (! seen_header)
            throw syntax_error(line_number, "missing header 'acd 1'");

        auto n = labels.size();
        return ColoredDigraph::validate(n, arcs, std::move(labels));
    }

    auto serialize_acd(const ColoredDigraph & d) -> string
    {
        vector<Vertex> order(d.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&] (Vertex a, Vertex b) { return natural_less(d.label(a), d.label(b)); });

        string out = "acd 1\n";
        for (auto v : order)
            out += "v " + d.label(v) + "\n";
        for (auto u : order)
            for (auto v : order)
                if (d.has_arc(u, v))
                    out += "a " + d.label(u) + " " + d.label(v) + " " + to_string(d.color(u, v)) + "\n";
        return out;
    }

    auto to_dot(const ColoredDigraph & d, string_view name) -> string
    {
        string out = "digraph " + quoted(name) + " {\n";
        for (Vertex v = 0 ; v < d.size() ; ++v)
            out += "  " + quoted(d.label(v)) + ";\n";
        for (auto & a : d.arcs()) {
            auto hex = dot_palette[(a.color - 1) % dot_palette.size()];
            out += "  " + quoted(d.label(a.from)) + " -> " + quoted(d.label(a.to))
                + " [color=\"" + string(hex) + "\", label=\"" + to_string(a.color) + "\"];\n";
        }
        return out + "}\n";
    }
}
