#include <pcpk/pcp_kernel.hh>
#include <pcpk/closure.hh>
#include <pcpk/error.hh>
#include <pcpk/kernel.hh>

#include <algorithm>
#include <sstream>

using std::nullopt;
using std::optional;
using std::span;
using std::string;
using std::string_view;
using std::vector;

namespace pcpk
{
    namespace
    {
        auto sorted_members(const ColoredDigraph & d, span<const Vertex> s) -> vector<Vertex>
        {
            vector<Vertex> members(s.begin(), s.end());
            for (auto v : members)
                if (v >= d.size())
                    throw Error(Errc::VertexOutOfRange, "vertex " + std::to_string(v) + " with n = " + std::to_string(d.size()));
            std::sort(members.begin(), members.end());
            members.erase(std::unique(members.begin(), members.end()), members.end());
            return members;
        }

        /// True iff no PC path joins two members; fills the attested pairs.
        auto independent(const ColoredDigraph & d, const vector<Vertex> & members, PathMode mode,
                const SolveOptions & options, vector<VertexPair> & pairs) -> bool
        {
            SearchOptions search{ nullopt, options.budget };
            for (auto t : members) {
                Vertex target[] = { t };
                PathSearcher searcher(d, mode, target);
                for (auto s : members)
                    if (s != t) {
                        if (searcher.find_from(s, search))
                            return false;
                        pairs.emplace_back(s, t);
                    }
            }
            std::sort(pairs.begin(), pairs.end());
            return true;
        }

        auto syntax_error(std::size_t line, const string & what) -> Error
        {
            return Error(Errc::SyntaxError, "line " + std::to_string(line) + ": " + what);
        }

        auto lookup(const ColoredDigraph & d, const string & label) -> Vertex
        {
            auto v = d.find_label(label);
            if (! v)
                throw Error(Errc::UnknownVertexLabel, "unknown vertex label '" + label + "'");
            return *v;
        }
    }

    auto verify_pcp_kernel(const ColoredDigraph & d, span<const Vertex> s, PathMode mode,
            const SolveOptions & options) -> optional<PcpKernelCertificate>
    {
        PcpKernelCertificate c;
        c.members = sorted_members(d, s);
        c.mode = mode;
        c.method = "verify";
        if (! independent(d, c.members, mode, options, c.independence))
            return nullopt;

        vector<char> member(d.size(), 0);
        for (auto v : c.members)
            member[v] = 1;
        PathSearcher searcher(d, mode, c.members);
        SearchOptions search{ nullopt, options.budget };
        for (Vertex v = 0 ; v < d.size() ; ++v) {
            if (member[v])
                continue;
            auto path = searcher.find_from(v, search);
            if (! path)
                return nullopt;
            c.absorption.push_back(std::move(*path));
        }
        return c;
    }

    auto solve_pcp_exact(const ColoredDigraph & d, PathMode mode, const SolveOptions & options)
        -> optional<PcpKernelCertificate>
    {
        auto cl = closure(d, mode, ClosureOptions{ options.budget, options.jobs });
        auto k = find_kernel(cl.graph());
        if (! k)
            return nullopt;

        PcpKernelCertificate c;
        c.members = k->members;
        c.mode = mode;
        c.method = "exact";
        for (auto [v, s] : k->absorption)
            c.absorption.push_back(cl.witness(v, s));
        for (auto s : c.members)
            for (auto t : c.members)
                if (s != t)
                    c.independence.emplace_back(s, t);
        return c;
    }

    auto format_certificate(const ColoredDigraph & d, const PcpKernelCertificate & c) -> string
    {
        string out = "# mode " + path_mode_name(c.mode) + "\n";
        if (! c.method.empty())
            out += "# method " + c.method + "\n";
        for (auto & note : c.trail)
            out += "# trail " + note + "\n";
        if (c.fallback_used)
            out += "# fallback used\n";
        out += "S: {";
        for (std::size_t i = 0 ; i < c.members.size() ; ++i)
            out += (i ? "," : "") + d.label(c.members[i]);
        out += "}\n";
        for (auto & p : c.absorption)
            out += "abs " + d.label(p.source()) + " : " + path_labels(d, p) + "\n";
        for (auto [s, t] : c.independence)
            out += "ind " + d.label(s) + " " + d.label(t) + " : none\n";
        return out;
    }

    auto parse_certificate(const ColoredDigraph & d, string_view text) -> ParsedCertificate
    {
        ParsedCertificate c;
        bool have_members = false;
        std::istringstream in{ string(text) };
        string line;
        for (std::size_t number = 1 ; std::getline(in, line) ; ++number) {
            if (auto hash = line.find('#') ; hash != string::npos) {
                std::istringstream comment(line.substr(hash + 1));
                string key, value;
                if (comment >> key >> value && key == "mode")
                    c.mode = parse_path_mode(value);
                line.erase(hash);
            }
            std::istringstream words(line);
            string head;
            if (! (words >> head))
                continue;

            if (head == "S:") {
                if (have_members)
                    throw syntax_error(number, "repeated member line");
                string rest, token;
                std::getline(words, rest);
                auto open = rest.find('{'), close = rest.rfind('}');
                if (open == string::npos || close == string::npos || close < open)
                    throw syntax_error(number, "expected S: {labels}");
                std::istringstream list(rest.substr(open + 1, close - open - 1));
                while (std::getline(list, token, ',')) {
                    token.erase(0, token.find_first_not_of(" \t"));
                    token.erase(token.find_last_not_of(" \t") + 1);
                    if (! token.empty())
                        c.members.push_back(lookup(d, token));
                }
                have_members = true;
            }
            else if (head == "abs") {
                string source, colon, label;
                if (! (words >> source >> colon) || colon != ":")
                    throw syntax_error(number, "expected abs <v> : <path>");
                vector<Vertex> path;
                while (words >> label)
                    path.push_back(lookup(d, label));
                if (path.empty() || path.front() != lookup(d, source))
                    throw syntax_error(number, "absorption path must start at its vertex");
                c.absorption.push_back(std::move(path));
            }
            else if (head == "ind") {
                string s, t, colon, none;
                if (! (words >> s >> t >> colon >> none) || colon != ":" || none != "none")
                    throw syntax_error(number, "expected ind <u> <v> : none");
                c.independence.emplace_back(lookup(d, s), lookup(d, t));
            }
            else
                throw syntax_error(number, "unknown statement '" + head + "'");
        }
        if (! have_members)
            throw Error(Errc::SyntaxError, "missing S: line");
        return c;
    }

    auto check_certificate(const ColoredDigraph & d, const ParsedCertificate & c, PathMode mode,
            const SolveOptions & options) -> CertificateCheck
    {
        auto members = sorted_members(d, c.members);
        vector<char> member(d.size(), 0), covered(d.size(), 0);
        for (auto v : members)
            member[v] = 1;

        for (auto & vertices : c.absorption) {
            auto source = vertices.front();
            if (member[source])
                return { false, "absorption path listed for member " + d.label(source) };
            if (vertices.size() < 2 || ! member[vertices.back()])
                return { false, "absorption path of " + d.label(source) + " does not end in S" };
            PcPath p{ vertices, {}, mode };
            for (std::size_t i = 0 ; i + 1 < vertices.size() ; ++i)
                p.colors.push_back(d.color(vertices[i], vertices[i + 1]));
            if (! p.valid_in(d))
                return { false, "absorption path of " + d.label(source) + " is not a valid " + path_mode_name(mode) + " path" };
            covered[source] = 1;
        }
        for (Vertex v = 0 ; v < d.size() ; ++v)
            if (! member[v] && ! covered[v])
                return { false, "no absorption path for " + d.label(v) };

        vector<VertexPair> pairs;
        if (! independent(d, members, mode, options, pairs))
            return { false, "two members are joined by a " + path_mode_name(mode) + " path" };
        return { true, "" };
    }
}
