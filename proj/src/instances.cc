#include <pcpk/instances.hh>
#include <pcpk/error.hh>
#include <pcpk/rng.hh>

#include <map>
#include <set>
#include <tuple>

using std::map;
using std::string;
using std::to_string;
using std::tuple;
using std::vector;

namespace pcpk
{
    namespace
    {
        using LabeledArc = tuple<string, string, int>;

        auto build(const vector<string> & labels, const vector<LabeledArc> & arcs) -> ColoredDigraph
        {
            map<string, Vertex> index;
            for (Vertex v = 0 ; v < labels.size() ; ++v)
                index.emplace(labels[v], v);
            vector<RawArc> raw;
            for (auto & [from, to, color] : arcs)
                raw.push_back(RawArc{ index.at(from), index.at(to), color });
            return ColoredDigraph::validate(labels.size(), raw, labels);
        }

        const vector<string> fig1_left_labels = { "v1", "v2", "v3", "v4", "v5", "v6" };
        const vector<LabeledArc> fig1_left_arcs = {
            { "v1", "v2", 1 }, { "v2", "v3", 1 }, { "v3", "v4", 1 }, { "v5", "v6", 1 }, { "v6", "v1", 1 },
            { "v3", "v5", 2 }, { "v5", "v4", 2 }
        };

        const vector<string> fig1_right_labels = { "u1", "u2", "u3", "u4", "u5", "u6", "u7", "u8", "u9" };
        const vector<LabeledArc> fig1_right_arcs = {
            { "u1", "u2", 1 }, { "u2", "u3", 1 }, { "u3", "u4", 1 }, { "u5", "u6", 1 }, { "u6", "u7", 1 },
            { "u8", "u9", 1 }, { "u9", "u1", 1 },
            { "u3", "u5", 2 }, { "u5", "u4", 2 },
            { "u6", "u8", 3 }, { "u8", "u7", 3 }
        };

        const vector<string> fig2_labels = { "v1", "v2", "v3", "v4" };
        const vector<LabeledArc> fig2_arcs = {
            { "v1", "v2", 1 }, { "v1", "v3", 1 }, { "v1", "v4", 1 },
            { "v2", "v3", 2 }, { "v3", "v4", 2 }, { "v4", "v2", 2 }
        };

        const vector<string> fig3_labels = { "x1", "x2", "x3", "y1", "y2", "y3" };
        const vector<LabeledArc> fig3_arcs = {
            { "x1", "y1", 1 }, { "y1", "x2", 1 }, { "y2", "x1", 1 },
            { "x2", "y2", 2 }, { "y2", "x3", 2 }, { "y3", "x2", 2 },
            { "x3", "y3", 3 }, { "y1", "x3", 3 }, { "y3", "x1", 3 }
        };
    }

    auto named_instance_names() -> vector<string>
    {
        return { "fig1-left", "fig1-right", "fig2-tournament", "fig3-d6" };
    }

    auto named_instance(const string & name) -> ColoredDigraph
    {
        if (name == "fig1-left")
            return build(fig1_left_labels, fig1_left_arcs);
        if (name == "fig1-right")
            return build(fig1_right_labels, fig1_right_arcs);
        if (name == "fig2-tournament")
            return build(fig2_labels, fig2_arcs);
        if (name == "fig3-d6")
            return build(fig3_labels, fig3_arcs);
        throw Error(Errc::UnknownInstance, "'" + name + "'");
    }

    auto remark1_even(std::size_t n) -> ColoredDigraph
    {
        if (n < 6 || n % 2 != 0)
            throw Error(Errc::BadParameter, "remark1-even needs an even n >= 6, got " + to_string(n));

        // v6 -> v1 -> v7 -> ... -> vn -> v2, all color 1, replaces v6 -> v1 -> v2
        vector<string> labels = fig1_left_labels;
        for (std::size_t i = 7 ; i <= n ; ++i)
            labels.push_back("v" + to_string(i));

        vector<LabeledArc> arcs;
        for (auto & a : fig1_left_arcs)
            if (std::get<0>(a) != "v6" || std::get<1>(a) != "v1")
                if (std::get<0>(a) != "v1")
                    arcs.push_back(a);
        vector<string> path = { "v6", "v1" };
        for (std::size_t i = 7 ; i <= n ; ++i)
            path.push_back("v" + to_string(i));
        path.push_back("v2");
        for (std::size_t i = 0 ; i + 1 < path.size() ; ++i)
            arcs.emplace_back(path[i], path[i + 1], 1);

        return build(labels, arcs);
    }

    auto remark1_odd(std::size_t n) -> ColoredDigraph
    {
        if (n < 7 || n % 2 != 1)
            throw Error(Errc::BadParameter, "remark1-odd needs an odd n >= 7, got " + to_string(n));

        std::size_t length = n - 7;
        vector<LabeledArc> arcs;
        for (auto & a : fig1_right_arcs) {
            auto & [from, to, color] = a;
            if (from == "u9" || from == "u1")
                continue;
            arcs.push_back(a);
        }

        vector<string> labels;
        vector<string> path;
        if (length == 0) {
            labels = { "u2", "u3", "u4", "u5", "u6", "u7", "u8" };
            for (auto & a : arcs)
                if (std::get<1>(a) == "u9")
                    std::get<1>(a) = "u2";
        }
        else {
            labels = fig1_right_labels;
            if (length == 1)
                labels.erase(labels.begin());
            path = { "u9" };
            if (length >= 2)
                path.push_back("u1");
            for (std::size_t i = 10 ; i < 10 + (length >= 2 ? length - 2 : 0) ; ++i) {
                labels.push_back("u" + to_string(i));
                path.push_back("u" + to_string(i));
            }
            path.push_back("u2");
            for (std::size_t i = 0 ; i + 1 < path.size() ; ++i)
                arcs.emplace_back(path[i], path[i + 1], 1);
        }

        return build(labels, arcs);
    }

    auto remark4(const ColoredDigraph & base, const ConnectColoring & policy) -> ColoredDigraph
    {
        if (base.size() == 0)
            throw Error(Errc::BadParameter, "remark4 needs a non-empty base digraph");
        if (policy.color == 0)
            throw Error(Errc::BadParameter, "remark4 connecting color / palette must be positive");

        auto d6 = named_instance("fig3-d6");
        std::set<string> d6_labels(d6.labels().begin(), d6.labels().end());

        vector<string> labels;
        for (Vertex v = 0 ; v < base.size() ; ++v)
            labels.push_back(d6_labels.count(base.label(v)) ? "b" + base.label(v) : base.label(v));
        for (Vertex v = 0 ; v < d6.size() ; ++v)
            labels.push_back(d6.label(v));

        vector<RawArc> raw;
        for (auto & a : base.arcs())
            raw.push_back(RawArc{ a.from, a.to, a.color });
        auto offset = base.size();
        for (auto & a : d6.arcs())
            raw.push_back(RawArc{ a.from + offset, a.to + offset, a.color });

        Rng rng(policy.seed);
        std::size_t counter = 0;
        for (Vertex u = 0 ; u < base.size() ; ++u)
            for (Vertex v = 0 ; v < d6.size() ; ++v) {
                std::int64_t color = policy.color;
                switch (policy.kind) {
                    case ConnectColoring::Kind::Constant: break;
                    case ConnectColoring::Kind::Cyclic: color = std::int64_t(counter % policy.color) + 1; break;
                    case ConnectColoring::Kind::Random: color = std::int64_t(uniform_below(rng, policy.color)) + 1; break;
                }
                ++counter;
                raw.push_back(RawArc{ u, v + offset, color });
            }

        return ColoredDigraph::validate(labels.size(), raw, labels);
    }
}
