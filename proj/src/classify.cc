#include <pcpk/classify.hh>
#include <pcpk/error.hh>
#include <pcpk/graph_algorithms.hh>
#include <pcpk/pc_paths.hh>

#include <algorithm>

using std::nullopt;
using std::optional;
using std::string;
using std::vector;

namespace pcpk
{
    namespace
    {
        auto arcs_inside(const ColoredDigraph & d, const Components & comps, std::size_t c) -> std::size_t
        {
            std::size_t count = 0;
            for (auto v : comps.members[c])
                for (auto & a : d.out_arcs(v))
                    count += comps.component[a.head] == c;
            return count;
        }

        auto follow_cycle(const ColoredDigraph & d, Vertex start, const vector<char> & inside) -> vector<Vertex>
        {
            vector<Vertex> order{ start };
            for (auto v = start ; ; ) {
                Vertex next = start;
                for (auto & a : d.out_arcs(v))
                    if (inside[a.head]) {
                        next = a.head;
                        break;
                    }
                if (next == start)
                    break;
                order.push_back(next);
                v = next;
            }
            return order;
        }
    }

    auto is_unicyclic(const ColoredDigraph & d) -> bool
    {
        return unique_cycle(d).has_value();
    }

    auto unique_cycle(const ColoredDigraph & d) -> optional<vector<Vertex>>
    {
        auto comps = strong_components(adjacency_of(d));
        optional<std::size_t> cyclic;
        for (std::size_t c = 0 ; c < comps.members.size() ; ++c) {
            if (comps.members[c].size() < 2)
                continue;
            if (cyclic || arcs_inside(d, comps, c) != comps.members[c].size())
                return nullopt;
            cyclic = c;
        }
        if (! cyclic)
            return nullopt;

        vector<char> inside(d.size(), 0);
        for (auto v : comps.members[*cyclic])
            inside[v] = 1;
        return follow_cycle(d, comps.members[*cyclic].front(), inside);
    }

    auto is_cycle(const ColoredDigraph & d) -> bool
    {
        if (d.size() < 2 || d.arc_count() != d.size())
            return false;
        auto comps = strong_components(adjacency_of(d));
        return comps.members.size() == 1;
    }

    auto cycle_order(const ColoredDigraph & d) -> vector<Vertex>
    {
        if (! is_cycle(d))
            throw Error(Errc::NotACycle, "the digraph is not a single directed cycle");
        return follow_cycle(d, 0, vector<char>(d.size(), 1));
    }

    auto is_semi_complete(const ColoredDigraph & d) -> bool
    {
        for (Vertex u = 0 ; u < d.size() ; ++u)
            for (Vertex v = u + 1 ; v < d.size() ; ++v)
                if (! d.adjacent(u, v))
                    return false;
        return true;
    }

    auto is_tournament(const ColoredDigraph & d) -> bool
    {
        for (Vertex u = 0 ; u < d.size() ; ++u)
            for (Vertex v = u + 1 ; v < d.size() ; ++v)
                if (d.has_arc(u, v) == d.has_arc(v, u))
                    return false;
        return true;
    }

    auto is_bipartite_tournament(const ColoredDigraph & d, const BipartitePartition & p) -> bool
    {
        if (p.x.empty() || p.y.empty() || p.x.size() + p.y.size() != d.size())
            return false;
        vector<int> side(d.size(), -1);
        for (auto * part : { &p.x, &p.y })
            for (auto v : *part) {
                if (v >= d.size() || side[v] != -1)
                    return false;
                side[v] = part == &p.x ? 0 : 1;
            }
        for (Vertex u = 0 ; u < d.size() ; ++u)
            for (Vertex v = u + 1 ; v < d.size() ; ++v) {
                if (side[u] == side[v] && d.adjacent(u, v))
                    return false;
                if (side[u] != side[v] && d.has_arc(u, v) == d.has_arc(v, u))
                    return false;
            }
        return true;
    }

    auto bipartite_partition(const ColoredDigraph & d) -> optional<BipartitePartition>
    {
        if (d.size() < 2)
            return nullopt;
        BipartitePartition p;
        for (Vertex v = 0 ; v < d.size() ; ++v)
            (d.adjacent(0, v) ? p.y : p.x).push_back(v);
        if (is_bipartite_tournament(d, p))
            return p;
        return nullopt;
    }

    auto is_properly_arc_colored(const ColoredDigraph & d) -> bool
    {
        vector<char> seen(std::size_t(d.color_count()) + 1);
        for (Vertex v = 0 ; v < d.size() ; ++v) {
            std::fill(seen.begin(), seen.end(), 0);
            for (auto & a : d.in_arcs(v))
                seen[a.color] = 1;
            for (auto & a : d.out_arcs(v))
                if (seen[a.color])
                    return false;
        }
        return true;
    }

    auto is_properly_connected(const ColoredDigraph & d) -> bool
    {
        if (d.size() <= 1)
            return true;
        if (strong_components(adjacency_of(d)).members.size() != 1)
            return false;
        for (Vertex v = 0 ; v < d.size() ; ++v) {
            Vertex target[] = { v };
            PathSearcher searcher(d, PathMode::ProperlyColored, target);
            for (Vertex u = 0 ; u < d.size() ; ++u)
                if (u != v && ! searcher.find_from(u))
                    return false;
        }
        return true;
    }

    auto classify(const ColoredDigraph & d) -> ClassTags
    {
        ClassTags t;
        t.acyclic = is_acyclic(adjacency_of(d));
        t.unicyclic = is_unicyclic(d);
        t.is_cycle = is_cycle(d);
        t.tournament = is_tournament(d);
        t.semi_complete = is_semi_complete(d);
        t.partition = bipartite_partition(d);
        t.bipartite_tournament = t.partition.has_value();
        t.monochromatic = d.color_count() <= 1;
        t.properly_arc_colored = is_properly_arc_colored(d);
        t.properly_connected = is_properly_connected(d);
        return t;
    }

    auto format_class_tags(const ColoredDigraph & d, const ClassTags & t) -> string
    {
        auto flag = [] (const char * name, bool value) { return string(name) + ": " + (value ? "true" : "false") + "\n"; };
        string out = flag("acyclic", t.acyclic) + flag("unicyclic", t.unicyclic) + flag("is-cycle", t.is_cycle)
            + flag("tournament", t.tournament) + flag("semi-complete", t.semi_complete)
            + flag("bipartite-tournament", t.bipartite_tournament) + flag("monochromatic", t.monochromatic)
            + flag("properly-arc-colored", t.properly_arc_colored) + flag("properly-connected", t.properly_connected);
        if (t.partition) {
            auto side = [&] (const vector<Vertex> & vs) {
                string s = "{";
                for (std::size_t i = 0 ; i < vs.size() ; ++i)
                    s += (i ? "," : "") + d.label(vs[i]);
                return s + "}";
            };
            out += "partition: X=" + side(t.partition->x) + " Y=" + side(t.partition->y) + "\n";
        }
        return out;
    }
}
