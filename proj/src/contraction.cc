#include <pcpk/contraction.hh>

#include <algorithm>

using std::span;
using std::vector;

namespace pcpk
{
    auto contractible(const ColoredDigraph & d, Vertex a, Vertex b) -> bool
    {
        if (a == b || d.adjacent(a, b))
            return false;
        for (Vertex w = 0 ; w < d.size() ; ++w)
            if (w != a && w != b && (d.color(a, w) != d.color(b, w) || d.color(w, a) != d.color(w, b)))
                return false;
        return true;
    }

    auto contract_contractible(const ColoredDigraph & d) -> Contraction
    {
        Contraction c;
        c.reduced = d;
        c.kept.resize(d.size());
        for (Vertex v = 0 ; v < d.size() ; ++v)
            c.kept[v] = v;

        for (bool changed = true ; changed ; ) {
            changed = false;
            auto & g = c.reduced;
            for (Vertex a = 0 ; a < g.size() && ! changed ; ++a)
                for (Vertex b = a + 1 ; b < g.size() && ! changed ; ++b)
                    if (contractible(g, a, b)) {
                        c.removed.emplace_back(c.kept[b], c.kept[a]);
                        vector<Vertex> keep;
                        for (Vertex v = 0 ; v < g.size() ; ++v)
                            if (v != b)
                                keep.push_back(v);
                        c.reduced = g.induced(keep);
                        c.kept.erase(c.kept.begin() + std::ptrdiff_t(b));
                        changed = true;
                    }
        }
        return c;
    }

    auto lift_contraction(const ColoredDigraph & d, const Contraction & c, span<const Vertex> reduced_members,
            PathMode mode, const SearchOptions & options) -> vector<Vertex>
    {
        vector<char> present(d.size(), 0), member(d.size(), 0);
        for (auto v : c.kept)
            present[v] = 1;
        for (auto v : reduced_members)
            member[c.kept[v]] = 1;

        for (auto it = c.removed.rbegin() ; it != c.removed.rend() ; ++it) {
            auto [removed, twin] = *it;
            present[removed] = 1;
            if (! member[twin])
                continue;
            vector<Vertex> stage;
            Vertex from = 0, to = 0;
            for (Vertex v = 0 ; v < d.size() ; ++v)
                if (present[v]) {
                    if (v == removed)
                        from = stage.size();
                    if (v == twin)
                        to = stage.size();
                    stage.push_back(v);
                }
            auto g = d.induced(stage);
            if (! pc_path_exists(g, from, to, mode, options))
                member[removed] = 1;
        }

        vector<Vertex> members;
        for (Vertex v = 0 ; v < d.size() ; ++v)
            if (member[v])
                members.push_back(v);
        return members;
    }
}
