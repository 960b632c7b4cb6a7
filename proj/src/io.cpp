#include "tamari/io.hpp"

#include <sstream>

namespace tamari {

namespace {

Json edge_list(const std::vector<Edge>& edges)
{
    Json out = Json::array();
    for (auto [a, b] : edges)
        out.push_back({a, b});
    return out;
}

std::string join(const std::vector<int>& v)
{
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i)
        os << (i ? " " : "") << v[i];
    return os.str();
}

template <class T>
T field(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        throw ParseError(std::string("missing field \"") + key + "\"");
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad field \"") + key + "\": " + e.what());
    }
}

}

Json to_json(const IntervalPoset& p)
{
    return {{"size", p.size()},
            {"increasing", edge_list(p.increasing_edges())},
            {"decreasing", edge_list(p.decreasing_edges())}};
}

Json to_json(const StatBundle& s)
{
    return {{"size", s.size},         {"contacts", s.contacts}, {"rises", s.rises},
            {"distance", s.distance}, {"contactsP", s.contactsP}, {"risesP", s.risesP}};
}

Json to_json(const GraftingTree& g)
{
    return {{"tree", g.tree.str()}, {"labels", g.labels}};
}

Json to_json(const BallotPath& b)
{
    return {{"m", b.m()}, {"word", b.str()}};
}

IntervalPoset poset_from_json(const Json& j)
{
    int n = field<int>(j, "size");
    std::vector<Edge> pairs;
    for (const char* key : {"increasing", "decreasing"})
        if (j.contains(key))
            for (auto e : field<std::vector<std::vector<int>>>(j, key)) {
                if (e.size() != 2)
                    throw ParseError(std::string("edges in \"") + key + "\" must be pairs");
                pairs.emplace_back(e[0], e[1]);
            }
    return validate(n, pairs);
}

GraftingTree grafting_tree_from_json(const Json& j)
{
    GraftingTree g{BinaryTree::parse(field<std::string>(j, "tree")), field<std::vector<int>>(j, "labels")};
    check_grafting_tree(g);
    return g;
}

BallotPath ballot_from_json(const Json& j)
{
    return BallotPath::parse(field<std::string>(j, "word"), field<int>(j, "m"));
}

std::string to_text(const IntervalPoset& p)
{
    std::ostringstream os;
    os << "size " << p.size() << "\nincreasing";
    for (auto [a, b] : p.increasing_edges())
        os << ' ' << a << "->" << b;
    os << "\ndecreasing";
    for (auto [a, b] : p.decreasing_edges())
        os << ' ' << a << "->" << b;
    os << '\n';
    return os.str();
}

std::string to_text(const StatBundle& s)
{
    std::ostringstream os;
    os << "size " << s.size << "\ncontacts " << join(s.contacts) << "\nrises " << join(s.rises)
       << "\ndistance " << s.distance << "\ncontactsP " << join(s.contactsP) << "\nrisesP "
       << join(s.risesP) << '\n';
    return os.str();
}

std::string to_text(const GraftingTree& g)
{
    return "tree " + g.tree.str() + "\nlabels " + join(g.labels) + "\n";
}

}
