#include "render.hpp"

#include <sstream>

namespace tamari {

std::string render_dot(const IntervalPoset& p)
{
    std::ostringstream os;
    os << "digraph interval_poset {\n";
    os << "  node [shape=circle];\n";
    for (int v = 1; v <= p.size(); ++v)
        os << "  " << v << ";\n";
    for (auto [a, b] : p.increasing_edges())
        os << "  " << a << " -> " << b << " [color=blue];\n";
    for (auto [b, a] : p.decreasing_edges())
        os << "  " << b << " -> " << a << " [color=red];\n";
    os << "}\n";
    return os.str();
}

std::string render_tikz(const IntervalPoset& p)
{
    std::ostringstream os;
    os << "\\begin{tikzpicture}\n";
    for (int v = 1; v <= p.size(); ++v)
        os << "\\node (T" << v << ") at (" << v << ",0) {" << v << "};\n";
    for (auto [a, b] : p.increasing_edges())
        os << "\\draw[line width = 0.5, color=blue] (T" << a << ") to[bend left] (T" << b << ");\n";
    for (auto [b, a] : p.decreasing_edges())
        os << "\\draw[line width = 0.5, color=red] (T" << b << ") to[bend left] (T" << a << ");\n";
    os << "\\end{tikzpicture}\n";
    return os.str();
}

}
