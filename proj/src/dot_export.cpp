#include "ppg/dot_export.hpp"

#include <sstream>

namespace ppg {

namespace {

const char* role_color(NodeRole r) {
    switch (r) {
        case NodeRole::Core: return "lightblue";
        case NodeRole::Leaf: return "white";
        case NodeRole::LinkArm: return "palegreen";
        case NodeRole::LinkHub: return "gold";
    }
    return "white";
}

}  // namespace

std::string export_dot(const Ppg& g, const std::optional<Placement>& placement) {
    std::ostringstream out;
    out << "graph ppg {\n";
    out << "  node [shape=circle fontsize=10];\n";
    for (int v = 0; v < g.n(); ++v) {
        out << "  p" << v << " [label=\"p" << v << "\"";
        if (auto it = g.roles().find(v); it != g.roles().end()) {
            out << " style=filled fillcolor=" << role_color(it->second);
        }
        if (placement && v < static_cast<int>(placement->coords.size())) {
            out << " pos=\"" << placement->coords[v].to_double() << ",0!\""
                << " coord=\"" << placement->coords[v].fraction_str() << "\"";
        }
        out << "];\n";
    }
    for (const auto& e : g.edges()) {
        out << "  p" << e.a << " -- p" << e.b << " [label=\"" << e.length.str() << "\""
            << (e.round == 2 ? " style=dashed" : " style=solid") << "];\n";
    }
    out << "}\n";
    return out.str();
}

std::string export_drawing_dot(const Ppg& g, const LayerDrawing& drawing) {
    std::ostringstream out;
    out << "graph layer_drawing {\n";
    out << "  node [shape=point];\n";
    for (int v = 0; v < g.n(); ++v) {
        const auto& [x, y] = drawing.coords[v];
        out << "  p" << v << " [xlabel=\"p" << v << "\" pos=\"" << x.to_double() << ","
            << y.to_double() << "!\" coord=\"(" << x.fraction_str() << ","
            << y.fraction_str() << ")\"];\n";
    }
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
        const auto& e = g.edges()[i];
        bool horizontal = drawing.directions[i] == Axis::Horizontal;
        out << "  p" << e.a << " -- p" << e.b << " [label=\"" << e.length.str() << "\""
            << " axis=" << (horizontal ? "H" : "V")
            << " color=" << (horizontal ? "blue" : "red") << "];\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace ppg
