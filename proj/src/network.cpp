#include "bnsl/network.hpp"

#include <cstdio>

namespace bnsl {

std::string to_text(const LearnedNetwork& net, const std::vector<std::string>& names) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", net.score);
    std::string out = "score ";
    out += buf;
    out += '\n';
    for (VarId child : net.ordering) {
        out += names[static_cast<std::size_t>(child.value)];
        out += " <-";
        for (VarId parent : net.parents[static_cast<std::size_t>(child.value)].members()) {
            out += ' ';
            out += names[static_cast<std::size_t>(parent.value)];
        }
        out += '\n';
    }
    return out;
}

std::string to_dot(const LearnedNetwork& net, const std::vector<std::string>& names) {
    std::string out = "digraph network {\n";
    for (int i = 0; i < net.var_count(); ++i) {
        out += "  \"";
        out += names[static_cast<std::size_t>(i)];
        out += "\";\n";
    }
    for (int child = 0; child < net.var_count(); ++child) {
        for (VarId parent : net.parents[static_cast<std::size_t>(child)].members()) {
            out += "  \"";
            out += names[static_cast<std::size_t>(parent.value)];
            out += "\" -> \"";
            out += names[static_cast<std::size_t>(child)];
            out += "\";\n";
        }
    }
    out += "}\n";
    return out;
}

} // namespace bnsl
