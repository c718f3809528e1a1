#include "qpg/hypergraph.hpp"

#include <algorithm>
#include <sstream>

namespace qpg {

int Hypergraph::add_edge(std::vector<int> vertices) {
    std::sort(vertices.begin(), vertices.end());
    for (size_t i = 0; i < vertices.size(); ++i) {
        int v = vertices[i];
        if (v < 1 || v > num_vertices)
            throw PreconditionError("vertex " + std::to_string(v) + " out of range 1.." +
                                    std::to_string(num_vertices));
        if (i > 0 && vertices[i - 1] == v)
            throw PreconditionError("duplicate vertex " + std::to_string(v) + " in hyperedge");
    }
    edges.push_back(std::move(vertices));
    return static_cast<int>(edges.size()) - 1;
}

int Hypergraph::rank() const {
    size_t r = 0;
    for (const auto& e : edges) r = std::max(r, e.size());
    return static_cast<int>(r);
}

std::vector<int> Hypergraph::degrees() const {
    std::vector<int> d(static_cast<size_t>(num_vertices) + 1, 0);
    for (const auto& e : edges) {
        for (int v : e) ++d[static_cast<size_t>(v)];
    }
    return d;
}

int Hypergraph::max_degree() const {
    int m = 0;
    for (int d : degrees()) m = std::max(m, d);
    return m;
}

void Hypergraph::validate() const {
    if (num_vertices < 0) throw PreconditionError("negative vertex count");
    for (const auto& e : edges) {
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] < 1 || e[i] > num_vertices)
                throw PreconditionError("vertex " + std::to_string(e[i]) + " out of range");
            if (i > 0 && (e[i] == e[i - 1] || e[i] < e[i - 1]))
                throw PreconditionError("hyperedge not a sorted set of distinct vertices");
        }
    }
    for (const auto& [v, label] : labels) {
        if (v < 1 || v > num_vertices)
            throw PreconditionError("label for out-of-range vertex " + std::to_string(v));
    }
}

Hypergraph parse_hypergraph(std::string_view text) {
    Hypergraph h;
    bool have_header = false;
    int declared_edges = 0;

    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head)) continue;
        if (head == "c") {
            std::string kind;
            if (ls >> kind && kind == "label") {
                int v = 0;
                if (!(ls >> v))
                    throw ParseError("line " + std::to_string(lineno) + ": malformed label line");
                std::string label;
                std::getline(ls, label);
                size_t start = label.find_first_not_of(' ');
                if (start != std::string::npos) label = label.substr(start);
                else label.clear();
                if (!have_header || v < 1 || v > h.num_vertices)
                    throw ParseError("line " + std::to_string(lineno) + ": label for unknown vertex " +
                                     std::to_string(v));
                h.labels[v] = label;
            }
            continue;
        }
        if (head == "p") {
            if (have_header) throw ParseError("line " + std::to_string(lineno) + ": duplicate header");
            std::string fmt;
            int n = 0, m = 0;
            if (!(ls >> fmt >> n >> m) || fmt != "pos" || n < 0 || m < 0)
                throw ParseError("line " + std::to_string(lineno) + ": malformed header, want 'p pos <n> <m>'");
            std::string extra;
            if (ls >> extra) throw ParseError("line " + std::to_string(lineno) + ": trailing tokens in header");
            h.num_vertices = n;
            declared_edges = m;
            have_header = true;
            continue;
        }
        if (!have_header)
            throw ParseError("line " + std::to_string(lineno) + ": content before 'p pos' header");
        // edge line: head is the first vertex id (or the bare terminator)
        std::vector<int> members;
        int v = 0;
        try {
            size_t pos = 0;
            v = std::stoi(head, &pos);
            if (pos != head.size()) throw std::invalid_argument(head);
        } catch (const std::exception&) {
            throw ParseError("line " + std::to_string(lineno) + ": expected vertex id, got '" + head + "'");
        }
        bool terminated = v == 0;
        if (!terminated) members.push_back(v);
        while (!terminated && ls >> v) {
            if (v == 0) {
                std::string extra;
                if (ls >> extra)
                    throw ParseError("line " + std::to_string(lineno) + ": tokens after terminating 0");
                terminated = true;
                break;
            }
            members.push_back(v);
        }
        if (!terminated) throw ParseError("line " + std::to_string(lineno) + ": missing terminating 0");
        for (size_t i = 0; i < members.size(); ++i) {
            if (members[i] < 1 || members[i] > h.num_vertices)
                throw ParseError("line " + std::to_string(lineno) + ": vertex " +
                                 std::to_string(members[i]) + " out of range");
        }
        std::vector<int> sorted = members;
        std::sort(sorted.begin(), sorted.end());
        for (size_t i = 1; i < sorted.size(); ++i) {
            if (sorted[i] == sorted[i - 1])
                throw ParseError("line " + std::to_string(lineno) + ": duplicate vertex " +
                                 std::to_string(sorted[i]) + " in hyperedge");
        }
        h.edges.push_back(std::move(sorted));
    }
    if (!have_header) throw ParseError("missing 'p pos' header");
    if (static_cast<int>(h.edges.size()) != declared_edges)
        throw ParseError("header declares " + std::to_string(declared_edges) + " hyperedges, found " +
                         std::to_string(h.edges.size()));
    return h;
}

std::string emit_hypergraph(const Hypergraph& h) {
    std::ostringstream out;
    out << "p pos " << h.num_vertices << ' ' << h.edges.size() << '\n';
    for (const auto& [v, label] : h.labels) out << "c label " << v << ' ' << label << '\n';
    for (const auto& e : h.edges) {
        for (int v : e) out << v << ' ';
        out << "0\n";
    }
    return out.str();
}

} // namespace qpg
