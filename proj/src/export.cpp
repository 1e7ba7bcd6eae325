/*
 * export.cpp
 *
 * DOT, GraphML and edge-csv writers, and the edge-csv reader.
 */

#include <istream>
#include <ostream>

#include "castnet/errors.hpp"
#include "castnet/report.hpp"

namespace castnet {

namespace {

std::string dot_escape(std::string_view s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

std::string xml_escape(std::string_view s) {
    std::string out;
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        case '\'': out += "&apos;"; break;
        default: out += c;
        }
    }
    return out;
}

std::string csv_quote(std::string_view s) {
    if (s.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(s);
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

// Splits one CSV record; quoted fields may contain commas and doubled quotes.
std::vector<std::string> csv_fields(const std::string& line, std::size_t line_no) {
    std::vector<std::string> fields(1);
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                fields.back() += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                fields.back() += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.emplace_back();
        } else {
            fields.back() += c;
        }
    }
    if (quoted) throw DataError("edge-csv:" + std::to_string(line_no) + ": unterminated quote");
    return fields;
}

} // namespace

ExportFormat parse_export_format(std::string_view name) {
    if (name == "dot") return ExportFormat::dot;
    if (name == "graphml") return ExportFormat::graphml;
    if (name == "edge-csv") return ExportFormat::edge_csv;
    throw UsageError("unknown export format '" + std::string(name) + "'");
}

void export_graph(std::ostream& out, const MultiGraph& g, ExportFormat format, const Partition* partition) {
    if (partition && partition->size() != g.order()) throw DataError("partition does not cover the graph");
    switch (format) {
    case ExportFormat::dot:
        out << "graph castnet {\n";
        for (Vertex v = 0; v < g.order(); ++v) {
            out << "  n" << v << " [label=\"" << dot_escape(g.label(v)) << '"';
            if (partition) out << ", community=" << partition->community(v);
            out << "];\n";
        }
        g.for_each_edge([&](Vertex u, Vertex v, Count w) {
            out << "  n" << u << " -- n" << v << " [weight=" << w << "];\n";
        });
        out << "}\n";
        break;
    case ExportFormat::graphml:
        out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
            << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
            << "  <key id=\"label\" for=\"node\" attr.name=\"label\" attr.type=\"string\"/>\n";
        if (partition) out << "  <key id=\"community\" for=\"node\" attr.name=\"community\" attr.type=\"int\"/>\n";
        out << "  <key id=\"weight\" for=\"edge\" attr.name=\"weight\" attr.type=\"int\"/>\n"
            << "  <graph id=\"castnet\" edgedefault=\"undirected\">\n";
        for (Vertex v = 0; v < g.order(); ++v) {
            out << "    <node id=\"n" << v << "\"><data key=\"label\">" << xml_escape(g.label(v)) << "</data>";
            if (partition) out << "<data key=\"community\">" << partition->community(v) << "</data>";
            out << "</node>\n";
        }
        g.for_each_edge([&](Vertex u, Vertex v, Count w) {
            out << "    <edge source=\"n" << u << "\" target=\"n" << v << "\"><data key=\"weight\">" << w
                << "</data></edge>\n";
        });
        out << "  </graph>\n</graphml>\n";
        break;
    case ExportFormat::edge_csv:
        out << "source,target,weight\n";
        g.for_each_edge([&](Vertex u, Vertex v, Count w) {
            out << csv_quote(g.label(u)) << ',' << csv_quote(g.label(v)) << ',' << w << '\n';
        });
        break;
    }
}

MultiGraph read_edge_csv(std::istream& in, std::shared_ptr<NameTable> names) {
    MultiGraph g(std::move(names));
    std::string line;
    std::size_t line_no = 0;
    bool header = true;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto fields = csv_fields(line, line_no);
        if (fields.size() != 3) throw DataError("edge-csv:" + std::to_string(line_no) + ": expected 3 fields");
        if (header) {
            header = false;
            if (fields[0] != "source" || fields[1] != "target" || fields[2] != "weight") {
                throw DataError("edge-csv: missing 'source,target,weight' header");
            }
            continue;
        }
        Count weight = 0;
        try {
            std::size_t used = 0;
            weight = std::stoull(fields[2], &used);
            if (used != fields[2].size() || weight == 0) throw std::invalid_argument("weight");
        } catch (const std::exception&) {
            throw DataError("edge-csv:" + std::to_string(line_no) + ": bad weight '" + fields[2] + "'");
        }
        const Vertex u = g.add_vertex(fields[0]);
        const Vertex v = g.add_vertex(fields[1]);
        try {
            g.add_edge(u, v, weight);
        } catch (const DataError& e) {
            throw DataError("edge-csv:" + std::to_string(line_no) + ": " + e.what());
        }
    }
    return g;
}

} // namespace castnet
