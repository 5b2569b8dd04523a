#include "arbor/io.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <string_view>

namespace arbor {

namespace {

std::vector<std::string_view> split(std::string_view line)
{
    std::vector<std::string_view> tokens;
    std::size_t pos = 0;
    while (pos < line.size()) {
        if (line[pos] == ' ') {
            ++pos;
            continue;
        }
        auto end = line.find(' ', pos);
        if (end == std::string_view::npos)
            end = line.size();
        tokens.push_back(line.substr(pos, end - pos));
        pos = end;
    }
    return tokens;
}

class LineReader {
public:
    explicit LineReader(std::istream &in) : in_(in) {}

    /// Next non-empty line split into tokens; empty vector at end of input.
    std::vector<std::string_view> next()
    {
        while (std::getline(in_, line_)) {
            ++number_;
            if (line_.empty())
                continue;
            return split(line_);
        }
        line_.clear();
        return {};
    }

    [[noreturn]] void fail(const std::string &what) const
    {
        throw FormatError("line " + std::to_string(number_) + ": " + what);
    }

    long integer(std::string_view token) const
    {
        long value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size())
            fail("expected an integer, got '" + std::string(token) + "'");
        return value;
    }

    Edge edge(std::string_view token) const
    {
        auto dash = token.find('-');
        if (dash == std::string_view::npos)
            fail("expected an edge u-v, got '" + std::string(token) + "'");
        auto u = integer(token.substr(0, dash));
        auto v = integer(token.substr(dash + 1));
        if (u == v)
            fail("loop edge " + std::string(token));
        return make_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }

private:
    std::istream &in_;
    std::string line_;
    std::size_t number_ = 0;
};

} // namespace

void write_graph(std::ostream &out, const Graph &g)
{
    out << "p " << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges())
        out << "e " << u << ' ' << v << '\n';
}

Graph read_graph(std::istream &in)
{
    LineReader reader(in);
    auto header = reader.next();
    if (header.size() != 3 || header[0] != "p")
        reader.fail("expected header 'p <n> <m>'");
    long n = reader.integer(header[1]);
    long m = reader.integer(header[2]);
    if (n < 0 || m < 0)
        reader.fail("negative count in header");

    std::vector<Edge> edges;
    std::set<Edge> seen;
    for (auto tokens = reader.next(); !tokens.empty(); tokens = reader.next()) {
        if (tokens.size() != 3 || tokens[0] != "e")
            reader.fail("expected 'e <u> <v>'");
        long u = reader.integer(tokens[1]);
        long v = reader.integer(tokens[2]);
        if (!(1 <= u && u < v && v <= n))
            reader.fail("edge endpoints must satisfy 1 <= u < v <= n");
        Edge e{static_cast<Vertex>(u), static_cast<Vertex>(v)};
        if (!seen.insert(e).second)
            reader.fail("duplicate edge " + to_string(e));
        edges.push_back(e);
    }
    if (static_cast<long>(edges.size()) != m)
        throw FormatError("header announces " + std::to_string(m) + " edges, found " +
                          std::to_string(edges.size()));
    return Graph(static_cast<int>(n), std::move(edges));
}

void write_certificate(std::ostream &out, const CoverCertificate &cert)
{
    out << "c " << tag(cert.mode) << ' ' << tag(cert.cls) << ' ' << cert.k() << '\n';
    for (std::size_t i = 0; i < cert.parts.size(); ++i) {
        out << "f " << i + 1;
        for (auto e : cert.parts[i])
            out << ' ' << e.u << '-' << e.v;
        out << '\n';
    }
}

CoverCertificate read_certificate(std::istream &in)
{
    LineReader reader(in);
    auto header = reader.next();
    if (header.size() != 4 || header[0] != "c")
        reader.fail("expected header 'c <cover|partition> <class> <k>'");
    CoverCertificate cert;
    auto mode = parse_cover_mode(header[1]);
    if (!mode)
        reader.fail("unknown mode '" + std::string(header[1]) + "'");
    auto cls = parse_forest_class(header[2]);
    if (!cls)
        reader.fail("unknown class '" + std::string(header[2]) + "'");
    cert.mode = *mode;
    cert.cls = *cls;
    long k = reader.integer(header[3]);
    if (k < 0)
        reader.fail("negative part count");

    for (auto tokens = reader.next(); !tokens.empty(); tokens = reader.next()) {
        if (tokens.size() < 2 || tokens[0] != "f")
            reader.fail("expected 'f <i> <u>-<v> ...'");
        if (reader.integer(tokens[1]) != static_cast<long>(cert.parts.size()) + 1)
            reader.fail("parts must be numbered 1..k in order");
        auto &part = cert.parts.emplace_back();
        for (std::size_t t = 2; t < tokens.size(); ++t)
            part.push_back(reader.edge(tokens[t]));
    }
    if (static_cast<long>(cert.parts.size()) != k)
        throw FormatError("header announces " + std::to_string(k) + " parts, found " +
                          std::to_string(cert.parts.size()));
    return cert;
}

void write_coloring(std::ostream &out, const ColoringCertificate &col)
{
    out << "col " << tag(col.kind) << ' ' << col.colors << '\n';
    if (colors_vertices(col.kind)) {
        for (std::size_t v = 1; v < col.vertex_colors.size(); ++v)
            out << "v " << v << ' ' << col.vertex_colors[v] << '\n';
    } else {
        for (const auto &[e, c] : col.edge_colors)
            out << "e " << e.u << '-' << e.v << ' ' << c << '\n';
    }
}

ColoringCertificate read_coloring(std::istream &in, int order)
{
    LineReader reader(in);
    auto header = reader.next();
    if (header.size() != 3 || header[0] != "col")
        reader.fail("expected header 'col <kind> <c>'");
    auto kind = parse_coloring_kind(header[1]);
    if (!kind)
        reader.fail("unknown colouring kind '" + std::string(header[1]) + "'");
    ColoringCertificate col;
    col.kind = *kind;
    col.colors = static_cast<int>(reader.integer(header[2]));
    if (colors_vertices(col.kind))
        col.vertex_colors.assign(order + 1, 0);

    for (auto tokens = reader.next(); !tokens.empty(); tokens = reader.next()) {
        if (tokens.size() != 3)
            reader.fail("expected three tokens");
        int colour = static_cast<int>(reader.integer(tokens[2]));
        if (colors_vertices(col.kind)) {
            if (tokens[0] != "v")
                reader.fail("expected 'v <vertex> <colour>'");
            long v = reader.integer(tokens[1]);
            if (v < 1 || v > order)
                reader.fail("vertex out of range");
            if (col.vertex_colors[v] != 0)
                reader.fail("vertex coloured twice");
            col.vertex_colors[v] = colour;
        } else {
            if (tokens[0] != "e")
                reader.fail("expected 'e <u>-<v> <colour>'");
            if (!col.edge_colors.emplace(reader.edge(tokens[1]), colour).second)
                reader.fail("edge coloured twice");
        }
    }
    return col;
}

void write_roles(std::ostream &out, const std::vector<std::string> &roles)
{
    for (std::size_t v = 1; v < roles.size(); ++v)
        out << "role " << v << ' ' << roles[v] << '\n';
}

std::string graph_to_string(const Graph &g)
{
    std::ostringstream out;
    write_graph(out, g);
    return out.str();
}

Graph graph_from_string(const std::string &text)
{
    std::istringstream in(text);
    return read_graph(in);
}

namespace {

std::ifstream open(const std::filesystem::path &path)
{
    std::ifstream in(path);
    if (!in)
        throw FormatError("cannot open " + path.string());
    return in;
}

} // namespace

Graph load_graph(const std::filesystem::path &path)
{
    auto in = open(path);
    return read_graph(in);
}

CoverCertificate load_certificate(const std::filesystem::path &path)
{
    auto in = open(path);
    return read_certificate(in);
}

ColoringCertificate load_coloring(const std::filesystem::path &path, int order)
{
    auto in = open(path);
    return read_coloring(in, order);
}

std::string to_dot(const Graph &g, const CoverCertificate *cert)
{
    static constexpr std::array palette{"red",    "blue",  "darkgreen", "orange", "purple", "brown",
                                        "magenta", "cyan", "gold",      "gray40", "navy",   "olive"};
    std::map<Edge, std::vector<std::size_t>> parts_of;
    if (cert)
        for (std::size_t i = 0; i < cert->parts.size(); ++i)
            for (auto e : cert->parts[i])
                parts_of[make_edge(e.u, e.v)].push_back(i);

    std::ostringstream out;
    out << "graph G {\n";
    for (Vertex v = 1; v <= g.order(); ++v)
        out << "  " << v << ";\n";
    for (auto e : g.edges()) {
        out << "  " << e.u << " -- " << e.v;
        if (auto it = parts_of.find(e); it != parts_of.end()) {
            out << " [color=\"" << palette[it->second.front() % palette.size()] << "\", label=\"";
            for (std::size_t i = 0; i < it->second.size(); ++i)
                out << (i ? "," : "") << it->second[i] + 1;
            out << "\"]";
        }
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace arbor
