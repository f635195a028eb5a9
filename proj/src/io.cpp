#include "ipq/io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace ipq {
namespace {

// one whitespace-separated token as u64, with distinct negative/malformed errors
u64 parse_value(const std::string& tok, std::size_t line, const char* what) {
    if (!tok.empty() && tok[0] == '-')
        throw ParseError(line, std::string("negative ") + what + " '" + tok + "'");
    u64 v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size())
        throw ParseError(line, std::string("malformed ") + what + " '" + tok + "'");
    return v;
}

std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> out;
    std::string t;
    while (ss >> t) out.push_back(std::move(t));
    return out;
}

// reads the next non-blank line; returns false at EOF
bool next_line(std::istream& in, std::string& line, std::size_t& lineno) {
    while (std::getline(in, line)) {
        ++lineno;
        if (!tokens_of(line).empty()) return true;
    }
    return false;
}

struct Header {
    std::string kind;
    u64 a = 0, b = 0;
    std::size_t lineno = 0;
};

Header read_header(std::istream& in, const char* expected_one, const char* expected_two) {
    std::string line;
    std::size_t lineno = 0;
    if (!next_line(in, line, lineno)) throw ParseError(1, "malformed header: empty input");
    auto tok = tokens_of(line);
    if (tok.size() != 3 || (tok[0] != expected_one && (expected_two == nullptr || tok[0] != expected_two)))
        throw ParseError(lineno, "malformed header '" + line + "'");
    Header h;
    h.kind = tok[0];
    h.a = parse_value(tok[1], lineno, "header field");
    h.b = parse_value(tok[2], lineno, "header field");
    h.lineno = lineno;
    return h;
}

}  // namespace

Matrix load_matrix(std::istream& in) {
    Header h = read_header(in, "dense", "sparse");
    Matrix m = [&] {
        try {
            return Matrix(h.a, h.b);
        } catch (const std::exception& e) {
            throw ParseError(h.lineno, std::string("malformed header: ") + e.what());
        }
    }();

    std::string line;
    std::size_t lineno = h.lineno;
    if (h.kind == "dense") {
        std::size_t rows = 0;
        while (next_line(in, line, lineno)) {
            if (rows == m.n) throw ParseError(lineno, "wrong row count: more than n rows");
            auto tok = tokens_of(line);
            if (tok.size() != m.n)
                throw ParseError(lineno, "row has wrong entry count (" + std::to_string(tok.size()) +
                                             " of " + std::to_string(m.n) + ")");
            for (std::size_t j = 0; j < m.n; ++j) {
                u64 v = parse_value(tok[j], lineno, "entry");
                if (v > m.rho) throw ParseError(lineno, "entry exceeds rho");
                m.at(rows, j) = v;
            }
            ++rows;
        }
        if (rows != m.n)
            throw ParseError(lineno, "wrong row count: got " + std::to_string(rows) + " of " +
                                         std::to_string(m.n));
    } else {
        std::set<std::pair<u64, u64>> seen;
        while (next_line(in, line, lineno)) {
            auto tok = tokens_of(line);
            if (tok.size() != 3) throw ParseError(lineno, "malformed sparse entry '" + line + "'");
            u64 i = parse_value(tok[0], lineno, "index");
            u64 j = parse_value(tok[1], lineno, "index");
            u64 v = parse_value(tok[2], lineno, "entry");
            if (i >= m.n || j >= m.n) throw ParseError(lineno, "index out of range");
            if (v > m.rho) throw ParseError(lineno, "entry exceeds rho");
            if (!seen.insert({i, j}).second) throw ParseError(lineno, "duplicate entry");
            m.at(i, j) = v;
        }
    }
    return m;
}

WeightVector load_weights(std::istream& in) {
    Header h = read_header(in, "weights", nullptr);
    WeightVector v = [&] {
        try {
            return WeightVector(h.a, h.b);
        } catch (const std::exception& e) {
            throw ParseError(h.lineno, std::string("malformed header: ") + e.what());
        }
    }();
    std::string line;
    std::size_t lineno = h.lineno, rows = 0;
    while (next_line(in, line, lineno)) {
        if (rows == v.n) throw ParseError(lineno, "wrong row count: more than n weights");
        auto tok = tokens_of(line);
        if (tok.size() != 1) throw ParseError(lineno, "malformed weight line '" + line + "'");
        u64 w = parse_value(tok[0], lineno, "weight");
        if (w > v.gamma) throw ParseError(lineno, "entry exceeds gamma");
        v.w[rows++] = w;
    }
    if (rows != v.n)
        throw ParseError(lineno,
                         "wrong row count: got " + std::to_string(rows) + " of " + std::to_string(v.n));
    return v;
}

GraphInstance load_graph(std::istream& in) {
    Header h = read_header(in, "graph", nullptr);
    if (h.a == 0) throw ParseError(h.lineno, "malformed header: empty vertex set");
    GraphInstance g;
    g.n = h.a;
    g.weight.assign(g.n, 1);
    std::string line;
    std::size_t lineno = h.lineno;
    std::set<std::pair<u64, u64>> seen;
    while (next_line(in, line, lineno)) {
        auto tok = tokens_of(line);
        if (tok.size() != 2) throw ParseError(lineno, "malformed edge '" + line + "'");
        u64 u = parse_value(tok[0], lineno, "vertex");
        u64 v = parse_value(tok[1], lineno, "vertex");
        if (u >= g.n || v >= g.n) throw ParseError(lineno, "index out of range");
        if (u == v) throw ParseError(lineno, "self-loop");
        auto key = std::minmax(u, v);
        if (!seen.insert({key.first, key.second}).second) throw ParseError(lineno, "duplicate edge");
        g.edges.emplace_back(static_cast<u32>(u), static_cast<u32>(v));
    }
    if (g.edges.size() != h.b)
        throw ParseError(lineno, "wrong edge count: got " + std::to_string(g.edges.size()) + " of " +
                                     std::to_string(h.b));
    return g;
}

namespace {
template <class Loader>
auto load_file(const std::string& path, Loader load) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return load(in);
}
}  // namespace

Matrix load_matrix_file(const std::string& path) {
    return load_file(path, [](std::istream& in) { return load_matrix(in); });
}
WeightVector load_weights_file(const std::string& path) {
    return load_file(path, [](std::istream& in) { return load_weights(in); });
}
GraphInstance load_graph_file(const std::string& path) {
    return load_file(path, [](std::istream& in) { return load_graph(in); });
}

std::string serialize_dense(const Matrix& a) {
    std::ostringstream out;
    out << "dense " << a.n << ' ' << a.rho << '\n';
    for (std::size_t i = 0; i < a.n; ++i) {
        for (std::size_t j = 0; j < a.n; ++j) {
            if (j) out << ' ';
            out << a.at(i, j);
        }
        out << '\n';
    }
    return out.str();
}

std::string serialize_sparse(const Matrix& a) {
    std::ostringstream out;
    out << "sparse " << a.n << ' ' << a.rho << '\n';
    for (std::size_t i = 0; i < a.n; ++i)
        for (std::size_t j = 0; j < a.n; ++j)
            if (u64 v = a.at(i, j); v != 0) out << i << ' ' << j << ' ' << v << '\n';
    return out.str();
}

std::string serialize_weights(const WeightVector& v) {
    std::ostringstream out;
    out << "weights " << v.n << ' ' << v.gamma << '\n';
    for (u64 w : v.w) out << w << '\n';
    return out.str();
}

std::string serialize_graph(const GraphInstance& g) {
    std::ostringstream out;
    out << "graph " << g.n << ' ' << g.edges.size() << '\n';
    for (auto [u, v] : g.edges) out << u << ' ' << v << '\n';
    return out.str();
}

}  // namespace ipq
