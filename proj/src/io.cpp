#include "lsc/io.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <istream>
#include <sstream>

#include "lsc/error.hpp"

namespace lsc {

namespace {

struct Line {
    int number;
    std::string text;     // with comment stripped
    std::string comment;  // text after '#', untrimmed
};

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<Line> read_lines(std::istream& in) {
    std::vector<Line> out;
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        Line l{number, raw, ""};
        auto hash = raw.find('#');
        if (hash != std::string::npos) {
            l.text = raw.substr(0, hash);
            l.comment = raw.substr(hash + 1);
        }
        l.text = trim(l.text);
        out.push_back(std::move(l));
    }
    return out;
}

std::vector<std::string> tokens(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string t;
    while (in >> t) out.push_back(t);
    return out;
}

Integer parse_integer(const std::string& tok, int line) {
    std::string digits = tok;
    if (!digits.empty() && (digits[0] == '+' || digits[0] == '-')) digits = digits.substr(1);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw ParseError(line, "expected an integer, got '" + tok + "'");
    Integer v;
    std::string clean = tok[0] == '+' ? tok.substr(1) : tok;
    v.set_str(clean, 10);
    return v;
}

int parse_int(const std::string& tok, int line) {
    Integer v = parse_integer(tok, line);
    if (!v.fits_sint_p()) throw ParseError(line, "integer out of range: " + tok);
    return static_cast<int>(v.get_si());
}

std::string point_coord(const Rational& r) {
    if (r.get_den() != 1) throw std::invalid_argument("instance coordinates must be integers");
    return r.get_num().get_str();
}

}  // namespace

Instance parse_instance(std::istream& in, const std::string& fallback_name) {
    auto lines = read_lines(in);
    InstanceMetadata meta;
    meta.name = fallback_name;
    bool header = false;
    std::vector<Segment> segs;
    for (const auto& l : lines) {
        std::string c = trim(l.comment);
        if (l.text.empty() && c.rfind("name:", 0) == 0) meta.name = trim(c.substr(5));
        if (l.text.empty() && c.rfind("source:", 0) == 0) meta.source = trim(c.substr(7));
        if (l.text.empty()) continue;
        auto tok = tokens(l.text);
        if (!header) {
            if (tok.size() != 2 || tok[0] != "LSC") throw ParseError(l.number, "expected header 'LSC 1'");
            if (tok[1] != "1") throw ParseError(l.number, "unsupported format version " + tok[1]);
            header = true;
            continue;
        }
        if (tok.size() != 4) throw ParseError(l.number, "expected 'x1 y1 x2 y2'");
        Point a(Rational(parse_integer(tok[0], l.number)), Rational(parse_integer(tok[1], l.number)));
        Point b(Rational(parse_integer(tok[2], l.number)), Rational(parse_integer(tok[3], l.number)));
        segs.emplace_back(static_cast<int>(segs.size()), a, b);
    }
    if (!header) throw ParseError(static_cast<int>(lines.size()) + 1, "missing header 'LSC 1'");
    return validate(std::move(segs), std::move(meta));
}

Instance parse_instance_text(const std::string& text, const std::string& fallback_name) {
    std::istringstream in(text);
    return parse_instance(in, fallback_name);
}

std::string emit_instance(const Instance& inst) {
    std::ostringstream out;
    out << "LSC 1\n";
    if (!inst.metadata.name.empty()) out << "# name: " << inst.metadata.name << "\n";
    if (!inst.metadata.source.empty()) out << "# source: " << inst.metadata.source << "\n";
    for (const auto& s : inst.segments())
        out << point_coord(s.a.x) << ' ' << point_coord(s.a.y) << ' ' << point_coord(s.b.x) << ' '
            << point_coord(s.b.y) << '\n';
    return out.str();
}

Cover parse_solution(std::istream& in) {
    auto lines = read_lines(in);
    bool header = false;
    int declared = 0;
    Cover c;
    for (const auto& l : lines) {
        if (l.text.empty()) continue;
        auto tok = tokens(l.text);
        if (!header) {
            if (tok.size() != 2 || tok[0] != "SOL") throw ParseError(l.number, "expected header 'SOL <size>'");
            declared = parse_int(tok[1], l.number);
            header = true;
            continue;
        }
        if (tok.size() != 1) throw ParseError(l.number, "expected one segment id");
        int id = parse_int(tok[0], l.number);
        if (!c.chosen.empty() && id <= c.chosen.back()) throw ParseError(l.number, "ids must be strictly ascending");
        c.chosen.push_back(id);
    }
    if (!header) throw ParseError(static_cast<int>(lines.size()) + 1, "missing header 'SOL <size>'");
    if (declared != c.size())
        throw ParseError(static_cast<int>(lines.size()), "declared size " + std::to_string(declared) +
                                                             " but listed " + std::to_string(c.size()));
    return c;
}

std::string emit_solution(const Cover& cover) {
    std::ostringstream out;
    out << "SOL " << cover.size() << '\n';
    for (int id : cover.chosen) out << id << '\n';
    return out.str();
}

Graph parse_graph(std::istream& in) {
    auto lines = read_lines(in);
    bool header = false;
    int n = 0, m = 0;
    std::vector<std::pair<int, int>> edges;
    int last = 0;
    for (const auto& l : lines) {
        if (l.text.empty()) continue;
        last = l.number;
        auto tok = tokens(l.text);
        if (tok.size() != 2) throw ParseError(l.number, header ? "expected 'i j'" : "expected 'n m'");
        int a = parse_int(tok[0], l.number);
        int b = parse_int(tok[1], l.number);
        if (!header) {
            n = a;
            m = b;
            header = true;
            continue;
        }
        if (a < 0 || a >= n || b < 0 || b >= n) throw ParseError(l.number, "vertex out of range");
        edges.emplace_back(a, b);
    }
    if (!header) throw ParseError(1, "missing header 'n m'");
    if (static_cast<int>(edges.size()) != m)
        throw ParseError(last, "expected " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
    try {
        return make_graph(n, std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw ParseError(last, e.what());
    }
}

std::string emit_graph(const Graph& g) {
    std::ostringstream out;
    out << g.n << ' ' << g.edges.size() << '\n';
    for (auto [a, b] : g.edges) out << a << ' ' << b << '\n';
    return out.str();
}

std::vector<SegmentRole> parse_roles(std::istream& in) {
    std::vector<SegmentRole> roles;
    for (const auto& l : read_lines(in)) {
        if (l.text.empty()) continue;
        std::istringstream ls(l.text);
        std::string id_tok;
        ls >> id_tok;
        int id = parse_int(id_tok, l.number);
        if (id != static_cast<int>(roles.size())) throw ParseError(l.number, "role ids must be 0..n-1 in order");
        std::string rest;
        std::getline(ls, rest);
        try {
            roles.push_back(parse_role(trim(rest)));
        } catch (const std::invalid_argument& e) {
            throw ParseError(l.number, e.what());
        }
    }
    return roles;
}

std::string emit_roles(const std::vector<SegmentRole>& roles) {
    std::ostringstream out;
    for (std::size_t i = 0; i < roles.size(); ++i) out << i << ' ' << to_string(roles[i]) << '\n';
    return out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file_atomic(const std::string& path, const std::string& contents) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot write '" + tmp + "'");
        out << contents;
        if (!out) throw Error("write failed for '" + tmp + "'");
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw Error("cannot rename '" + tmp + "' to '" + path + "': " + ec.message());
}

Instance load_instance(const std::string& path) {
    std::istringstream in(read_file(path));
    return parse_instance(in, std::filesystem::path(path).stem().string());
}

}  // namespace lsc
