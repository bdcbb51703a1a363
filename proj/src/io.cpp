#include "dualrep/io.hpp"

#include <fstream>
#include <optional>
#include <sstream>

namespace dualrep {
namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) {
        if (tok[0] == '#') break;
        out.push_back(tok);
    }
    return out;
}

/* canonical bracket syntax: "[[a,b],[c,d]]", "[]" when a side is empty */
Matrix parse_matrix(const Field& f, std::int64_t rows, std::int64_t cols, const std::string& text,
                    int lineno) {
    if (rows == 0 || cols == 0) {
        if (text != "[]")
            throw ParseError(lineno, "expected [] for an empty matrix, got '" + text + "'");
        return Matrix(f, static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
    }
    if (text.size() < 4 || text.front() != '[' || text.back() != ']')
        throw ParseError(lineno, "matrix must be bracketed: '" + text + "'");
    Matrix m(f, static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
    std::size_t pos = 1;  // past the outer '['
    for (std::int64_t r = 0; r < rows; ++r) {
        if (pos >= text.size() || text[pos] != '[')
            throw ParseError(lineno, "expected row " + std::to_string(r + 1) + " of " +
                                         std::to_string(rows));
        ++pos;
        for (std::int64_t c = 0; c < cols; ++c) {
            std::size_t end = pos;
            while (end < text.size() && text[end] != ',' && text[end] != ']') ++end;
            if (end == pos) throw ParseError(lineno, "empty matrix entry");
            try {
                m.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) =
                    f.parse(text.substr(pos, end - pos));
            } catch (const Error& e) {
                throw ParseError(lineno, e.what());
            }
            pos = end;
            if (c + 1 < cols) {
                if (pos >= text.size() || text[pos] != ',')
                    throw ParseError(lineno, "row has fewer than " + std::to_string(cols) +
                                                 " entries");
                ++pos;
            }
        }
        if (pos >= text.size() || text[pos] != ']')
            throw ParseError(lineno, "row has more than " + std::to_string(cols) + " entries");
        ++pos;
        if (r + 1 < rows) {
            if (pos >= text.size() || text[pos] != ',')
                throw ParseError(lineno, "matrix has fewer than " + std::to_string(rows) +
                                             " rows");
            ++pos;
        }
    }
    if (pos + 1 != text.size() || text[pos] != ']')
        throw ParseError(lineno, "matrix has more than " + std::to_string(rows) + " rows");
    return m;
}

struct Entry {
    std::string text;
    int lineno = 0;
};

struct ParsedFile {
    Field field;
    std::vector<std::optional<Entry>> dims;  // per vertex
    std::vector<std::optional<Entry>> maps;  // per arrow
    std::vector<std::optional<Entry>> eps;   // per vertex
    bool has_eps = false;
};

ParsedFile scan(std::istream& in, const Quiver& q) {
    ParsedFile out{Field::rationals(), {}, {}, {}, false};
    out.dims.resize(q.num_vertices());
    out.maps.resize(q.num_arrows());
    out.eps.resize(q.num_vertices());
    bool have_header = false;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        if (toks[0] == "rep") {
            if (have_header || toks.size() != 5 || toks[1] != "over" || toks[3] != "quiver")
                throw ParseError(lineno, "bad header (want: rep over <field> quiver <name>)");
            try {
                out.field = parse_field_spec(toks[2]);
            } catch (const Error& e) {
                throw ParseError(lineno, e.what());
            }
            if (toks[4] != q.name)
                throw ParseError(lineno, "module is over quiver '" + toks[4] +
                                             "', expected '" + q.name + "'");
            have_header = true;
            continue;
        }
        if (!have_header) throw ParseError(lineno, "missing header");
        if (toks.size() != 4 || toks[2] != "=")
            throw ParseError(lineno, "want: <directive> <id> = <value>");
        try {
            if (toks[0] == "dim" || toks[0] == "eps") {
                std::size_t v = q.vertex_index(toks[1]);
                auto& slot = (toks[0] == "dim") ? out.dims[v] : out.eps[v];
                if (slot) throw Error("ParseError", "duplicate " + toks[0] + " for vertex");
                slot = Entry{toks[3], lineno};
                if (toks[0] == "eps") out.has_eps = true;
            } else if (toks[0] == "map") {
                std::size_t a = q.arrow_index(toks[1]);
                if (out.maps[a]) throw Error("ParseError", "duplicate map for arrow");
                out.maps[a] = Entry{toks[3], lineno};
            } else {
                throw Error("ParseError", "unknown directive '" + toks[0] + "'");
            }
        } catch (const ParseError&) {
            throw;
        } catch (const Error& e) {
            throw ParseError(lineno, e.what());
        }
    }
    if (!have_header) throw ParseError(lineno, "missing header");
    for (std::size_t v = 0; v < q.num_vertices(); ++v)
        if (!out.dims[v])
            throw ParseError(lineno, "missing dim for vertex '" + q.vertices[v] + "'");
    for (std::size_t a = 0; a < q.num_arrows(); ++a)
        if (!out.maps[a])
            throw ParseError(lineno, "missing map for arrow '" + q.arrows[a].id + "'");
    if (out.has_eps)
        for (std::size_t v = 0; v < q.num_vertices(); ++v)
            if (!out.eps[v])
                throw ParseError(lineno, "missing eps for vertex '" + q.vertices[v] + "'");
    return out;
}

std::int64_t parse_dim(const Entry& e) {
    try {
        std::size_t used = 0;
        long long n = std::stoll(e.text, &used);
        if (used != e.text.size() || n < 0) throw std::invalid_argument(e.text);
        return n;
    } catch (const std::exception&) {
        throw ParseError(e.lineno, "bad dimension '" + e.text + "'");
    }
}

Rep build_rep(const ParsedFile& pf, std::shared_ptr<const Quiver> q) {
    DimVector dims(q->num_vertices());
    for (std::size_t v = 0; v < q->num_vertices(); ++v) dims[v] = parse_dim(*pf.dims[v]);
    std::vector<Matrix> maps;
    maps.reserve(q->num_arrows());
    for (std::size_t a = 0; a < q->num_arrows(); ++a)
        maps.push_back(parse_matrix(pf.field, dims[q->arrows[a].tgt], dims[q->arrows[a].src],
                                    pf.maps[a]->text, pf.maps[a]->lineno));
    Rep m(pf.field, std::move(q), std::move(dims), std::move(maps));
    m.validate();
    return m;
}

}  // namespace

Field parse_field_spec(const std::string& spec) {
    if (spec == "Q") return Field::rationals();
    if (spec.size() >= 2 && spec[0] == 'F') {
        try {
            std::size_t used = 0;
            long long p = std::stoll(spec.substr(1), &used);
            if (used + 1 == spec.size() && p > 1) return Field::fp(p);
        } catch (const std::exception&) {
        }
    }
    throw Error("BadField", "field spec must be F<p> or Q, got '" + spec + "'");
}

std::string print_rep(const Rep& m) {
    const Quiver& q = m.quiver();
    std::string s = "rep over " + m.field().describe() + " quiver " + q.name + "\n";
    for (std::size_t v = 0; v < q.num_vertices(); ++v)
        s += "dim " + q.vertices[v] + " = " + std::to_string(m.dim_at(v)) + "\n";
    for (std::size_t a = 0; a < q.num_arrows(); ++a)
        s += "map " + q.arrows[a].id + " = " + m.map(a).to_string() + "\n";
    return s;
}

std::string print_diffrep(const DiffRep& m) {
    std::string s = print_rep(m.base);
    const Quiver& q = m.quiver();
    for (std::size_t v = 0; v < q.num_vertices(); ++v)
        s += "eps " + q.vertices[v] + " = " + m.eps[v].to_string() + "\n";
    return s;
}

Rep parse_rep(std::istream& in, std::shared_ptr<const Quiver> q) {
    ParsedFile pf = scan(in, *q);
    if (pf.has_eps) {
        int at = 0;
        for (const auto& e : pf.eps)
            if (e) at = e->lineno;
        throw ParseError(at, "eps lines in a plain module file");
    }
    return build_rep(pf, std::move(q));
}

DiffRep parse_diffrep(std::istream& in, std::shared_ptr<const Quiver> q) {
    ParsedFile pf = scan(in, *q);
    Rep base = build_rep(pf, q);
    if (!pf.has_eps) return with_zero_eps(base);
    std::vector<Matrix> eps;
    eps.reserve(q->num_vertices());
    for (std::size_t v = 0; v < q->num_vertices(); ++v)
        eps.push_back(parse_matrix(pf.field, base.dim_at(v), base.dim_at(v), pf.eps[v]->text,
                                   pf.eps[v]->lineno));
    return make_diffrep(std::move(base), std::move(eps));
}

Rep parse_rep_file(const std::string& path, std::shared_ptr<const Quiver> q) {
    std::ifstream in(path);
    if (!in) throw Error("IoError", "cannot open '" + path + "'");
    return parse_rep(in, std::move(q));
}

DiffRep parse_diffrep_file(const std::string& path, std::shared_ptr<const Quiver> q) {
    std::ifstream in(path);
    if (!in) throw Error("IoError", "cannot open '" + path + "'");
    return parse_diffrep(in, std::move(q));
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("IoError", "cannot open '" + path + "'");
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("IoError", "cannot open '" + path + "' for writing");
    out << text;
    if (!out) throw Error("IoError", "write failed on '" + path + "'");
}

}  // namespace dualrep
