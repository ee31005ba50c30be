// Text input/output: quiver and glued-algebra file parsing with line
// diagnostics, module literals, and DOT/CSV emitters for the CLI.
#pragma once

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "sttglue/naming.hpp"
#include "sttglue/tautilt.hpp"

namespace sttglue {
namespace io {

namespace detail {

inline std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

inline std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

[[noreturn]] inline void fail(int line, const std::string& msg) {
    throw ParseError("line " + std::to_string(line) + ": " + msg);
}

struct QuiverLines {
    std::vector<std::string> labels;
    std::vector<Arrow> arrows;  // src/tgt as label indices
    std::map<std::string, int> index;
};

inline void feed_quiver_line(QuiverLines& q, const std::string& line, int lineno) {
    if (line.rfind("vertices:", 0) == 0) {
        for (const auto& lbl : split_ws(line.substr(9))) {
            if (q.index.count(lbl)) fail(lineno, "duplicate vertex label '" + lbl + "'");
            q.index[lbl] = static_cast<int>(q.labels.size());
            q.labels.push_back(lbl);
        }
        return;
    }
    if (line.rfind("arrow ", 0) == 0) {
        const auto colon = line.find(':');
        if (colon == std::string::npos) fail(lineno, "arrow line needs 'arrow name: src -> tgt'");
        const std::string name = trim(line.substr(6, colon - 6));
        const std::string rest = line.substr(colon + 1);
        const auto sep = rest.find("->");
        if (name.empty() || sep == std::string::npos)
            fail(lineno, "arrow line needs 'arrow name: src -> tgt'");
        const std::string src = trim(rest.substr(0, sep));
        const std::string tgt = trim(rest.substr(sep + 2));
        if (!q.index.count(src)) fail(lineno, "unknown source vertex '" + src + "'");
        if (!q.index.count(tgt)) fail(lineno, "unknown target vertex '" + tgt + "'");
        q.arrows.push_back({name, q.index.at(src), q.index.at(tgt)});
        return;
    }
    fail(lineno, "unrecognized directive: " + line);
}

inline std::vector<std::pair<int, std::string>> content_lines(const std::string& text) {
    std::vector<std::pair<int, std::string>> out;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const auto hash = raw.find('#');
        if (hash != std::string::npos) raw = raw.substr(0, hash);
        const std::string line = trim(raw);
        if (!line.empty()) out.push_back({lineno, line});
    }
    return out;
}

}  // namespace detail

/// Parse the plain quiver format: `vertices: 1 2 3` / `arrow a: 2 -> 1`.
inline Quiver parse_quiver(const std::string& text) {
    detail::QuiverLines q;
    for (const auto& [lineno, line] : detail::content_lines(text))
        detail::feed_quiver_line(q, line, lineno);
    if (q.labels.empty()) throw ParseError("quiver file declares no vertices");
    return Quiver(q.labels, q.arrows);
}

/// Parse the glued format: `[B]` and `[C]` sections hold quiver lines, `[M]`
/// holds connecting arrows written `arrow m: c -> b` with c a C-vertex and b
/// a B-vertex. An empty `[M]` gives the product algebra.
inline GluedAlgebra parse_glued(const std::string& text, fp_t p) {
    detail::QuiverLines qb, qc;
    struct RawArrow {
        std::string name, src, tgt;
        int lineno;
    };
    std::vector<RawArrow> connecting;
    std::string section;
    for (const auto& [lineno, line] : detail::content_lines(text)) {
        if (line == "[B]" || line == "[C]" || line == "[M]") {
            section = line;
            continue;
        }
        if (section == "[B]") {
            detail::feed_quiver_line(qb, line, lineno);
        } else if (section == "[C]") {
            detail::feed_quiver_line(qc, line, lineno);
        } else if (section == "[M]") {
            if (line.rfind("arrow ", 0) != 0) detail::fail(lineno, "expected a connecting arrow");
            const auto colon = line.find(':');
            const auto sep = line.find("->");
            if (colon == std::string::npos || sep == std::string::npos || sep < colon)
                detail::fail(lineno, "arrow line needs 'arrow name: src -> tgt'");
            connecting.push_back({detail::trim(line.substr(6, colon - 6)),
                                  detail::trim(line.substr(colon + 1, sep - colon - 1)),
                                  detail::trim(line.substr(sep + 2)), lineno});
        } else {
            detail::fail(lineno, "content before any [B]/[C]/[M] section");
        }
    }
    if (qb.labels.empty()) throw ParseError("glued file is missing a [B] section with vertices");
    if (qc.labels.empty()) throw ParseError("glued file is missing a [C] section with vertices");
    AlgebraPtr b = make_path_algebra(Quiver(qb.labels, qb.arrows), p);
    AlgebraPtr c = make_path_algebra(Quiver(qc.labels, qc.arrows), p);
    std::vector<Arrow> conn;
    for (const auto& a : connecting) {
        if (qb.index.count(a.src) || !qc.index.count(a.src))
            detail::fail(a.lineno,
                         "connecting arrow must start at a C-vertex, got '" + a.src + "'");
        if (!qb.index.count(a.tgt))
            detail::fail(a.lineno, "connecting arrow must end at a B-vertex, got '" + a.tgt + "'");
        conn.push_back({a.name, qc.index.at(a.src), qb.index.at(a.tgt)});
    }
    return GluedAlgebra(std::move(b), std::move(c), std::move(conn));
}

namespace detail {

inline std::vector<int> parse_dims(const std::string& payload, int lineno, int want) {
    std::vector<int> dims;
    for (const auto& tok : split_ws(payload)) {
        try {
            dims.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            fail(lineno, "bad dimension '" + tok + "'");
        }
    }
    if (dims.size() != static_cast<std::size_t>(want))
        fail(lineno, "dimension vector has the wrong length");
    return dims;
}

}  // namespace detail

/// Parse a module file over `cat.alg`. Two summand forms:
///   `summand: d1 d2 ...`      — a dimension vector that must pick out a
///                               unique enumerated indecomposable;
///   `summand explicit` block  — `dims: d1 d2 ...`, then one
///                               `arrow name: r11 r12 ; r21 r22` line per
///                               arrow (entries mod p, rows split on ';'),
///                               closed by `end`; decomposed into summands.
inline std::vector<int> parse_module_literals(const std::string& text, const ModCategory& cat) {
    const auto lines = detail::content_lines(text);
    const int nv = cat.alg->num_vertices();
    const auto& arrows = cat.alg->quiver().arrows();
    std::vector<int> out;
    for (std::size_t li = 0; li < lines.size(); ++li) {
        const auto& [lineno, line] = lines[li];
        if (line == "summand explicit") {
            Rep m{cat.alg, {}, {}};
            if (li + 1 >= lines.size() || lines[li + 1].second.rfind("dims:", 0) != 0)
                detail::fail(lineno, "explicit summand needs a 'dims:' line");
            ++li;
            m.dims = detail::parse_dims(lines[li].second.substr(5), lines[li].first, nv);
            m.action.assign(arrows.size(),
                            Mat(0, 0, cat.alg->modulus()));
            std::vector<char> seen(arrows.size(), 0);
            while (true) {
                if (++li >= lines.size())
                    detail::fail(lineno, "explicit summand is missing its 'end' line");
                const auto& [ln, l] = lines[li];
                if (l == "end") break;
                if (l.rfind("arrow ", 0) != 0) detail::fail(ln, "expected 'arrow name: ...' or 'end'");
                const auto colon = l.find(':');
                if (colon == std::string::npos) detail::fail(ln, "arrow line needs a ':'");
                const std::string name = detail::trim(l.substr(6, colon - 6));
                int ai = -1;
                for (int a = 0; a < static_cast<int>(arrows.size()); ++a)
                    if (arrows[a].name == name) ai = a;
                if (ai < 0) detail::fail(ln, "unknown arrow '" + name + "'");
                const int rows = m.dims[arrows[ai].tgt], cols = m.dims[arrows[ai].src];
                Mat blk(rows, cols, cat.alg->modulus());
                std::vector<std::vector<std::string>> entries;
                std::istringstream rs(l.substr(colon + 1));
                std::string rowtxt;
                while (std::getline(rs, rowtxt, ';')) entries.push_back(detail::split_ws(rowtxt));
                if (rows > 0 && cols > 0) {
                    if (static_cast<int>(entries.size()) != rows)
                        detail::fail(ln, "wrong number of matrix rows");
                    for (int r = 0; r < rows; ++r) {
                        if (static_cast<int>(entries[r].size()) != cols)
                            detail::fail(ln, "wrong number of matrix columns");
                        for (int c = 0; c < cols; ++c) {
                            try {
                                long v = std::stol(entries[r][c]);
                                v %= cat.alg->modulus();
                                if (v < 0) v += cat.alg->modulus();
                                blk.at(r, c) = static_cast<fp_t>(v);
                            } catch (const std::exception&) {
                                detail::fail(ln, "bad matrix entry '" + entries[r][c] + "'");
                            }
                        }
                    }
                }
                m.action[ai] = std::move(blk);
                seen[ai] = 1;
            }
            for (std::size_t a = 0; a < arrows.size(); ++a)
                if (!seen[a])
                    m.action[a] = Mat(m.dims[arrows[a].tgt], m.dims[arrows[a].src],
                                      cat.alg->modulus());
            try {
                validate_rep(m);
            } catch (const std::exception& e) {
                detail::fail(lineno, std::string("invalid explicit summand: ") + e.what());
            }
            if (!m.is_zero())
                for (int i : cat.summand_indices(m)) out.push_back(i);
            continue;
        }
        if (line.rfind("summand:", 0) != 0)
            detail::fail(lineno, "expected 'summand: d1 d2 ...' or 'summand explicit'");
        std::vector<int> dims = detail::parse_dims(line.substr(8), lineno, nv);
        std::optional<int> hit;
        for (int i = 0; i < static_cast<int>(cat.indecs.size()); ++i) {
            if (cat.indecs[i].dims != dims) continue;
            if (hit) detail::fail(lineno, "dimension vector is ambiguous");
            hit = i;
        }
        if (!hit) detail::fail(lineno, "no indecomposable has this dimension vector");
        out.push_back(*hit);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// --- emitters ---------------------------------------------------------------

inline std::string pair_label(const ModCategory& cat, const SttPair& p) {
    if (p.indecs.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < p.indecs.size(); ++i) {
        if (i) out += "⊕";
        out += cat.names[p.indecs[i]];
    }
    return out;
}

inline std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

inline std::string csv_row(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out += ",";
        out += csv_escape(fields[i]);
    }
    return out + "\n";
}

/// Aligned plain-text table.
inline std::string table(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width;
    for (const auto& row : rows)
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (width.size() <= i) width.resize(i + 1, 0);
            width[i] = std::max(width[i], row[i].size());
        }
    std::string out;
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            out += row[i];
            if (i + 1 < row.size()) out += std::string(width[i] - row[i].size() + 2, ' ');
        }
        out += "\n";
    }
    return out;
}

/// Hasse quiver as DOT; nodes named by their support tau-tilting module,
/// edges labeled by the covering brick.
inline std::string hasse_dot(const ModCategory& cat, const HasseQuiver& h) {
    std::string out = "digraph hasse {\n";
    for (const auto& p : h.nodes) out += "  \"" + pair_label(cat, p) + "\";\n";
    for (const auto& e : h.edges)
        out += "  \"" + pair_label(cat, h.nodes[e.from]) + "\" -> \"" +
               pair_label(cat, h.nodes[e.to]) + "\" [label=\"" + cat.names[e.label] + "\"];\n";
    return out + "}\n";
}

}  // namespace io
}  // namespace sttglue
