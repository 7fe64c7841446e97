#include "tridom/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "tridom/sha256.hpp"

namespace tridom {

namespace {

const std::string kHeader = ">>planar_code<<";

std::vector<std::vector<int>> dense_rotations(const Triangulation& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> rot(n);
    for (int v = 0; v < n; ++v) {
        if (!g.is_active(v))
            fail(Errc::ValidationFailed, "serialization requires contiguous labels 0..n-1");
        rot[v] = g.rotation(v);
    }
    return rot;
}

std::vector<int> canonical_rotation(std::vector<int> r) {
    if (r.empty()) return r;
    // lexicographically smallest cyclic rotation
    std::vector<int> best = r;
    for (size_t s = 1; s < r.size(); ++s) {
        std::rotate(r.begin(), r.begin() + 1, r.end());
        if (r < best) best = r;
    }
    return best;
}

bool is_simple(const std::vector<std::vector<int>>& rot) {
    for (auto& r : rot) {
        std::vector<int> s = r;
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end()) return false;
    }
    return true;
}

} // namespace

std::vector<Triangulation> read_planar_code(const std::string& bytes) {
    size_t pos = 0;
    if (bytes.compare(0, kHeader.size(), kHeader) == 0) {
        pos = kHeader.size();
    } else if (!bytes.empty() && bytes[0] == '>') {
        fail(Errc::BadHeader, "malformed planar_code header");
    }
    std::vector<Triangulation> out;
    while (pos < bytes.size()) {
        const int n = static_cast<uint8_t>(bytes[pos++]);
        if (n == 0)
            fail(Errc::TruncatedStream,
                 "zero vertex-count byte (multi-byte planar_code is unsupported)");
        std::vector<std::vector<int>> rot(n);
        for (int v = 0; v < n; ++v) {
            for (;;) {
                if (pos >= bytes.size()) fail(Errc::TruncatedStream, "stream ends inside a graph");
                const int b = static_cast<uint8_t>(bytes[pos++]);
                if (b == 0) break;
                if (b > n) fail(Errc::ValidationFailed, "neighbor index out of range");
                rot[v].push_back(b - 1);
            }
        }
        out.push_back(Triangulation::from_rotations(rot, is_simple(rot)));
    }
    return out;
}

std::string write_planar_code(const std::vector<Triangulation>& graphs) {
    std::string out = kHeader;
    for (const auto& g : graphs) {
        if (g.vertex_count() > 255) fail(Errc::VertexCountTooLarge, "planar_code holds at most 255 vertices");
        auto rot = dense_rotations(g);
        out.push_back(static_cast<char>(rot.size()));
        for (auto& r : rot) {
            for (int w : canonical_rotation(r)) out.push_back(static_cast<char>(w + 1));
            out.push_back('\0');
        }
    }
    return out;
}

Triangulation read_rotation_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            if (line.find_first_not_of(" \t\r") != std::string::npos && line[0] != '#') return true;
        }
        return false;
    };
    auto parse_fail = [&](const std::string& msg) {
        fail(Errc::ParseError, msg + " at line " + std::to_string(lineno));
    };

    if (!next_line()) fail(Errc::ParseError, "empty rotation file");
    std::istringstream head(line);
    int n = 0, m = 0;
    std::string mode;
    if (!(head >> n >> m >> mode) || (mode != "simple" && mode != "multi"))
        parse_fail("expected header 'n m simple|multi'");
    if (n < 1) parse_fail("bad vertex count");

    std::vector<std::vector<int>> rot(n);
    std::vector<char> seen(n, 0);
    for (int i = 0; i < n; ++i) {
        if (!next_line()) parse_fail("missing vertex line");
        auto colon = line.find(':');
        if (colon == std::string::npos) parse_fail("expected 'label: neighbors'");
        int label = 0;
        try {
            label = std::stoi(line.substr(0, colon));
        } catch (...) {
            parse_fail("bad vertex label");
        }
        if (label < 0 || label >= n || seen[label]) parse_fail("bad or repeated vertex label");
        seen[label] = 1;
        std::istringstream rest(line.substr(colon + 1));
        int w;
        while (rest >> w) {
            if (w < 0 || w >= n) parse_fail("neighbor out of range");
            rot[label].push_back(w);
        }
        if (!rest.eof()) parse_fail("trailing junk on vertex line");
    }
    Triangulation g;
    try {
        g = Triangulation::from_rotations(rot, mode == "simple");
    } catch (const Error& e) {
        fail(e.code() == Errc::InconsistentRotation ? Errc::ParseError : e.code(), e.what());
    }
    if (g.edge_count() != m) fail(Errc::ParseError, "edge count does not match header");
    return g;
}

std::string write_rotation_text(const Triangulation& g) {
    auto rot = dense_rotations(g);
    std::ostringstream out;
    out << rot.size() << ' ' << g.edge_count() << ' ' << (g.simple() ? "simple" : "multi") << '\n';
    for (size_t v = 0; v < rot.size(); ++v) {
        out << v << ':';
        for (int w : canonical_rotation(rot[v])) out << ' ' << w;
        out << '\n';
    }
    return out.str();
}

std::string graph_digest(const Triangulation& g) { return sha256_hex(write_rotation_text(g)); }

std::string write_certificate(const CertificateFile& c) {
    std::ostringstream out;
    out << "tridom-certificate v1\n";
    out << "graph_sha256 " << c.graph_hash << '\n';
    out << "n " << c.n << '\n';
    out << "bound " << c.claimed_bound << '\n';
    out << "dsize " << c.D.size() << '\n';
    out << "D";
    for (int v : c.D) out << ' ' << v;
    out << '\n';
    out << "trace " << c.trace.size() << '\n';
    for (const auto& t : c.trace) out << "  " << t << '\n';
    return out.str();
}

CertificateFile read_certificate(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    auto expect_line = [&](const std::string& what) {
        if (!std::getline(in, line)) fail(Errc::ParseError, "certificate truncated before " + what);
    };
    expect_line("magic");
    if (line != "tridom-certificate v1") fail(Errc::ParseError, "bad certificate magic");
    CertificateFile c;
    auto keyed = [&](const std::string& key) -> std::string {
        expect_line(key);
        if (line.compare(0, key.size() + 1, key + ' ') != 0 && line != key)
            fail(Errc::ParseError, "expected certificate key '" + key + "'");
        return line.size() > key.size() ? line.substr(key.size() + 1) : std::string();
    };
    c.graph_hash = keyed("graph_sha256");
    c.n = std::stoi(keyed("n"));
    c.claimed_bound = std::stoi(keyed("bound"));
    size_t dsize = std::stoul(keyed("dsize"));
    {
        std::istringstream ds(keyed("D"));
        int v;
        while (ds >> v) c.D.push_back(v);
    }
    if (c.D.size() != dsize) fail(Errc::ParseError, "dsize does not match D");
    size_t ntrace = std::stoul(keyed("trace"));
    for (size_t i = 0; i < ntrace; ++i) {
        expect_line("trace entry");
        if (line.compare(0, 2, "  ") != 0) fail(Errc::ParseError, "bad trace line");
        c.trace.push_back(line.substr(2));
    }
    return c;
}

void check_certificate_graph(const CertificateFile& c, const Triangulation& g) {
    if (c.graph_hash != graph_digest(g))
        fail(Errc::DigestMismatch, "certificate was issued for a different graph");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(Errc::ParseError, "cannot open " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_file(const std::string& path, const std::string& data) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(Errc::ParseError, "cannot open " + path + " for writing");
    out << data;
}

namespace {
bool has_ext(const std::string& path, const std::string& ext) {
    return path.size() >= ext.size() && path.compare(path.size() - ext.size(), ext.size(), ext) == 0;
}
} // namespace

std::vector<Triangulation> load_graphs(const std::string& path) {
    if (has_ext(path, ".plc")) return read_planar_code(read_file(path));
    if (has_ext(path, ".rot")) return {read_rotation_text(read_file(path))};
    fail(Errc::ParseError, "unknown graph file extension (expected .plc or .rot): " + path);
}

void save_graphs(const std::string& path, const std::vector<Triangulation>& graphs) {
    if (has_ext(path, ".plc")) {
        write_file(path, write_planar_code(graphs));
        return;
    }
    if (has_ext(path, ".rot")) {
        if (graphs.size() != 1) fail(Errc::ValidationFailed, ".rot holds exactly one graph");
        write_file(path, write_rotation_text(graphs[0]));
        return;
    }
    fail(Errc::ParseError, "unknown graph file extension (expected .plc or .rot): " + path);
}

} // namespace tridom
