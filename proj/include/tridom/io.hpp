#pragma once

#include <string>
#include <vector>

#include "tridom/triangulation.hpp"

namespace tridom {

struct CertificateFile {
    std::string graph_hash; // sha256 of the canonical rotation text
    int n = 0;
    int claimed_bound = 0;
    std::vector<int> D;
    std::vector<std::string> trace;
};

/// planar_code: optional ">>planar_code<<" header, then per graph one byte n
/// (1..255) and n zero-terminated 1-based neighbor lists in rotation order.
std::vector<Triangulation> read_planar_code(const std::string& bytes);
std::string write_planar_code(const std::vector<Triangulation>& graphs);

/// Line-oriented text: "n m simple|multi" then "label: neighbor ..." per
/// vertex. Canonical on output: vertices ascending, each rotation rotated to
/// its lexicographically smallest start.
Triangulation read_rotation_text(const std::string& text);
std::string write_rotation_text(const Triangulation& g);

/// SHA-256 of write_rotation_text(g); the content digest certificates carry.
std::string graph_digest(const Triangulation& g);

std::string write_certificate(const CertificateFile& c);
CertificateFile read_certificate(const std::string& text);

/// Throws DigestMismatch when the certificate refers to a different graph.
void check_certificate_graph(const CertificateFile& c, const Triangulation& g);

/// Dispatch on extension: .plc planar_code, .rot rotation text.
std::vector<Triangulation> load_graphs(const std::string& path);
void save_graphs(const std::string& path, const std::vector<Triangulation>& graphs);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& data);

} // namespace tridom
