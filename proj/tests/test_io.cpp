#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <string>

#include "test_util.hpp"
#include "tridom/io.hpp"
#include "tridom/sha256.hpp"

using namespace tridom;

namespace {

// K4 in planar_code, written out by hand: one count byte then 1-based
// zero-terminated rotations
std::string k4_bytes(bool header) {
    std::string s;
    if (header) s = ">>planar_code<<";
    const unsigned char payload[] = {4, 2, 3, 4, 0, 1, 4, 3, 0, 1, 2, 4, 0, 1, 3, 2, 0};
    s.append(reinterpret_cast<const char*>(payload), sizeof payload);
    return s;
}

} // namespace

TEST_CASE("planar_code reads a hand-written K4") {
    for (bool header : {true, false}) {
        auto graphs = read_planar_code(k4_bytes(header));
        REQUIRE(graphs.size() == 1);
        CHECK(graphs[0].vertex_count() == 4);
        CHECK(graphs[0].edge_count() == 6);
        CHECK(graph_digest(graphs[0]) == graph_digest(testutil::k4()));
    }
}

TEST_CASE("planar_code round trip") {
    std::vector<Triangulation> graphs = {testutil::k4(), testutil::octahedron(), stacked(9, 5)};
    auto bytes = write_planar_code(graphs);
    CHECK(bytes.rfind(">>planar_code<<", 0) == 0);
    auto back = read_planar_code(bytes);
    REQUIRE(back.size() == graphs.size());
    for (size_t i = 0; i < graphs.size(); ++i)
        CHECK(graph_digest(back[i]) == graph_digest(graphs[i]));
}

TEST_CASE("planar_code rejects malformed streams") {
    // '>' that is not the full header
    CHECK_THROWS_AS(read_planar_code(">>plonar_code<<"), Error);
    // truncated mid-vertex
    auto bytes = k4_bytes(true);
    CHECK_THROWS_AS(read_planar_code(bytes.substr(0, bytes.size() - 3)), Error);
    // a graph of more than 255 vertices cannot be written
    CHECK_THROWS_AS(write_planar_code({stacked(300, 1)}), Error);
}

TEST_CASE("rotation text round trip and canonical form") {
    auto g = flipmix(20, 3, 60);
    auto text = write_rotation_text(g);
    CHECK(text.rfind("20 54 simple", 0) == 0);
    auto h = read_rotation_text(text);
    CHECK(graph_digest(h) == graph_digest(g));
    // canonical writer output is a fixpoint
    CHECK(write_rotation_text(h) == text);

    // multigraph mode round trip
    auto gadget = gadget_family(testutil::octahedron());
    auto t2 = write_rotation_text(gadget);
    CHECK(t2.rfind("9 21 multi", 0) == 0);
    CHECK(graph_digest(read_rotation_text(t2)) == graph_digest(gadget));
}

TEST_CASE("rotation text parse errors carry line numbers") {
    CHECK_THROWS_AS(read_rotation_text("bogus"), Error);
    CHECK_THROWS_AS(read_rotation_text("4 6 simple\n0: 1 2 3\n"), Error); // missing vertices
    CHECK_THROWS_AS(read_rotation_text("3 4 simple\n0: 1 2\n1: 0 2\n2: 0 1\n"), Error); // wrong m
    try {
        read_rotation_text("3 3 simple\n0: 1 2\n1: 0 2\nnope\n");
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::ParseError);
        CHECK(std::string(e.what()).find("4") != std::string::npos);
    }
}

TEST_CASE("certificate round trip") {
    auto g = testutil::octahedron();
    CertificateFile c;
    c.graph_hash = graph_digest(g);
    c.n = 6;
    c.claimed_bound = 2;
    c.D = {0, 5};
    c.trace = {"base n=6 size=2"};
    auto text = write_certificate(c);
    auto back = read_certificate(text);
    CHECK(back.graph_hash == c.graph_hash);
    CHECK(back.n == 6);
    CHECK(back.claimed_bound == 2);
    CHECK(back.D == c.D);
    CHECK(back.trace == c.trace);
    CHECK_NOTHROW(check_certificate_graph(back, g));
}

TEST_CASE("certificate digest mismatch is detected") {
    auto g = testutil::octahedron();
    CertificateFile c;
    c.graph_hash = graph_digest(g);
    c.n = 6;
    c.claimed_bound = 2;
    c.D = {0, 5};
    CHECK_THROWS_AS(check_certificate_graph(c, testutil::k4()), Error);
    c.graph_hash[0] = c.graph_hash[0] == 'a' ? 'b' : 'a';
    CHECK_THROWS_AS(check_certificate_graph(c, g), Error);
}

TEST_CASE("load/save dispatch on extension") {
    auto g = stacked(15, 9);
    for (const char* name : {"tridom_io_test.plc", "tridom_io_test.rot"}) {
        std::string path = std::string("/tmp/") + name;
        save_graphs(path, {g});
        auto back = load_graphs(path);
        REQUIRE(back.size() == 1);
        CHECK(graph_digest(back[0]) == graph_digest(g));
        std::remove(path.c_str());
    }
    CHECK_THROWS_AS(load_graphs("/tmp/tridom_io_test.xyz"), Error);
    CHECK_THROWS_AS(load_graphs("/tmp/definitely_missing_file.rot"), Error);
}

TEST_CASE("digest distinguishes graphs and is stable") {
    auto a = graph_digest(testutil::k4());
    CHECK(a.size() == 64);
    CHECK(a == graph_digest(testutil::k4()));
    CHECK(a != graph_digest(testutil::octahedron()));
}

TEST_CASE("sha256 known vectors") {
    CHECK(sha256_hex("") ==
          "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    CHECK(sha256_hex("abc") ==
          "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}
