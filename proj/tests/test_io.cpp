#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "cslab/error.hpp"
#include "cslab/harness.hpp"
#include "cslab/io.hpp"

using namespace cslab;

TEST_CASE("graph round-trip") {
    std::istringstream in("# a path\n4 3 2\n1 2\n2 3  # middle\n\n3 4\n");
    const auto g = io::read_graph(in);
    CHECK(g.vertex_count() == 4);
    CHECK(g.k() == 2);
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(2, 3));
    std::ostringstream out;
    io::write_graph(out, g);
    CHECK(out.str() == "4 3 2\n1 2\n2 3\n3 4\n");
}

TEST_CASE("graph parse errors carry line numbers") {
    std::istringstream bad_vertex("3 1 2\n1 4\n");
    try {
        io::read_graph(bad_vertex);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
    std::istringstream short_file("3 2 2\n1 2\n");
    CHECK_THROWS_AS(io::read_graph(short_file), ParseError);
    std::istringstream extra("3 1 2\n1 2\n2 3\n");
    CHECK_THROWS_AS(io::read_graph(extra), ParseError);
    std::istringstream loop("3 1 2\n2 2\n");
    CHECK_THROWS_AS(io::read_graph(loop), ParseError);
    std::istringstream empty("");
    CHECK_THROWS_AS(io::read_graph(empty), ParseError);
}

TEST_CASE("code round-trip") {
    const auto code = greedy_construct(4, desk16_profile());
    std::ostringstream out;
    io::write_code(out, code);
    std::istringstream in(out.str());
    const auto back = io::read_code(in);
    CHECK(back.params == code.params);
    CHECK(back.strings == code.strings);
    std::istringstream wrong_len("16 2 2 1 1\n0101\n");
    CHECK_THROWS_AS(io::read_code(wrong_len), ParseError);
}

TEST_CASE("instance round-trip") {
    io::PlainInstance inst{4, 2, {BitString::parse("0011"), BitString::parse("1100")}};
    std::ostringstream out;
    io::write_instance(out, inst);
    CHECK(out.str() == "2 4 2\n0011\n1100\n");
    std::istringstream in(out.str());
    const auto back = io::read_instance(in);
    CHECK(back.length == 4);
    CHECK(back.d == 2);
    CHECK(back.constraints == inst.constraints);
    std::istringstream bad("1 4 2\n00a1\n");
    CHECK_THROWS_AS(io::read_instance(bad), ParseError);
}

TEST_CASE("reduced instance written and read back") {
    const auto g = corpus::cycle(4, 2);
    ReduceOptions opts;
    opts.mode = ReductionMode::sampled;
    opts.sel_samples = 20;
    opts.adj_samples = 5;
    const auto inst = reduce(g, desk16_profile(), opts);
    std::stringstream buf;
    io::write_instance(buf, inst);
    const auto back = io::read_instance(buf);
    REQUIRE(back.constraints.size() == inst.size());
    CHECK(back.length == 36);
    CHECK(back.d == 26);
    for (std::size_t i = 0; i < inst.size(); ++i) CHECK(back.constraints[i] == inst.constraint(i));
}

TEST_CASE("manifest") {
    const auto g = corpus::cycle(4, 2);
    ReduceOptions opts;
    opts.mode = ReductionMode::sampled;
    opts.seed = 3;
    opts.sel_samples = 20;
    opts.adj_samples = 5;
    const auto j = io::instance_manifest(reduce(g, desk16_profile(), opts));
    CHECK(j["schema"] == "cslab-instance-manifest");
    CHECK(j["provenance_scheme"] == io::provenance_scheme_version);
    CHECK(j["mode"] == "sampled");
    CHECK(j["seed"] == 3);
    CHECK(j["L"] == 36);
    CHECK(j["d"] == 26);
    CHECK(j["counts"]["sel"] == 20);
    CHECK(j["counts"]["adj"] == 5);
    CHECK(j["coding"].size() == 4);
}

TEST_CASE("missing files") {
    CHECK_THROWS_AS(io::load_graph("/nonexistent/graph.txt"), FileError);
    CHECK_THROWS_AS(io::load_code("/nonexistent/code.txt"), FileError);
    CHECK_THROWS_AS(io::load_instance("/nonexistent/instance.txt"), FileError);
}
