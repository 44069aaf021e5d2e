#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "partlat/cli.hpp"
#include "partlat/counting.hpp"
#include "partlat/matrices.hpp"
#include "partlat/scheme.hpp"
#include "partlat/table.hpp"

using namespace partlat;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result cli(std::vector<std::string> args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s)
{
    std::vector<std::string> v;
    std::istringstream is(s);
    for (std::string l; std::getline(is, l);)
        v.push_back(l);
    return v;
}

} // namespace

TEST_CASE("table exact prints the body with sums")
{
    const Result r = cli({"table", "exact", "--max", "6", "--format", "tsv"});
    REQUIRE(r.code == 0);
    const auto ls = lines(r.out);
    REQUIRE(ls.size() == 10);
    CHECK(ls[0] == "# exact");
    CHECK(ls[8] == "6\t0\t1\t3\t3\t2\t1\t1\t11");
}

TEST_CASE("every table round-trips through every format")
{
    const std::vector<std::string> names{"exact", "atmost", "odd-even-mixed", "distinct", "unit-diff",
                                         "euler", "euler-inverse", "inverse-exact", "inverse-unit-diff",
                                         "box", "scheme", "neighbors", "layers", "binomial"};
    for (const auto& name : names)
        for (const char* fmt : {"tsv", "csv", "json", "md"}) {
            CAPTURE(name);
            CAPTURE(fmt);
            const Result a = cli({"table", name, "--max", "7", "--format", fmt});
            const Result b = cli({"table", name, "--max", "7", "--format", fmt});
            REQUIRE(a.code == 0);
            CHECK(a.out == b.out);
            const IntTable parsed = parse_table(a.out, parse_table_format(fmt));
            CHECK(parsed.name() == name);
            CHECK(format_table(parsed, parse_table_format(fmt)) == a.out);
        }
}

TEST_CASE("parsed tables equal the in-memory tables")
{
    CHECK(parse_table(cli({"table", "scheme", "--max", "7"}).out, TableFormat::tsv) == build_scheme(7));
    CHECK(parse_table(cli({"table", "odd-even-mixed", "--max", "9", "--format", "json"}).out, TableFormat::json)
          == odd_even_mixed_table(9));
    CHECK(parse_table(cli({"table", "inverse-unit-diff", "--max", "6", "--format", "csv"}).out, TableFormat::csv)
          == inverse_unit_diff_table(6));
}

TEST_CASE("json schema keys")
{
    const auto j = nlohmann::json::parse(cli({"table", "atmost", "--max", "3", "--format", "json"}).out);
    for (const char* key : {"name", "row_label", "col_label", "rows", "cols", "cells", "row_sums", "col_sums"})
        CHECK(j.contains(key));
    CHECK(j["cells"].back().back() == 3);
    CHECK(j["row_sums"].back() == 6);
}

TEST_CASE("count maps constraints to recurrences or to the oracle")
{
    CHECK(cli({"count", "--total", "8", "--exact-parts", "3", "--exact-max-part", "4"}).out == "2\n");
    CHECK(cli({"count", "--total", "9", "--parity", "mixed"}).out == "22\n");
    CHECK(cli({"count", "--total", "6", "--exact-parts", "3", "--min-part", "2", "--method", "oracle"}).out == "1\n");
    CHECK(cli({"count", "--total", "12", "--layer", "5", "--max-part", "5"}).out
          == cli({"count", "--total", "12", "--layer", "5", "--max-part", "5", "--method", "oracle"}).out);
    const Result listed = cli({"count", "--total", "4", "--max-parts", "2", "--list"});
    CHECK(listed.out == "3\n4\n31\n22\n");
    const Result formula = cli({"count", "--total", "12", "--layer", "5", "--max-part", "5", "--method", "formula"});
    CHECK(formula.code == 2);
    CHECK(cli({"count", "--total", "200"}).out == std::to_string(p(200)) + "\n");
}

TEST_CASE("scheme, lattice, series, errata")
{
    const Result inv = cli({"scheme", "--total", "7", "--inverse"});
    REQUIRE(inv.code == 0);
    CHECK(lines(inv.out)[6] == "3\t0\t2\t-1\t-1\t1\t0\t0\t1");
    CHECK(lines(inv.out)[7] == "2\t0\t-2\t2\t0\t-1\t1\t0\t0");

    CHECK(lines(cli({"lattice", "--variant", "hypercube", "--dim", "3", "--format", "edges"}).out).size() == 12);
    CHECK(cli({"lattice", "--variant", "split_merge", "--total", "6", "--parts", "3", "--distance", "330", "411"}).out
          == "3\n");
    const Result dot = cli({"lattice", "--variant", "subset-double-swap", "--bits", "5", "--ones", "2", "--format", "dot"});
    CHECK(dot.out.rfind("graph subset_double_swap {", 0) == 0);

    CHECK(cli({"series", "--kind", "partition", "--order", "6"}).out == "# partition order 6\n1 1 2 3 5 7 11\n");
    CHECK(cli({"series", "--kind", "box", "--order", "9", "--max-part", "3", "--max-parts", "3"}).out
          == "# box order 9\n1 1 2 3 3 3 3 2 1 1\n");
    CHECK(cli({"errata"}).code == 0);
}

TEST_CASE("verify exit status")
{
    const Result r = cli({"verify", "--max", "8"});
    CHECK(r.code == 0);
    CHECK(r.out.find("pass\tp: pentagonal = row sum = oracle") != std::string::npos);
}

TEST_CASE("usage and guard errors exit with 2")
{
    CHECK(cli({}).code == 2);
    CHECK(cli({"frobnicate"}).code == 2);
    CHECK(cli({"table", "nonsense"}).code == 2);
    CHECK(cli({"table", "exact", "--format", "xml"}).code == 2);
    CHECK(cli({"count", "--total", "5", "--bogus"}).code == 2);
    CHECK(cli({"count", "--total", "5", "--exact-parts", "2", "--max-parts", "3"}).code == 2);

    const Result big = cli({"table", "exact", "--max", "1000"});
    CHECK(big.code == 2);
    CHECK(big.err.find("--max must be in 0..100") != std::string::npos);
    const Result cube = cli({"lattice", "--variant", "hypercube", "--dim", "25"});
    CHECK(cube.code == 2);
    CHECK(cube.err.find("1000000") != std::string::npos);
    CHECK(cli({"verify", "--max", "26"}).code == 2);
    CHECK(cli({"count", "--total", "81", "--layer", "2", "--units", "1"}).code == 2);
    CHECK(cli({"count", "--total", "81", "--layer", "2"}).code == 0);
    CHECK(cli({"--help"}).code == 0);
}
