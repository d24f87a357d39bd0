#include <doctest.h>

#include <random>
#include <sstream>

#include "hybrid/cli.hpp"
#include "hybrid/text.hpp"

using namespace hybrid;

namespace {

std::string run_cli(const std::vector<std::string>& args, int expected_status) {
    std::ostringstream out, err;
    int status = cli_run(args, out, err);
    CHECK(status == expected_status);
    return status == 0 ? out.str() : err.str();
}

}  // namespace

TEST_CASE("hybrid set text form round-trips") {
    CHECK(render_set(HybridSet<std::string>{}) == "{|}");
    CHECK(parse_set("{|}").empty());
    CHECK(parse_set(" { a , b | c } ") == parse_set("{a,b|c}"));

    HybridSet<std::string> f;
    f.add("a", 2);
    f.add("b", -1);
    CHECK(render_set(f) == "{a,a|b}");
    CHECK(parse_set(render_set(f)) == f);

    // opposite-side occurrences cancel on parse
    CHECK(parse_set("{a|a}").empty());

    std::mt19937 rng(53);
    std::uniform_int_distribution<long long> mult(-3, 3);
    for (int trial = 0; trial < 100; ++trial) {
        HybridSet<std::string> g;
        for (const char* x : {"a", "b", "c", "d"}) g.add(x, mult(rng));
        CHECK(parse_set(render_set(g)) == g);
        CHECK(set_from_json(set_to_json(g)) == g);
    }
}

TEST_CASE("set parse errors carry a position") {
    try {
        parse_set("[a|b]");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position == 0);
    }
    try {
        parse_set("{a,,b|}");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position == 3);
    }
    CHECK_THROWS_AS(parse_set("{a,b}"), ParseError);
    CHECK_THROWS_AS(parse_set("{a|b|c}"), ParseError);
}

TEST_CASE("monic rational functions in factored text form") {
    MonicRationalFn f = parse_rational_fn("(x-1)(x-2)/(x-3)");
    CHECK(f.roots.multiplicity(LaurentPoly::constant(Rational(1))) == 1);
    CHECK(f.roots.multiplicity(LaurentPoly::constant(Rational(2))) == 1);
    CHECK(f.roots.multiplicity(LaurentPoly::constant(Rational(3))) == -1);
    CHECK(render_rational_fn(f) == "(x-1)(x-2)/(x-3)");

    CHECK(parse_rational_fn("1").roots.empty());
    CHECK(render_rational_fn(MonicRationalFn{}) == "1");

    MonicRationalFn pole = parse_rational_fn("1/(x-0)");
    CHECK(pole.degree() == -1);
    CHECK(pole.roots.multiplicity(LaurentPoly::constant(Rational(0))) == -1);
    CHECK(render_rational_fn(pole) == "1/(x-0)");

    // "(x+2)" is the factor with root -2, rendered back the same way
    MonicRationalFn shifted = parse_rational_fn("(x+2)");
    CHECK(shifted.roots.multiplicity(LaurentPoly::constant(Rational(-2))) == 1);
    CHECK(render_rational_fn(shifted) == "(x+2)");
    CHECK(render_rational_fn(parse_rational_fn("(x+2)(x-1/2)/(x-5)")) ==
          "(x+2)(x-1/2)/(x-5)");

    CHECK_THROWS_AS(parse_rational_fn("(y-1)"), ParseError);
    CHECK_THROWS_AS(parse_rational_fn("(x-1"), ParseError);
}

TEST_CASE("basis expressions: affine and geometric families") {
    auto value = [](const PersistantSequence& seq, long long i) {
        return seq.b(i).constant_value();
    };
    CHECK(value(parse_basis("b_i = i - 1"), 3) == 2);
    CHECK(value(parse_basis("i - 1"), 1) == 0);
    CHECK(value(parse_basis("-i"), 2) == -2);
    CHECK(value(parse_basis("2*i + 3"), 1) == 5);
    CHECK(value(parse_basis("1/2*i"), 4) == 2);
    CHECK(value(parse_basis("-1"), 9) == -1);

    PersistantSequence geo = parse_basis("b_i = -q^(i-1)");
    CHECK(geo.b(3) == -LaurentPoly::monomial(Rational(1), {{"q", 4}}));
    CHECK(geo.b(1) == LaurentPoly::constant(-1));
    PersistantSequence half = parse_basis("1/2*q^(i-1)");
    CHECK(half.b(2) == LaurentPoly::monomial(Rational(1, 2), {{"q", 2}}));

    CHECK_THROWS_AS(parse_basis(""), ParseError);
    CHECK_THROWS_AS(parse_basis("i ^ 2"), ParseError);
}

TEST_CASE("half-integer rendering") {
    CHECK(half_to_string(4) == "2");
    CHECK(half_to_string(3) == "3/2");
    CHECK(half_to_string(-3) == "-3/2");
    CHECK(half_to_string(0) == "0");
}

TEST_CASE("command line: tables, comp and expansions") {
    std::string table = run_cli(
        {"--format", "csv", "table", "--family", "binomial", "--n", "1..2", "--k", "0..1"},
        0);
    CHECK(table == "n\\k,0,1\n2,1,2\n1,1,1\n");

    CHECK(run_cli({"comp", "--set", "{a|b}", "--n", "1"}, 0) == "b-a\n");

    std::string expansion = run_cli({"expand", "--fn", "1/(x-0)", "--basis", "b_i = i - 1",
                                     "--order", "2"},
                                    0);
    CHECK(expansion == "0\t-1\t1\n1\t-2\t1\n2\t-3\t2\n");

    std::string subsets = run_cli({"subsets", "--set", "{|a,b}", "--k", "1"}, 0);
    CHECK(subsets == "{a|}\n{b|}\n");

    std::string parts =
        run_cli({"partitions", "--width", "3", "--length", "2", "--sum", "2"}, 0);
    CHECK(parts == "(2,0)\n");
}

TEST_CASE("command line: deterministic output and exit codes") {
    std::vector<std::string> args = {"--format", "json", "table", "--family",
                                     "stirling1-pq", "--n", "-4..-1", "--k", "-4..-1"};
    std::ostringstream out1, err1, out2, err2;
    REQUIRE(cli_run(args, out1, err1) == 0);
    REQUIRE(cli_run(args, out2, err2) == 0);
    CHECK(out1.str() == out2.str());
    CHECK(!out1.str().empty());

    // usage errors and syntax errors exit 2
    std::ostringstream out, err;
    CHECK(cli_run({"comp", "--set", "{a", "--n", "1"}, out, err) == 2);
    CHECK(cli_run({"nonsense"}, out, err) == 2);
    CHECK(cli_run({"table", "--family", "no-such-family", "--n", "0..1", "--k", "0..1"},
                  out, err) == 2);
    // unsupported regions exit 3
    CHECK(cli_run({"table", "--family", "gaussian", "--n", "-2..-1", "--k", "0..0"}, out,
                  err) == 3);
    CHECK(cli_run({"table", "--family", "stirling2", "--n", "-2..-1", "--k", "0..1"}, out,
                  err) == 3);
}
