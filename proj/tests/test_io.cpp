#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nodaljac/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <unistd.h>

using namespace nodaljac;

namespace {
struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("nodaljac_test_" + std::to_string(::getpid()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
};
} // namespace

TEST_CASE("polynomial text round-trip") {
    PrimeModulus m7(7);
    CHECK(poly_to_string(Poly(m7, {1, 0, 1})) == "1,0,1");
    CHECK(poly_to_string(Poly(m7)) == "0");
    CHECK(poly_from_string(m7, "1,0,1") == Poly(m7, {1, 0, 1}));
    CHECK(poly_from_string(m7, "0").is_zero());
    CHECK(poly_from_string(m7, "3,0,0").degree() == 0); // trailing zeros trim

    std::mt19937_64 rng(1);
    PrimeModulus mb(4294967311ull);
    for (int i = 0; i < 200; ++i) {
        std::vector<std::uint64_t> c(uniform_below(rng, 9));
        for (auto& v : c) v = uniform_below(rng, mb.p());
        Poly f(mb, std::move(c));
        CHECK(poly_from_string(mb, poly_to_string(f)) == f);
    }

    CHECK_THROWS_AS(poly_from_string(m7, ""), std::invalid_argument);
    CHECK_THROWS_AS(poly_from_string(m7, "1,,2"), std::invalid_argument);
    CHECK_THROWS_AS(poly_from_string(m7, "1,7"), std::invalid_argument); // not canonical
    CHECK_THROWS_AS(poly_from_string(m7, "1, 2"), std::invalid_argument);
    CHECK_THROWS_AS(poly_from_string(m7, "-1"), std::invalid_argument);
    CHECK_THROWS_AS(poly_from_string(m7, "1,x"), std::invalid_argument);
    CHECK_THROWS_AS(poly_from_string(m7, "99999999999999999999999"),
                    std::invalid_argument);
}

TEST_CASE("curve file round-trip") {
    TempDir tmp;
    PrimeModulus m7(7);
    NodalCurve C(m7, Poly(m7, {1, 0, 1}));
    CHECK(curve_to_string(C) == "p=7\nf=1,0,1\n");

    auto path = tmp.path / "curve.txt";
    write_curve_file(C, path);
    NodalCurve back = read_curve_file(path);
    CHECK(back.p() == 7);
    CHECK(back.f() == C.f());

    CHECK_THROWS_AS(read_curve_file(tmp.path / "missing.txt"), IoError);

    auto bad = [&](const std::string& text) {
        std::ofstream(path) << text;
        return path;
    };
    CHECK_THROWS_AS(read_curve_file(bad("p=7\n")), std::invalid_argument);
    CHECK_THROWS_AS(read_curve_file(bad("q=7\nf=1,0,1\n")), std::invalid_argument);
    CHECK_THROWS_AS(read_curve_file(bad("p=8\nf=1,0,1\n")), std::invalid_argument);
    CHECK_THROWS_AS(read_curve_file(bad("p=7\nf=6,0,1\n")), std::invalid_argument);
    // windows line endings are tolerated
    CHECK_NOTHROW(read_curve_file(bad("p=7\r\nf=1,0,1\r\n")));
}

TEST_CASE("element text") {
    PrimeModulus m7(7);
    NodalCurve C(m7, Poly(m7, {1, 0, 1}));

    CHECK(element_to_string(C, JacElement::identity()) == "identity");
    JacElement x = element_from_string(C, "h=0,1");
    CHECK(element_to_string(C, x) == "h=0,1");
    // zero-padding to exactly d coefficients
    JacElement one = element_from_string(C, "h=1,0");
    CHECK(element_to_string(C, one) == "h=1,0");
    JacElement zero = element_from_string(C, "h=0,0");
    CHECK_FALSE(zero.is_identity());
    CHECK(element_from_string(C, "identity").is_identity());

    CHECK_THROWS_AS(element_from_string(C, "h=1"), std::invalid_argument);
    CHECK_THROWS_AS(element_from_string(C, "h=1,2,3"), std::invalid_argument);
    CHECK_THROWS_AS(element_from_string(C, "h=2,2"), std::invalid_argument); // invalid class
    CHECK_THROWS_AS(element_from_string(C, "g=1,1"), std::invalid_argument);
    CHECK_THROWS_AS(element_from_string(C, "h=7,0"), std::invalid_argument);

    // syntax-only parse accepts the invalid class for diagnosis
    ParsedElement pe = parse_element_text(C, "h=2,2");
    CHECK_FALSE(pe.identity);
    CHECK_FALSE(element_validate(C, pe.rep));

    // round-trip across the whole consuming surface
    std::mt19937_64 rng(2);
    for (int i = 0; i < 200; ++i) {
        JacElement e = random_element(C, rng);
        CHECK(element_from_string(C, element_to_string(C, e)) == e);
    }
}

TEST_CASE("divisor text") {
    PrimeModulus m7(7);
    MumfordDivisor id = divisor_identity(m7);
    CHECK(divisor_to_string(id) == "u=1;v=0");
    CHECK(divisor_from_string(m7, "u=1;v=0") == id);

    MumfordDivisor d{Poly(m7, {1, 0, 2, 0, 1}), Poly(m7, {0, 1, 0, 1})};
    CHECK(divisor_from_string(m7, divisor_to_string(d)) == d);

    CHECK_THROWS_AS(divisor_from_string(m7, "u=1"), std::invalid_argument);
    CHECK_THROWS_AS(divisor_from_string(m7, "v=0;u=1"), std::invalid_argument);
    CHECK_THROWS_AS(divisor_from_string(m7, "u=1;w=0"), std::invalid_argument);
}
