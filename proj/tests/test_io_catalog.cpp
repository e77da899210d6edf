#include "lieaff/catalog.hpp"
#include "lieaff/error.hpp"
#include "lieaff/io.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <stdexcept>

using namespace lieaff;
using nlohmann::json;

namespace {

std::string errorOf(const json& j) {
    try {
        io::algebraFromJson(j);
    } catch (const Error& e) {
        return e.what();
    }
    return {};
}

} // namespace

TEST_CASE("algebra JSON round trip over the catalog") {
    for (const auto& e : catalog()) {
        const json j = io::algebraToJson(e.algebra);
        const LieAlgebra back = io::algebraFromJson(j);
        CHECK(back.constants() == e.algebra.constants());
        CHECK(back.basisNames() == e.algebra.basisNames());
        CHECK(back.name() == e.name);
        if (e.contact) CHECK(io::formFromJson(io::formToJson(*e.contact)) == *e.contact);
        if (e.symplectic) CHECK(io::formFromJson(io::formToJson(*e.symplectic)) == *e.symplectic);
    }
}

TEST_CASE("algebra file format is 1-based with rational strings") {
    const json j = json::parse(R"({"name":"h3","dim":3,"brackets":[{"i":1,"j":2,"terms":[{"k":3,"c":"1"}]}]})");
    const LieAlgebra L = io::algebraFromJson(j);
    CHECK(L.bracketBasis(0, 1) == Vector{0, 0, 1});
    CHECK(L.basisNames() == LieAlgebra::defaultNames(3));
    const json out = io::algebraToJson(findCatalogEntry("h3")->algebra);
    CHECK(out["brackets"][0]["i"] == 1);
    CHECK(out["brackets"][0]["terms"][0]["c"] == "1");
}

TEST_CASE("malformed algebra files name the offending field") {
    CHECK(errorOf(json::parse(R"({"dim":3,"brackets":[{"i":2,"j":1,"terms":[]}]})")).find("algebra.brackets[0]") !=
          std::string::npos);
    CHECK(errorOf(json::parse(R"({"dim":3,"brackets":[{"i":1,"j":4,"terms":[]}]})")).find("algebra.brackets[0].j") !=
          std::string::npos);
    CHECK(errorOf(json::parse(R"({"dim":3,"brackets":[{"i":1,"j":2,"terms":[{"k":3,"c":"1/0"}]}]})"))
              .find("algebra.brackets[0].terms[0].c") != std::string::npos);
    CHECK(errorOf(json::parse(R"({"dim":3,"brackets":[{"i":1,"j":2,"terms":[{"k":3,"c":0.5}]}]})"))
              .find("expected a rational string") != std::string::npos);
    CHECK(errorOf(json::parse(R"({"brackets":[]})")).find("missing field 'dim'") != std::string::npos);
    CHECK(errorOf(json::parse(R"({"dim":2,"basis":["a"]})")).find("algebra.basis") != std::string::npos);
    CHECK(errorOf(json::parse(
              R"({"dim":3,"brackets":[{"i":1,"j":2,"terms":[]},{"i":1,"j":2,"terms":[]}]})")) != "");
}

TEST_CASE("forms and lift data") {
    CHECK_THROWS_AS(io::formFromJson(json::parse(R"({"degree":2,"dim":3,"coeffs":[{"idx":[2,1],"c":"1"}]})")), Error);
    CHECK_THROWS_AS(io::formFromJson(json::parse(R"({"degree":2,"dim":3,"coeffs":[{"idx":[1],"c":"1"}]})")), Error);
    const KForm f = io::formFromJson(json::parse(R"({"degree":2,"dim":3,"coeffs":[{"idx":[1,3],"c":"-2/4"}]})"));
    CHECK(f.onBasis(std::vector<std::size_t>{0, 2}) == Rational(-1, 2));

    LiftData d = LiftData::half(standardSymplectic(2));
    d.V[1] = {Rational(1, 3), 2};
    d.rho = -4;
    const LiftData back = io::liftDataFromJson(io::liftDataToJson(d));
    CHECK(back.phi == d.phi);
    CHECK(back.V == d.V);
    CHECK(back.rho == d.rho);
    CHECK_THROWS_AS(io::liftDataFromJson(json::parse(R"({"phi":[["0"]],"V":[],"a":["0"],"W0":["0"],"rho":"0"})")),
                    Error);
}

TEST_CASE("product JSON round trip") {
    const auto* n4 = findCatalogEntry("n4");
    const auto nabla = affineFromSymplectic(n4->algebra, *n4->symplectic);
    const json j = io::productToJson(nabla);
    CHECK(j["table"].size() == 4);
    CHECK(io::productFromJson(j) == nabla);
}

TEST_CASE("text helpers") {
    CHECK(io::parseRationalList("1, -1/2,0") == Vector{1, Rational(-1, 2), 0});
    CHECK_THROWS_AS(io::parseRationalList("1,,2"), Error);
    CHECK(io::formatVector(Vector{1, Rational(-1, 2)}) == "[1, -1/2]");
    CHECK(io::formatTuple({0, 2}) == "(1,3)");
    const auto names = LieAlgebra::defaultNames(4);
    CHECK(io::formatCombination(Vector{0, 0, 1, Rational(-1, 2)}, names) == "e3 - 1/2 e4");
    CHECK(io::formatCombination(Vector{-1, 0, 0, 0}, names) == "-e1");
    CHECK(io::formatCombination(Vector(4), names) == "0");
}

TEST_CASE("file helpers report the file on parse errors") {
    const auto dir = std::filesystem::temp_directory_path() / "lieaff_io_test";
    std::filesystem::create_directories(dir);
    const auto bad = dir / "bad.json";
    std::ofstream(bad) << "{\"dim\": 3,";
    try {
        io::readAlgebra(bad);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("bad.json") != std::string::npos);
    }
    CHECK_THROWS_AS(io::readAlgebra(dir / "missing.json"), Error);
    const auto good = dir / "h5.json";
    io::writeJsonFile(good, io::algebraToJson(findCatalogEntry("h5")->algebra));
    CHECK(io::readAlgebra(good).constants() == findCatalogEntry("h5")->algebra.constants());
    std::filesystem::remove_all(dir);
}

TEST_CASE("catalog entries are consistent") {
    CHECK(catalog().size() == 10);
    CHECK(findCatalogEntry("nope") == nullptr);
    std::size_t negative = 0;
    for (const auto& e : catalog()) {
        if (e.negativeExample) {
            ++negative;
            CHECK_FALSE(jacobiDefect(e.algebra).empty());
            continue;
        }
        CHECK(jacobiDefect(e.algebra).empty());
        CHECK(isNilpotent(e.algebra));
        if (e.contact) CHECK(contactTest(e.algebra, *e.contact).isContact);
        if (e.symplectic) CHECK(symplecticCheck(e.algebra, *e.symplectic).symplectic());
    }
    CHECK(negative == 1);
    CHECK_THROWS_AS(standardSymplectic(3), Error);
}
