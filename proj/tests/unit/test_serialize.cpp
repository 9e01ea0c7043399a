#include "arrmono/serialize.hpp"
#include "generators.hpp"
#include "expected.hpp"

#include <doctest.h>
#include <filesystem>

using namespace arrmono;

namespace {

template <class T>
Matrix<T> round_trip(const Matrix<T>& m) {
    auto blocks = read_structured_matrices(serialize_matrix("M", m));
    REQUIRE(blocks.size() == 1);
    CHECK(blocks[0].name == "M");
    return decode_matrix<T>(blocks[0]);
}

} // namespace

TEST_CASE("entry serialization is canonical") {
    CHECK(serialize_entry(Rational(-3, 4)) == "\"-3/4\"");
    CHECK(serialize_entry(parse_laurent("x2 - 1 + x1", 4)) == "[[\"-1\",[0,0,0,0]],[\"1\",[1,0,0,0]],[\"1\",[0,1,0,0]]]");
    CHECK(serialize_entry(MultiPoly(2)) == "[]");
}

TEST_CASE("structured matrices round trip") {
    CHECK(round_trip(expected::laurent(expected::kPhi2)) == expected::laurent(expected::kPhi2));
    CHECK(round_trip(expected::poly(expected::kMu1)) == expected::poly(expected::kMu1));
    gen::Source s(61);
    for (int trial = 0; trial < 20; ++trial) {
        auto m = gen::rational_matrix(s, 3, 4);
        CHECK(round_trip(m) == m);
        Matrix<LaurentPoly> l(2, 2, LaurentPoly(3));
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) l(i, j) = gen::poly<PolyKind::Laurent>(s, 3, 4, 3, true);
        CHECK(round_trip(l) == l);
    }
}

TEST_CASE("decoding checks the ring tag and shape") {
    auto blocks = read_structured_matrices(serialize_matrix("D", expected::laurent(expected::kDelta0)));
    CHECK_THROWS_AS(decode_matrix<MultiPoly>(blocks[0]), ParseError);
    CHECK_THROWS_AS(decode_matrix<Rational>(read_structured_matrices("matrix X 2 1 rational 0\n[\"1\"]\nend\n").at(0)),
                    ParseError);
    CHECK(read_structured_matrices("section info\ncheck PASS x\n").empty());
}

TEST_CASE("every matrix in the golden reports re-serializes to the same text") {
    std::size_t blocks_seen = 0;
    for (const auto& entry : std::filesystem::directory_iterator(ARRMONO_GOLDEN_DIR)) {
        const std::string text = read_file(entry.path().string());
        for (const auto& block : read_structured_matrices(text)) {
            std::string again;
            if (block.tag == "rational")
                again = serialize_matrix(block.name, decode_matrix<Rational>(block));
            else if (block.tag == "poly")
                again = serialize_matrix(block.name, decode_matrix<MultiPoly>(block));
            else
                again = serialize_matrix(block.name, decode_matrix<LaurentPoly>(block));
            CAPTURE(block.name);
            CHECK(text.find(again) != std::string::npos);
            ++blocks_seen;
        }
    }
    CHECK(blocks_seen > 30);
}
