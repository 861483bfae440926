#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace taxsim;

namespace {

struct TinyIc {
    Taxonomy tax = testsupport::load_fixture("tiny_ic.tax");
    FrequencyTable freq =
        FrequencyTable::parse(testsupport::read_file(testsupport::fixture_path("tiny_ic.freq")), tax);
    ConceptId id(const std::string& label) const { return tax.require(label); }
};

}  // namespace

TEST_CASE_METHOD(TinyIc, "frequency parsing") {
    CHECK(freq.own(id("A1")) == 5);
    CHECK(freq.own(id("A2")) == 5);
    CHECK(freq.own(id("B")) == 10);
    CHECK(freq.own(id("A")) == 0);  // unlisted defaults to 0
}

TEST_CASE_METHOD(TinyIc, "frequency parse errors") {
    try {
        FrequencyTable::parse("Zz\t3", tax);
        FAIL("expected UnknownConcept");
    } catch (const taxonomy_error& e) {
        CHECK(e.code() == errc::unknown_concept);
    }
    CHECK_THROWS_AS(FrequencyTable::parse("A1\t-3", tax), taxonomy_error);
    CHECK_THROWS_AS(FrequencyTable::parse("A1 5", tax), taxonomy_error);
}

TEST_CASE_METHOD(TinyIc, "cumulative counts and ic values") {
    auto ic = IcTable::build(freq, tax);
    CHECK(ic.cum(id("A")) == 10);
    CHECK(ic.cum(id("Thing")) == 20);
    CHECK(ic.total() == 20);
    CHECK_THAT(ic.ic(id("A")), Catch::Matchers::WithinAbs(std::log(2.0), 1e-12));
    CHECK_THAT(ic.ic(id("A1")), Catch::Matchers::WithinAbs(std::log(4.0), 1e-12));
    CHECK(ic.ic(tax.root()) == 0.0);
}

TEST_CASE_METHOD(TinyIc, "zero-mass handling") {
    SECTION("empty frequency document fails at build") {
        auto empty = FrequencyTable::parse("", tax);
        try {
            IcTable::build(empty, tax);
            FAIL("expected ZeroTotal");
        } catch (const taxonomy_error& e) {
            CHECK(e.code() == errc::zero_total);
        }
    }
    SECTION("zero-cumulative concept fails lazily") {
        auto partial = FrequencyTable::parse("B\t10", tax);
        auto ic = IcTable::build(partial, tax);
        CHECK(ic.ic(id("B")) == 0.0);  // B carries all mass
        try {
            ic.ic(id("A1"));
            FAIL("expected ZeroCumulative");
        } catch (const taxonomy_error& e) {
            CHECK(e.code() == errc::zero_cumulative);
        }
    }
}

TEST_CASE("ic monotone along ancestor chains") {
    std::mt19937 rng(71);
    for (int iter = 0; iter < 30; ++iter) {
        auto text = (iter % 2 == 0) ? testsupport::random_tree_text(rng, 2 + iter % 20)
                                    : testsupport::random_dag_text(rng, 2 + iter % 20);
        auto tax = Taxonomy::parse(text);
        FrequencyTable freq(tax.size());
        std::uniform_int_distribution<std::uint64_t> count(0, 20);
        std::uint64_t mass = 0;
        for (ConceptId c = 0; c < tax.size(); ++c) {
            std::uint64_t v = count(rng);
            freq.set_own(c, v);
            mass += v;
        }
        if (mass == 0) freq.set_own(tax.root(), 1);
        auto ic = IcTable::build(freq, tax);
        for (ConceptId d = 0; d < tax.size(); ++d) {
            for (ConceptId a : tax.ancestors_of(d)) {
                CHECK(ic.cum(a) >= ic.cum(d));
                if (ic.cum(d) > 0) CHECK(ic.ic(a) <= ic.ic(d) + 1e-12);
            }
        }
    }
}

TEST_CASE("tree total equals the sum of own counts") {
    std::mt19937 rng(81);
    for (int iter = 0; iter < 20; ++iter) {
        auto tax = Taxonomy::parse(testsupport::random_tree_text(rng, 2 + iter % 15));
        FrequencyTable freq(tax.size());
        std::uint64_t sum = 0;
        std::uniform_int_distribution<std::uint64_t> count(1, 9);
        for (ConceptId c = 0; c < tax.size(); ++c) {
            std::uint64_t v = count(rng);
            freq.set_own(c, v);
            sum += v;
        }
        auto ic = IcTable::build(freq, tax);
        CHECK(ic.total() == sum);
    }
}

TEST_CASE("multiple inheritance counts each descendant once") {
    // X has two parents under the root; its mass must reach the root once.
    auto tax = Taxonomy::parse("P1\tR\nP2\tR\nX\tP1\nX\tP2");
    FrequencyTable freq(tax.size());
    freq.set_own(tax.require("X"), 7);
    auto ic = IcTable::build(freq, tax);
    CHECK(ic.cum(tax.root()) == 7);
    CHECK(ic.cum(tax.require("P1")) == 7);
    CHECK(ic.cum(tax.require("P2")) == 7);
}

TEST_CASE("ic rebuild is deterministic") {
    auto tax = testsupport::load_fixture("tiny_ic.tax");
    auto freq = FrequencyTable::parse("A1\t5\nA2\t5\nB\t10", tax);
    auto a = IcTable::build(freq, tax);
    auto b = IcTable::build(freq, tax);
    for (ConceptId c = 0; c < tax.size(); ++c) {
        CHECK(a.cum(c) == b.cum(c));
        CHECK(a.ic(c) == b.ic(c));  // bit-identical
    }
}
