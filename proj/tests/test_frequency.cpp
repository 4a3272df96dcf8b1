#include <doctest.h>

#include <random>

#include "diachron/errors.hpp"
#include "diachron/frequency.hpp"
#include "support.hpp"

using namespace diachron;

using Tokens = std::vector<std::string>;

TEST_CASE("count_matches examples") {
    const auto in_order_to = TokenPattern::parse("in order to");
    CHECK(count_matches(Tokens{"He", "left", "in", "order", "to", "win."}, in_order_to) == 1);
    CHECK(count_matches(Tokens{"In", "order", "to", "see,", "in", "order", "to", "know."}, in_order_to) == 2);
    CHECK(count_matches(Tokens{"a", "a", "a"}, TokenPattern::parse("a a")) == 2);
    CHECK(count_matches(Tokens{"in", "order", "to,"}, in_order_to) == 1);
    CHECK(count_matches(Tokens{"in", "order", "to.\""}, in_order_to) == 1);
    CHECK(count_matches(Tokens{"in", "order,", "to"}, in_order_to) == 0);
    CHECK(count_matches(Tokens{"in", "order"}, in_order_to) == 0);
    CHECK(count_matches(Tokens{}, in_order_to) == 0);
}

TEST_CASE("count_matches case rule") {
    const Tokens tokens{"In", "order", "to", "go"};
    CHECK(count_matches(tokens, TokenPattern::parse("in order to")) == 1);
    CHECK(count_matches(tokens, TokenPattern::parse("in order to", true)) == 0);
    CHECK(count_matches(tokens, TokenPattern::parse("In order to", true)) == 1);
}

TEST_CASE("punctuation patterns") {
    const auto semicolon = TokenPattern::parse(";");
    CHECK(semicolon.punctuation_only());
    CHECK(count_matches(Tokens{"a", ";", "b.", "c", "d."}, semicolon) == 1);
    CHECK(count_matches(Tokens{"a;", "b;", "c"}, semicolon) == 2);
    CHECK(count_matches(Tokens{";;"}, semicolon) == 0);
    CHECK(count_matches(Tokens{"b;\""}, semicolon) == 0);
    // In a multi-token pattern a punctuation token must stand alone.
    CHECK(count_matches(Tokens{"order", "b;"}, TokenPattern::parse("order ;")) == 0);
    CHECK(count_matches(Tokens{"order", ";"}, TokenPattern::parse("order ;")) == 1);
}

TEST_CASE("count_matches agrees with the naive scan") {
    std::mt19937_64 rng(1234);
    const Tokens alphabet{"a", "A", "b", "to", "To", "to,", "a.", "b;", ";", ".", "in", "In", "order", "a,\"", "?"};
    const Tokens pattern_alphabet{"a", "A", "b", "to", "in", "order", ";", "."};
    for (int trial = 0; trial < 10000; ++trial) {
        Tokens tokens;
        for (int i = 0, n = static_cast<int>(rng() % 12); i < n; ++i) tokens.push_back(alphabet[rng() % alphabet.size()]);
        Tokens pat;
        for (int i = 0, k = 1 + static_cast<int>(rng() % 3); i < k; ++i) {
            pat.push_back(pattern_alphabet[rng() % pattern_alphabet.size()]);
        }
        TokenPattern pattern{pat, rng() % 2 == 0};
        CAPTURE(pattern.text());
        REQUIRE(count_matches(tokens, pattern) == testing::naive_count(tokens, pat, pattern.case_sensitive));

        // Case folding can only add matches.
        TokenPattern insensitive{pat, false}, sensitive{pat, true};
        REQUIRE(count_matches(tokens, insensitive) >= count_matches(tokens, sensitive));
    }
}

TEST_CASE("per_million") {
    CHECK(per_million(3, 150000) == 20.0);
    CHECK(std::abs(per_million(3, 150000) - 20.0) <= 1e-12);
    CHECK(per_million(0, 12345) == 0.0);
    CHECK(per_million(0, 0) == 0.0);
    CHECK_THROWS_AS(per_million(1, 0), UndefinedRate);
    CHECK(per_million(5, 1000) == 5000.0);

    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto words = 1 + rng() % 10'000'000;
        const auto count = rng() % (words + 1);
        REQUIRE(per_million(2 * count, 2 * words) == per_million(count, words));
    }
}

TEST_CASE("pattern parsing") {
    auto p = TokenPattern::parse("  in   order to ");
    CHECK(p.tokens == Tokens{"in", "order", "to"});
    CHECK(p.text() == "in order to");
    CHECK_FALSE(p.case_sensitive);
    CHECK_THROWS_AS(TokenPattern::parse("   "), ConfigError);

    auto list = parse_pattern_file("# purpose subordinators\nin order to\n\nso as to\n;\n");
    REQUIRE(list.size() == 3);
    CHECK(list[1].text() == "so as to");
    CHECK(list[2].punctuation_only());
}
