#include <random>
#include <string>
#include <vector>

#include "catch_amalgamated.hpp"

#include "cohesion/unicode.hpp"

namespace {

struct Case {
    const char* input;
    const char* expected;
};

// Frozen reference outputs for the full pipeline (NFC, full case folding,
// punctuation strip); verified against a Unicode reference implementation.
constexpr Case kFrozenCases[] = {
    {"The", "the"},
    {"cats,", "cats"},
    {"Caf\303\251", "caf\303\251"},
    {"...", "..."},
    {"\302\253Bonjour\302\273", "bonjour"},
    {"don't", "don't"},
    {"STRASSE", "strasse"},
    {"\304\260stanbul", "i\314\207stanbul"},
    {"--hello--", "hello"},
    {"A\314\212", "\303\245"},
    {"\357\254\201le", "file"},
    {"co-operate", "co-operate"},
    {"e.g.", "e.g"},
    {"(\317\200\316\261\317\201\316\254\316\264\316\265\316\271\316\263\316\274\316\261)", "\317\200\316\261\317\201\316\254\316\264\316\265\316\271\316\263\316\274\316\261"},
    {"\316\243\316\237\316\246\316\237\316\243", "\317\203\316\277\317\206\316\277\317\203"},
    {"\316\225\316\273\316\273\316\254\317\202", "\316\265\316\273\316\273\316\254\317\203"},
    {"\320\234\320\236\320\241\320\232\320\222\320\220", "\320\274\320\276\321\201\320\272\320\262\320\260"},
    {"na\303\257ve.", "na\303\257ve"},
    {"\342\200\234quoted\342\200\235", "quoted"},
    {"\355\225\234\352\265\255\354\226\264!", "\355\225\234\352\265\255\354\226\264"},
    {"\341\204\222\341\206\236\341\206\253\352\270\200", "\341\204\222\341\206\236\341\206\253\352\270\200"},
    {"\342\221\240", "\342\221\240"},
    {"\302\277Qu\303\251?", "qu\303\251"},
    {"\330\247\331\204\330\271\331\216\330\261\331\216\330\250\331\220\331\212\331\216\331\221\330\251", "\330\247\331\204\330\271\331\216\330\261\331\216\330\250\331\220\331\212\331\216\331\221\330\251"},
    {"\344\275\240\345\245\275\343\200\202", "\344\275\240\345\245\275"},
    {"\342\200\246", "\342\200\246"},
    {"'tis", "tis"},
    {"O'Brien", "o'brien"},
    {"\342\200\251\321\242\307\213", "\342\200\251\321\243\307\214"},
    {"\357\270\277\317\276\357\270\260\341\270\235", "\315\274\357\270\260\341\270\235"},
    {"\316\240\357\271\210\317\204\342\200\237", "\317\200\357\271\210\317\204"},
    {"\357\271\200", "\357\271\200"},
    {"\352\261\250\321\242\303\262\323\240\357\270\264", "\352\261\250\321\243\303\262\323\241"},
    {"\322\250", "\322\251"},
    {"\313\256", "\313\256"},
    {"\313\206\306\266\352\260\276\342\201\223", "\313\206\306\266\352\260\276"},
    {"\343\200\261", "\343\200\261"},
    {"\357\270\277\323\261\343\200\260\317\222$", "\323\261\343\200\260\317\222$"},
    {"\352\260\224", "\352\260\224"},
    {"\342\201\207\306\246\357\271\217s\352\260\260\316\274", "\312\200\357\271\217s\352\260\260\316\274"},
    {"\302\261\352\262\264\343\200\245'\352\261\212", "\302\261\352\262\264\343\200\245'\352\261\212"},
    {">", ">"},
    {"\352\260\272", "\352\260\272"},
    {"\352\260\264\316\255\341\273\226\305\205", "\352\260\264\316\255\341\273\227\305\206"},
    {"\315\266=", "\315\267="},
    {"\357\271\210\343\200\240\357\271\201\312\202\343\200\223\357\271\201", "\343\200\240\357\271\201\312\202\343\200\223"},
    {"\352\261\240k\352\260\244", "\352\261\240k\352\260\244"},
    {"~", "~"},
    {"+\312\252", "+\312\252"},
    {"\311\223\316\213", "\311\223\316\213"},
    {"\343\200\223\352\263\272\357\271\211\323\233\341\274\242\312\270", "\343\200\223\352\263\272\357\271\211\323\233\341\274\242\312\270"},
    {"\342\200\250\341\275\271\352\263\211", "\342\200\250\317\214\352\263\211"},
    {"\357\271\211\341\276\203\357\271\203\306\270\304\264", "\341\274\203\316\271\357\271\203\306\271\304\265"},
    {"\342\200\226\320\235", "\320\275"},
    {"|\304\242\341\272\244\342\200\227\357\271\210", "|\304\243\341\272\245"},
    {"\341\271\220", "\341\271\221"},
    {"\352\260\202Y\317\256", "\352\260\202y\317\257"},
    {"\357\270\264\343\200\201\303\200\343\200\262", "\303\240\343\200\262"},
    {"q\341\274\205", "q\341\274\205"},
    {"\317\272\303\247f\343\200\241\305\226\352\261\250", "\317\273\303\247f\343\200\241\305\227\352\261\250"},
    {"\342\200\271\352\261\265\323\270\343\200\275\343\200\260", "\352\261\265\323\271"},
    {"\357\270\274\343\200\255\305\270\341\275\222\342\201\206\322\264", "\343\200\255\303\277\341\275\222\342\201\206\322\265"},
    {"\322\202\342\200\254\317\210\316\263\357\271\214\341\274\265", "\322\202\342\200\254\317\210\316\263\357\271\214\341\274\265"},
    {"\320\260\352\260\242\341\274\250\315\262", "\320\260\352\260\242\341\274\240\315\263"},
    {"\343\200\234\357\271\213\343\200\271", "\343\200\271"},
    {"\352\262\266", "\352\262\266"},
    {"\352\263\203\317\222\343\200\270\357\271\213", "\352\263\203\317\222\343\200\270"},
    {"\341\270\230\341\274\243\352\263\242i\310\255", "\341\270\231\341\274\243\352\263\242i\310\255"},
    {"\342\200\262\310\206\342\200\242", "\310\207"},
    {"\352\261\211", "\352\261\211"},
    {"_\341\275\237", "\341\275\227"},
    {"\306\246\316\234\342\201\206", "\312\200\316\274"},
    {"\\\312\251\343\200\217\320\222\352\260\266\343\200\273", "\312\251\343\200\217\320\262\352\260\266\343\200\273"},
    {"\302\276", "\302\276"},
    {"\342\201\216", "\342\201\216"},
    {"\341\276\237\357\270\264\322\271\357\270\276", "\341\274\247\316\271\357\270\264\322\271"},
    {"t\316\235\357\270\275\341\275\247\341\270\265", "t\316\275\357\270\275\341\275\247\341\270\265"},
    {"\357\270\265\357\270\274\342\201\211\352\261\275\313\216\352\263\245", "\352\261\275\313\216\352\263\245"},
    {"\343\200\257\343\200\246\352\260\261\342\200\245\312\234\322\221", "\343\200\257\343\200\246\352\260\261\342\200\245\312\234\322\221"},
    {"\342\200\261\342\201\215\342\200\270\320\217#", "\321\237"},
    {"\320\214\343\200\270\305\262\343\200\217\352\261\276", "\321\234\343\200\270\305\263\343\200\217\352\261\276"},
    {"\342\200\256\307\265\352\263\276", "\342\200\256\307\265\352\263\276"},
    {"\343\200\237\343\200\212", "\343\200\237\343\200\212"},
    {"$5", "$5"},
    {"\342\201\216", "\342\201\216"},
    {"\357\271\215\357\270\265\341\276\260", "\341\276\260"},
    {"\311\2771\342\201\213\316\212\317\277", "\311\2771\342\201\213\316\257\315\275"},
    {"\341\271\265\342\201\222\341\270\217", "\341\271\265\342\201\222\341\270\217"},
};

}  // namespace

TEST_CASE("normalize case-folds") {
    CHECK(cohesion::normalize("The") == "the");
}

TEST_CASE("normalize strips edge punctuation") {
    CHECK(cohesion::normalize("cats,") == "cats");
    CHECK(cohesion::normalize("--hello--") == "hello");
    CHECK(cohesion::normalize("don't") == "don't");
}

TEST_CASE("normalize composes and folds beyond ASCII") {
    CHECK(cohesion::normalize("Caf\303\251") == "caf\303\251");
    CHECK(cohesion::normalize("A\314\212") == "\303\245");
}

TEST_CASE("normalize keeps pure-punctuation tokens") {
    CHECK(cohesion::normalize("...") == "...");
    CHECK(cohesion::normalize("\302\253\302\273") == "\302\253\302\273");
}

TEST_CASE("normalize rejects empty input") {
    CHECK_THROWS_AS(cohesion::normalize(""), cohesion::ValidationError);
}

TEST_CASE("normalize matches the frozen reference cases") {
    for (const Case& c : kFrozenCases) {
        INFO("input: " << c.input);
        CHECK(cohesion::normalize(c.input) == c.expected);
    }
}

TEST_CASE("normalize is idempotent") {
    for (const Case& c : kFrozenCases) {
        const std::string once = cohesion::normalize(c.input);
        CHECK(cohesion::normalize(once) == once);
    }

    std::mt19937 rng(2024);
    const std::vector<std::pair<char32_t, char32_t>> ranges = {
        {0x20, 0x7E},   {0xA0, 0x2FF},   {0x300, 0x36F},  {0x370, 0x3FF},
        {0x400, 0x4FF}, {0x1E00, 0x1FFF}, {0x2010, 0x205E}, {0xAC00, 0xACFF},
        {0x1100, 0x11C0}, {0xFB00, 0xFB17}};
    for (int iter = 0; iter < 2000; ++iter) {
        std::u32string raw;
        const int len = std::uniform_int_distribution<int>(1, 8)(rng);
        for (int k = 0; k < len; ++k) {
            const auto& [lo, hi] = ranges[std::uniform_int_distribution<std::size_t>(
                0, ranges.size() - 1)(rng)];
            raw.push_back(std::uniform_int_distribution<char32_t>(lo, hi)(rng));
        }
        const std::string input = cohesion::unicode::encode_utf8(raw);
        const std::string once = cohesion::normalize(input);
        REQUIRE(!once.empty());
        CHECK(cohesion::normalize(once) == once);
    }
}

TEST_CASE("decode_utf8 replaces ill-formed bytes") {
    const std::string bad = "a\xC3(";
    const std::u32string decoded = cohesion::unicode::decode_utf8(bad);
    REQUIRE(decoded.size() == 3);
    CHECK(decoded[1] == cohesion::unicode::kReplacement);
}
