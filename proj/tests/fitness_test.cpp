#include <doctest.h>

#include "evoshapes/fitness.hpp"
#include "evoshapes/rng.hpp"
#include "oracles.hpp"

using namespace evoshapes;

namespace {

ImageBuffer random_buffer(CanvasDims dims, RandomStream& rng) {
    ImageBuffer img(dims);
    for (Color& px : img.pixels())
        px = {static_cast<std::uint8_t>(rng.uniform_int(0, 255)),
              static_cast<std::uint8_t>(rng.uniform_int(0, 255)),
              static_cast<std::uint8_t>(rng.uniform_int(0, 255))};
    return img;
}

} // namespace

TEST_CASE("worst_score is 255 * 3 * pixels") {
    CHECK(worst_score({200, 200}) == 30600000ull);
    CHECK(worst_score({1, 1}) == 765ull);
    CHECK(worst_score({1, 2}) == 1530ull);
}

TEST_CASE("absolute_score basics") {
    SUBCASE("identical buffers score zero") {
        RandomStream rng(1);
        const ImageBuffer a = random_buffer({9, 7}, rng);
        CHECK(absolute_score(a, a) == 0);
    }
    SUBCASE("black vs white 1x1 is 765") {
        const ImageBuffer black({1, 1});
        const ImageBuffer white({1, 1}, Color{255, 255, 255});
        CHECK(absolute_score(black, white) == 765);
    }
    SUBCASE("dimension mismatch names both sizes") {
        const ImageBuffer a({4, 4});
        const ImageBuffer b({4, 5});
        CHECK_THROWS_WITH_AS(absolute_score(a, b), doctest::Contains("4x5"),
                             std::invalid_argument);
    }
}

TEST_CASE("absolute_score equals the naive triple loop") {
    RandomStream rng(12);
    for (int i = 0; i < 500; ++i) {
        const CanvasDims dims{rng.uniform_int(1, 8), rng.uniform_int(1, 8)};
        const ImageBuffer a = random_buffer(dims, rng);
        const ImageBuffer b = random_buffer(dims, rng);
        CHECK(absolute_score(a, b) == oracles::naive_absolute_score(a, b));
        CHECK(absolute_score(a, b) == absolute_score(b, a));
    }
}

TEST_CASE("absolute_score satisfies the triangle inequality") {
    RandomStream rng(77);
    for (int i = 0; i < 200; ++i) {
        const CanvasDims dims{rng.uniform_int(1, 6), rng.uniform_int(1, 6)};
        const ImageBuffer a = random_buffer(dims, rng);
        const ImageBuffer b = random_buffer(dims, rng);
        const ImageBuffer c = random_buffer(dims, rng);
        CHECK(absolute_score(a, c) <= absolute_score(a, b) + absolute_score(b, c));
    }
}

TEST_CASE("relative_score reproduces the published score/percent pairs") {
    const CanvasDims dims{200, 200};
    const struct {
        std::uint64_t absolute;
        double percent;
    } golden[] = {
        {2885838, 90.57}, {3014961, 90.15}, {3032196, 90.09}, {3072442, 89.96},
        {4391165, 85.65}, {2996858, 90.21}, {2751771, 91.01},
    };
    for (const auto& [absolute, percent] : golden) {
        const double got = relative_score(absolute, dims);
        CHECK(got > percent - 0.005);
        CHECK(got < percent + 0.005);
    }
}

TEST_CASE("relative_score edge cases") {
    CHECK(relative_score(std::uint64_t{0}, {31, 17}) == 100.0);
    CHECK(relative_score(worst_score({5, 5}), {5, 5}) == 0.0);
    CHECK_THROWS_AS(relative_score(worst_score({5, 5}) + 1, {5, 5}),
                    std::invalid_argument);
}

TEST_CASE("relative_score strictly decreases as absolute increases") {
    const CanvasDims dims{20, 10};
    double prev = 101.0;
    for (std::uint64_t abs = 0; abs <= worst_score(dims); abs += 697) {
        const double rel = relative_score(abs, dims);
        CHECK(rel < prev);
        prev = rel;
    }
}
