// Release gate for the library. Each test covers one criterion and prints a
// single pass/fail line, so the run log doubles as a checklist. Criteria 3
// through 9 share one randomized corpus of (image, payload) pairs.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <gtest/gtest.h>

#include "blockhide/blockhide.hpp"
#include "test_support.hpp"

using namespace blockhide;

namespace {

constexpr std::size_t kSuiteSize = 1000;
constexpr double kPsnrRelTol = 1e-9;
constexpr double kRoundTripBudgetSeconds = 30.0;
constexpr double kPerBudgetMs = 200.0;
constexpr unsigned kPerfReps = 10;

struct SuiteCase {
    BinaryImage host{2, 2, kWhite};
    BitStream raw_bits;                 // raw leg, length <= gross capacity
    std::vector<std::uint8_t> payload;  // framed leg, used when framed
    bool framed = false;                // gross capacity admits a length header
};

// 1000 hosts spanning 2x2 to 256x256 with black densities from 0 to 100%,
// including forced all-white and all-black extremes, each paired with a
// random raw stream and, when it fits, a random framed payload.
const std::vector<SuiteCase>& suite() {
    static const std::vector<SuiteCase> cases = [] {
        std::mt19937_64 rng(0xACCE5011u);
        std::uniform_int_distribution<std::size_t> dim(2, 256);
        std::uniform_real_distribution<double> density(0.0, 1.0);
        std::vector<SuiteCase> all;
        all.reserve(kSuiteSize);
        for (std::size_t i = 0; i < kSuiteSize; ++i) {
            const double black = i % 20 == 0 ? 0.0 : i % 20 == 1 ? 1.0 : density(rng);
            SuiteCase c;
            c.host = testsupport::random_image(rng, dim(rng), dim(rng), black);
            const CapacityReport cap = capacity(c.host);
            const std::uint64_t raw_len = cap.gross_bits == 0 ? 0 : rng() % (cap.gross_bits + 1);
            for (std::uint64_t k = 0; k < raw_len; ++k) c.raw_bits.append_bit(rng() & 1u);
            c.framed = cap.gross_bits >= kFrameHeaderBits;
            if (c.framed)
                c.payload = testsupport::random_bytes(rng, rng() % (cap.net_bits / 8 + 1));
            all.push_back(std::move(c));
        }
        return all;
    }();
    return cases;
}

class Acceptance : public ::testing::Test {
  protected:
    void criterion(int number, std::string label) {
        number_ = number;
        label_ = std::move(label);
    }

    void TearDown() override {
        if (number_ == 0) return;
        std::printf("[criterion %2d] %s: %s\n", number_, label_.c_str(),
                    HasFailure() ? "FAIL" : "PASS");
        std::fflush(stdout);
    }

  private:
    int number_ = 0;
    std::string label_;
};

TEST_F(Acceptance, CodeTablesHoldTheirFrozenContents) {
    criterion(1, "code tables match their frozen contents");
    const std::array<std::string, 8> three = {"0001", "0010", "0100", "0111",
                                              "1000", "1011", "1101", "1110"};
    const std::array<std::string, 4> two = {"0011", "0101", "0110", "1001"};
    for (unsigned group = 0; group < three.size(); ++group) {
        EXPECT_EQ(encode3(group).str(), three[group]);
        EXPECT_EQ(decode3(Pattern::from_string(three[group])), group);
        EXPECT_EQ(encode3(group).black_count() % 2, 1u);
    }
    for (unsigned group = 0; group < two.size(); ++group) {
        EXPECT_EQ(encode2(group).str(), two[group]);
        EXPECT_EQ(decode2(Pattern::from_string(two[group])), group);
        EXPECT_EQ(encode2(group).black_count(), 2u);
    }
}

TEST_F(Acceptance, ThreeBitsRewriteATwoBlackBlockAsDocumented) {
    criterion(2, "embedding 011 into a two-black block yields 0111");
    const BinaryImage host =
        set_block(BinaryImage(2, 2, kWhite), 0, 0, Pattern::from_string("0011"));
    BitStream bits;
    bits.append_bits(0b011u, 3);
    const BinaryImage stego = embed_bits(host, bits);
    EXPECT_EQ(get_block(stego, 0, 0).str(), "0111");
    EXPECT_EQ(extract_bits(stego, 3).to_string(), "011");
}

TEST_F(Acceptance, RoundTripsRecoverEveryPayloadBitExactly) {
    criterion(3, "raw and framed round trips are bit-exact over the corpus");
    ASSERT_GE(suite().size(), kSuiteSize);
    const auto t0 = std::chrono::steady_clock::now();
    for (const SuiteCase& c : suite()) {
        const BinaryImage raw_stego = embed_bits(c.host, c.raw_bits);
        ASSERT_EQ(extract_bits(raw_stego, c.raw_bits.size()), c.raw_bits);
        if (c.framed) {
            const BinaryImage stego = embed_payload(c.host, c.payload);
            ASSERT_EQ(extract_payload(stego), c.payload);
        } else {
            ASSERT_THROW(embed_payload(c.host, c.payload), InsufficientCapacity);
        }
    }
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - t0;
    EXPECT_LT(elapsed.count(), kRoundTripBudgetSeconds);
}

TEST_F(Acceptance, EmbeddingPreservesTheBlockCensus) {
    criterion(4, "host and stego block censuses agree, data blocks never pure");
    for (const SuiteCase& c : suite()) {
        const BinaryImage stego =
            c.framed ? embed_payload(c.host, c.payload) : embed_bits(c.host, c.raw_bits);
        const testsupport::CensusOracle before = testsupport::census_by_enumeration(c.host);
        const testsupport::CensusOracle after = testsupport::census_by_enumeration(stego);
        ASSERT_EQ(before.count_a + before.count_b, after.count_a + after.count_b);
        ASSERT_EQ(before.count_pure, after.count_pure);
        for (std::size_t br = 0; br < c.host.height() / 2; ++br)
            for (std::size_t bc = 0; bc < c.host.width() / 2; ++bc) {
                const unsigned host_black = testsupport::oracle_black_count(c.host, br, bc);
                const unsigned stego_black = testsupport::oracle_black_count(stego, br, bc);
                const bool host_pure = host_black == 0 || host_black == 4;
                const bool stego_pure = stego_black == 0 || stego_black == 4;
                ASSERT_EQ(host_pure, stego_pure) << "block (" << br << ", " << bc << ")";
            }
    }
}

TEST_F(Acceptance, CapacityMatchesBruteForceEnumeration) {
    criterion(5, "capacity equals brute-force block enumeration");
    for (const SuiteCase& c : suite()) {
        const CapacityReport cap = capacity(c.host);
        const testsupport::CensusOracle oracle = testsupport::census_by_enumeration(c.host);
        ASSERT_EQ(cap.count_a, oracle.count_a);
        ASSERT_EQ(cap.count_b, oracle.count_b);
        ASSERT_EQ(cap.count_pure, oracle.count_pure);
        ASSERT_EQ(cap.gross_bits, oracle.gross_bits());
    }
    EXPECT_EQ(capacity(testsupport::checkerboard(1024, 768)).gross_bits, 589824u);
}

TEST_F(Acceptance, DamageStaysInsideTheConsumedBlocks) {
    criterion(6, "flips bounded by four per consumed block, rest untouched");
    for (const SuiteCase& c : suite()) {
        const auto check = [&](const BinaryImage& stego, std::uint64_t nbits) {
            const std::vector<std::size_t> consumed =
                testsupport::consumed_blocks_by_simulation(c.host, nbits);
            ASSERT_LE(flip_count(c.host, stego), 4 * consumed.size());
            ASSERT_TRUE(testsupport::identical_outside_blocks(c.host, stego, consumed));
        };
        check(embed_bits(c.host, c.raw_bits), c.raw_bits.size());
        if (c.framed)
            check(embed_payload(c.host, c.payload),
                  kFrameHeaderBits + 8 * std::uint64_t(c.payload.size()));
    }
}

TEST_F(Acceptance, PsnrAgreesWithItsClosedForm) {
    criterion(7, "measured psnr tracks the closed form to 1e-9 relative");
    for (const SuiteCase& c : suite()) {
        const BinaryImage stego =
            c.framed ? embed_payload(c.host, c.payload) : embed_bits(c.host, c.raw_bits);
        const std::uint64_t flips = flip_count(c.host, stego);
        const double measured = psnr(c.host, stego);
        if (flips == 0) {
            ASSERT_TRUE(std::isinf(measured));
        } else {
            const double closed =
                10.0 * std::log10(double(c.host.pixel_count()) / double(flips));
            ASSERT_NEAR(measured, closed, std::abs(closed) * kPsnrRelTol);
        }
    }
}

TEST_F(Acceptance, PbmSerializationRoundTripsBothFormats) {
    criterion(8, "PBM save then load is the identity for P1 and P4");
    std::size_t ragged_widths = 0;
    for (const SuiteCase& c : suite()) {
        ragged_widths += c.host.width() % 8 != 0;
        ASSERT_EQ(load_pbm(save_pbm(c.host, PbmFormat::P1)), c.host);
        ASSERT_EQ(load_pbm(save_pbm(c.host, PbmFormat::P4)), c.host);
    }
    EXPECT_GT(ragged_widths, 0u);
}

TEST_F(Acceptance, InjectedOrphanPatternsAlwaysRaiseCorruptStream) {
    criterion(9, "orphan patterns in consumed blocks always raise CorruptStream");
    std::mt19937_64 rng(0xC0221u);
    std::size_t tested = 0;
    for (const SuiteCase& c : suite()) {
        if (!c.framed) continue;
        const BinaryImage stego = embed_payload(c.host, c.payload);
        const std::vector<std::size_t> consumed = testsupport::consumed_blocks_by_simulation(
            c.host, kFrameHeaderBits + 8 * std::uint64_t(c.payload.size()));
        ASSERT_FALSE(consumed.empty());
        const std::size_t block = consumed[rng() % consumed.size()];
        const Pattern orphan = Pattern::from_string(tested % 2 == 0 ? "1100" : "1010");
        const BinaryImage tampered = set_block(
            stego, block / (c.host.width() / 2), block % (c.host.width() / 2), orphan);
        ASSERT_THROW(extract_payload(tampered), CorruptStream);
        ++tested;
    }
    EXPECT_GE(tested, suite().size() / 2);
}

TEST_F(Acceptance, FullCapacityRunsFitTheTimeBudget) {
    criterion(10, "1024x768 embed and extract each average under 200 ms");
    const BinaryImage host = testsupport::checkerboard(1024, 768);
    std::mt19937_64 rng(0xBE9C4u);
    const std::vector<std::uint8_t> payload =
        testsupport::random_bytes(rng, capacity(host).net_bits / 8);

    using clock = std::chrono::steady_clock;
    std::uint64_t sink = 0;
    double embed_total_ms = 0.0;
    BinaryImage stego = host;
    for (unsigned rep = 0; rep < kPerfReps; ++rep) {
        const auto t0 = clock::now();
        BinaryImage s = embed_payload(host, payload);
        const auto t1 = clock::now();
        embed_total_ms += std::chrono::duration<double, std::milli>(t1 - t0).count();
        sink += s.pixel(0, 0);
        if (rep == 0) stego = std::move(s);
    }

    double extract_total_ms = 0.0;
    for (unsigned rep = 0; rep < kPerfReps; ++rep) {
        const auto t0 = clock::now();
        const std::vector<std::uint8_t> recovered = extract_payload(stego);
        const auto t1 = clock::now();
        extract_total_ms += std::chrono::duration<double, std::milli>(t1 - t0).count();
        sink += recovered.size();
    }

    EXPECT_GT(sink, 0u);
    EXPECT_LT(embed_total_ms / kPerfReps, kPerBudgetMs);
    EXPECT_LT(extract_total_ms / kPerfReps, kPerBudgetMs);
}

TEST_F(Acceptance, CapacityFallsAsPureBlocksTakeOver) {
    criterion(11, "capacity strictly decreases as the pure-block share grows");
    const auto with_pure_share = [](double share) {
        BinaryImage img(256, 256, kWhite);
        const GridDims g = grid_dims(img.height(), img.width());
        const std::size_t pure = std::size_t(share * double(g.total_blocks()));
        for (std::size_t b = 0; b < g.total_blocks(); ++b) {
            const Pattern p = b < pure ? Pattern::from_string(b % 2 == 0 ? "1111" : "0000")
                                       : Pattern::from_string("0110");
            img = set_block(std::move(img), b / g.block_cols, b % g.block_cols, p);
        }
        return img;
    };

    const std::array<double, 6> shares = {0.0, 0.10, 0.25, 0.50, 0.75, 0.95};
    std::uint64_t previous = 0;
    for (std::size_t i = 0; i < shares.size(); ++i) {
        const std::uint64_t gross = capacity(with_pure_share(shares[i])).gross_bits;
        if (i > 0) EXPECT_LT(gross, previous) << "pure share " << shares[i];
        previous = gross;
    }
}

}  // namespace
