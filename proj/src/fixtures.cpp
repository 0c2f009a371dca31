#include <string>
#include <vector>

namespace lrc {

// Stored desired matrices, one per supported (b, s). Every entry is
// re-verified by fixture() at load, so a corrupted row cannot go unnoticed.
namespace {

const std::vector<std::string> kFixture_b3_s2 = {
    "10000010",
    "01000001",
    "11100000",
    "10010011",
    "01001010",
    "01000111",
};

const std::vector<std::string> kFixture_b4_s3 = {
    "0010010001101011",
    "0010000010001111",
    "0100000100011110",
    "1000000001001110",
    "0101000011111100",
    "0110100001011001",
    "0110011000111110",
    "0000010111011101",
};

// Regenerated via the seeded cyclic-seed search (seed 1, first attempt); the
// shape and invariants match the other entries.
const std::vector<std::string> kFixture_b5_s4 = {
    "00101101001000010011110101100001",
    "10001010001110010011100011111111",
    "00001011001001111001101101000101",
    "00001000101101010010010000110101",
    "11100000111111000001101010100000",
    "01110100010010111000010110111100",
    "01000111001100101101100011010010",
    "00010001010001100011111000000001",
    "11000011000001101001010001111101",
    "10001100111011111111010011101000",
};

const std::vector<std::string> kFixture_b6_s4 = {
    "1000000000001011001110100100110101000100100010101100100101110011",
    "0100000000001000010011101010111100100101010010011110101011100100",
    "0010000000000100001001110101011110010010101001001111010101110010",
    "0001000000000010000100111010101111001001010100100111101010111001",
    "1000000110000110000001010101101110111001001010010011101110110101",
    "0100000010100000010011010110100001100011111111000110000101101011",
    "0010000010011011011010101011011011001000001000110100011110001011",
    "0001000110100011110001011000100000100110110110101010110110110010",
    "0000100100110010010000011001111011010110101010101101011011110011",
    "0000010100101110100000100111011000001101110010000010111010010100",
    "0000001100101101001100000000101111100111011101011101110011111010",
    "0000000001011001110100100110101000100100010101100100101110011010",
};

const std::vector<std::string> kFixture_b7_s4 = {
    "10000000000000010100100101110010110101111000111011010010000100010111110010011111010001000010010110111000111101011010011101001001",
    "01000000000000100011011001011100110001001101101011001101001010100100011101110001001010100101100110101101100100011001110100110110",
    "00100000000000010001101100101110011000100110110101100110100101010010001110111000100101010010110011010110110010001100111010011011",
    "00010000000000100001111101110010100111100010101100010111011010000110100011100010110000101101110100011010100011110010100111011111",
    "10000000001110011101010111001110000000001000001011111001011011001101010011111110100100100101111111001010110011011010011111010000",
    "01000000000011010101100000000001001001101001011100010101111001000101000111110110000110111110001010001001111010100011101001011001",
    "00100000001001110101101100101001011100011111101011111100011101001010011011010111001000000010000011101100000001111000000011011100",
    "00010000001011100001010011100011001100011100101000011101000000100000100101110111010101101111110011100111111011010101110111010010",
    "00001000001001011101110101011011111100111001111110110101011101110100100000100000010111000010100111000110011000111001010000111010",
    "00000100000101111100101101100110101001111111010010010010111111100101011001101101001111101000001000000000111001110101011100111000",
    "00000010001100110111100100001111100001001111011001100010000000101000001101010111010010010011101101110010010010111010101100000101",
    "00000001001000111011001011011110101110100110101010111110010111100001000011110100111110101010110010111010111101101001101110001001",
    "00000000100100110100101110001010111100100010100011111011000011011111000101000100111101010001110100101100100100000000001101010110",
    "00000000011100010011100101111001101011100001100001010110111110110101000011000011101011001111010011100100011100000000000100110010",
};

}  // namespace

const std::vector<std::string>* fixture_rows(unsigned b, unsigned s) {
    if (b == 3 && s == 2) return &kFixture_b3_s2;
    if (b == 4 && s == 3) return &kFixture_b4_s3;
    if (b == 5 && s == 4) return &kFixture_b5_s4;
    if (b == 6 && s == 4) return &kFixture_b6_s4;
    if (b == 7 && s == 4) return &kFixture_b7_s4;
    return nullptr;
}

}  // namespace lrc
