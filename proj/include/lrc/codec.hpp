#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "lrc/code.hpp"

namespace lrc {

// Generator in systematic-permuted form: G restricted to info_positions is
// the identity, and G H^T = 0.
struct SystematicCode {
    BitMatrix g;                                // k x n
    std::vector<std::uint64_t> info_positions;  // the k systematic coordinates
};

SystematicCode systematic_form(const LrcCode& code);

// One stripe of 64 bit-sliced codewords: symbols[pos] packs bit `pos` of all
// 64 codewords. Erased positions carry no trusted data.
struct StripeWord {
    std::vector<std::uint64_t> symbols;  // length n
    std::vector<std::uint8_t> erased;    // length n, 0/1
};

StripeWord make_stripe(const LrcCode& code);

// Bit-sliced encode: fills all n symbols from k info words (order matches
// info_positions).
void encode_stripe(const SystematicCode& sc, const std::vector<std::uint64_t>& info,
                   StripeWord& out);

struct RepairResult {
    std::uint64_t value = 0;
    std::uint64_t symbols_read = 0;
};

// Local repair of one erased position from its group; fails if the group
// holds a second erasure.
RepairResult repair_one(const LrcCode& code, const StripeWord& word, std::uint64_t pos);

// Solves H restricted to the erased columns against the known-symbol
// syndrome; in-place. Throws when the erased columns are dependent.
void erasure_decode(const LrcCode& code, StripeWord& word);

// H * word^T per slice; all-zero iff every slice is a codeword. Requires no
// erasures.
std::vector<std::uint64_t> syndrome(const LrcCode& code, const StripeWord& word);

// --- shard container -------------------------------------------------------
//
// encode splits a byte stream into stripes of k 64-bit words (8k bytes of
// payload per stripe, zero padded) and writes one shard file per position:
// a fixed header followed by that position's 8-byte word per stripe.
// Erasures are declared by missing/invalid shard files, not detected.

struct ShardHeader {
    std::uint64_t code_hash = 0;
    std::uint64_t position = 0;
    std::uint64_t n = 0;
    std::uint64_t k = 0;
    std::uint64_t stripes = 0;
    std::uint64_t payload_len = 0;
};

std::uint64_t hash_code_file(const LrcCode& code);

void encode_to_shards(const LrcCode& code, const SystematicCode& sc,
                      const std::vector<std::uint8_t>& payload,
                      const std::filesystem::path& dir);

// Reconstructs one shard from its repair group; returns symbols read.
std::uint64_t repair_shard(const LrcCode& code, const std::filesystem::path& dir,
                           std::uint64_t pos);

// Reads available shards, erasure-decodes missing ones, returns the payload.
std::vector<std::uint8_t> decode_from_shards(const LrcCode& code, const SystematicCode& sc,
                                             const std::filesystem::path& dir);

std::filesystem::path shard_path(const std::filesystem::path& dir, std::uint64_t pos);

}  // namespace lrc
