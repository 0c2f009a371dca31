#include "lrc/codec.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace lrc {

SystematicCode systematic_form(const LrcCode& code) {
    const std::int64_t k = code.dimension();
    if (k < 1) throw std::invalid_argument("systematic_form: dimension < 1");

    const BitMatrix raw = nullspace(code.h);
    const Rref e = rref(raw);
    if (std::int64_t(e.pivot_cols.size()) != k)
        throw std::logic_error("systematic_form: generator rank deficiency");

    SystematicCode sc;
    sc.g = e.r;
    sc.info_positions.assign(e.pivot_cols.begin(), e.pivot_cols.end());

    // G H^T = 0: every generator row must have zero syndrome
    for (std::size_t i = 0; i < sc.g.rows(); ++i) {
        const BitVec row = sc.g.row_vec(i);
        if (!mat_vec(code.h, row).is_zero())
            throw std::logic_error("systematic_form: G H^T != 0");
    }
    return sc;
}

StripeWord make_stripe(const LrcCode& code) {
    StripeWord w;
    w.symbols.assign(code.n(), 0);
    w.erased.assign(code.n(), 0);
    return w;
}

void encode_stripe(const SystematicCode& sc, const std::vector<std::uint64_t>& info,
                   StripeWord& out) {
    if (info.size() != sc.g.rows()) throw std::invalid_argument("encode_stripe: info size != k");
    std::fill(out.symbols.begin(), out.symbols.end(), 0);
    std::fill(out.erased.begin(), out.erased.end(), 0);
    for (std::size_t i = 0; i < info.size(); ++i) {
        if (!info[i]) continue;
        for (std::size_t pos = 0; pos < out.symbols.size(); ++pos)
            if (sc.g.get(i, pos)) out.symbols[pos] ^= info[i];
    }
}

RepairResult repair_one(const LrcCode& code, const StripeWord& word, std::uint64_t pos) {
    if (pos >= code.n()) throw std::out_of_range("repair_one: position");
    if (!word.erased[pos]) throw std::invalid_argument("repair_one: position is not erased");

    const std::size_t g = code.group_of(pos);
    RepairResult res;
    for (std::uint64_t c = code.group_offset[g]; c < code.group_offset[g + 1]; ++c) {
        if (c == pos) continue;
        if (word.erased[c])
            throw std::runtime_error("repair_one: second erasure in repair group");
        res.value ^= word.symbols[c];
        ++res.symbols_read;
    }
    return res;
}

void erasure_decode(const LrcCode& code, StripeWord& word) {
    std::vector<std::uint64_t> erased;
    for (std::uint64_t c = 0; c < code.n(); ++c)
        if (word.erased[c]) erased.push_back(c);
    if (erased.empty()) return;

    const std::size_t e = erased.size();
    if (e > 64) throw std::runtime_error("erasure_decode: more than 64 erasures");
    const std::size_t rows = code.h.rows();

    // syndrome of the known symbols, one word per parity row
    std::vector<std::uint64_t> syn(rows, 0);
    for (std::size_t r = 0; r < rows; ++r) {
        auto row = code.h.row(r);
        for (std::size_t wi = 0; wi < row.size(); ++wi) {
            std::uint64_t wrd = row[wi];
            while (wrd) {
                const std::uint64_t c = wi * 64 + std::countr_zero(wrd);
                wrd &= wrd - 1;
                if (!word.erased[c]) syn[r] ^= word.symbols[c];
            }
        }
    }

    // rows of H restricted to erased columns, as e-bit masks; eliminate to
    // express each unknown as an XOR of syndrome rows
    std::vector<std::uint64_t> hmask(rows, 0);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t j = 0; j < e; ++j)
            if (code.h.get(r, erased[j])) hmask[r] |= std::uint64_t(1) << j;

    std::vector<std::size_t> pivot_row(e, rows);
    std::size_t found = 0;
    for (std::size_t j = 0; j < e && found < e; ++j) {
        std::size_t pr = rows;
        for (std::size_t r = 0; r < rows; ++r) {
            bool used = false;
            for (std::size_t jj = 0; jj < e; ++jj) used |= (pivot_row[jj] == r);
            if (!used && ((hmask[r] >> j) & 1)) {
                pr = r;
                break;
            }
        }
        if (pr == rows) continue;
        pivot_row[j] = pr;
        ++found;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r != pr && ((hmask[r] >> j) & 1)) {
                hmask[r] ^= hmask[pr];
                syn[r] ^= syn[pr];
            }
        }
    }
    for (std::size_t j = 0; j < e; ++j)
        if (pivot_row[j] == rows)
            throw std::runtime_error("erasure_decode: erased columns are dependent");

    for (std::size_t j = 0; j < e; ++j) {
        word.symbols[erased[j]] = syn[pivot_row[j]];
        word.erased[erased[j]] = 0;
    }
}

std::vector<std::uint64_t> syndrome(const LrcCode& code, const StripeWord& word) {
    for (std::uint8_t flag : word.erased)
        if (flag) throw std::invalid_argument("syndrome: word has erasures");
    std::vector<std::uint64_t> syn(code.h.rows(), 0);
    for (std::size_t r = 0; r < code.h.rows(); ++r) {
        auto row = code.h.row(r);
        for (std::size_t wi = 0; wi < row.size(); ++wi) {
            std::uint64_t wrd = row[wi];
            while (wrd) {
                const std::uint64_t c = wi * 64 + std::countr_zero(wrd);
                wrd &= wrd - 1;
                syn[r] ^= word.symbols[c];
            }
        }
    }
    return syn;
}

// --- shard container -------------------------------------------------------

namespace {

constexpr char kShardMagic[8] = {'L', 'R', 'C', 'S', 'H', 'D', '0', '1'};

void put_u64(std::ofstream& os, std::uint64_t v) {
    char buf[8];
    for (int i = 0; i < 8; ++i) buf[i] = char((v >> (8 * i)) & 0xff);
    os.write(buf, 8);
}

bool get_u64(std::ifstream& is, std::uint64_t& v) {
    char buf[8];
    if (!is.read(buf, 8)) return false;
    v = 0;
    for (int i = 0; i < 8; ++i) v |= std::uint64_t(std::uint8_t(buf[i])) << (8 * i);
    return true;
}

bool read_header(std::ifstream& is, ShardHeader& h) {
    char magic[8];
    if (!is.read(magic, 8) || std::memcmp(magic, kShardMagic, 8) != 0) return false;
    return get_u64(is, h.code_hash) && get_u64(is, h.position) && get_u64(is, h.n) &&
           get_u64(is, h.k) && get_u64(is, h.stripes) && get_u64(is, h.payload_len);
}

void write_header(std::ofstream& os, const ShardHeader& h) {
    os.write(kShardMagic, 8);
    put_u64(os, h.code_hash);
    put_u64(os, h.position);
    put_u64(os, h.n);
    put_u64(os, h.k);
    put_u64(os, h.stripes);
    put_u64(os, h.payload_len);
}

constexpr std::size_t kHeaderBytes = 8 + 6 * 8;

}  // namespace

std::uint64_t hash_code_file(const LrcCode& code) {
    std::ostringstream os;
    write_code_file(os, code);
    const std::string text = os.str();
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (char ch : text) {
        h ^= std::uint8_t(ch);
        h *= 0x100000001b3ull;
    }
    return h;
}

std::filesystem::path shard_path(const std::filesystem::path& dir, std::uint64_t pos) {
    return dir / ("shard_" + std::to_string(pos) + ".bin");
}

void encode_to_shards(const LrcCode& code, const SystematicCode& sc,
                      const std::vector<std::uint8_t>& payload,
                      const std::filesystem::path& dir) {
    const std::uint64_t n = code.n();
    const std::uint64_t k = std::uint64_t(code.dimension());
    const std::uint64_t stripe_bytes = 8 * k;
    const std::uint64_t stripes =
        payload.empty() ? 1 : (payload.size() + stripe_bytes - 1) / stripe_bytes;

    std::filesystem::create_directories(dir);

    // all stripes in memory: position-major for sequential shard writes
    std::vector<std::vector<std::uint64_t>> plane(n,
                                                  std::vector<std::uint64_t>(stripes, 0));
    StripeWord stripe = make_stripe(code);
    std::vector<std::uint64_t> info(k, 0);
    for (std::uint64_t sidx = 0; sidx < stripes; ++sidx) {
        for (std::uint64_t i = 0; i < k; ++i) {
            std::uint64_t w = 0;
            const std::uint64_t base = sidx * stripe_bytes + 8 * i;
            for (unsigned byte = 0; byte < 8; ++byte) {
                const std::uint64_t idx = base + byte;
                if (idx < payload.size()) w |= std::uint64_t(payload[idx]) << (8 * byte);
            }
            info[i] = w;
        }
        encode_stripe(sc, info, stripe);
        for (std::uint64_t pos = 0; pos < n; ++pos) plane[pos][sidx] = stripe.symbols[pos];
    }

    ShardHeader h;
    h.code_hash = hash_code_file(code);
    h.n = n;
    h.k = k;
    h.stripes = stripes;
    h.payload_len = payload.size();
    for (std::uint64_t pos = 0; pos < n; ++pos) {
        h.position = pos;
        std::ofstream os(shard_path(dir, pos), std::ios::binary | std::ios::trunc);
        if (!os) throw std::runtime_error("encode: cannot write shard " + std::to_string(pos));
        write_header(os, h);
        for (std::uint64_t sidx = 0; sidx < stripes; ++sidx) put_u64(os, plane[pos][sidx]);
    }
}

namespace {

// nullopt-style shard read: false when missing, truncated, or mismatched
bool load_shard(const LrcCode& code, std::uint64_t expected_hash,
                const std::filesystem::path& dir, std::uint64_t pos, ShardHeader& h,
                std::vector<std::uint64_t>& words) {
    std::ifstream is(shard_path(dir, pos), std::ios::binary);
    if (!is) return false;
    if (!read_header(is, h)) return false;
    if (h.position != pos || h.n != code.n() || h.code_hash != expected_hash) return false;
    words.assign(h.stripes, 0);
    for (std::uint64_t sidx = 0; sidx < h.stripes; ++sidx)
        if (!get_u64(is, words[sidx])) return false;
    return true;
}

}  // namespace

std::uint64_t repair_shard(const LrcCode& code, const std::filesystem::path& dir,
                           std::uint64_t pos) {
    if (pos >= code.n()) throw std::out_of_range("repair_shard: position");
    const std::size_t g = code.group_of(pos);
    const std::uint64_t expected_hash = hash_code_file(code);

    ShardHeader href;
    std::vector<std::uint64_t> acc;
    std::uint64_t reads = 0;
    bool first = true;
    for (std::uint64_t c = code.group_offset[g]; c < code.group_offset[g + 1]; ++c) {
        if (c == pos) continue;
        ShardHeader h;
        std::vector<std::uint64_t> words;
        if (!load_shard(code, expected_hash, dir, c, h, words))
            throw std::runtime_error("repair_shard: group member " + std::to_string(c) +
                                     " unavailable");
        if (first) {
            href = h;
            acc.assign(words.begin(), words.end());
            first = false;
        } else {
            for (std::size_t i = 0; i < acc.size(); ++i) acc[i] ^= words[i];
        }
        ++reads;
    }
    if (first) throw std::runtime_error("repair_shard: repair group is empty");

    href.position = pos;
    std::ofstream os(shard_path(dir, pos), std::ios::binary | std::ios::trunc);
    if (!os) throw std::runtime_error("repair_shard: cannot write shard");
    write_header(os, href);
    for (std::uint64_t w : acc) put_u64(os, w);
    return reads;
}

std::vector<std::uint8_t> decode_from_shards(const LrcCode& code, const SystematicCode& sc,
                                             const std::filesystem::path& dir) {
    const std::uint64_t n = code.n();
    const std::uint64_t k = std::uint64_t(code.dimension());

    std::vector<std::vector<std::uint64_t>> plane(n);
    std::vector<std::uint8_t> present(n, 0);
    const std::uint64_t expected_hash = hash_code_file(code);
    ShardHeader meta{};
    bool have_meta = false;
    for (std::uint64_t pos = 0; pos < n; ++pos) {
        ShardHeader h;
        if (load_shard(code, expected_hash, dir, pos, h, plane[pos])) {
            present[pos] = 1;
            if (!have_meta) {
                meta = h;
                have_meta = true;
            } else if (h.stripes != meta.stripes || h.payload_len != meta.payload_len) {
                throw std::runtime_error("decode: inconsistent shard headers");
            }
        }
    }
    if (!have_meta) throw std::runtime_error("decode: no readable shards");

    StripeWord stripe = make_stripe(code);
    std::vector<std::uint8_t> payload(meta.payload_len, 0);
    for (std::uint64_t sidx = 0; sidx < meta.stripes; ++sidx) {
        for (std::uint64_t pos = 0; pos < n; ++pos) {
            stripe.symbols[pos] = present[pos] ? plane[pos][sidx] : 0;
            stripe.erased[pos] = present[pos] ? 0 : 1;
        }
        erasure_decode(code, stripe);
        for (std::uint64_t i = 0; i < k; ++i) {
            const std::uint64_t w = stripe.symbols[sc.info_positions[i]];
            const std::uint64_t base = sidx * 8 * k + 8 * i;
            for (unsigned byte = 0; byte < 8; ++byte) {
                const std::uint64_t idx = base + byte;
                if (idx < payload.size()) payload[idx] = std::uint8_t((w >> (8 * byte)) & 0xff);
            }
        }
    }
    return payload;
}

}  // namespace lrc
