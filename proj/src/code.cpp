#include "lrc/code.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace lrc {

std::size_t LrcCode::group_of(std::uint64_t col) const {
    auto it = std::upper_bound(group_offset.begin(), group_offset.end(), col);
    if (it == group_offset.begin() || col >= group_offset.back())
        throw std::out_of_range("group_of: column outside code");
    return std::size_t(it - group_offset.begin()) - 1;
}

LrcParams expected_params(unsigned b, unsigned s, unsigned m, SpreadKind kind,
                          std::uint64_t ell_take) {
    if (b < 1) throw std::invalid_argument("expected_params: b >= 1 required");
    if (s >= 2 * b) throw std::invalid_argument("expected_params: s < 2b required");
    const unsigned t = 2 * b - s;
    if (t > m) throw std::invalid_argument("expected_params: 2b - s must not exceed m");
    if (m > 62) throw std::invalid_argument("expected_params: m out of range");

    const bool divides = (m % t == 0);
    if (kind == SpreadKind::full && !divides)
        throw std::invalid_argument("expected_params: full spread needs (2b-s) | m");
    if (kind == SpreadKind::partial && divides)
        throw std::invalid_argument("expected_params: partial spread needs (2b-s) not dividing m");

    LrcParams p;
    p.b = b;
    p.s = s;
    p.t = t;
    p.m = m;
    p.kind = kind;
    p.z = divides ? 0 : m % t;
    p.r = std::uint64_t(1) << b;
    p.ell = (kind == SpreadKind::full) ? full_spread_size(m, t) : partial_spread_size(m, t);
    if (ell_take) {
        if (ell_take > p.ell)
            throw std::invalid_argument("expected_params: ell exceeds the spread size");
        p.ell = ell_take;
    }
    p.n = (p.r + 1) * p.ell;
    p.k = std::int64_t(p.n) - std::int64_t(p.s) - std::int64_t(p.ell) - std::int64_t(p.m);
    return p;
}

LrcCode construct(unsigned b, unsigned s, unsigned m, SpreadKind kind, const DesiredMatrix& a,
                  std::uint64_t ell_take) {
    LrcParams p = expected_params(b, s, m, kind, ell_take);

    if (a.s != s || a.t != p.t || a.r != p.r || a.a.rows() != std::size_t(2) * b ||
        a.a.cols() != p.r)
        throw std::invalid_argument("construct: desired matrix shape mismatch");
    const DesiredReport rep = verify_desired(a.a, a.s, a.t);
    if (!rep.pass)
        throw std::invalid_argument("construct: desired matrix failed verification: " +
                                    rep.violation);

    LrcCode code;
    code.params = p;
    if (m < 4 * b)
        code.warnings.push_back(
            "m < 4b: d >= 6 still certified, the k-optimality guarantee needs m >= 4b");
    if (kind == SpreadKind::partial && p.z > b)
        code.warnings.push_back("z = m mod (2b-s) exceeds b: outside the k-optimality range");
    if (kind == SpreadKind::partial && p.z == b)
        code.warnings.push_back("z = b accepted (z <= b reading of the range constraint)");

    SpreadFamily fam = (kind == SpreadKind::full) ? full_spread(m, p.t) : partial_spread(m, p.t);
    if (ell_take) fam.members.resize(ell_take);

    const std::size_t ng = fam.members.size();
    const std::size_t low_rows = std::size_t(s) + m;
    code.h = BitMatrix(ng + low_rows, p.n);
    code.group_offset.resize(ng + 1);

    for (std::size_t g = 0; g < ng; ++g) {
        const std::uint64_t off = std::uint64_t(g) * (p.r + 1);
        code.group_offset[g] = off;

        for (std::uint64_t c = 0; c <= p.r; ++c) code.h.set(g, off + c, true);

        // block [0 | G_{M_i} A]; the zero column keeps the group's first
        // position out of the lower constraints
        const BitMatrix block = matmul(assemble_gm(s, fam.members[g]).matrix, a.a);
        for (std::size_t row = 0; row < low_rows; ++row)
            for (std::uint64_t c = 0; c < p.r; ++c)
                if (block.get(row, c)) code.h.set(ng + row, off + 1 + c, true);
    }
    code.group_offset[ng] = p.n;

    code.rank_h = rank(code.h);
    if (code.rank_h != ng + low_rows)
        code.warnings.push_back("rank deficiency: rank(H) = " + std::to_string(code.rank_h) +
                                " < " + std::to_string(ng + low_rows));
    if (code.dimension() != p.k)
        code.warnings.push_back("dimension " + std::to_string(code.dimension()) +
                                " differs from claimed k = " + std::to_string(p.k));
    return code;
}

LrcCode shorten_groups(const LrcCode& code, std::uint64_t a) {
    const std::size_t ng = code.groups();
    if (a < 1 || a >= ng) throw std::invalid_argument("shorten_groups: need 1 <= a < ell");

    const std::uint64_t cut = code.group_offset[a];
    const std::uint64_t n2 = code.n() - cut;
    const std::size_t low_rows = code.h.rows() - ng;

    LrcCode out;
    out.params = code.params;
    out.params.ell = ng - a;
    out.params.n = n2;
    out.h = BitMatrix(ng - a + low_rows, n2);
    for (std::size_t r2 = 0; r2 < ng - a; ++r2)
        for (std::uint64_t c = cut; c < code.n(); ++c)
            if (code.h.get(r2 + a, c)) out.h.set(r2, c - cut, true);
    for (std::size_t r2 = 0; r2 < low_rows; ++r2)
        for (std::uint64_t c = cut; c < code.n(); ++c)
            if (code.h.get(ng + r2, c)) out.h.set(ng - a + r2, c - cut, true);

    out.group_offset.assign(code.group_offset.begin() + a, code.group_offset.end());
    for (auto& off : out.group_offset) off -= cut;

    out.rank_h = rank(out.h);
    out.params.k = out.dimension();
    return out;
}

LrcCode shorten_columns(unsigned b, unsigned s, unsigned m, SpreadKind kind,
                        const DesiredMatrix& a, std::uint64_t tau, std::uint64_t ell_take) {
    LrcCode base = construct(b, s, m, kind, a, ell_take);
    if (tau == 0) return base;
    const std::uint64_t ell = base.params.ell;
    if (tau > ell) throw std::invalid_argument("shorten_columns: need tau <= ell");

    // pick the first removable desired-matrix column whose deletion keeps the
    // reduced matrix a valid column pattern
    std::uint64_t drop = a.r;
    std::vector<std::uint64_t> tried;
    BitMatrix reduced;
    for (std::uint64_t cand = 0; cand < a.r; ++cand) {
        BitMatrix red(a.a.rows(), a.r - 1);
        for (std::size_t row = 0; row < a.a.rows(); ++row) {
            std::uint64_t cc = 0;
            for (std::uint64_t c = 0; c < a.r; ++c) {
                if (c == cand) continue;
                if (a.a.get(row, c)) red.set(row, cc, true);
                ++cc;
            }
        }
        if (verify_desired(red, a.s, a.t).pass) {
            drop = cand;
            reduced = std::move(red);
            break;
        }
        tried.push_back(cand);
    }
    if (drop == a.r) {
        std::string msg = "shorten_columns: no removable column; tried";
        for (std::uint64_t c : tried) msg += " " + std::to_string(c);
        throw std::runtime_error(msg);
    }

    SpreadFamily fam =
        (kind == SpreadKind::full) ? full_spread(m, base.params.t) : partial_spread(m, base.params.t);
    if (ell_take) fam.members.resize(ell_take);

    const std::uint64_t r = base.params.r;
    const std::uint64_t n2 = base.params.n - tau;
    const std::size_t low_rows = std::size_t(s) + m;

    LrcCode out;
    out.params = base.params;
    out.params.n = n2;
    out.params.k = base.params.k - std::int64_t(tau);
    out.warnings = base.warnings;
    out.h = BitMatrix(ell + low_rows, n2);
    out.group_offset.resize(ell + 1);

    std::uint64_t off = 0;
    for (std::uint64_t g = 0; g < ell; ++g) {
        out.group_offset[g] = off;
        const bool narrowed = g < tau;
        const BitMatrix& pattern = narrowed ? reduced : a.a;
        const std::uint64_t width = narrowed ? r : r + 1;

        for (std::uint64_t c = 0; c < width; ++c) out.h.set(g, off + c, true);

        const BitMatrix block = matmul(assemble_gm(s, fam.members[g]).matrix, pattern);
        for (std::size_t row = 0; row < low_rows; ++row)
            for (std::size_t c = 0; c < block.cols(); ++c)
                if (block.get(row, c)) out.h.set(ell + row, off + 1 + c, true);
        off += width;
    }
    out.group_offset[ell] = off;

    out.rank_h = rank(out.h);
    if (out.dimension() != out.params.k)
        out.warnings.push_back("dimension " + std::to_string(out.dimension()) +
                               " differs from claimed k = " + std::to_string(out.params.k));
    return out;
}

void write_code_file(std::ostream& os, const LrcCode& code) {
    const LrcParams& p = code.params;
    os << "b=" << p.b << '\n'
       << "s=" << p.s << '\n'
       << "t=" << p.t << '\n'
       << "m=" << p.m << '\n'
       << "r=" << p.r << '\n'
       << "ell=" << p.ell << '\n'
       << "n=" << code.n() << '\n'
       << "k=" << code.dimension() << '\n'
       << "kind=" << to_string(p.kind) << '\n'
       << "z=" << p.z << '\n'
       << "generatorless=1\n"
       << "---\n";
    write_lrc1(os, code.h);
}

LrcCode read_code_file(std::istream& is) {
    LrcCode code;
    LrcParams& p = code.params;
    std::string line;
    bool seen_sep = false;
    std::int64_t file_k = 0;
    while (std::getline(is, line)) {
        if (line == "---") {
            seen_sep = true;
            break;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw std::runtime_error("code file: bad header line");
        const std::string key = line.substr(0, eq), val = line.substr(eq + 1);
        if (key == "b")
            p.b = unsigned(std::stoul(val));
        else if (key == "s")
            p.s = unsigned(std::stoul(val));
        else if (key == "t")
            p.t = unsigned(std::stoul(val));
        else if (key == "m")
            p.m = unsigned(std::stoul(val));
        else if (key == "r")
            p.r = std::stoull(val);
        else if (key == "ell")
            p.ell = std::stoull(val);
        else if (key == "n")
            p.n = std::stoull(val);
        else if (key == "k")
            file_k = std::stoll(val);
        else if (key == "kind")
            p.kind = (val == "full") ? SpreadKind::full : SpreadKind::partial;
        else if (key == "z")
            p.z = unsigned(std::stoul(val));
        else if (key == "generatorless") {
            // informational
        } else
            throw std::runtime_error("code file: unknown key " + key);
    }
    if (!seen_sep) throw std::runtime_error("code file: missing --- separator");

    code.h = read_lrc1(is);
    if (code.h.cols() != p.n) throw std::runtime_error("code file: n does not match H");

    // group layout from the locality rows: contiguous disjoint supports
    code.group_offset.assign(1, 0);
    std::uint64_t off = 0;
    for (std::uint64_t g = 0; g < p.ell; ++g) {
        const std::size_t w = code.h.row_weight(g);
        if (w == 0) throw std::runtime_error("code file: empty locality row");
        for (std::uint64_t c = off; c < off + w; ++c)
            if (!code.h.get(g, c)) throw std::runtime_error("code file: locality row not contiguous");
        off += w;
        code.group_offset.push_back(off);
    }
    if (off != p.n) throw std::runtime_error("code file: groups do not cover all columns");

    code.rank_h = rank(code.h);
    if (code.dimension() != file_k)
        throw std::runtime_error("code file: stored k does not match rank");
    p.k = file_k;
    return code;
}

}  // namespace lrc
