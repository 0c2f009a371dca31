#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "lrc/certify.hpp"
#include "lrc/codec.hpp"

using namespace lrc;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

LrcCode load_code(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open code file: " + path);
    return read_code_file(is);
}

void save_code(const std::string& path, const LrcCode& code) {
    std::ofstream os(path, std::ios::trunc);
    if (!os) throw std::runtime_error("cannot write code file: " + path);
    write_code_file(os, code);
}

SpreadKind parse_kind(const std::string& s) {
    if (s == "full") return SpreadKind::full;
    if (s == "partial") return SpreadKind::partial;
    throw CLI::ValidationError("--spread must be full or partial");
}

// desired-matrix source shared by construct and shorten
struct MatrixSource {
    bool use_fixture = false;
    std::string desired_file;
    bool use_search = false;
    std::uint64_t seed = 0;
    bool seed_given = false;
    std::uint64_t budget = 10000;

    DesiredMatrix resolve(unsigned b, unsigned s) const {
        if (use_fixture) return fixture(b, s);
        if (!desired_file.empty()) {
            std::ifstream is(desired_file);
            if (!is) throw std::runtime_error("cannot open matrix file: " + desired_file);
            DesiredMatrix d;
            d.s = s;
            d.t = 2 * b - s;
            d.r = std::uint64_t(1) << b;
            d.a = read_lrc1(is);
            const DesiredReport rep = verify_desired(d.a, d.s, d.t);
            if (!rep.pass)
                throw std::runtime_error("matrix file fails verification: " + rep.violation);
            return d;
        }
        if (use_search) {
            const auto found = search_desired(b, s, seed, budget);
            if (!found) throw std::runtime_error("search exhausted its budget");
            return *found;
        }
        throw CLI::ValidationError("need one of --fixture, --desired-file, --search");
    }

    void add_flags(CLI::App* app) {
        app->add_flag("--fixture", use_fixture, "use the stored matrix for (b, s)");
        app->add_option("--desired-file", desired_file, "LRC1 file with the column pattern");
        app->add_flag("--search", use_search, "run the seeded search");
        auto* opt = app->add_option("--seed", seed, "search seed (required with --search)");
        opt->each([this](const std::string&) { seed_given = true; });
        app->add_option("--budget", budget, "search attempt cap")->default_val(10000);
    }

    void validate() const {
        if (use_search && !seed_given)
            throw CLI::ValidationError("--search requires an explicit --seed");
    }
};

std::vector<std::uint64_t> parse_positions(const std::string& csv) {
    std::vector<std::uint64_t> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoull(item));
    return out;
}

void print_params(const LrcCode& code) {
    const LrcParams& p = code.params;
    std::cout << "b=" << p.b << "\ns=" << p.s << "\nt=" << p.t << "\nm=" << p.m
              << "\nr=" << p.r << "\nell=" << code.groups() << "\nn=" << code.n()
              << "\nk=" << code.dimension() << "\nkind=" << to_string(p.kind)
              << "\nz=" << p.z << "\nrank=" << code.rank_h << "\n";
    for (const std::string& w : code.warnings) std::cout << "warning=" << w << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"binary locally repairable code toolkit"};
    app.require_subcommand(0, 1);

    bool show_version = false;
    app.add_flag("--version", show_version, "print fixture table checksums");
    unsigned threads = 1;
    app.add_option("--threads", threads, "worker threads for verification sweeps")
        ->default_val(1);

    // construct
    auto* c_cmd = app.add_subcommand("construct", "build a code and write its file");
    unsigned c_b = 0, c_s = 0, c_m = 0;
    std::string c_spread, c_out;
    std::uint64_t c_ell = 0;
    MatrixSource c_src;
    c_cmd->add_option("--b", c_b, "locality exponent, r = 2^b")->required();
    c_cmd->add_option("--s", c_s, "shared-subspace dimension")->required();
    c_cmd->add_option("--m", c_m, "ambient dimension")->required();
    c_cmd->add_option("--spread", c_spread, "full | partial")->required();
    c_cmd->add_option("--ell", c_ell, "take only the first ell spread members");
    c_src.add_flags(c_cmd);
    c_cmd->add_option("-o,--out", c_out, "output code file")->required();

    // verify
    auto* v_cmd = app.add_subcommand("verify", "run certification checks on a code file");
    std::string v_file;
    bool v_lemma6 = false, v_locality = false, v_rank = false, v_exact = false,
         v_bounds = false;
    v_cmd->add_option("file", v_file, "code file")->required();
    v_cmd->add_flag("--lemma6", v_lemma6, "distance certificate sweep");
    v_cmd->add_flag("--locality", v_locality, "repair-group structure");
    v_cmd->add_flag("--rank", v_rank, "parity-check rank");
    v_cmd->add_flag("--exact-distance", v_exact, "exhaustive distance (k <= 24)");
    v_cmd->add_flag("--bounds", v_bounds, "dimension and distance bounds");

    // bounds
    auto* b_cmd = app.add_subcommand("bounds", "evaluate bounds for given n, k, r");
    std::uint64_t b_n = 0, b_r = 0;
    std::int64_t b_k = 0;
    b_cmd->add_option("--n", b_n)->required();
    b_cmd->add_option("--k", b_k)->required();
    b_cmd->add_option("--r", b_r)->required();

    // desired
    auto* d_cmd = app.add_subcommand("desired", "verify or search column patterns");
    std::string d_verify, d_out;
    unsigned d_b = 0, d_s = 0;
    bool d_search = false;
    std::uint64_t d_seed = 0, d_budget = 10000;
    bool d_seed_given = false;
    d_cmd->add_option("--verify", d_verify, "LRC1 matrix file to verify");
    d_cmd->add_option("--b", d_b, "locality exponent");
    d_cmd->add_option("--s", d_s, "top-block rows");
    d_cmd->add_flag("--search", d_search, "run the seeded search");
    d_cmd->add_option("--seed", d_seed, "search seed")->each([&d_seed_given](const std::string&) {
        d_seed_given = true;
    });
    d_cmd->add_option("--budget", d_budget)->default_val(10000);
    d_cmd->add_option("-o,--out", d_out, "write the found matrix here (LRC1)");

    // spread
    auto* s_cmd = app.add_subcommand("spread", "emit a spread or partial spread");
    unsigned s_m = 0, s_t = 0;
    bool s_check = false;
    s_cmd->add_option("--m", s_m)->required();
    s_cmd->add_option("--t", s_t)->required();
    s_cmd->add_flag("--check", s_check, "verify pairwise intersections before emitting");

    // shorten
    auto* sh_cmd = app.add_subcommand("shorten", "derive a shortened code");
    std::string sh_in, sh_out, sh_spread;
    std::uint64_t sh_groups = 0, sh_tau = 0, sh_ell = 0;
    unsigned sh_b = 0, sh_s = 0, sh_m = 0;
    MatrixSource sh_src;
    sh_cmd->add_option("--in", sh_in, "code file (group shortening)");
    sh_cmd->add_option("--groups", sh_groups, "delete the first a repair groups");
    sh_cmd->add_option("--columns", sh_tau, "narrow tau groups by one column");
    sh_cmd->add_option("--b", sh_b);
    sh_cmd->add_option("--s", sh_s);
    sh_cmd->add_option("--m", sh_m);
    sh_cmd->add_option("--spread", sh_spread, "full | partial");
    sh_cmd->add_option("--ell", sh_ell, "sub-family size");
    sh_src.add_flags(sh_cmd);
    sh_cmd->add_option("-o,--out", sh_out, "output code file")->required();

    // codec
    auto* e_cmd = app.add_subcommand("encode", "split data into shard files");
    std::string e_code, e_in, e_out;
    e_cmd->add_option("--code", e_code)->required();
    e_cmd->add_option("--in", e_in, "input data file")->required();
    e_cmd->add_option("--out", e_out, "shard directory")->required();

    auto* x_cmd = app.add_subcommand("corrupt", "truncate shard files to simulate loss");
    std::string x_dir, x_erase;
    x_cmd->add_option("--dir", x_dir)->required();
    x_cmd->add_option("--erase", x_erase, "comma-separated positions")->required();

    auto* r_cmd = app.add_subcommand("repair", "reconstruct one shard from its group");
    std::string r_code, r_dir;
    std::uint64_t r_pos = 0;
    r_cmd->add_option("--code", r_code)->required();
    r_cmd->add_option("--dir", r_dir)->required();
    r_cmd->add_option("--pos", r_pos)->required();

    auto* o_cmd = app.add_subcommand("decode", "reassemble the original data");
    std::string o_code, o_dir, o_out;
    o_cmd->add_option("--code", o_code)->required();
    o_cmd->add_option("--dir", o_dir)->required();
    o_cmd->add_option("--out", o_out, "output data file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (show_version) {
            std::cout << "lrc 1.0\n";
            for (auto [b, s] : fixture_keys())
                std::cout << "fixture_b" << b << "_s" << s << "=" << std::hex
                          << fixture_checksum(b, s) << std::dec << "\n";
            return kExitOk;
        }

        if (c_cmd->parsed()) {
            c_src.validate();
            const SpreadKind kind = parse_kind(c_spread);
            const DesiredMatrix a = c_src.resolve(c_b, c_s);
            const LrcCode code = construct(c_b, c_s, c_m, kind, a, c_ell);
            save_code(c_out, code);
            print_params(code);
            return kExitOk;
        }

        if (v_cmd->parsed()) {
            const LrcCode code = load_code(v_file);
            bool all_pass = true;
            print_params(code);

            if (v_rank) {
                const bool full =
                    code.rank_h == code.groups() + code.params.s + code.params.m;
                std::cout << "rank_full=" << (full ? "true" : "false") << "\n";
                all_pass &= full;
            }
            if (v_locality) {
                const LocalityReport rep = verify_locality(code);
                std::cout << "locality_pass=" << (rep.pass ? "true" : "false") << "\n";
                if (rep.pass)
                    std::cout << "locality_r=" << rep.r << "\n";
                else
                    std::cout << "locality_detail=" << rep.detail << "\n";
                all_pass &= rep.pass;
            }
            if (v_lemma6) {
                const Lemma6Report rep = check_lemma6(code, threads);
                std::cout << "lemma6_pass=" << (rep.pass ? "true" : "false") << "\n"
                          << "lemma6_tests=" << rep.tests << "\n";
                if (!rep.pass) {
                    std::cout << "lemma6_condition=" << rep.condition << "\n"
                              << "lemma6_blocks=" << rep.blocks[0] << "," << rep.blocks[1]
                              << "\nlemma6_columns=";
                    for (std::size_t i = 0; i < rep.columns.size(); ++i)
                        std::cout << (i ? "," : "") << rep.columns[i];
                    std::cout << "\n";
                }
                all_pass &= rep.pass;
            }
            if (v_exact) {
                const std::uint64_t d = exact_min_distance(code);
                std::cout << "exact_distance=" << d << "\n";
                all_pass &= (d >= 6);
            }
            if (v_bounds) {
                const OptimalityReport rep = optimality_report(code);
                std::cout << "rate_bound_k_max=" << rep.bounds.rate_bound_k_max << "\n"
                          << "singleton_like_d_max=" << rep.bounds.singleton_like_d_max
                          << "\n"
                          << "min_branch="
                          << (rep.bounds.min_branch == MinBranch::log2 ? "log" : "rational")
                          << "\n"
                          << "preconditions_met="
                          << (rep.bounds.preconditions_met ? "true" : "false") << "\n"
                          << "k_optimal=" << (rep.bounds.k_optimal ? "true" : "false")
                          << "\n"
                          << "ell_in_range=" << (rep.ell_in_range ? "true" : "false")
                          << "\n";
                for (const std::string& nte : rep.notes) std::cout << "note=" << nte << "\n";
            }
            return all_pass ? kExitOk : kExitCheckFailed;
        }

        if (b_cmd->parsed()) {
            const BoundReport rep = bound_report(b_n, b_k, b_r);
            std::cout << "n=" << rep.n << "\nk=" << rep.k << "\nr=" << rep.r
                      << "\nsingleton_like_d_max=" << rep.singleton_like_d_max
                      << "\nrate_bound_k_max=" << rep.rate_bound_k_max << "\nmin_branch="
                      << (rep.min_branch == MinBranch::log2 ? "log" : "rational")
                      << "\npreconditions_met=" << (rep.preconditions_met ? "true" : "false")
                      << "\nk_optimal=" << (rep.k_optimal ? "true" : "false")
                      << "\nd_optimal_singleton="
                      << (rep.d_optimal_singleton ? "true" : "false") << "\n";
            return kExitOk;
        }

        if (d_cmd->parsed()) {
            if (!d_verify.empty()) {
                std::ifstream is(d_verify);
                if (!is) throw std::runtime_error("cannot open " + d_verify);
                const BitMatrix a = read_lrc1(is);
                if (a.rows() <= d_s) throw std::runtime_error("s too large for matrix");
                const DesiredReport rep =
                    verify_desired(a, d_s, unsigned(a.rows()) - d_s);
                std::cout << "pass=" << (rep.pass ? "true" : "false") << "\n";
                if (!rep.pass) {
                    std::cout << "violation=" << rep.violation << "\ncolumns=";
                    for (std::size_t i = 0; i < rep.columns.size(); ++i)
                        std::cout << (i ? "," : "") << rep.columns[i];
                    std::cout << "\n";
                }
                return rep.pass ? kExitOk : kExitCheckFailed;
            }
            if (d_search) {
                if (!d_seed_given)
                    throw CLI::ValidationError("--search requires an explicit --seed");
                const auto found = search_desired(d_b, d_s, d_seed, d_budget);
                if (!found) {
                    std::cout << "pass=false\nreason=budget_exhausted\n";
                    return kExitCheckFailed;
                }
                if (!d_out.empty()) {
                    std::ofstream os(d_out, std::ios::trunc);
                    write_lrc1(os, found->a);
                } else {
                    write_lrc1(std::cout, found->a);
                }
                return kExitOk;
            }
            throw CLI::ValidationError("desired: need --verify or --search");
        }

        if (s_cmd->parsed()) {
            const SpreadFamily fam =
                (s_m % s_t == 0) ? full_spread(s_m, s_t) : partial_spread(s_m, s_t);
            if (s_check) {
                const FamilyReport rep = verify_family(fam, threads);
                if (!rep.pass) {
                    std::cout << "check=fail detail=" << rep.detail << "\n";
                    return kExitCheckFailed;
                }
            }
            std::cout << "SPREAD m=" << fam.m << " t=" << fam.t
                      << " kind=" << to_string(fam.kind) << " count=" << fam.members.size()
                      << "\n";
            for (const Subspace& w : fam.members) {
                write_lrc1(std::cout, w.basis);
                std::cout << "\n";
            }
            return kExitOk;
        }

        if (sh_cmd->parsed()) {
            if (sh_groups > 0) {
                if (sh_in.empty())
                    throw CLI::ValidationError("shorten --groups needs --in <code file>");
                const LrcCode code = load_code(sh_in);
                const LrcCode out = shorten_groups(code, sh_groups);
                save_code(sh_out, out);
                print_params(out);
                return kExitOk;
            }
            if (sh_tau > 0) {
                sh_src.validate();
                const SpreadKind kind = parse_kind(sh_spread);
                const DesiredMatrix a = sh_src.resolve(sh_b, sh_s);
                const LrcCode out =
                    shorten_columns(sh_b, sh_s, sh_m, kind, a, sh_tau, sh_ell);
                save_code(sh_out, out);
                print_params(out);
                return kExitOk;
            }
            throw CLI::ValidationError("shorten: need --groups or --columns");
        }

        if (e_cmd->parsed()) {
            const LrcCode code = load_code(e_code);
            const SystematicCode sc = systematic_form(code);
            std::ifstream is(e_in, std::ios::binary);
            if (!is) throw std::runtime_error("cannot open " + e_in);
            std::vector<std::uint8_t> payload((std::istreambuf_iterator<char>(is)),
                                              std::istreambuf_iterator<char>());
            encode_to_shards(code, sc, payload, e_out);
            std::cout << "shards=" << code.n() << "\npayload_bytes=" << payload.size()
                      << "\n";
            return kExitOk;
        }

        if (x_cmd->parsed()) {
            for (std::uint64_t pos : parse_positions(x_erase)) {
                std::ofstream trunc(shard_path(x_dir, pos),
                                    std::ios::binary | std::ios::trunc);
                if (!trunc) throw std::runtime_error("cannot truncate shard");
                std::cout << "erased=" << pos << "\n";
            }
            return kExitOk;
        }

        if (r_cmd->parsed()) {
            const LrcCode code = load_code(r_code);
            const std::uint64_t reads = repair_shard(code, r_dir, r_pos);
            std::cout << "repaired=" << r_pos << "\nsymbols_read=" << reads << "\n";
            return kExitOk;
        }

        if (o_cmd->parsed()) {
            const LrcCode code = load_code(o_code);
            const SystematicCode sc = systematic_form(code);
            const std::vector<std::uint8_t> payload = decode_from_shards(code, sc, o_dir);
            std::ofstream os(o_out, std::ios::binary | std::ios::trunc);
            os.write(reinterpret_cast<const char*>(payload.data()),
                     std::streamsize(payload.size()));
            std::cout << "payload_bytes=" << payload.size() << "\n";
            return kExitOk;
        }

        std::cout << app.help();
        return kExitUsage;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
}
