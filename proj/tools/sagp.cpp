// sagp: canonical longest single-arm-gapped palindromes from the command line.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "sagp/generate.hpp"
#include "sagp/kernels.hpp"
#include "sagp/oracle.hpp"
#include "sagp/pipeline.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_all(const std::string& path) {
    if (path.empty() || path == "-") {
        return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

sagp::InputFormat input_format(const std::string& name) {
    if (name == "bytes") return sagp::InputFormat::Bytes;
    if (name == "integers") return sagp::InputFormat::Integers;
    return sagp::InputFormat::Auto;
}

sagp::Text load_text(const std::string& path, const std::string& format) {
    try {
        return sagp::parse_input(read_all(path), input_format(format));
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

std::vector<sagp::Backend> parse_backends(const std::vector<std::string>& names) {
    std::vector<sagp::Backend> out;
    for (const auto& name : names) {
        if (name == "all") {
            const auto& all = sagp::all_backends();
            out.insert(out.end(), all.begin(), all.end());
            continue;
        }
        auto b = sagp::parse_backend(name);
        if (!b) throw InputError("unknown backend '" + name + "'");
        out.push_back(*b);
    }
    return out;
}

void write_tsv(const sagp::SagpReport& report, std::FILE* out) {
    for (const auto& s : report.sagps) {
        std::fprintf(out, "%d\t%d\t%d\t%d\t%d\n", s.pivot, static_cast<int>(s.kind), s.w_len, s.gap_len,
                     s.u_len);
    }
}

void write_json(const sagp::SagpReport& report, std::FILE* out) {
    nlohmann::json doc;
    doc["n"] = report.n;
    doc["occ1"] = report.occ1;
    doc["occ2"] = report.occ2;
    auto& list = doc["sagps"] = nlohmann::json::array();
    for (const auto& s : report.sagps) {
        list.push_back({{"pivot", s.pivot},
                        {"type", static_cast<int>(s.kind)},
                        {"w_len", s.w_len},
                        {"gap_len", s.gap_len},
                        {"u_len", s.u_len}});
    }
    std::fprintf(out, "%s\n", doc.dump().c_str());
}

std::string describe(const sagp::Sagp& s) {
    return "(" + std::to_string(s.pivot) + "," + std::to_string(s.w_len) + "," + std::to_string(s.gap_len) +
           "," + std::to_string(s.u_len) + ") type " + std::to_string(static_cast<int>(s.kind));
}

// Symmetric difference of two canonical lists, written to stderr.
void report_diff(std::string_view name, const sagp::SagpReport& want, const sagp::SagpReport& got) {
    std::vector<sagp::Sagp> missing;
    std::vector<sagp::Sagp> extra;
    std::set_difference(want.sagps.begin(), want.sagps.end(), got.sagps.begin(), got.sagps.end(),
                        std::back_inserter(missing), sagp::CanonicalLess{});
    std::set_difference(got.sagps.begin(), got.sagps.end(), want.sagps.begin(), want.sagps.end(),
                        std::back_inserter(extra), sagp::CanonicalLess{});
    std::cerr << name << ": mismatch against oracle\n";
    for (const auto& s : missing) std::cerr << "  missing " << describe(s) << "\n";
    for (const auto& s : extra) std::cerr << "  extra   " << describe(s) << "\n";
    for (std::size_t i = 1; i < want.types.size() && i < got.types.size(); ++i) {
        if (want.types[i] != got.types[i]) {
            std::cerr << "  pivot " << i << " typed " << static_cast<int>(got.types[i]) << ", expected "
                      << static_cast<int>(want.types[i]) << "\n";
        }
    }
    if (want.occ1 != got.occ1 || want.occ2 != got.occ2) {
        std::cerr << "  occ1/occ2 " << got.occ1 << "/" << got.occ2 << ", expected " << want.occ1 << "/"
                  << want.occ2 << "\n";
    }
}

struct BenchRow {
    std::size_t backend;
    std::size_t length_index;
    std::size_t run;
    std::uint64_t seed;
    double millis;
    std::size_t occ1;
    std::optional<double> per_pivot;
    std::optional<double> per_output;
};

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

std::string fmt_opt(const std::optional<double>& v) { return v ? fmt_double(*v) : std::string(); }

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Canonical longest single-arm-gapped palindromes"};
    app.require_subcommand(1);

    std::string simd;
    app.add_option("--simd", simd, "Force a kernel instruction set")->check(CLI::IsMember({"scalar", "avx2"}));

    // find
    auto* find = app.add_subcommand("find", "Report every canonical longest SAGP");
    std::string find_backend = "stree";
    std::string find_format = "tsv";
    std::string find_input_format = "auto";
    std::string find_file;
    find->add_option("--backend,-b", find_backend, "Type-1 backend");
    find->add_option("--format,-f", find_format, "Output format")->check(CLI::IsMember({"tsv", "json"}));
    find->add_option("--input-format", find_input_format, "Input interpretation")
        ->check(CLI::IsMember({"auto", "bytes", "integers"}));
    find->add_option("file", find_file, "Input file (stdin when omitted)");

    // gen
    auto* gen = app.add_subcommand("gen", "Print a random string");
    std::size_t gen_length = 0;
    std::uint64_t gen_sigma = 0;
    std::uint64_t gen_seed = 0;
    gen->add_option("--length,-n", gen_length)->required();
    gen->add_option("--sigma,-s", gen_sigma)->required();
    gen->add_option("--seed", gen_seed);

    // bench
    auto* bench = app.add_subcommand("bench", "Time type-1 backends on random strings (CSV)");
    std::vector<std::size_t> bench_lengths{10000, 50000, 100000};
    std::uint64_t bench_sigma = 10;
    std::size_t bench_repeats = 10;
    std::uint64_t bench_seed = 1;
    std::vector<std::string> bench_backends{"all"};
    bench->add_option("--lengths", bench_lengths)->delimiter(',');
    bench->add_option("--sigma", bench_sigma);
    bench->add_option("--repeats", bench_repeats)->check(CLI::PositiveNumber);
    bench->add_option("--seed", bench_seed, "Seed of the first run; run r uses seed + r");
    bench->add_option("--backends", bench_backends)->delimiter(',');

    // verify
    auto* verify = app.add_subcommand("verify", "Cross-check every backend against the brute-force oracle");
    sagp::Index verify_max_n = sagp::oracle::kDefaultMaxN;
    std::string verify_input_format = "auto";
    std::string verify_file;
    verify->add_option("--max-oracle-n", verify_max_n);
    verify->add_option("--input-format", verify_input_format)->check(CLI::IsMember({"auto", "bytes", "integers"}));
    verify->add_option("file", verify_file);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (simd == "scalar") sagp::kernels::select_isa(sagp::kernels::Isa::Scalar);
        if (simd == "avx2") sagp::kernels::select_isa(sagp::kernels::Isa::Avx2);

        if (*find) {
            auto backend = sagp::parse_backend(find_backend);
            if (!backend) throw InputError("unknown backend '" + find_backend + "'");
            const auto text = load_text(find_file, find_input_format);
            const auto report = sagp::compute_sagps(text, *backend);
            if (find_format == "json") {
                write_json(report, stdout);
            } else {
                write_tsv(report, stdout);
            }
            return kExitOk;
        }

        if (*gen) {
            if (gen_sigma == 0) throw InputError("--sigma must be at least 1");
            const auto symbols = sagp::random_symbols(gen_length, gen_sigma, gen_seed);
            std::printf("%s\n", sagp::render_symbols(symbols, gen_sigma).c_str());
            return kExitOk;
        }

        if (*bench) {
            if (bench_sigma == 0) throw InputError("--sigma must be at least 1");
            const auto backends = parse_backends(bench_backends);
            std::vector<BenchRow> rows;
            for (std::size_t li = 0; li < bench_lengths.size(); ++li) {
                for (std::size_t run = 0; run < bench_repeats; ++run) {
                    const std::uint64_t seed = bench_seed + run;
                    const auto text = sagp::random_text(bench_lengths[li], bench_sigma, seed);
                    for (std::size_t bi = 0; bi < backends.size(); ++bi) {
                        const auto start = std::chrono::steady_clock::now();
                        const auto result = sagp::compute_type1(text, backends[bi]);
                        const auto stop = std::chrono::steady_clock::now();
                        BenchRow row{bi, li, run, seed,
                                     std::chrono::duration<double, std::milli>(stop - start).count(),
                                     result.sagps.size(), std::nullopt, std::nullopt};
                        if (result.traversal) {
                            row.per_pivot = result.traversal->entries_per_pivot();
                            row.per_output = result.traversal->entries_per_output();
                        }
                        rows.push_back(row);
                    }
                }
            }
            std::sort(rows.begin(), rows.end(), [](const BenchRow& a, const BenchRow& b) {
                return std::tie(a.backend, a.length_index, a.run) < std::tie(b.backend, b.length_index, b.run);
            });
            std::printf("backend,n,sigma,seed,run,millis,occ1,entries_per_pivot,entries_per_output\n");
            for (std::size_t x = 0; x < rows.size();) {
                std::size_t y = x;
                double millis = 0, occ1 = 0, per_pivot = 0, per_output = 0;
                bool metrics = false;
                for (; y < rows.size() && rows[y].backend == rows[x].backend &&
                       rows[y].length_index == rows[x].length_index;
                     ++y) {
                    const auto& r = rows[y];
                    std::printf("%s,%zu,%llu,%llu,%zu,%s,%zu,%s,%s\n",
                                std::string(sagp::backend_name(backends[r.backend])).c_str(),
                                bench_lengths[r.length_index], static_cast<unsigned long long>(bench_sigma),
                                static_cast<unsigned long long>(r.seed), r.run, fmt_double(r.millis).c_str(),
                                r.occ1, fmt_opt(r.per_pivot).c_str(), fmt_opt(r.per_output).c_str());
                    millis += r.millis;
                    occ1 += static_cast<double>(r.occ1);
                    if (r.per_pivot) {
                        metrics = true;
                        per_pivot += *r.per_pivot;
                        per_output += *r.per_output;
                    }
                }
                const double k = static_cast<double>(y - x);
                std::printf("%s,%zu,%llu,,mean,%s,%s,%s,%s\n",
                            std::string(sagp::backend_name(backends[rows[x].backend])).c_str(),
                            bench_lengths[rows[x].length_index], static_cast<unsigned long long>(bench_sigma),
                            fmt_double(millis / k).c_str(), fmt_double(occ1 / k).c_str(),
                            metrics ? fmt_double(per_pivot / k).c_str() : "",
                            metrics ? fmt_double(per_output / k).c_str() : "");
                x = y;
            }
            return kExitOk;
        }

        if (*verify) {
            const auto text = load_text(verify_file, verify_input_format);
            if (text.size() > verify_max_n) {
                throw InputError("input length " + std::to_string(text.size()) + " exceeds --max-oracle-n " +
                                 std::to_string(verify_max_n));
            }
            const auto want = sagp::oracle::brute_force_sagps(text, verify_max_n);
            bool ok = true;
            for (auto backend : sagp::all_backends()) {
                const auto got = sagp::compute_sagps(text, backend);
                if (got != want) {
                    ok = false;
                    report_diff(sagp::backend_name(backend), want, got);
                }
            }
            return ok ? kExitOk : kExitMismatch;
        }
    } catch (const InputError& e) {
        std::cerr << "sagp: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "sagp: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitOk;
}
