// powdiag command-line front end. Links only the C API.

#include "powdiag/powdiag.h"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace {

constexpr int kExitUsage = 2;

struct RunConfig {
    std::uint32_t p = 2, q = 3;
    std::uint32_t k = 2, l = 2, s = 2, s_max = 3, m = 0;
    std::uint32_t max_exp = 40, max_terms = 4, cap = 16;
    std::string mode = "side-subsum-free";
    std::string format = "json";
    unsigned threads = 0;
    std::uint64_t mem_cap = 100'000'000;
    std::string out;
    std::string u = "0", t = "0", g = "1";
    std::vector<std::string> seq, a, b;
    std::string seq_file;
    std::vector<std::uint32_t> bounds;
};

using Context = std::unique_ptr<pdg_context, decltype(&pdg_context_free)>;
using Document = std::unique_ptr<pdg_document, decltype(&pdg_document_free)>;

pdg_mode mode_of(const std::string& name) {
    if (name == "unrestricted") return PDG_MODE_UNRESTRICTED;
    if (name == "fully-subsum-free" || name == "fully_subsum_free") return PDG_MODE_FULLY_SUBSUM_FREE;
    return PDG_MODE_SIDE_SUBSUM_FREE;
}

std::vector<std::string> read_sequence_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("--seq-file", "cannot open " + path);
    std::vector<std::string> out;
    for (std::string line; std::getline(in, line);) {
        const auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        const auto e = line.find_last_not_of(" \t\r");
        out.push_back(line.substr(b, e - b + 1));
    }
    return out;
}

std::vector<const char*> c_strings(const std::vector<std::string>& v) {
    std::vector<const char*> out;
    for (const auto& s : v) out.push_back(s.c_str());
    return out;
}

int emit(pdg_context* ctx, pdg_status status, pdg_document* raw, const RunConfig& cfg) {
    Document doc(raw, &pdg_document_free);
    if (status != PDG_OK) {
        std::cerr << "error: " << pdg_context_last_error(ctx) << " (" << pdg_status_string(status) << ")\n";
        return static_cast<int>(status);
    }
    if (cfg.out.empty()) {
        std::fwrite(pdg_document_text(doc.get()), 1, pdg_document_size(doc.get()), stdout);
        return 0;
    }
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot write " << cfg.out << "\n";
        return 1;
    }
    f.write(pdg_document_text(doc.get()), static_cast<std::streamsize>(pdg_document_size(doc.get())));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    CLI::App app{"Two-prime signed power-sum equations, weight functions and duality witnesses"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(pdg_version()));

    const auto positive = CLI::Range(1u, 1000000u);
    const auto exponent = CLI::Range(0u, 100000u);

    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--threads", cfg.threads, "Worker threads (0: hardware concurrency)")->check(CLI::Range(0u, 1024u));
        sub->add_option("--mem-cap", cfg.mem_cap, "Maximum stored partial sums")->check(CLI::Range(std::uint64_t{1}, UINT64_MAX));
        sub->add_option("--out", cfg.out, "Write output to FILE instead of stdout");
    };
    auto primes = [&](CLI::App* sub, bool with_q) {
        sub->add_option("--p", cfg.p, "Prime p")->capture_default_str();
        if (with_q) sub->add_option("--q", cfg.q, "Prime q")->capture_default_str();
    };
    auto max_exp = [&](CLI::App* sub) {
        sub->add_option("--max-exp", cfg.max_exp, "Largest exponent searched")->check(exponent)->capture_default_str();
    };
    auto kl = [&](CLI::App* sub) {
        sub->add_option("--k", cfg.k, "Max p-side terms")->check(positive)->capture_default_str();
        sub->add_option("--l", cfg.l, "Max q-side terms")->check(positive)->capture_default_str();
    };
    auto mode = [&](CLI::App* sub) {
        sub->add_option("--mode", cfg.mode, "Subsum regime")
            ->check(CLI::IsMember({"unrestricted", "side-subsum-free", "fully-subsum-free", "side_subsum_free",
                                   "fully_subsum_free"}))
            ->capture_default_str();
    };

    std::map<std::string, std::function<pdg_status(pdg_context*, pdg_document**)>> dispatch;
    auto command = [&](const std::string& name, const std::string& help,
                       std::function<pdg_status(pdg_context*, pdg_document**)> fn) {
        auto* sub = app.add_subcommand(name, help);
        common(sub);
        dispatch[name] = std::move(fn);
        return sub;
    };

    {
        auto* sub = command("solve", "Enumerate joint solutions x_1+..+x_k = y_1+..+y_l",
                            [&](pdg_context* c, pdg_document** d) {
                                return pdg_solve(c, cfg.p, cfg.q, cfg.k, cfg.l, cfg.max_exp, mode_of(cfg.mode), d);
                            });
        primes(sub, true), kl(sub), max_exp(sub), mode(sub);
    }
    {
        auto* sub = command("fset", "p-powers F(p,q,k,l) of side-subsum-free solutions",
                            [&](pdg_context* c, pdg_document** d) {
                                return pdg_fset(c, cfg.p, cfg.q, cfg.k, cfg.l, cfg.max_exp, d);
                            });
        primes(sub, true), kl(sub), max_exp(sub);
    }
    {
        auto* sub = command("fcum", "Cumulative F(p,q,s) = union of F(p,q,k,l) over k,l <= s",
                            [&](pdg_context* c, pdg_document** d) { return pdg_fcum(c, cfg.p, cfg.q, cfg.s, cfg.max_exp, d); });
        primes(sub, true), max_exp(sub);
        sub->add_option("--s", cfg.s, "Term bound s")->check(positive)->capture_default_str();
    }
    {
        auto* sub = command("admissible", "Admissible sums with zeros and vanishing subsums allowed",
                            [&](pdg_context* c, pdg_document** d) {
                                return pdg_admissible(c, cfg.p, cfg.q, cfg.k, cfg.l, cfg.max_exp, d);
                            });
        primes(sub, true), kl(sub), max_exp(sub);
    }
    {
        auto* sub = command("delta", "Weight table delta(p^n) = 1/min{s : p^n <= max F(p,q,s)}",
                            [&](pdg_context* c, pdg_document** d) {
                                return pdg_delta(c, cfg.p, cfg.q, cfg.s_max, cfg.max_exp, d);
                            });
        primes(sub, true), max_exp(sub);
        sub->add_option("--s-max", cfg.s_max, "Largest s")->check(positive)->capture_default_str();
    }
    {
        auto* sub = command("norm", "Cap-restricted upper bound on the delta-norm of u",
                            [&](pdg_context* c, pdg_document** d) {
                                return pdg_norm(c, cfg.p, cfg.q, cfg.s_max, cfg.max_exp, cfg.u.c_str(), cfg.max_terms, d);
                            });
        primes(sub, true), max_exp(sub);
        sub->add_option("--s-max", cfg.s_max, "Largest s for the weight table")->check(positive)->capture_default_str();
        sub->add_option("--u", cfg.u, "Integer u")->required();
        sub->add_option("--max-terms", cfg.max_terms, "Max terms per representation")->check(positive)->capture_default_str();
    }
    {
        auto* sub = command("diag", "Diagonal discreteness certificate",
                            [&](pdg_context* c, pdg_document** d) { return pdg_diag(c, cfg.p, cfg.q, cfg.s, cfg.max_exp, d); });
        primes(sub, true), max_exp(sub);
        sub->add_option("--s", cfg.s, "Term bound s")->check(positive)->capture_default_str();
    }
    {
        auto* sub = command("char-test", "Is t a character of Z{p^n} (t in Z[1/p]/Z)?",
                            [&](pdg_context* c, pdg_document** d) { return pdg_char_test(c, cfg.t.c_str(), cfg.p, d); });
        primes(sub, false);
        sub->add_option("--t", cfg.t, "Torus element a/b")->required();
    }
    {
        auto* sub = command("annihilator", "Characters of the product vanishing on the diagonal",
                            [&](pdg_context* c, pdg_document** d) { return pdg_annihilator(c, cfg.p, cfg.q, d); });
        primes(sub, true);
    }
    {
        auto* sub = command("diag-extend", "Does the diagonal character t extend to the product?",
                            [&](pdg_context* c, pdg_document** d) {
                                return pdg_diag_extend(c, cfg.t.c_str(), cfg.p, cfg.q, d);
                            });
        primes(sub, true);
        sub->add_option("--t", cfg.t, "Torus element a/b")->required();
    }
    {
        auto* sub = command("witness-x1", "Point off the diagonal that no character separates",
                            [&](pdg_context* c, pdg_document** d) { return pdg_witness_x1(c, cfg.p, cfg.q, d); });
        primes(sub, true);
    }
    {
        auto* sub = command("witness-x2", "Character of the diagonal with no extension",
                            [&](pdg_context* c, pdg_document** d) { return pdg_witness_x2(c, cfg.p, cfg.q, d); });
        primes(sub, true);
    }
    {
        auto* sub = command("separate", "Character separating g from p^m Z",
                            [&](pdg_context* c, pdg_document** d) { return pdg_separate(c, cfg.p, cfg.m, cfg.g.c_str(), d); });
        primes(sub, false);
        sub->add_option("--m", cfg.m, "Subgroup exponent m")->check(exponent)->capture_default_str();
        sub->add_option("--g", cfg.g, "Integer g outside p^m Z")->required();
    }
    {
        auto* sub = command("extend", "Extend a character of p^m Z given by its value t at p^m",
                            [&](pdg_context* c, pdg_document** d) { return pdg_extend(c, cfg.p, cfg.m, cfg.t.c_str(), d); });
        primes(sub, false);
        sub->add_option("--m", cfg.m, "Subgroup exponent m")->check(exponent)->capture_default_str();
        sub->add_option("--t", cfg.t, "Torus element a/b")->required();
    }
    {
        auto* sub = command("minterms", "Fewest signed powers of p summing to u",
                            [&](pdg_context* c, pdg_document** d) { return pdg_minterms(c, cfg.u.c_str(), cfg.p, cfg.cap, d); });
        primes(sub, false);
        sub->add_option("--u", cfg.u, "Integer u")->required();
        sub->add_option("--cap", cfg.cap, "Largest term count tried")->check(positive)->capture_default_str();
    }
    {
        auto* sub = command("converge", "Bounded-term tail certificate for a sequence",
                            [&](pdg_context* c, pdg_document** d) {
                                if (!cfg.seq_file.empty()) cfg.seq = read_sequence_file(cfg.seq_file);
                                auto items = c_strings(cfg.seq);
                                return pdg_converge(c, items.data(), items.size(), cfg.p, cfg.k, cfg.max_exp, d);
                            });
        primes(sub, false), max_exp(sub);
        sub->add_option("--k", cfg.k, "Max terms per element")->check(positive)->capture_default_str();
        auto* inline_seq = sub->add_option("--seq", cfg.seq, "Sequence elements")->delimiter(',');
        sub->add_option("--seq-file", cfg.seq_file, "Newline-delimited integer file")->excludes(inline_seq);
    }
    {
        auto* sub = command("interleave", "c_2n = (a_n, 0), c_2n+1 = (0, b_n)",
                            [&](pdg_context* c, pdg_document** d) {
                                auto a = c_strings(cfg.a), b = c_strings(cfg.b);
                                return pdg_interleave(c, a.data(), a.size(), b.data(), b.size(), d);
                            });
        sub->add_option("--a", cfg.a, "First sequence")->delimiter(',');
        sub->add_option("--b", cfg.b, "Second sequence")->delimiter(',');
    }
    {
        auto* sub = command("saturate", "Solution counts over ascending exponent bounds",
                            [&](pdg_context* c, pdg_document** d) {
                                return pdg_saturate(c, cfg.p, cfg.q, cfg.k, cfg.l, mode_of(cfg.mode), cfg.bounds.data(),
                                                    cfg.bounds.size(), d);
                            });
        primes(sub, true), kl(sub), mode(sub);
        sub->add_option("--bounds", cfg.bounds, "Ascending exponent bounds")->delimiter(',')->required()->check(exponent);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        if (argc > 1 && argv[1][0] != '-' && !dispatch.count(argv[1])) {
            std::cerr << "unknown command '" << argv[1] << "'\n\n" << app.help();
        } else {
            app.exit(e);
        }
        return kExitUsage;
    }

    Context ctx(pdg_context_new(), &pdg_context_free);
    if (!ctx) return 1;
    pdg_context_set_threads(ctx.get(), cfg.threads);
    pdg_context_set_memory_cap(ctx.get(), cfg.mem_cap);
    pdg_context_set_format(ctx.get(), cfg.format == "csv" ? PDG_FORMAT_CSV : PDG_FORMAT_JSON);

    for (auto* sub : app.get_subcommands()) {
        pdg_document* doc = nullptr;
        pdg_status st;
        try {
            st = dispatch.at(sub->get_name())(ctx.get(), &doc);
        } catch (const CLI::Error& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kExitUsage;
        }
        return emit(ctx.get(), st, doc, cfg);
    }
    return kExitUsage;
}
