#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "verlinde/report_io.hpp"
#include "verlinde/sweeps.hpp"

namespace {

using namespace verlinde;

std::vector<long long> parse_int_list(const std::string& s, char sep) {
    std::vector<long long> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) {
        size_t pos = 0;
        long long v = std::stoll(item, &pos);
        if (pos != item.size()) throw std::invalid_argument("bad integer list: " + s);
        out.push_back(v);
    }
    return out;
}

int run_decompose(const std::optional<unsigned>& rank, const std::optional<unsigned>& level,
                  const std::string& theorem2, const std::string& format) {
    DecompositionReport rep;
    std::string query;
    if (!theorem2.empty()) {
        const auto v = parse_int_list(theorem2, ',');
        if (v.size() != 4) throw std::invalid_argument("--theorem2 expects r,d,K,shift");
        if (v[0] <= 0 || v[2] <= 0) throw std::invalid_argument("theorem2 rank and level must be positive");
        rep = theorem2_decompose(static_cast<unsigned>(v[0]), static_cast<long>(v[1]),
                                 static_cast<unsigned>(v[2]), static_cast<int>(v[3]));
        query = "theorem2 r=" + std::to_string(v[0]) + " d=" + std::to_string(v[1]) +
                " K=" + std::to_string(v[2]) + " shift=" + std::to_string(v[3]);
    } else {
        if (!rank || !level) throw std::invalid_argument("decompose requires --rank and --level");
        rep = decompose(*rank, *level);
        query = "decompose rank=" + std::to_string(*rank) + " level=" + std::to_string(*level);
    }
    const OutputRecord rec = make_output_record(rep, query);
    if (format == "json")
        std::cout << to_json(rec) << "\n";
    else if (format == "csv")
        std::cout << to_csv(rec);
    else
        std::cout << to_text(rec);
    return 0;
}

int run_verify(const std::string& suite, std::optional<unsigned> max_h,
               std::optional<unsigned> max_q, std::optional<unsigned> max_rk) {
    std::vector<SweepResult> results;
    const auto want = [&](const std::string& name) { return suite == name || suite == "all"; };
    bool known = false;
    if (want("lemma-chr")) {
        known = true;
        results.push_back(sweep_lemma_chr(max_h.value_or(5), max_q.value_or(4)));
    }
    if (want("lemma-nl")) {
        known = true;
        const unsigned h = max_h.value_or(24);
        results.push_back(sweep_lemma_nl(h, std::min(12u, h)));
    }
    if (want("theorem1")) {
        known = true;
        results.push_back(sweep_theorem1(max_h.value_or(5), max_q.value_or(4)));
    }
    if (want("theorem3")) {
        known = true;
        results.push_back(sweep_theorem3(max_rk.value_or(6), 3));
    }
    if (want("final-identity")) {
        known = true;
        results.push_back(sweep_final_identity());
    }
    if (want("order-orbit")) {
        known = true;
        const unsigned h = max_h.value_or(8);
        results.push_back(sweep_order_orbit(h, max_q.value_or(3), std::min(6u, h)));
    }
    if (!known) {
        std::cerr << "unknown suite: " << suite << "\n";
        return 2;
    }
    bool all_pass = true;
    for (const SweepResult& r : results) {
        if (r.pass)
            std::cout << "PASS  " << r.name << "  (" << r.checks << " checks"
                      << (r.detail.empty() ? "" : "; " + r.detail) << ")\n";
        else {
            std::cout << "FAIL  " << r.name << ": " << r.detail << "\n";
            all_pass = false;
        }
    }
    return all_pass ? 0 : 1;
}

int run_trace(unsigned n, const std::string& rep_str, const std::string& elem_str) {
    const auto ev = parse_int_list(elem_str, ',');
    if (ev.size() != 3) throw std::invalid_argument("--elem expects t,x,y");
    const HeisElem g(n, ev[0], ev[1], ev[2]);

    RepDescriptor rep;
    rep.level = n;
    const size_t colon = rep_str.find(':');
    const std::string kind = rep_str.substr(0, colon);
    const std::string args = colon == std::string::npos ? "" : rep_str.substr(colon + 1);
    if (kind == "symdual") {
        rep.kind = RepDescriptor::Kind::SymDual;
        const auto v = parse_int_list(args, ',');
        if (v.size() != 1 || v[0] < 0) throw std::invalid_argument("--rep symdual:K with K >= 0");
        rep.K = static_cast<unsigned>(v[0]);
    } else if (kind == "wedge") {
        rep.kind = RepDescriptor::Kind::WedgeTop;
    } else if (kind == "mk") {
        rep.kind = RepDescriptor::Kind::Mk;
        const auto v = parse_int_list(args, ',');
        if (v.size() != 1 || v[0] < 2) throw std::invalid_argument("--rep mk:Q with Q >= 2");
        rep.h = n;
        rep.q = static_cast<unsigned>(v[0]);
    } else if (kind == "schulte") {
        rep.kind = RepDescriptor::Kind::SchulteR;
        const auto v = parse_int_list(args, ',');
        if (v.size() != 3 || v[0] <= 0 || v[1] <= 0 || v[2] <= 0)
            throw std::invalid_argument("--rep schulte:H,R,K with positive integers");
        rep.sh = static_cast<unsigned>(v[0]);
        rep.sr = static_cast<unsigned>(v[1]);
        rep.sk = static_cast<unsigned>(v[2]);
    } else {
        throw std::invalid_argument("unknown representation: " + rep_str);
    }
    std::cout << to_string(rep_trace(rep, g).reduced()) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact splitting of Verlinde bundles on elliptic curves"};
    app.require_subcommand(1);

    auto* dec = app.add_subcommand("decompose", "split E_{R,L} into indecomposable summands");
    std::optional<unsigned> rank, level;
    std::string theorem2, format = "text";
    auto* rank_opt = dec->add_option("--rank", rank, "moduli rank R")->check(CLI::PositiveNumber);
    auto* level_opt = dec->add_option("--level", level, "level L")->check(CLI::PositiveNumber);
    auto* t2_opt = dec->add_option("--theorem2", theorem2,
                                   "arbitrary rank/degree data r,d,K,shift (excludes --rank/--level)");
    dec->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    t2_opt->excludes(rank_opt)->excludes(level_opt);

    auto* ver = app.add_subcommand("verify", "run formula-vs-oracle verification sweeps");
    std::string suite;
    std::optional<unsigned> max_h, max_q, max_rk;
    ver->add_option("--suite", suite, "lemma-chr|lemma-nl|theorem1|theorem3|final-identity|order-orbit|all")
        ->required();
    ver->add_option("--max-h", max_h, "bound on h");
    ver->add_option("--max-q", max_q, "bound on q");
    ver->add_option("--max-rk", max_rk, "bound on the rank hr");

    auto* sym = app.add_subcommand("symbol", "evaluate the symbol {lam/h}");
    sym->set_help_flag("--help", "print help");  // frees -h for the modulus flag
    unsigned long sym_lam = 0, sym_h = 1;
    sym->add_option("--lam", sym_lam, "numerator lambda")->required();
    sym->add_option("--h", sym_h, "modulus h")->required()->check(CLI::PositiveNumber);

    auto* trc = app.add_subcommand("trace", "trace of a group element on a representation");
    unsigned trace_n = 1;
    std::string rep_str, elem_str;
    trc->add_option("--n", trace_n, "Heisenberg level")->required()->check(CLI::PositiveNumber);
    trc->add_option("--rep", rep_str, "symdual:K | wedge | mk:Q | schulte:H,R,K")->required();
    trc->add_option("--elem", elem_str, "element t,x,y")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (dec->parsed()) return run_decompose(rank, level, theorem2, format);
        if (ver->parsed()) return run_verify(suite, max_h, max_q, max_rk);
        if (sym->parsed()) {
            std::cout << rat_to_string(verlinde::brace_symbol(sym_lam, sym_h)) << "\n";
            return 0;
        }
        if (trc->parsed()) return run_trace(trace_n, rep_str, elem_str);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
