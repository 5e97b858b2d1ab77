// linefeas: decide which (N, M) pairs are realized by some line graph,
// emit witness graphs, and cross-check the formulas against brute force.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "linefeas/closed_form.hpp"
#include "linefeas/oracle.hpp"
#include "linefeas/witness.hpp"

namespace {

using linefeas::i64;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;

struct Output {
    std::string path;  // empty = stdout

    int emit(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            return kExitOk;
        }
        std::ofstream f(path);
        if (!f) {
            std::cerr << "error: cannot open " << path << " for writing\n";
            return kExitUsage;
        }
        f << text;
        return kExitOk;
    }
};

std::string graph_payload(const linefeas::Witness& w, bool dot, bool json_only) {
    std::ostringstream out;
    if (json_only) {
        out << w.certificate_json() << "\n";
    } else if (dot) {
        out << linefeas::to_dot(w.graph);
    } else {
        out << linefeas::to_edge_list(w.graph);
        out << w.certificate_json() << "\n";
    }
    return out.str();
}

int cmd_intervals(i64 n, bool json, const Output& out) {
    auto set = linefeas::nonfeasible_intervals(n);
    std::ostringstream text;
    if (json) {
        text << set.to_json(n) << "\n";
    } else if (set.intervals().empty()) {
        text << "all pairs feasible\n";
    } else {
        for (const auto& [lo, hi] : set.intervals()) text << "[" << lo << "," << hi << "]\n";
    }
    return out.emit(text.str());
}

int cmd_check(i64 n, i64 m, bool json) {
    bool ok = linefeas::is_feasible_closed(n, m);
    if (json) {
        std::cout << "{\"n\":" << n << ",\"m\":" << m << ",\"feasible\":" << (ok ? "true" : "false")
                  << "}\n";
        return ok ? kExitOk : kExitNegative;
    }
    if (ok) {
        std::cout << "feasible\n";
        return kExitOk;
    }
    auto iv = linefeas::nonfeasible_intervals(n).interval_containing(m);
    std::cout << "non-feasible";
    if (iv) std::cout << " (interval [" << iv->first << "," << iv->second << "])";
    std::cout << "\n";
    return kExitNegative;
}

int cmd_witness(i64 n, i64 m, bool dot, bool json, const Output& out) {
    auto w = linefeas::witness(n, m);
    return out.emit(graph_payload(w, dot, json));
}

int cmd_table(i64 n_max, const Output& out) {
    std::ostringstream text;
    for (i64 n = 1; n <= n_max; ++n) {
        text << n << "\t";
        if (auto mn = linefeas::min_nonfeasible(n))
            text << *mn;
        else
            text << "*";
        text << "\n";
    }
    return out.emit(text.str());
}

int cmd_verify(i64 lo, i64 hi, const linefeas::OracleConfig& cfg) {
    if (lo < 1 || hi < lo) throw linefeas::DomainError("verify needs 1 <= N_lo <= N_hi");
    bool all_ok = true;
    for (i64 n = lo; n <= hi; ++n) {
        auto report = linefeas::feasible_set(n, cfg);
        auto oracle_gap = report.nonfeasible_m();
        auto closed_gap = linefeas::nonfeasible_intervals(n).values();
        if (oracle_gap == closed_gap) {
            std::cout << "N=" << n << " ok (" << oracle_gap.size() << " non-feasible, "
                      << report.sequences_examined << " sequences, " << std::fixed
                      << report.elapsed.count() << "s)\n";
            continue;
        }
        all_ok = false;
        i64 first = -1;
        size_t k = 0;
        for (; k < oracle_gap.size() && k < closed_gap.size(); ++k)
            if (oracle_gap[k] != closed_gap[k]) break;
        if (k < oracle_gap.size() || k < closed_gap.size())
            first = k < oracle_gap.size() ? oracle_gap[k] : closed_gap[k];
        std::cout << "N=" << n << " MISMATCH first differing M=" << first << " (oracle "
                  << oracle_gap.size() << " vs formula " << closed_gap.size() << ")\n";
    }
    return all_ok ? kExitOk : kExitNegative;
}

int cmd_fexact(i64 n, i64 delta, const linefeas::OracleConfig& cfg) {
    std::cout << linefeas::f_exact(n, delta, cfg) << "\n";
    return kExitOk;
}

int cmd_acyclic(i64 n, bool json, const linefeas::OracleConfig& cfg) {
    auto report = linefeas::feasible_set_acyclic(n, cfg);
    if (json) {
        std::cout << report.to_json() << "\n";
        return kExitOk;
    }
    auto gap = report.nonfeasible_m();
    std::cout << "N=" << n << " feasible=" << report.feasible_m.size()
              << " non-feasible=" << gap.size() << "\n";
    if (!gap.empty()) {
        std::cout << "min non-feasible: " << gap.front() << "\nnon-feasible:";
        for (i64 m : gap) std::cout << " " << m;
        std::cout << "\n";
    }
    return kExitOk;
}

int cmd_pawfree(i64 n, i64 m, bool dot, bool json, const Output& out) {
    auto w = linefeas::paw_free_witness(n, m);
    bool clean = !linefeas::has_induced(w.graph, linefeas::Pattern::Paw);
    int rc = out.emit(graph_payload(w, dot, json));
    if (rc != kExitOk) return rc;
    std::cout << "paw-free: " << (clean ? "true" : "false") << "\n";
    return clean ? kExitOk : kExitNegative;
}

int cmd_uep(i64 n, i64 m, bool dot, bool json, const Output& out) {
    auto w = linefeas::uep_graph(n, m);
    // smallest p with C(p,2) >= m; q = C(p,2) - m; r pads with isolated vertices
    i64 p = n > 0 ? 1 : 0;
    while (linefeas::binom2(p) < m) ++p;
    std::cout << "H(" << p << "," << (linefeas::binom2(p) - m) << "," << (n - p) << ")\n";
    return out.emit(graph_payload(w, dot, json));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"line-graph feasibility: closed forms, brute-force checks, witness graphs"};
    app.require_subcommand(1);

    i64 n = 0, m = 0, delta = 0, lo = 0, hi = 0, n_max = 30;
    bool json = false, dot = false, edges = false;
    Output out;
    linefeas::OracleConfig cfg;
    i64 workers = 0, limit = 0;

    auto add_format = [&](CLI::App* c) {
        c->add_flag("--json", json, "JSON output");
        c->add_flag("--dot", dot, "DOT graph output");
        c->add_flag("--edges", edges, "edge-list output (default)");
        c->add_option("-o,--output", out.path, "write data to file instead of stdout");
    };
    auto add_oracle = [&](CLI::App* c) {
        c->add_option("--workers", workers, "parallel workers (0 = auto)");
        c->add_option("--limit", limit, "override the enumeration size cap");
    };

    auto* c_intervals = app.add_subcommand("intervals", "non-feasible M intervals for N");
    c_intervals->add_option("N", n)->required();
    c_intervals->add_flag("--json", json, "JSON output");
    c_intervals->add_option("-o,--output", out.path, "write data to file instead of stdout");

    auto* c_check = app.add_subcommand("check", "is (N,M) feasible?");
    c_check->add_option("N", n)->required();
    c_check->add_option("M", m)->required();
    c_check->add_flag("--json", json, "JSON output");

    auto* c_witness = app.add_subcommand("witness", "construct G with e(G)=N, e(L(G))=M");
    c_witness->add_option("N", n)->required();
    c_witness->add_option("M", m)->required();
    add_format(c_witness);

    auto* c_table = app.add_subcommand("table", "minimum non-feasible M for N = 1..N_max");
    c_table->add_option("N_max", n_max)->required();
    c_table->add_option("-o,--output", out.path, "write data to file instead of stdout");

    auto* c_verify = app.add_subcommand("verify", "brute force vs formulas over a range of N");
    c_verify->add_option("N_lo", lo)->required();
    c_verify->add_option("N_hi", hi)->required();
    add_oracle(c_verify);

    auto* c_fexact = app.add_subcommand("fexact", "max e(L(G)) with e(G)=N, max degree delta");
    c_fexact->add_option("N", n)->required();
    c_fexact->add_option("delta", delta)->required();
    add_oracle(c_fexact);

    auto* c_acyclic = app.add_subcommand("acyclic", "feasible M over forests with N edges");
    c_acyclic->add_option("N", n)->required();
    c_acyclic->add_flag("--json", json, "JSON output");
    add_oracle(c_acyclic);

    auto* c_pawfree = app.add_subcommand("pawfree", "n-vertex m-edge graph with no induced paw");
    c_pawfree->add_option("n", n)->required();
    c_pawfree->add_option("m", m)->required();
    add_format(c_pawfree);

    auto* c_uep = app.add_subcommand("uep", "elimination snapshot H(p,q,r) with n vertices, m edges");
    c_uep->add_option("n", n)->required();
    c_uep->add_option("m", m)->required();
    add_format(c_uep);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }

    if (workers > 0) cfg.workers = static_cast<int>(workers);
    if (limit > 0) {
        cfg.limit = limit;
        cfg.acyclic_limit = limit;
    }

    try {
        if (c_intervals->parsed()) return cmd_intervals(n, json, out);
        if (c_check->parsed()) return cmd_check(n, m, json);
        if (c_witness->parsed()) return cmd_witness(n, m, dot, json, out);
        if (c_table->parsed()) return cmd_table(n_max, out);
        if (c_verify->parsed()) return cmd_verify(lo, hi, cfg);
        if (c_fexact->parsed()) return cmd_fexact(n, delta, cfg);
        if (c_acyclic->parsed()) return cmd_acyclic(n, json, cfg);
        if (c_pawfree->parsed()) return cmd_pawfree(n, m, dot, json, out);
        if (c_uep->parsed()) return cmd_uep(n, m, dot, json, out);
    } catch (const linefeas::NotFeasibleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNegative;
    } catch (const linefeas::NoSuchGraphError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNegative;
    } catch (const linefeas::UnrepresentableError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNegative;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
