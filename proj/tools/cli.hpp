#pragma once

// ujl-lattice command-line front end.
//
// Exit codes: 0 success, 1 domain error (bad size, order cap), 2 usage error,
// 3 numerical failure (non-convergence, failed verification).

#include "CLI11.hpp"
#include "ujl/ujl.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace ujl::cli {

enum exit_code : int { ok = 0, domain_failure = 1, usage_failure = 2, numeric_failure = 3 };

struct usage_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Parses "3x3,4x5" into (n, m) pairs without validating the sizes.
inline std::vector<std::pair<std::size_t, std::size_t>> parse_sizes(const std::string& text) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto x = item.find('x');
        std::size_t n = 0, m = 0, used_n = 0, used_m = 0;
        try {
            if (x == std::string::npos) throw std::invalid_argument("");
            const std::string ns = item.substr(0, x), ms = item.substr(x + 1);
            n = std::stoul(ns, &used_n);
            m = std::stoul(ms, &used_m);
            if (used_n != ns.size() || used_m != ms.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw usage_error("malformed size '" + item + "': expected NxM");
        }
        out.emplace_back(n, m);
    }
    return out;
}

namespace detail {

struct Options {
    std::string lattice = "ujl";
    std::optional<std::size_t> n;
    std::optional<std::size_t> m;
    std::string kind;
    std::string method = "closed";
    double tol = 0.0;
    std::string sizes;
    std::string format = "csv";
    std::string out_path;
};

inline std::size_t require(const std::optional<std::size_t>& v, const char* flag) {
    if (!v) throw usage_error(std::string("missing required option ") + flag);
    return *v;
}

inline Graph build_graph(const Options& o) {
    if (o.lattice == "cycle") return build_cycle(require(o.n, "--n"));
    const LatticeSize size(require(o.n, "--n"), require(o.m, "--m"));
    if (o.lattice == "ujl") return build_union_jack(size).first;
    if (o.lattice == "grid") return build_torus_grid(size);
    return build_488(size);
}

inline InvariantKind parse_kind(const std::string& k) {
    return k == "lel" ? InvariantKind::lel : InvariantKind::incidence_energy;
}

inline void require_format(const Options& o, std::initializer_list<const char*> allowed, const char* sub) {
    for (const char* f : allowed)
        if (o.format == f) return;
    throw usage_error("format '" + o.format + "' is not supported by '" + sub + "'");
}

inline void cmd_build(const Options& o, std::ostream& os) {
    require_format(o, {"csv", "json", "edgelist"}, "build");
    const Graph g = build_graph(o);
    if (o.format == "edgelist") {
        write_edge_list(os, g);
    } else if (o.format == "csv") {
        os << "u,v\n";
        for (const Edge& e : g.edges()) os << e.first << ',' << e.second << '\n';
    } else {
        os << "{\"vertices\": " << g.vertex_count() << ", \"edges\": [";
        for (std::size_t k = 0; k < g.edge_count(); ++k)
            os << (k ? ", " : "") << '[' << g.edges()[k].first << ", " << g.edges()[k].second << ']';
        os << "]}\n";
    }
}

inline void cmd_spectrum(const Options& o, std::ostream& os) {
    require_format(o, {"csv", "json"}, "spectrum");
    const InvariantKind kind = parse_kind(o.kind.empty() ? "ie" : o.kind);
    const SpectrumKind skind = spectrum_kind(kind);
    if (o.method == "closed") {
        if (o.lattice != "ujl") throw usage_error("closed-form spectra exist only for --lattice ujl");
        const auto spec = closed_form_spectrum(LatticeSize(require(o.n, "--n"), require(o.m, "--m")), skind);
        if (o.format == "csv") {
            write_spectrum_csv(os, spec);
            return;
        }
        os << "{\"n\": " << spec.size.n() << ", \"m\": " << spec.size.m() << ", \"matrix\": \""
           << (skind == SpectrumKind::signless_laplacian ? "signless_laplacian" : "laplacian")
           << "\", \"entries\": [";
        for (std::size_t k = 0; k < spec.entries.size(); ++k) {
            const auto& e = spec.entries[k];
            os << (k ? ", " : "") << "{\"i\": " << e.i << ", \"j\": " << e.j << ", \"sign\": \""
               << branch_symbol(e.sign) << "\", \"value\": " << format_double(e.value) << '}';
        }
        os << "]}\n";
        return;
    }
    const Graph g = build_graph(o);
    const auto result =
        numeric_spectrum(skind == SpectrumKind::signless_laplacian ? signless_laplacian(g) : laplacian(g));
    if (o.format == "csv") {
        os << "index,value\n";
        for (std::size_t k = 0; k < result.values.size(); ++k) os << k << ',' << format_double(result.values[k]) << '\n';
        return;
    }
    os << "{\"values\": [";
    for (std::size_t k = 0; k < result.values.size(); ++k) os << (k ? ", " : "") << format_double(result.values[k]);
    os << "], \"residual\": " << format_double(result.residual) << "}\n";
}

inline std::vector<std::pair<std::size_t, std::size_t>> size_list(const Options& o) {
    if (!o.sizes.empty()) return parse_sizes(o.sizes);
    return {{require(o.n, "--n"), require(o.m, "--m")}};
}

inline void cmd_invariants(const Options& o, std::ostream& os) {
    require_format(o, {"csv", "json"}, "invariants");
    const auto sizes = size_list(o);
    const Method method = o.method == "numeric" ? Method::numeric_oracle : Method::closed_form;
    std::vector<InvariantKind> kinds;
    if (o.kind.empty())
        kinds = {InvariantKind::incidence_energy, InvariantKind::lel};
    else
        kinds = {parse_kind(o.kind)};

    std::vector<InvariantReport> reports;
    for (const auto& [n, m] : sizes) {
        const LatticeSize size(n, m);
        for (InvariantKind k : kinds) reports.push_back(compute_invariant(size, k, method));
    }
    if (o.format == "csv") {
        write_report_csv(os, reports);
        return;
    }
    os << "[";
    for (std::size_t k = 0; k < reports.size(); ++k) {
        const auto& r = reports[k];
        os << (k ? ",\n " : "") << "{\"n\": " << r.size.n() << ", \"m\": " << r.size.m() << ", \"kind\": \""
           << to_string(r.kind) << "\", \"method\": \"" << to_string(r.method)
           << "\", \"value\": " << format_double(r.value) << ", \"per_site\": " << format_double(r.per_site) << '}';
    }
    os << "]\n";
}

inline void cmd_asymptotic(const Options& o, std::ostream& os) {
    require_format(o, {"csv", "json"}, "asymptotic");
    const auto report = compute_constants(o.tol > 0.0 ? o.tol : 1e-6);
    if (o.format == "json")
        write_constants_json(os, report);
    else
        write_constants_csv(os, report);
}

inline void cmd_convergence(const Options& o, std::ostream& os) {
    require_format(o, {"csv", "json"}, "convergence");
    const InvariantKind kind = parse_kind(o.kind.empty() ? "ie" : o.kind);
    std::vector<LatticeSize> sizes;
    for (const auto& [n, m] : parse_sizes(o.sizes.empty() ? "8x8,16x16,32x32,64x64" : o.sizes))
        sizes.emplace_back(n, m);
    const auto rows = convergence_study_to_limit(kind, sizes, o.tol > 0.0 ? o.tol : 1e-9);
    if (o.format == "csv") {
        write_convergence_csv(os, kind, rows);
        return;
    }
    os << "[";
    for (std::size_t k = 0; k < rows.size(); ++k) {
        const auto& r = rows[k];
        os << (k ? ",\n " : "") << "{\"n\": " << r.size.n() << ", \"m\": " << r.size.m() << ", \"kind\": \""
           << to_string(kind) << "\", \"per_site\": " << format_double(r.per_site)
           << ", \"limit\": " << format_double(r.limit) << ", \"gap\": " << format_double(r.gap) << '}';
    }
    os << "]\n";
}

inline bool cmd_verify(const Options& o, std::ostream& os) {
    const LatticeSize size(require(o.n, "--n"), require(o.m, "--m"));
    const auto checks = verify_lattice(size, o.tol > 0.0 ? o.tol : 1e-8);
    std::size_t passed = 0;
    for (const auto& c : checks) {
        os << (c.pass ? "PASS " : "FAIL ") << c.name << " (" << c.detail << ")\n";
        passed += c.pass ? 1 : 0;
    }
    const bool all = passed == checks.size();
    os << (all ? "PASS" : "FAIL") << ": " << passed << "/" << checks.size() << " checks\n";
    return all;
}

} // namespace detail

/// Parses argv, dispatches one subcommand and returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    CLI::App app{"Spectra and energy invariants of toroidal Union Jack lattices", "ujl-lattice"};
    app.require_subcommand(1, 1);
    detail::Options o;

    const std::vector<std::string> lattices{"ujl", "488", "grid", "cycle"};
    const std::vector<std::string> kinds{"ie", "lel"};
    const std::vector<std::string> methods{"closed", "numeric"};
    const std::vector<std::string> formats{"csv", "json", "edgelist"};

    auto add_size = [&](CLI::App* sub) {
        sub->add_option("--n", o.n, "columns (cycle length of C_n)");
        sub->add_option("--m", o.m, "rows (cycle length of C_m)");
    };
    auto add_output = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "csv | json | edgelist")->check(CLI::IsMember(formats));
        sub->add_option("--out", o.out_path, "write to this file instead of standard output");
    };

    auto* build = app.add_subcommand("build", "build a lattice and export its edges");
    build->add_option("--lattice", o.lattice, "ujl | 488 | grid | cycle")->check(CLI::IsMember(lattices));
    add_size(build);
    add_output(build);

    auto* spectrum = app.add_subcommand("spectrum", "dump the Q (--kind ie) or L (--kind lel) spectrum");
    spectrum->add_option("--lattice", o.lattice, "ujl | 488 | grid | cycle")->check(CLI::IsMember(lattices));
    add_size(spectrum);
    spectrum->add_option("--kind", o.kind, "ie | lel")->check(CLI::IsMember(kinds));
    spectrum->add_option("--method", o.method, "closed | numeric")->check(CLI::IsMember(methods));
    add_output(spectrum);

    auto* invariants = app.add_subcommand("invariants", "incidence energy and LEL of UJL(n, m)");
    add_size(invariants);
    invariants->add_option("--sizes", o.sizes, "n1xm1,n2xm2,...");
    invariants->add_option("--kind", o.kind, "ie | lel (default: both)")->check(CLI::IsMember(kinds));
    invariants->add_option("--method", o.method, "closed | numeric")->check(CLI::IsMember(methods));
    add_output(invariants);

    auto* asymptotic = app.add_subcommand("asymptotic", "per-site limit constants by 2D quadrature");
    asymptotic->add_option("--tol", o.tol, "quadrature tolerance (default 1e-6)")->check(CLI::PositiveNumber);
    add_output(asymptotic);

    auto* convergence = app.add_subcommand("convergence", "finite-size per-site values against the limit");
    convergence->add_option("--kind", o.kind, "ie | lel")->check(CLI::IsMember(kinds));
    convergence->add_option("--sizes", o.sizes, "n1xm1,n2xm2,... (default 8x8,16x16,32x32,64x64)");
    convergence->add_option("--tol", o.tol, "quadrature tolerance for the limit (default 1e-9)")
        ->check(CLI::PositiveNumber);
    add_output(convergence);

    auto* verify = app.add_subcommand("verify", "structural identities and closed-form vs numeric spectra");
    add_size(verify);
    verify->add_option("--tol", o.tol, "spectrum tolerance (default 1e-8)")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage_failure;
    }

    try {
        std::ofstream file;
        if (!o.out_path.empty()) {
            file.open(o.out_path);
            if (!file) throw usage_error("cannot open output file " + o.out_path);
        }
        std::ostream& os = o.out_path.empty() ? out : file;

        if (*build) detail::cmd_build(o, os);
        else if (*spectrum) detail::cmd_spectrum(o, os);
        else if (*invariants) detail::cmd_invariants(o, os);
        else if (*asymptotic) detail::cmd_asymptotic(o, os);
        else if (*convergence) detail::cmd_convergence(o, os);
        else if (*verify && !detail::cmd_verify(o, os)) return numeric_failure;
        return ok;
    } catch (const usage_error& e) {
        err << "usage error: " << e.what() << '\n';
        return usage_failure;
    } catch (const size_error& e) {
        err << "error: " << e.what() << '\n';
        return domain_failure;
    } catch (const convergence_error& e) {
        err << "numerical error: " << e.what() << '\n';
        return numeric_failure;
    } catch (const integrand_error& e) {
        err << "numerical error: " << e.what() << '\n';
        return numeric_failure;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return domain_failure;
    }
}

} // namespace ujl::cli
