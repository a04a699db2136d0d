/*
 * hopfind: exact indicator computations for finite-dimensional Hopf algebras
 * over cyclotomic fields. All arithmetic is exact; values render symbolically
 * ("5", "1/3", "zeta27^24", "1 - zeta12^2").
 */
#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>

#include "hopfind/adjoint.hpp"
#include "hopfind/interchange.hpp"
#include "hopfind/table.hpp"

using namespace hopfind;
using nlohmann::json;

namespace {

GroupPresentation resolve_group(const std::string& rest) {
    try {
        return builtin_group(rest);
    } catch (const validation_error&) {
        return load_group(rest);
    }
}

HopfAlgebra resolve_algebra(const std::string& spec) {
    if (spec.rfind("group:", 0) == 0) return group_algebra(resolve_group(spec.substr(6)));
    if (spec.rfind("book:", 0) == 0) {
        std::string rest = spec.substr(5);
        BookHopfParams p;
        char comma;
        std::istringstream is(rest);
        if (!(is >> p.N >> comma >> p.m)) throw validation_error("expected book:N,m[,s]");
        if (is >> comma >> p.root_exponent) { /* optional s */ }
        return book_hopf(p);
    }
    if (spec.rfind("file:", 0) == 0) return load_algebra(spec.substr(5));
    return load_algebra(spec);
}

std::vector<long> parse_range(const std::string& text) {
    // "3", "1,3,9", "-2..3"
    std::vector<long> out;
    auto dots = text.find("..");
    if (dots != std::string::npos) {
        long a = std::stol(text.substr(0, dots));
        long b = std::stol(text.substr(dots + 2));
        for (long v = a; v <= b; ++v) out.push_back(v);
        return out;
    }
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) out.push_back(std::stol(tok));
    if (out.empty()) throw validation_error("empty range: " + text);
    return out;
}

std::string fmt_value(const Cyc& c, bool rational_only) {
    if (rational_only && !c.as_rational())
        throw validation_error("value is not rational: " + c.str());
    return render_value(c);
}

std::string vec_str(const SparseVec& v) {
    std::string s;
    for (const auto& [i, val] : v)
        s += (s.empty() ? "" : " + ") + ("(" + render_value(val) + ")*a" + std::to_string(i));
    return s.empty() ? "0" : s;
}

void emit_rows(const std::string& format, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows, const json& meta) {
    if (format == "csv") {
        for (size_t i = 0; i < header.size(); ++i)
            std::cout << header[i] << (i + 1 < header.size() ? "," : "\n");
        for (const auto& row : rows)
            for (size_t i = 0; i < row.size(); ++i)
                std::cout << row[i] << (i + 1 < row.size() ? "," : "\n");
        return;
    }
    if (format == "json") {
        json j;
        j["columns"] = header;
        j["rows"] = rows;
        if (!meta.empty()) j["meta"] = meta;
        std::cout << j.dump(1) << "\n";
        return;
    }
    std::vector<size_t> width(header.size());
    for (size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
    for (const auto& row : rows)
        for (size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    auto line = [&](const std::vector<std::string>& row) {
        for (size_t i = 0; i < row.size(); ++i)
            std::cout << row[i] << std::string(width[i] - row[i].size() + 2, ' ');
        std::cout << "\n";
    };
    line(header);
    for (const auto& row : rows) line(row);
    if (!meta.empty())
        for (const auto& [k, v] : meta.items())
            std::cout << "# " << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact indicator computations for finite-dimensional Hopf algebras"};
    app.require_subcommand(1);

    std::string algebra_spec, format = "human", module_path, out_path;
    std::string n_range = "1", r_range = "1", method = "fast";
    bool rational_only = false;
    long threads = 0, basis_limit = 64;

    auto add_common = [&](CLI::App* sub, bool needs_algebra = true) {
        if (needs_algebra)
            sub->add_option("algebra", algebra_spec,
                            "group:<name|file> | book:N,m[,s] | <interchange.json>")
                ->required();
        sub->add_option("--format", format, "human|json|csv");
        sub->add_flag("--rational-only", rational_only,
                      "error out if any value is not a plain rational");
    };

    auto* c_verify = app.add_subcommand("verify", "run the Hopf axiom checks");
    add_common(c_verify);

    auto* c_kmn = app.add_subcommand("kmn", "Kashina-Montgomery-Ng indicators");
    add_common(c_kmn);
    c_kmn->add_option("--n", n_range, "indicator orders, e.g. -2..3 or 1,2")->required();

    auto* c_int = app.add_subcommand("integrals", "integral data and the S^2 scalar");
    add_common(c_int);

    auto* c_center = app.add_subcommand("center", "center dimension and basis");
    add_common(c_center);
    c_center->add_option("--basis-limit", basis_limit,
                         "suppress the basis listing above this dimension");

    auto* c_nuadj = app.add_subcommand("nu-adj", "adjoint-object indicators nu_{n,r}");
    add_common(c_nuadj);
    c_nuadj->add_option("--n", n_range, "tensor power n >= 1");
    c_nuadj->add_option("--r", r_range, "power sweep, e.g. 1,3,9 or 0..6");
    c_nuadj->add_option("--method", method, "fast|general|semisimple|group");

    auto* c_numod = app.add_subcommand("nu-module", "indicators of a pivotal module");
    add_common(c_numod);
    c_numod->add_option("--module", module_path, "module file")->required();
    c_numod->add_option("--n", n_range);
    c_numod->add_option("--r", r_range);

    auto* c_jedwab = app.add_subcommand("jedwab", "trace invariant mu(V) and mu_2(V)");
    add_common(c_jedwab);
    c_jedwab->add_option("--module", module_path, "module file")->required();

    auto* c_table = app.add_subcommand("table1", "full N=27 adjoint indicator sweep");
    add_common(c_table, false);
    c_table->add_option("--threads", threads, "worker threads (0 = hardware)");

    auto* c_export = app.add_subcommand("export", "write the algebra to the interchange format");
    add_common(c_export);
    c_export->add_option("--out", out_path, "output path")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(c_verify)) {
            HopfAlgebra h = resolve_algebra(algebra_spec);
            AxiomReport rep = verify_hopf_axioms(h);
            std::vector<std::vector<std::string>> rows;
            for (const auto& c : rep.checks)
                rows.push_back({c.name, c.pass ? "pass" : "FAIL",
                                c.pass ? "" : (c.note.empty() ? std::to_string(c.first_failure) : c.note)});
            json meta;
            meta["algebra"] = h.name();
            meta["dim"] = h.dim();
            meta["scan"] = rep.sampled ? "sampled" : "full";
            emit_rows(format, {"axiom", "status", "detail"}, rows, meta);
            return rep.all_pass() ? 0 : 1;
        }

        if (app.got_subcommand(c_kmn)) {
            HopfAlgebra h = resolve_algebra(algebra_spec);
            std::vector<std::vector<std::string>> rows;
            for (long n : parse_range(n_range))
                rows.push_back({std::to_string(n), fmt_value(kmn_indicator(h, n), rational_only)});
            emit_rows(format, {"n", "kmn"}, rows, {{"algebra", h.name()}});
            return 0;
        }

        if (app.got_subcommand(c_int)) {
            HopfAlgebra h = resolve_algebra(algebra_spec);
            auto li = left_integrals(h);
            if (li.size() != 1) throw validation_error("left integral space is not 1-dimensional");
            Cyc eps = h.counit_of(li[0]);
            Cyc c = s2_integral_scalar(h);
            std::vector<std::vector<std::string>> rows;
            rows.push_back({"Lambda", vec_str(li[0])});
            rows.push_back({"eps(Lambda)", fmt_value(eps, rational_only)});
            rows.push_back({"S2_scalar_c", fmt_value(c, rational_only)});
            rows.push_back({"semisimple", eps.is_zero() ? "no" : "yes"});
            if (!eps.is_zero()) {
                auto lam = dual_right_integral(h, li[0]);
                SparseVec lv;
                for (long i = 0; i < h.dim(); ++i)
                    if (!lam[i].is_zero()) lv.emplace_back(i, lam[i]);
                rows.push_back({"lambda", vec_str(lv)});
            }
            emit_rows(format, {"quantity", "value"}, rows, {{"algebra", h.name()}});
            return 0;
        }

        if (app.got_subcommand(c_center)) {
            HopfAlgebra h = resolve_algebra(algebra_spec);
            auto c = center_basis(h);
            std::vector<std::vector<std::string>> rows;
            rows.push_back({"dimension", std::to_string(c.size())});
            if (static_cast<long>(c.size()) <= basis_limit)
                for (size_t t = 0; t < c.size(); ++t)
                    rows.push_back({"z" + std::to_string(t), vec_str(c[t])});
            emit_rows(format, {"quantity", "value"}, rows, {{"algebra", h.name()}});
            return 0;
        }

        if (app.got_subcommand(c_nuadj)) {
            std::vector<std::vector<std::string>> rows;
            json meta;
            auto ns = parse_range(n_range);
            auto rs = parse_range(r_range);
            if (method == "group") {
                if (algebra_spec.rfind("group:", 0) != 0)
                    throw validation_error("--method group needs a group: algebra");
                GroupPresentation g = resolve_group(algebra_spec.substr(6));
                for (long n : ns)
                    for (long r : rs)
                        rows.push_back({std::to_string(n), std::to_string(r),
                                        to_string(group_nu(g, n, r)), "", "group-counting"});
                meta["algebra"] = "k[" + g.name + "]";
            } else {
                HopfAlgebra h = resolve_algebra(algebra_spec);
                meta["algebra"] = h.name();
                for (long n : ns) {
                    for (long r : rs) {
                        if (method == "semisimple") {
                            rows.push_back({std::to_string(n), std::to_string(r),
                                            fmt_value(semisimple_nu(h, n, r), rational_only), "",
                                            "semisimple-integral"});
                            continue;
                        }
                        AdjointMethod am =
                            (method == "general" || n != 1) ? AdjointMethod::general : AdjointMethod::fast;
                        IndicatorReport rep = nu_adjoint(h, n, r, am);
                        if (h.dim() > 1000) std::cerr << "nu-adj: n=" << n << " r=" << r << " done\n";
                        rows.push_back({std::to_string(n), std::to_string(r),
                                        fmt_value(rep.value, rational_only),
                                        std::to_string(rep.invariant_dim), rep.method});
                    }
                }
            }
            emit_rows(format, {"n", "r", "nu", "invariant_dim", "method"}, rows, meta);
            return 0;
        }

        if (app.got_subcommand(c_numod)) {
            HopfAlgebra h = resolve_algebra(algebra_spec);
            HModule v = load_module(h, module_path);
            auto p = find_pivotal(v);
            if (!p) throw no_pivotal_iso_error("no pivotal structure found on the module");
            std::vector<std::vector<std::string>> rows;
            for (long n : parse_range(n_range))
                for (long r : parse_range(r_range)) {
                    IndicatorReport rep = nu(*p, n, r);
                    rows.push_back({std::to_string(n), std::to_string(r),
                                    fmt_value(rep.value, rational_only),
                                    std::to_string(rep.invariant_dim), rep.method});
                }
            emit_rows(format, {"n", "r", "nu", "invariant_dim", "method"}, rows,
                      {{"algebra", h.name()}, {"module_dim", v.dim()}});
            return 0;
        }

        if (app.got_subcommand(c_jedwab)) {
            HopfAlgebra h = resolve_algebra(algebra_spec);
            HModule v = load_module(h, module_path);
            Cyc mu = jedwab_mu(v);
            Cyc mu2 = mu_n(v, 2);
            std::vector<std::vector<std::string>> rows;
            rows.push_back({"mu", fmt_value(mu, rational_only)});
            rows.push_back({"mu_2", fmt_value(mu2, rational_only)});
            rows.push_back({"equal", mu == mu2 ? "yes" : "no"});
            emit_rows(format, {"quantity", "value"}, rows, {{"algebra", h.name()}});
            return 0;
        }

        if (app.got_subcommand(c_table)) {
            TableOptions topts;
            topts.threads = threads;
            topts.progress = &std::cerr;
            auto rows = table1_rows(topts);
            if (format == "csv") {
                std::cout << table1_csv(rows);
                return 0;
            }
            std::vector<std::vector<std::string>> out;
            for (const auto& r : rows)
                out.push_back({std::to_string(r.m), render_value(r.nu_1_1), render_value(r.nu_1_3),
                               render_value(r.nu_1_9), std::to_string(r.e_table),
                               std::to_string(r.e_text), render_value(r.kmn_m1)});
            json meta;
            meta["note"] = table1_e_note();
            emit_rows(format, {"m", "nu_1_1", "nu_1_3", "nu_1_9", "e_table_reading",
                               "e_text_reading", "kmn_-1"},
                      out, meta);
            return 0;
        }

        if (app.got_subcommand(c_export)) {
            HopfAlgebra h = resolve_algebra(algebra_spec);
            save_algebra(out_path, h);
            std::cerr << "wrote " << out_path << "\n";
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
