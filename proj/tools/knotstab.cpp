/*
   Copyright 2026 The knotstab authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "knotstab/families.hpp"
#include "knotstab/interlace.hpp"
#include "knotstab/moebius.hpp"
#include "knotstab/multivar.hpp"
#include "knotstab/reppoly.hpp"
#include "knotstab/serialize.hpp"
#include "knotstab/text.hpp"

namespace {

using namespace knotstab;

struct CommonOpts {
    std::string cf, poly, matrix, family, out, format = "json";
    int max_len = 4;
    int max_coef = 4;
    double tol = 1e-12;
    double tau = 1e-8;
    unsigned seed = 0;
    int threads = 0;
    long long cap = 1000000;
};

int thread_count(const CommonOpts& o) {
    if (const char* env = std::getenv("KNOTSTAB_THREADS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    if (o.threads > 0) return o.threads;
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

std::ostream& open_output(const CommonOpts& o, std::ofstream& file) {
    if (o.out.empty()) return std::cout;
    file.open(o.out);
    if (!file) raise(errc::io_error, "cannot open " + o.out);
    return file;
}

// One work item of a family sweep.
struct SweepItem {
    std::string cf_text;  // continued fraction or parameter description
    IntPoly poly;
    std::optional<int> sig;
};

struct SweepRow {
    std::string id;
    SweepItem item;
    StabilityReport report;
    bool hoste_ok = false;
};

std::string pad_id(size_t i, size_t total) {
    size_t width = std::to_string(total ? total - 1 : 0).size();
    std::string s = std::to_string(i);
    return std::string(width > s.size() ? width - s.size() : 0, '0') + s;
}

std::vector<long long> symbol_table(int max_half) {
    std::vector<long long> sym;
    for (int v = -max_half; v <= max_half; ++v)
        if (v != 0) sym.push_back(v);
    return sym;
}

long long count_cf_enum(int max_len, int max_half) {
    long long total = 0, layer = 1;
    for (int n = 1; n <= max_len; ++n) {
        layer *= 2 * max_half;
        total += layer;
        if (total > (1ll << 62)) break;
    }
    return total;
}

EvenCF cf_from_index(long long index, const std::vector<long long>& sym) {
    const long long base = static_cast<long long>(sym.size());
    long long layer = base;
    int n = 1;
    while (index >= layer) {
        index -= layer;
        layer *= base;
        ++n;
    }
    std::vector<long long> halves(static_cast<size_t>(n));
    for (int i = n - 1; i >= 0; --i) {
        halves[static_cast<size_t>(i)] = sym[static_cast<size_t>(index % base)];
        index /= base;
    }
    return EvenCF(std::move(halves));
}

std::vector<SweepItem> build_sweep(const CommonOpts& o) {
    std::vector<SweepItem> items;
    auto push_cf = [&items](const EvenCF& cf) {
        SweepItem it;
        it.cf_text = cf.text();
        auto m = seifert_2bridge(cf, SeifertForm::twisted_chain);
        it.poly = normalize_alexander(alexander_poly(m));
        it.sig = signature(m);
        items.push_back(std::move(it));
    };
    if (o.family == "cf_enum") {
        int max_half = o.max_coef / 2;
        if (max_half < 1) raise(errc::spec_violation, "--max-coef must be at least 2");
        auto sym = symbol_table(max_half);
        long long total = count_cf_enum(o.max_len, max_half);
        if (total > o.cap) raise(errc::cap_exceeded, "sweep size " + std::to_string(total));
        for (long long i = 0; i < total; ++i) push_cf(cf_from_index(i, sym));
    } else if (o.family == "xn") {
        for (int n = 1; n <= o.max_len; ++n) {
            SweepItem it;
            it.cf_text = "xn:n=" + std::to_string(n);
            std::vector<Int> a(static_cast<size_t>(n), Int(1)), b(static_cast<size_t>(n), Int(-1));
            it.poly = xn_alexander(n, a, b);
            SplitSpec spec;
            spec.pos_weights = a;
            spec.neg_weights = b;
            spec.coupling = coupling_all_ones(static_cast<size_t>(n));
            it.sig = signature(seifert_split(spec));
            items.push_back(std::move(it));
        }
    } else if (o.family == "yn") {
        for (int n = 1; n <= o.max_len; ++n) {
            SweepItem it;
            it.cf_text = "yn:n=" + std::to_string(n);
            it.poly = yn_bundle(n).h_n;
            items.push_back(std::move(it));
        }
    } else if (o.family == "appc_vertical") {
        for (long long k = -o.max_coef; k <= o.max_coef; ++k) {
            if (k == 0) continue;
            std::vector<long long> entries = {2, 2, 2, 2 * k, -2, -2, -2, -2};
            SweepItem it;
            it.cf_text = EvenCF::from_entries(entries).text();
            it.poly = appc_vertical(k);
            it.sig = signature(seifert_2bridge(EvenCF::from_entries(entries)));
            items.push_back(std::move(it));
        }
    } else if (o.family == "appc_horizontal") {
        for (int n = 1; n <= o.max_len; ++n) {
            std::vector<long long> halves;
            for (int i = 0; i < n; ++i) halves.push_back(1);
            for (int i = 0; i < n; ++i) halves.push_back(-1);
            EvenCF cf(halves);
            SweepItem it;
            it.cf_text = cf.text();
            it.poly = appc_horizontal(n);
            it.sig = signature(seifert_2bridge(cf));
            items.push_back(std::move(it));
        }
    } else if (o.family == "salem") {
        for (int m = 1; m <= o.max_len; ++m)
            for (int n = 0; n <= m; ++n) {
                if ((m + n) % 2 == 0) continue;
                std::vector<long long> halves;
                for (int i = 0; i < m; ++i) halves.push_back(1);
                halves.push_back(-1);
                for (int i = 0; i < n; ++i) halves.push_back(1);
                EvenCF cf(halves);
                SweepItem it;
                it.cf_text = cf.text();
                it.poly = salem_dmn(m, n);
                it.sig = signature(seifert_2bridge(cf));
                items.push_back(std::move(it));
            }
    } else if (o.family == "montesinos") {
        int max_half = std::max(1, o.max_coef / 2);
        for (long long e = 1; e <= o.max_coef; e += 2)
            for (int first_len : {1, 3})
                for (int rest = 1; rest <= 2; ++rest) {
                    if (first_len + 2 * rest > o.max_len) continue;
                    for (long long a = 1; a <= max_half; ++a) {
                        MontesinosSpec spec;
                        spec.e = e;
                        std::vector<long long> t1;
                        for (int i = 0; i < first_len; ++i) t1.push_back(i % 2 ? -a : a);
                        spec.tangles.emplace_back(t1);
                        for (int r = 0; r < rest; ++r)
                            spec.tangles.push_back(EvenCF({a, -a}));
                        SweepItem it;
                        std::ostringstream name;
                        name << "M(e=" << e << "|";
                        for (size_t t = 0; t < spec.tangles.size(); ++t)
                            name << (t ? ";" : "") << spec.tangles[t].text();
                        name << ")";
                        it.cf_text = name.str();
                        auto mmat = seifert_montesinos(spec);
                        it.poly = normalize_alexander(alexander_poly(mmat));
                        it.sig = signature(mmat);
                        items.push_back(std::move(it));
                    }
                }
    } else {
        raise(errc::spec_violation, "unknown family " + o.family);
    }
    if (static_cast<long long>(items.size()) > o.cap)
        raise(errc::cap_exceeded, "sweep size " + std::to_string(items.size()));
    return items;
}

std::vector<SweepRow> run_rows(std::vector<SweepItem> items, const CommonOpts& o) {
    std::vector<SweepRow> rows(items.size());
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= rows.size()) return;
            SweepRow& row = rows[i];
            row.id = pad_id(i, rows.size());
            row.item = std::move(items[i]);
            row.report = classify(row.item.poly, o.tau, o.tol, o.seed);
            IntPoly comp = row.item.poly.compose(IntPoly({-1, -1}));
            if (comp.leading() < 0) comp = -comp;
            row.hoste_ok = s_hurwitz(comp).s_hurwitz_stable;
        }
    };
    int nthreads = thread_count(o);
    std::vector<std::thread> pool;
    for (int t = 1; t < nthreads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return rows;
}

std::string delta_cell(const StabilityReport& r) {
    if (!r.delta_max) return "";
    std::ostringstream s;
    s.precision(12);
    s << r.delta_max->mid_double();
    return s.str();
}

void emit_rows(const std::vector<SweepRow>& rows, const CommonOpts& o, std::ostream& os) {
    if (o.format == "csv") {
        os << "id,cf,polynomial,verdict,n_real,n_unit,n_other,delta_max,signature,hoste_ok\n";
        for (const auto& r : rows) {
            os << r.id << ",\"" << r.item.cf_text << "\",\"" << r.item.poly.text() << "\","
               << verdict_name(r.report.verdict) << "," << r.report.n_real << "," << r.report.n_unit
               << "," << r.report.n_other << "," << delta_cell(r.report) << ","
               << (r.item.sig ? std::to_string(*r.item.sig) : std::string()) << ","
               << (r.hoste_ok ? "true" : "false") << "\n";
        }
    } else if (o.format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : rows) {
            nlohmann::json j;
            j["id"] = r.id;
            j["cf"] = r.item.cf_text;
            j["polynomial"] = r.item.poly.text();
            j["verdict"] = verdict_name(r.report.verdict);
            j["n_real"] = r.report.n_real;
            j["n_unit"] = r.report.n_unit;
            j["n_other"] = r.report.n_other;
            if (r.report.delta_max)
                j["delta_max"] = r.report.delta_max->mid_double();
            else
                j["delta_max"] = nullptr;
            if (r.item.sig)
                j["signature"] = *r.item.sig;
            else
                j["signature"] = nullptr;
            j["hoste_ok"] = r.hoste_ok;
            arr.push_back(std::move(j));
        }
        os << arr.dump(2) << "\n";
    } else {
        raise(errc::spec_violation, "unknown format " + o.format);
    }
}

struct ParsedInput {
    std::string label;
    IntPoly poly;
    std::optional<int> sig;
};

ParsedInput parse_input(const CommonOpts& o) {
    int given = !o.cf.empty() + !o.poly.empty() + !o.matrix.empty();
    if (given != 1) throw parse_error("need exactly one of --cf, --poly, --matrix", 0);
    ParsedInput in;
    if (!o.cf.empty()) {
        EvenCF cf = parse_cf(o.cf);
        auto m = seifert_2bridge(cf, SeifertForm::twisted_chain);
        in.label = cf.text();
        in.poly = normalize_alexander(alexander_poly(m));
        in.sig = signature(m);
    } else if (!o.poly.empty()) {
        in.label = o.poly;
        in.poly = parse_poly(o.poly);
    } else {
        SeifertMatrix m = parse_matrix(o.matrix);
        in.label = o.matrix;
        in.poly = normalize_alexander(alexander_poly(m));
        in.sig = signature(m);
    }
    return in;
}

int cmd_classify(const CommonOpts& o) {
    ParsedInput in = parse_input(o);
    StabilityReport rep = classify(in.poly, o.tau, o.tol, o.seed);
    rep.numeric_zeros = numeric_zeros(in.poly, o.tol, o.seed).zeros;
    nlohmann::json j;
    j["input"] = in.label;
    j["polynomial"] = in.poly.text();
    if (in.sig)
        j["signature"] = *in.sig;
    else
        j["signature"] = nullptr;
    j["certified"] = rep.certified;
    j["report"] = report_json(rep);
    std::ofstream file;
    open_output(o, file) << j.dump(2) << "\n";
    return 0;
}

int cmd_sweep(const CommonOpts& o) {
    auto rows = run_rows(build_sweep(o), o);
    std::ofstream file;
    emit_rows(rows, o, open_output(o, file));
    return 0;
}

int cmd_export_zeros(const CommonOpts& o) {
    std::vector<std::pair<std::string, IntPoly>> polys;
    if (!o.family.empty()) {
        for (auto& item : build_sweep(o)) polys.emplace_back(item.cf_text, item.poly);
    } else {
        ParsedInput in = parse_input(o);
        polys.emplace_back(in.label, in.poly);
    }
    struct ZeroRow {
        double re, im;
        std::string label;
    };
    std::vector<ZeroRow> rows;
    for (const auto& [label, poly] : polys) {
        if (poly.degree() < 1) continue;
        for (const auto& z : numeric_zeros(poly, o.tol, o.seed).zeros)
            rows.push_back({z.real(), z.imag(), label});
    }
    std::ofstream file;
    std::ostream& os = open_output(o, file);
    if (o.format == "csv") {
        os << "re,im,label\n";
        os.precision(15);
        for (const auto& r : rows) os << r.re << "," << r.im << ",\"" << r.label << "\"\n";
    } else {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : rows) {
            nlohmann::json j;
            j["re"] = r.re;
            j["im"] = r.im;
            j["label"] = r.label;
            arr.push_back(std::move(j));
        }
        os << arr.dump(2) << "\n";
    }
    return 0;
}

void add_common(CLI::App* cmd, CommonOpts& o, bool with_input, bool with_family) {
    if (with_input) {
        cmd->add_option("--cf", o.cf, "continued fraction, e.g. \"[2,-2,-8,2]\"");
        cmd->add_option("--poly", o.poly, "polynomial, descending coefficients, e.g. \"1,-3,1\"");
        cmd->add_option("--matrix", o.matrix, "Seifert matrix, e.g. \"1,1;0,-1\"");
    }
    if (with_family) {
        cmd->add_option("--family", o.family,
                        "cf_enum|xn|yn|appc_vertical|appc_horizontal|salem|montesinos");
        cmd->add_option("--max-len", o.max_len, "max continued-fraction length / family index");
        cmd->add_option("--max-coef", o.max_coef, "max |entry| / parameter magnitude");
        cmd->add_option("--cap", o.cap, "enumeration cap (default 10^6)");
    }
    cmd->add_option("--out", o.out, "output path (default stdout)");
    cmd->add_option("--format", o.format, "json|csv (default json)");
    cmd->add_option("--tol", o.tol, "numeric residual tolerance (default 1e-12)");
    cmd->add_option("--tau", o.tau, "numeric bucket tolerance (default 1e-8)");
    cmd->add_option("--seed", o.seed, "seed for numeric root placement (default 0)");
    cmd->add_option("--threads", o.threads, "worker threads (KNOTSTAB_THREADS overrides)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact zero-distribution toolkit for knot polynomial invariants"};
    app.require_subcommand(1);
    CommonOpts copts, sopts, eopts;
    CLI::App* c_classify = app.add_subcommand("classify", "classify one input");
    add_common(c_classify, copts, true, false);
    CLI::App* c_sweep = app.add_subcommand("sweep", "classify a whole family");
    add_common(c_sweep, sopts, false, true);
    CLI::App* c_export = app.add_subcommand("export-zeros", "plot-ready zero lists");
    add_common(c_export, eopts, true, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (c_classify->parsed()) return cmd_classify(copts);
        if (c_sweep->parsed()) return cmd_sweep(sopts);
        if (c_export->parsed()) return cmd_export_zeros(eopts);
    } catch (const knotstab::parse_error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const knotstab::error& e) {
        std::cerr << e.what() << "\n";
        return e.code() == knotstab::errc::cap_exceeded ? 3 : 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
    return 0;
}
