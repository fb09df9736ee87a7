#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "linkchroma/bound.hpp"
#include "linkchroma/tables.hpp"

namespace fs = std::filesystem;
using namespace linkchroma;

namespace {

constexpr int kExitInput = 2;
constexpr int kExitCap = 3;
constexpr int kExitTheorem = 4;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string pd_text;
    std::string file;
    std::string knot;
    std::string table;
    std::string n_spec;
    std::string filter = "nontrivial";
    long long cap = 1'000'000;
    std::string format = "human";
    std::string out;
    bool full_enumeration = false;
};

struct NRange {
    Int lo, hi;  // inclusive; lo == hi for a single modulus
};

NRange parse_n(const std::string& spec) {
    auto parse_one = [](const std::string& s) {
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
            throw InputError("bad modulus \"" + s + "\"");
        return Int(s);
    };
    NRange r;
    auto dots = spec.find("..");
    if (dots == std::string::npos) {
        r.lo = r.hi = parse_one(spec);
    } else {
        r.lo = parse_one(spec.substr(0, dots));
        r.hi = parse_one(spec.substr(dots + 2));
    }
    if (r.lo < 2) throw InputError("modulus must be at least 2");
    if (r.hi < r.lo) throw InputError("empty modulus range");
    return r;
}

Filter parse_filter(const std::string& s) {
    if (s == "nontrivial") return Filter::Nontrivial;
    if (s == "effective") return Filter::Effective;
    if (s == "all") return Filter::All;
    throw InputError("unknown filter \"" + s + "\"");
}

std::vector<fs::path> table_search_paths(const Options& o) {
    std::vector<fs::path> paths;
    if (!o.table.empty()) {
        fs::path p = o.table;
        if (!fs::exists(p)) {
            if (const char* dir = std::getenv("LINKCHROMA_TABLE_DIR"))
                if (fs::exists(fs::path(dir) / p)) p = fs::path(dir) / p;
        }
        paths.push_back(p);
        return paths;
    }
    if (const char* dir = std::getenv("LINKCHROMA_TABLE_DIR")) {
        std::error_code ec;
        for (const auto& entry : fs::directory_iterator(dir, ec))
            if (entry.path().extension() == ".jsonl") paths.push_back(entry.path());
        std::sort(paths.begin(), paths.end());
    }
    return paths;
}

struct NamedDiagram {
    std::string name;
    PDCode pd;
};

/// Accepts PD text ("PD[X[...],...]") or the JSON form
/// {"name": ..., "pd": [[i,j,k,l],...]}.
NamedDiagram parse_any(const std::string& text, const std::string& fallback_name) {
    auto start = text.find_first_not_of(" \t\r\n");
    if (start != std::string::npos && text[start] == '{') {
        nlohmann::json j = nlohmann::json::parse(text);
        if (!j.contains("pd") || !j["pd"].is_array()) throw InputError("JSON diagram needs a \"pd\" array");
        PDCode pd;
        for (const auto& x : j["pd"]) {
            if (!x.is_array() || x.size() != 4) throw InputError("each crossing must be a 4-tuple");
            pd.crossings.push_back({x[0].get<int>(), x[1].get<int>(), x[2].get<int>(), x[3].get<int>()});
        }
        std::string text_form = to_text(pd);
        return {j.value("name", fallback_name), parse_pd(text_form)};
    }
    return {fallback_name, parse_pd(text)};
}

std::vector<NamedDiagram> resolve_diagrams(const Options& o) {
    int sources = !o.pd_text.empty() + !o.file.empty() + !o.knot.empty() +
                  (!o.table.empty() && o.knot.empty());
    if (sources != 1) throw InputError("give exactly one of --pd, --file, --knot, --table");
    if (!o.pd_text.empty()) return {parse_any(o.pd_text, "inline")};
    if (!o.file.empty()) {
        std::ifstream in(o.file);
        if (!in) throw InputError("cannot open " + o.file);
        std::stringstream buf;
        buf << in.rdbuf();
        return {parse_any(buf.str(), fs::path(o.file).stem().string())};
    }
    std::vector<fs::path> paths = table_search_paths(o);
    if (paths.empty()) throw InputError("no table given; set --table or LINKCHROMA_TABLE_DIR");
    if (!o.knot.empty()) {
        for (const auto& p : paths)
            for (const auto& e : load_table(p))
                if (e.name == o.knot) return {{e.name, e.pd}};
        throw InputError("unknown table entry \"" + o.knot + "\"");
    }
    std::vector<NamedDiagram> out;
    for (const auto& e : load_table(paths.front())) out.push_back({e.name, e.pd});
    return out;
}

std::ostream& open_out(const Options& o, std::ofstream& file) {
    if (o.out.empty()) return std::cout;
    file.open(o.out);
    if (!file) throw InputError("cannot open " + o.out + " for writing");
    return file;
}

/// Moduli in [lo, hi] whose every prime factor divides det.
std::vector<Int> admissible_moduli(const NRange& r, const Int& det) {
    std::vector<Int> out;
    for (Int n = r.lo; n <= r.hi; ++n) {
        bool ok = true;
        for (const Int& p : prime_factors(n))
            if (det % p != 0) {
                ok = false;
                break;
            }
        if (ok) out.push_back(n);
    }
    return out;
}

std::string values_str(const std::vector<Int>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].get_str();
    }
    return s + ")";
}

int cmd_det(const Options& o) {
    std::ofstream file;
    std::ostream& out = open_out(o, file);
    auto diagrams = resolve_diagrams(o);
    for (const auto& [name, pd] : diagrams) {
        Int d = determinant(build_diagram(pd));
        if (o.format == "json")
            out << nlohmann::json{{"name", name}, {"det", d.get_str()}}.dump() << "\n";
        else if (o.format == "csv")
            out << name << "," << d << "\n";
        else if (diagrams.size() > 1)
            out << name << " " << d << "\n";
        else
            out << d << "\n";
    }
    return 0;
}

int cmd_colorings(const Options& o) {
    std::ofstream file;
    std::ostream& out = open_out(o, file);
    if (o.n_spec.empty()) throw InputError("-n is required");
    NRange r = parse_n(o.n_spec);
    if (r.lo != r.hi) throw InputError("colorings takes a single modulus");
    auto diagrams = resolve_diagrams(o);
    if (diagrams.size() != 1) throw InputError("colorings takes a single diagram");
    LinkDiagram d = build_diagram(diagrams[0].pd);

    EnumOptions opts{parse_filter(o.filter), o.cap, /*canonical_only=*/false};
    long total = 0, effective = 0;
    try {
        ColoringEnumerator e(d, r.lo, opts);
        Coloring c;
        ColoringClass cls;
        while (e.next(c, cls)) {
            ++total;
            if (cls.is_effective) ++effective;
            if (o.format == "json") {
                nlohmann::json vals = nlohmann::json::array();
                for (const Int& v : c.values) vals.push_back(v.get_str());
                out << nlohmann::json{{"coloring", vals},
                                      {"trivial", cls.is_trivial},
                                      {"effective", cls.is_effective},
                                      {"palette", cls.palette_size}}
                           .dump()
                    << "\n";
            } else {
                out << values_str(c.values) << " palette=" << cls.palette_size
                    << (cls.is_trivial ? " trivial" : cls.is_effective ? " effective" : " nontrivial")
                    << "\n";
            }
        }
    } catch (const CapExceededError& e) {
        out << "# cap exceeded: " << e.what() << "\n";
        return kExitCap;
    }
    std::ostream& sum = (o.format == "json") ? std::cerr : out;
    sum << "# " << total << " " << o.filter << ", " << effective << " effective\n";
    return 0;
}

int cmd_mincolors(const Options& o) {
    std::ofstream file;
    std::ostream& out = open_out(o, file);
    if (o.n_spec.empty()) throw InputError("-n is required");
    NRange r = parse_n(o.n_spec);
    if (r.lo != r.hi) throw InputError("mincolors takes a single modulus");
    auto diagrams = resolve_diagrams(o);
    if (diagrams.size() != 1) throw InputError("mincolors takes a single diagram");
    LinkDiagram d = build_diagram(diagrams[0].pd);

    const Int& n = r.lo;
    int lower = theorem_lower_bound(n);
    std::optional<int> best;
    try {
        Filter f = parse_filter(o.filter);
        if (f == Filter::All) f = Filter::Nontrivial;
        EnumOptions opts{f, o.cap, !o.full_enumeration};
        ColoringEnumerator e(d, n, opts);
        Coloring c;
        ColoringClass cls;
        while (e.next(c, cls))
            if (!best || cls.palette_size < *best) best = cls.palette_size;
    } catch (const CapExceededError& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return kExitCap;
    }
    if (o.format == "json") {
        nlohmann::json j{{"n", n.get_str()}, {"lower", lower}};
        if (best)
            j["diagram_min"] = *best;
        else
            j["diagram_min"] = nullptr;
        out << j.dump() << "\n";
    } else {
        out << "lower " << lower << "\n";
        out << "diagram-min ";
        if (best)
            out << *best;
        else
            out << "none";
        out << "\n";
        out << "interval for C*_" << n << ": [" << lower << ", " << (best ? std::to_string(*best) : "none")
            << "]\n";
    }
    return 0;
}

int cmd_verify(const Options& o) {
    std::ofstream file;
    std::ostream& out = open_out(o, file);
    if (o.n_spec.empty()) throw InputError("-n is required");
    NRange r = parse_n(o.n_spec);
    auto diagrams = resolve_diagrams(o);

    bool any_invalid = false;
    for (const auto& [name, pd] : diagrams) {
        LinkDiagram d = build_diagram(pd);
        Int det_val = determinant(d);
        if (det_val == 0) {
            std::cerr << name << ": determinant 0, skipped\n";
            continue;
        }
        long certs = 0, valid = 0;
        for (const Int& n : admissible_moduli(r, det_val)) {
            try {
                EnumOptions opts{Filter::Effective, o.cap, !o.full_enumeration};
                ColoringEnumerator e(d, n, opts);
                Coloring c;
                ColoringClass cls;
                while (e.next(c, cls)) {
                    BoundCertificate cert = verify(d, c, name);
                    ++certs;
                    if (cert.valid())
                        ++valid;
                    else
                        any_invalid = true;
                    if (o.format == "human")
                        out << name << " n=" << n << " coloring=" << values_str(c.values)
                            << " l=" << cert.l << " |det B|=" << abs(cert.det_B)
                            << (cert.valid() ? " valid" : " INVALID") << "\n";
                    else
                        out << cert.to_json().dump() << "\n";
                }
            } catch (const CapExceededError& e) {
                std::cerr << name << " n=" << n << ": cap exceeded: " << e.what() << "\n";
                return kExitCap;
            }
        }
        std::cerr << name << ": " << certs << " certificates, " << valid << " valid";
        if (certs == 0) std::cerr << " (no effective colorings)";
        std::cerr << "\n";
    }
    return any_invalid ? kExitTheorem : 0;
}

int cmd_table(const Options& o) {
    std::ofstream file;
    std::ostream& out = open_out(o, file);
    std::vector<fs::path> paths = table_search_paths(o);
    if (paths.empty()) throw InputError("no table given; set --table or LINKCHROMA_TABLE_DIR");
    std::vector<TableEntry> entries = load_table(paths.front());

    std::vector<Int> ns;
    if (!o.n_spec.empty()) {
        NRange r = parse_n(o.n_spec);
        for (Int n = r.lo; n <= r.hi; ++n) ns.push_back(n);
    }
    out << "name,crossings,det";
    for (const Int& n : ns)
        out << ",eff_n" << n << ",min_n" << n << ",bound_n" << n << ",cert_n" << n;
    out << "\n";

    for (const auto& e : entries) {
        LinkDiagram d = build_diagram(e.pd);
        Int det_val = determinant(d);
        out << e.name << "," << e.pd.crossings.size() << "," << det_val;
        for (const Int& n : ns) {
            long eff = 0;
            std::optional<int> best;
            std::string cert_status = "none";
            try {
                EnumOptions opts{Filter::Effective, o.cap, /*canonical_only=*/false};
                ColoringEnumerator en(d, n, opts);
                Coloring c;
                ColoringClass cls;
                bool all_valid = true;
                while (en.next(c, cls)) {
                    ++eff;
                    if (!best || cls.palette_size < *best) best = cls.palette_size;
                    if (is_affine_canonical(c.values, n) && !verify(d, c, e.name).valid())
                        all_valid = false;
                }
                if (eff > 0) cert_status = all_valid ? "valid" : "invalid";
            } catch (const CapExceededError&) {
                cert_status = "cap";
            }
            out << "," << eff << "," << (best ? std::to_string(*best) : "") << ","
                << theorem_lower_bound(n) << "," << cert_status;
        }
        out << "\n";
    }
    return 0;
}

void add_common(CLI::App* sub, Options& o, bool needs_n) {
    sub->add_option("--pd", o.pd_text, "inline PD code, e.g. PD[X[1,4,2,5],...]");
    sub->add_option("--file", o.file, "file holding a PD code");
    sub->add_option("--knot", o.knot, "name looked up in the table(s)");
    sub->add_option("--table", o.table, "JSON-lines table path");
    if (needs_n) sub->add_option("-n", o.n_spec, "modulus, INT or A..B");
    sub->add_option("--filter", o.filter, "all | nontrivial | effective");
    sub->add_option("--cap", o.cap, "enumeration cap (default 1000000)");
    sub->add_option("--format", o.format, "human | json | csv");
    sub->add_option("--out", o.out, "write data output to a file");
    sub->add_flag("--full-enumeration", o.full_enumeration,
                  "enumerate all colorings, not just affine-canonical representatives");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fox n-coloring toolkit"};
    app.require_subcommand(1);
    Options o;
    CLI::App* det_cmd = app.add_subcommand("det", "link determinant");
    CLI::App* col_cmd = app.add_subcommand("colorings", "enumerate and classify colorings");
    CLI::App* min_cmd = app.add_subcommand("mincolors", "palette minima and the lower bound");
    CLI::App* ver_cmd = app.add_subcommand("verify", "emit bound certificates");
    CLI::App* tab_cmd = app.add_subcommand("table", "batch summary of a table");
    add_common(det_cmd, o, false);
    add_common(col_cmd, o, true);
    add_common(min_cmd, o, true);
    add_common(ver_cmd, o, true);
    add_common(tab_cmd, o, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitInput;
    }

    try {
        if (o.cap < 1) throw InputError("cap must be at least 1");
        if (det_cmd->parsed()) return cmd_det(o);
        if (col_cmd->parsed()) return cmd_colorings(o);
        if (min_cmd->parsed()) return cmd_mincolors(o);
        if (ver_cmd->parsed()) return cmd_verify(o);
        if (tab_cmd->parsed()) return cmd_table(o);
    } catch (const CapExceededError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCap;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
