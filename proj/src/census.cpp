#include "toric/census.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <sstream>

#include "toric/enumerate.hpp"
#include "toric/error.hpp"
#include "toric/mosaic.hpp"
#include "toric/trace.hpp"

#ifndef TORIC_SOURCE_DATA_DIR
#define TORIC_SOURCE_DATA_DIR "data"
#endif

namespace toric {

namespace fs = std::filesystem;

namespace {

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string fnv1a_hex(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : data) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::vector<std::string> split_tabs(const std::string& line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        const auto tab = line.find('\t', start);
        out.push_back(line.substr(start, tab == std::string::npos ? std::string::npos : tab - start));
        if (tab == std::string::npos) return out;
        start = tab + 1;
    }
}

bool skippable(const std::string& line) { return line.empty() || line[0] == '#'; }

std::string strip_cr(std::string line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

struct PdEntry {
    std::string name;
    std::string pd;
};

std::vector<PdEntry> read_pd_entries(const std::string& text) {
    std::vector<PdEntry> out;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        line = strip_cr(line);
        if (skippable(line)) continue;
        const auto fields = split_tabs(line);
        if (fields.size() != 2 || fields[0].empty())
            throw ParseError("PD table line " + std::to_string(line_no) + ": expected name<TAB>PD");
        out.push_back({fields[0], fields[1]});
    }
    return out;
}

LaurentPoly2 mirror_homfly(const LinkDiagram& d, std::size_t budget) { return homfly(mirror(d), budget); }

}  // namespace

InvariantTable::InvariantTable(std::vector<KnotRecord> records) : records_(std::move(records)) {
    for (std::size_t i = 0; i < records_.size(); ++i) {
        const auto& r = records_[i];
        if (!by_name_.emplace(r.name, i).second) throw ParseError("duplicate knot name " + r.name);
        by_homfly_[r.homfly].push_back(r.name);
        if (r.homfly_mirror != r.homfly) by_homfly_[r.homfly_mirror].push_back(r.name);
    }
}

const KnotRecord* InvariantTable::find(const std::string& name) const {
    const auto it = by_name_.find(name);
    return it == by_name_.end() ? nullptr : &records_[it->second];
}

std::vector<std::string> InvariantTable::lookup(const LaurentPoly2& p) const {
    const auto it = by_homfly_.find(p);
    return it == by_homfly_.end() ? std::vector<std::string>{} : it->second;
}

int crossing_number_of(const std::string& name) {
    const auto us = name.find('_');
    try {
        return std::stoi(name.substr(0, us));
    } catch (const std::exception&) {
        throw ParseError("knot name '" + name + "' does not start with a crossing number");
    }
}

InvariantTable compute_table(const fs::path& pd_file, std::size_t budget) {
    std::vector<KnotRecord> records;
    for (const auto& e : read_pd_entries(read_file(pd_file))) {
        KnotRecord r;
        r.name = e.name;
        r.crossing_number = crossing_number_of(e.name);
        r.pd = e.pd;
        const LinkDiagram d = parse_pd(e.pd);
        r.homfly = homfly(d, budget);
        r.homfly_mirror = mirror_homfly(d, budget);
        r.alexander = alexander(d);
        records.push_back(std::move(r));
    }
    return InvariantTable(std::move(records));
}

InvariantTable build_table(const fs::path& pd_file, const fs::path& cache_file) {
    const std::string source = read_file(pd_file);
    const std::string header = "# source-hash " + fnv1a_hex(source);
    const auto entries = read_pd_entries(source);

    // Reuse the cache when it was written for this exact source.
    if (std::ifstream cache(cache_file); cache) {
        std::string line;
        if (std::getline(cache, line) && strip_cr(line) == header) {
            std::vector<KnotRecord> records;
            bool ok = true;
            std::size_t i = 0;
            while (ok && std::getline(cache, line)) {
                line = strip_cr(line);
                if (skippable(line)) continue;
                const auto f = split_tabs(line);
                if (f.size() != 4 || i >= entries.size() || f[0] != entries[i].name) {
                    ok = false;
                    break;
                }
                try {
                    KnotRecord r;
                    r.name = f[0];
                    r.crossing_number = crossing_number_of(f[0]);
                    r.pd = entries[i].pd;
                    r.homfly = parse_laurent<2>(f[1]);
                    r.homfly_mirror = parse_laurent<2>(f[2]);
                    r.alexander = parse_laurent<1>(f[3]);
                    records.push_back(std::move(r));
                } catch (const ParseError&) {
                    ok = false;
                }
                ++i;
            }
            if (ok && records.size() == entries.size()) return InvariantTable(std::move(records));
        }
    }

    InvariantTable table = compute_table(pd_file);
    // A cache that cannot be written only costs a recomputation next time.
    std::error_code ec;
    if (cache_file.has_parent_path()) fs::create_directories(cache_file.parent_path(), ec);
    const fs::path tmp = cache_file.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) return table;
        out << header << '\n';
        for (const auto& r : table.records())
            out << r.name << '\t' << to_string(r.homfly) << '\t' << to_string(r.homfly_mirror) << '\t'
                << to_string(r.alexander) << '\n';
        if (!out) return table;
    }
    fs::rename(tmp, cache_file, ec);
    if (ec) fs::remove(tmp, ec);
    return table;
}

fs::path data_dir() {
    if (const char* env = std::getenv("TORIC_DATA_DIR"); env && *env) return env;
    return TORIC_SOURCE_DATA_DIR;
}

fs::path default_cache_path() {
    if (const char* env = std::getenv("TORIC_TABLE_CACHE"); env && *env) return env;
    std::error_code ec;
    const fs::path tmp = fs::temp_directory_path(ec);
    return (ec ? fs::path(".") : tmp) / "toric-invariants.tsv";
}

const InvariantTable& bundled_table() {
    static const InvariantTable table = build_table(data_dir() / "knots_pd.tsv", default_cache_path());
    return table;
}

std::string Identification::label() const {
    switch (status) {
        case IdStatus::link: return "link";
        case IdStatus::budget: return "budget";
        case IdStatus::unknown: return "unknown";
        case IdStatus::match:
        case IdStatus::ambiguous: {
            std::string s;
            for (const auto& n : names) s += (s.empty() ? "" : "|") + n;
            return s;
        }
    }
    return "unknown";
}

Identification identify(const LinkDiagram& d, const InvariantTable& table, std::size_t budget) {
    Identification id;
    id.components = d.component_count();
    if (id.components != 1) {
        id.status = IdStatus::link;
        return id;
    }
    const LinkDiagram s = simplify(d);
    LaurentPoly2 p;
    try {
        p = homfly(s, budget);
    } catch (const BudgetExceeded&) {
        id.status = IdStatus::budget;
        return id;
    }
    id.homfly = to_string(p);
    std::vector<std::string> names;
    for (const auto& name : table.lookup(p)) {
        const KnotRecord* r = table.find(name);
        if (r && r->crossing_number <= s.crossing_count()) names.push_back(name);
    }
    if (names.size() > 1) {
        const LaurentPoly1 a = alexander(s);
        std::erase_if(names, [&](const std::string& name) { return table.find(name)->alexander != a; });
    }
    std::sort(names.begin(), names.end());
    id.names = names;
    id.status = names.empty() ? IdStatus::unknown : names.size() == 1 ? IdStatus::match : IdStatus::ambiguous;
    return id;
}

std::vector<CensusRow> CensusReport::csv_rows() const {
    std::vector<CensusRow> out;
    if (!rows.empty()) {
        out = rows;
    } else {
        for (const auto& [label, row] : witnesses) out.push_back(row);
    }
    std::sort(out.begin(), out.end(), [](const CensusRow& a, const CensusRow& b) {
        const auto la = a.id.label(), lb = b.id.label();
        return la != lb ? la < lb : a.code < b.code;
    });
    return out;
}

CensusReport run_census(int n, const InvariantTable& table, const CensusOptions& opts) {
    if (n < 1) throw DomainError("census needs n >= 1");
    EnumOptions eo;
    eo.n = n;
    eo.symmetry_reduce = opts.symmetry_reduce;
    const auto prefixes = partition_prefixes(eo, 2);
    const int jobs = std::max(1, opts.jobs);
    std::vector<CensusReport> parts(prefixes.size());
    // One identification cache per worker thread, keyed by simplified diagram.
    std::vector<std::map<std::vector<int>, Identification>> caches(static_cast<std::size_t>(jobs));

    parallel_for(int(prefixes.size()), jobs, [&](int task, int worker) {
        auto& part = parts[std::size_t(task)];
        auto& cache = caches[std::size_t(worker)];
        EnumOptions sub = eo;
        sub.prefix = prefixes[std::size_t(task)];
        enumerate(sub, [&](std::string_view code) {
            ++part.mosaics;
            const LinkDiagram d = trace(decode(code));
            Identification id;
            if (d.component_count() != 1) {
                id.status = IdStatus::link;
                id.components = d.component_count();
            } else {
                const LinkDiagram s = simplify(d);
                if (s.crossing_count() == 0) {
                    id = identify(s, table, opts.budget);
                } else {
                    auto key = canonical_key(s);
                    const auto it = cache.find(key);
                    if (it != cache.end()) {
                        id = it->second;
                    } else {
                        id = identify(s, table, opts.budget);
                        cache.emplace(std::move(key), id);
                    }
                }
            }
            CensusRow row{std::string(code), n, id};
            switch (id.status) {
                case IdStatus::link: ++part.links; break;
                case IdStatus::unknown: ++part.unknown; break;
                case IdStatus::ambiguous: ++part.ambiguous; break;
                case IdStatus::budget: ++part.budget_failures; break;
                case IdStatus::match: part.names.insert(id.names.front()); break;
            }
            if (id.status != IdStatus::link) {
                ++part.knots;
                auto label = id.label();
                if (id.status == IdStatus::unknown) label += " " + id.homfly;
                part.witnesses.try_emplace(label, row);
            }
            if (opts.all_rows) part.rows.push_back(std::move(row));
        });
    });

    CensusReport report;
    report.n = n;
    for (auto& part : parts) {
        report.mosaics += part.mosaics;
        report.knots += part.knots;
        report.links += part.links;
        report.unknown += part.unknown;
        report.ambiguous += part.ambiguous;
        report.budget_failures += part.budget_failures;
        report.names.insert(part.names.begin(), part.names.end());
        for (auto& [label, row] : part.witnesses) {
            auto [it, inserted] = report.witnesses.try_emplace(label, row);
            if (!inserted && row.code < it->second.code) it->second = row;
        }
        std::move(part.rows.begin(), part.rows.end(), std::back_inserter(report.rows));
    }
    return report;
}

std::string census_csv(const CensusReport& report) {
    std::ostringstream out;
    out << "code,n,components,identification,homfly\n";
    for (const auto& row : report.csv_rows())
        out << row.code << ',' << row.n << ',' << row.id.components << ',' << row.id.label() << ',' << row.id.homfly
            << '\n';
    return out.str();
}

fs::path default_appendix_path() { return data_dir() / "appendix.tsv"; }

std::vector<AppendixRow> read_appendix(const fs::path& file) {
    std::vector<AppendixRow> rows;
    std::istringstream in(read_file(file));
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        line = strip_cr(line);
        if (skippable(line)) continue;
        const auto f = split_tabs(line);
        if (f.size() != 3 || f[0].empty() || f[1].empty() || f[2].empty())
            throw ParseError("appendix line " + std::to_string(line_no) + ": expected name<TAB>bound<TAB>code");
        rows.push_back({f[0], f[1], f[2]});
    }
    return rows;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::pass: return "PASS";
        case Verdict::ambiguous: return "AMBIGUOUS";
        case Verdict::fail: return "FAIL";
        case Verdict::skip: return "SKIP";
    }
    return "SKIP";
}

AppendixResult verify_row(const AppendixRow& row, const InvariantTable& table) {
    AppendixResult res{row, Verdict::skip, ""};
    if (row.code == "n/a") {
        res.detail = "no code listed";
        return res;
    }
    Mosaic m;
    try {
        m = decode(row.code);
    } catch (const ParseError& e) {
        res.verdict = Verdict::fail;
        res.detail = e.what();
        return res;
    }
    if (!is_suitably_connected(m)) {
        res.verdict = Verdict::fail;
        res.detail = "not suitably connected";
        return res;
    }
    const Identification id = identify(trace(m), table);
    res.detail = "identified as " + id.label();
    const bool listed = std::find(id.names.begin(), id.names.end(), row.name) != id.names.end();
    if (!listed) {
        res.verdict = Verdict::fail;
    } else {
        res.verdict = id.names.size() == 1 ? Verdict::pass : Verdict::ambiguous;
    }
    const bool numeric = !row.bound.empty() && std::all_of(row.bound.begin(), row.bound.end(), ::isdigit);
    if (numeric && std::stoi(row.bound) != m.size()) {
        res.verdict = Verdict::fail;
        res.detail += "; side length " + std::to_string(m.size()) + " differs from listed bound " + row.bound;
    }
    return res;
}

std::vector<AppendixResult> verify_appendix(const std::vector<AppendixRow>& rows, const InvariantTable& table,
                                            int jobs) {
    std::vector<AppendixResult> out(rows.size());
    parallel_for(int(rows.size()), jobs, [&](int i, int) { out[std::size_t(i)] = verify_row(rows[std::size_t(i)], table); });
    return out;
}

std::vector<std::string> census_discrepancies(const CensusReport& report, const std::vector<AppendixRow>& rows) {
    std::vector<std::string> out;
    const std::string n = std::to_string(report.n);
    std::map<std::string, const AppendixRow*> by_name;
    for (const auto& r : rows) by_name.emplace(r.name, &r);
    for (const auto& name : report.names) {
        const auto it = by_name.find(name);
        if (it == by_name.end()) continue;
        // A knot realized at n contradicts any listed bound above n.
        const auto& b = it->second->bound;
        const auto digits = b.find_first_of("0123456789");
        if (digits != std::string::npos && std::stoi(b.substr(digits)) > report.n) {
            const auto& w = report.witnesses.at(name);
            out.push_back(name + ": realized on a " + n + "-mosaic (" + w.code + ") but listed with bound " +
                          it->second->bound);
        }
    }
    for (const auto& r : rows) {
        if (r.bound == n && !report.names.count(r.name))
            out.push_back(r.name + ": listed with bound " + n + " (" + r.code + ") but not realized by the census");
    }
    for (const auto& [label, row] : report.witnesses)
        if (row.id.status == IdStatus::ambiguous || row.id.status == IdStatus::unknown ||
            row.id.status == IdStatus::budget)
            out.push_back(label + ": " + row.code);
    return out;
}

}  // namespace toric
