#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "toric/diagram.hpp"
#include "toric/invariants.hpp"
#include "toric/laurent.hpp"

namespace toric {

struct KnotRecord {
    std::string name;
    int crossing_number = 0;
    std::string pd;
    LaurentPoly2 homfly;
    LaurentPoly2 homfly_mirror;
    LaurentPoly1 alexander;
};

class InvariantTable {
public:
    InvariantTable() = default;
    explicit InvariantTable(std::vector<KnotRecord> records);

    const std::vector<KnotRecord>& records() const { return records_; }
    const KnotRecord* find(const std::string& name) const;
    /// Names whose HOMFLY-PT polynomial, in either chirality, equals `p`.
    std::vector<std::string> lookup(const LaurentPoly2& p) const;
    std::size_t size() const { return records_.size(); }

private:
    std::vector<KnotRecord> records_;
    std::map<std::string, std::size_t> by_name_;
    std::map<LaurentPoly2, std::vector<std::string>> by_homfly_;
};

/// Crossing number read from a name such as "10_124".
int crossing_number_of(const std::string& name);

/// Reads "name<TAB>PD[...]" lines and computes every record.
InvariantTable compute_table(const std::filesystem::path& pd_file, std::size_t budget = default_homfly_budget);

/// compute_table with a cache file keyed by a hash of the PD file; the cache
/// is rewritten whenever the hash differs.
InvariantTable build_table(const std::filesystem::path& pd_file, const std::filesystem::path& cache_file);

/// Bundled data directory: $TORIC_DATA_DIR, else the source tree's data/.
std::filesystem::path data_dir();
/// $TORIC_TABLE_CACHE, else a file in the system temp directory.
std::filesystem::path default_cache_path();
/// build_table on the bundled PD asset and the default cache.
const InvariantTable& bundled_table();

enum class IdStatus { match, ambiguous, unknown, link, budget };

struct Identification {
    IdStatus status = IdStatus::unknown;
    std::vector<std::string> names;
    std::string homfly;  // canonical text; empty for links and budget failures
    int components = 1;

    /// "name", "a|b", "unknown", "link" or "budget".
    std::string label() const;
};

/// Matches HOMFLY-PT against the table in both chiralities, then drops
/// candidates with a different Alexander polynomial or a crossing number
/// above the crossing count of the simplified diagram.
Identification identify(const LinkDiagram& d, const InvariantTable& table, std::size_t budget = default_homfly_budget);

struct CensusOptions {
    int jobs = 1;
    bool symmetry_reduce = true;
    /// Keep one row per mosaic instead of one witness per identification.
    bool all_rows = false;
    std::size_t budget = default_homfly_budget;
};

struct CensusRow {
    std::string code;
    int n = 0;
    Identification id;
};

struct CensusReport {
    int n = 0;
    std::uint64_t mosaics = 0;
    std::uint64_t knots = 0;
    std::uint64_t links = 0;
    std::uint64_t unknown = 0;
    std::uint64_t ambiguous = 0;
    std::uint64_t budget_failures = 0;
    /// Identified table names, unambiguous matches only.
    std::set<std::string> names;
    /// Least code per identification label (links excluded).
    std::map<std::string, CensusRow> witnesses;
    /// Every mosaic, when requested.
    std::vector<CensusRow> rows;

    /// Rows in output order: sorted by (label, code).
    std::vector<CensusRow> csv_rows() const;
};

CensusReport run_census(int n, const InvariantTable& table, const CensusOptions& opts = {});

std::string census_csv(const CensusReport& report);

struct AppendixRow {
    std::string name;
    std::string bound;  // "3", ">=4", ...
    std::string code;   // "n/a" when absent
};

std::vector<AppendixRow> read_appendix(const std::filesystem::path& file);
/// Bundled "name<TAB>bound<TAB>code" table of claimed realizations.
std::filesystem::path default_appendix_path();

enum class Verdict { pass, ambiguous, fail, skip };

std::string to_string(Verdict v);

struct AppendixResult {
    AppendixRow row;
    Verdict verdict = Verdict::skip;
    std::string detail;
};

AppendixResult verify_row(const AppendixRow& row, const InvariantTable& table);
std::vector<AppendixResult> verify_appendix(const std::vector<AppendixRow>& rows, const InvariantTable& table,
                                            int jobs = 1);

/// Disagreements between a census and the listed bounds at the same n:
/// names realized at n but listed with a larger bound, and rows listing
/// bound n whose name the census did not realize.
std::vector<std::string> census_discrepancies(const CensusReport& report, const std::vector<AppendixRow>& rows);

}  // namespace toric
