#ifndef DCTLAB_CATALOG_STORE_HPP
#define DCTLAB_CATALOG_STORE_HPP

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "dctlab/search.hpp"

namespace dctlab {

/// Schema violation or failed invariant recheck on load (tamper detection).
class CatalogError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct CatalogFile {
    std::string version;
    std::string generated_at;
    std::vector<ApproximationRecord> records;
};

/// Writes catalog.json atomically (temp file + rename). Honors
/// SOURCE_DATE_EPOCH for a reproducible timestamp.
void save_catalog(const std::vector<ApproximationRecord>& records,
                  const std::filesystem::path& path);

/// Parses and re-derives every stored matrix's gram diagonal, deviation and
/// classification; a disagreement with the stored values raises CatalogError.
/// Plain I/O problems raise std::runtime_error.
CatalogFile load_catalog(const std::filesystem::path& path);

/// Catalog path resolution: explicit flag > DCTLAB_CATALOG > ./catalog.json.
std::filesystem::path resolve_catalog_path(const std::string& flag_value);

} // namespace dctlab

#endif
