#include "dctlab/catalog_store.hpp"

#include <cmath>
#include <cstdlib>
#include <ctime>
#include <fstream>

#include "json.hpp"

#include "dctlab/fast_transform.hpp"
#include "dctlab/matrix_lab.hpp"

namespace dctlab {

namespace {

using nlohmann::json;

constexpr const char* kVersion = "1.0.0";

json matrix_to_json(const IntMatrix8& m) {
    json rows = json::array();
    for (int i = 0; i < 8; ++i) {
        json row = json::array();
        for (int j = 0; j < 8; ++j) row.push_back(m.e[i][j]);
        rows.push_back(std::move(row));
    }
    return rows;
}

IntMatrix8 matrix_from_json(const json& j) {
    if (!j.is_array() || j.size() != 8) throw CatalogError("matrix must be an 8x8 array");
    IntMatrix8 m;
    for (int i = 0; i < 8; ++i) {
        if (!j[i].is_array() || j[i].size() != 8) throw CatalogError("matrix must be an 8x8 array");
        for (int jj = 0; jj < 8; ++jj) m.e[i][jj] = j[i][jj].get<std::int64_t>();
    }
    return m;
}

json interval_to_json(const AlphaInterval& iv) {
    return {{"lo_symbol", iv.lo.text()}, {"hi_symbol", iv.hi.text()},
            {"lo", iv.lo.value()},       {"hi", iv.hi.value()},
            {"lo_closed", iv.lo_closed}, {"hi_closed", iv.hi_closed}};
}

AlphaSymbol symbol_from_text(const std::string& s) {
    if (s == "0") return {0, 0};
    const auto slash = s.find("/g");
    if (slash == std::string::npos) throw CatalogError("bad interval symbol '" + s + "'");
    return {std::stoi(s.substr(0, slash)), std::stoi(s.substr(slash + 2))};
}

AlphaInterval interval_from_json(const json& j) {
    AlphaInterval iv;
    iv.lo = symbol_from_text(j.at("lo_symbol").get<std::string>());
    iv.hi = symbol_from_text(j.at("hi_symbol").get<std::string>());
    iv.lo_closed = j.at("lo_closed").get<bool>();
    iv.hi_closed = j.at("hi_closed").get<bool>();
    return iv;
}

json record_to_json(const ApproximationRecord& r) {
    json j;
    j["name"] = r.name;
    j["alias"] = r.alias ? json(*r.alias) : json(nullptr);
    j["classification"] = std::string(to_string(r.classification));
    if (r.is_exact_dct()) return j;

    j["function"] = std::string(to_string(r.provenance.front().function));
    j["interval"] = interval_to_json(r.provenance.front().interval);
    json prov = json::array();
    for (const Provenance& p : r.provenance)
        prov.push_back({{"function", std::string(to_string(p.function))},
                        {"interval", interval_to_json(p.interval)}});
    j["provenance"] = std::move(prov);
    j["matrix"] = matrix_to_json(r.matrix);
    j["delta"] = r.delta;
    j["diag_gram"] = r.diag_gram;
    if (r.inverse) {
        json diag = json::array();
        for (const Rational& q : r.inverse->column_scale) diag.push_back(q.to_string());
        j["inverse"] = {{"matrix", matrix_to_json(r.inverse->integer_part)},
                        {"diagonal", std::move(diag)}};
    } else {
        j["inverse"] = nullptr;
    }
    if (r.equivalent_to) j["equivalent_to"] = *r.equivalent_to;
    return j;
}

ApproximationRecord record_from_json(const json& j) {
    ApproximationRecord r;
    r.name = j.at("name").get<std::string>();
    if (j.contains("alias") && !j["alias"].is_null()) r.alias = j["alias"].get<std::string>();
    const auto cls = classification_from_string(j.at("classification").get<std::string>());
    if (!cls) throw CatalogError("unknown classification in record '" + r.name + "'");
    r.classification = *cls;
    if (r.is_exact_dct()) return r;

    r.matrix = matrix_from_json(j.at("matrix"));
    for (const json& p : j.at("provenance")) {
        const auto fn = int_func_from_string(p.at("function").get<std::string>());
        if (!fn) throw CatalogError("unknown function in record '" + r.name + "'");
        r.provenance.push_back({*fn, interval_from_json(p.at("interval"))});
    }
    r.delta = j.at("delta").get<double>();
    for (int i = 0; i < 8; ++i) r.diag_gram[i] = j.at("diag_gram")[i].get<std::int64_t>();
    if (j.contains("inverse") && !j["inverse"].is_null()) {
        InverseFactorization inv;
        inv.integer_part = matrix_from_json(j["inverse"].at("matrix"));
        for (int i = 0; i < 8; ++i)
            inv.column_scale[i] = rational_from_string(j["inverse"].at("diagonal")[i].get<std::string>());
        r.inverse = inv;
    }
    if (j.contains("equivalent_to") && !j["equivalent_to"].is_null())
        r.equivalent_to = j["equivalent_to"].get<std::string>();
    return r;
}

std::string timestamp() {
    std::time_t t;
    if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH"))
        t = static_cast<std::time_t>(std::strtoll(epoch, nullptr, 10));
    else
        t = std::time(nullptr);
    char buf[32];
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

void recheck_record(const ApproximationRecord& r) {
    if (r.is_exact_dct()) return;
    const IntMatrix8 g = gram(r.matrix);
    for (int i = 0; i < 8; ++i)
        if (g.e[i][i] != r.diag_gram[i])
            throw CatalogError("record '" + r.name + "': stored gram diagonal disagrees with matrix");
    if (std::abs(deviation_from_diagonality(g) - r.delta) > 1e-12)
        throw CatalogError("record '" + r.name + "': stored deviation disagrees with matrix");

    Classification expect;
    if (!entries_in_C(r.matrix))
        expect = Classification::Rejected;
    else if (r.matrix.has_null_row())
        expect = Classification::Degenerate;
    else if (g.is_diagonal())
        expect = Classification::Orthogonal;
    else if (within_deviation_threshold(g) && determinant(r.matrix) != 0 &&
             factor_inverse_lowcomplexity(exact_inverse(r.matrix)).has_value())
        expect = Classification::NearOrthogonal;
    else
        expect = Classification::Rejected;
    if (expect != r.classification)
        throw CatalogError("record '" + r.name + "': stored classification disagrees with matrix");
    if (r.classification == Classification::NearOrthogonal) {
        if (!r.inverse) throw CatalogError("record '" + r.name + "': missing inverse factorization");
        const auto expect_inv = factor_inverse_lowcomplexity(exact_inverse(r.matrix));
        if (!(expect_inv->integer_part == r.inverse->integer_part) ||
            expect_inv->column_scale != r.inverse->column_scale)
            throw CatalogError("record '" + r.name + "': stored inverse disagrees with matrix");
    }
}

} // namespace

void save_catalog(const std::vector<ApproximationRecord>& records,
                  const std::filesystem::path& path) {
    json j;
    j["version"] = kVersion;
    j["generated_at"] = timestamp();
    json recs = json::array();
    for (const ApproximationRecord& r : records) recs.push_back(record_to_json(r));
    j["records"] = std::move(recs);
    json plans = json::object();
    for (const ApproximationRecord& r : records) {
        if (!r.plan_constants) continue;
        const TransformPlan plan = build_plan(r);
        plans[r.name] = {{"m", *r.plan_constants},
                         {"multiplications", plan.counts.multiplications},
                         {"additions", plan.counts.additions},
                         {"shifts", plan.counts.shifts}};
    }
    j["plans"] = std::move(plans);

    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw std::runtime_error("cannot write '" + tmp.string() + "'");
        out << j.dump(2) << '\n';
        if (!out) throw std::runtime_error("write failed for '" + tmp.string() + "'");
    }
    std::filesystem::rename(tmp, path);
}

CatalogFile load_catalog(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open catalog '" + path.string() + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw CatalogError("catalog parse error: " + std::string(e.what()));
    }
    CatalogFile file;
    try {
        file.version = j.at("version").get<std::string>();
        file.generated_at = j.at("generated_at").get<std::string>();
        for (const json& rj : j.at("records")) file.records.push_back(record_from_json(rj));
    } catch (const json::exception& e) {
        throw CatalogError("catalog schema error: " + std::string(e.what()));
    } catch (const std::logic_error& e) {  // unparsable numeric fields
        throw CatalogError("catalog schema error: " + std::string(e.what()));
    }
    // restore derived fields and re-verify stored ones
    for (ApproximationRecord& r : file.records) {
        recheck_record(r);
        if (r.classification == Classification::Orthogonal ||
            r.classification == Classification::NearOrthogonal)
            r.scaling = orthonormalize(r.matrix);
        if (const ReferenceTransform* ref = find_reference(r.name))
            if (ref->matrix == r.matrix) r.plan_constants = ref->plan_m;
    }
    return file;
}

std::filesystem::path resolve_catalog_path(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("DCTLAB_CATALOG")) return env;
    return "catalog.json";
}

} // namespace dctlab
