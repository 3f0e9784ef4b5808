#pragma once

#include <sstream>
#include <string>

#include <json.hpp>

#include <symres/decompose.hpp>
#include <symres/parse.hpp>
#include <symres/resurgence.hpp>

namespace symres {

using Json = nlohmann::json;

/// All emitted objects carry a top-level `"schema": 1` for golden-file
/// stability.
inline constexpr int json_schema_version = 1;

inline Json ring_to_json(const RingPtr& ring) { return Json(ring->names()); }

inline Json ideal_to_json(const MonomialIdeal& ideal) {
    Json j;
    j["schema"] = json_schema_version;
    j["ring"] = ring_to_json(ideal.ring());
    Json gens = Json::array();
    for (const Monomial& g : ideal.generators()) gens.push_back(g.exponents());
    j["generators"] = std::move(gens);
    return j;
}

inline RingPtr ring_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw domain_error("JSON ring must be a non-empty array");
    return make_ring(j.get<std::vector<std::string>>());
}

inline MonomialIdeal ideal_from_json(const Json& j) {
    if (!j.contains("ring") || !j.contains("generators"))
        throw domain_error("JSON ideal needs 'ring' and 'generators'");
    RingPtr ring = ring_from_json(j.at("ring"));
    std::vector<Monomial> gens;
    for (const Json& e : j.at("generators"))
        gens.emplace_back(ring, e.get<std::vector<Exp>>());
    return MonomialIdeal::make(std::move(ring), std::move(gens));
}

inline Json certificate_to_json(const ContainmentCertificate& cert, const RingPtr& ring) {
    Json j;
    j["schema"] = json_schema_version;
    j["ring"] = ring_to_json(ring);
    j["m"] = cert.m;
    j["r"] = cert.r;
    j["verdict"] = cert.contained ? "contained" : "not-contained";
    j["ratio"] = cert.ratio().str();
    if (cert.witness) j["witness"] = cert.witness->exponents();
    return j;
}

inline ContainmentCertificate certificate_from_json(const Json& j) {
    ContainmentCertificate cert;
    RingPtr ring = ring_from_json(j.at("ring"));
    cert.m = j.at("m").get<long>();
    cert.r = j.at("r").get<long>();
    std::string verdict = j.at("verdict").get<std::string>();
    if (verdict == "contained")
        cert.contained = true;
    else if (verdict == "not-contained")
        cert.contained = false;
    else
        throw domain_error("unknown certificate verdict '" + verdict + "'");
    if (j.contains("witness"))
        cert.witness = Monomial(ring, j.at("witness").get<std::vector<Exp>>());
    if (!cert.contained && !cert.witness)
        throw domain_error("not-contained certificate without witness");
    return cert;
}

inline Json scan_report_to_json(const ScanReport& report, const RingPtr& ring) {
    Json j;
    j["schema"] = json_schema_version;
    j["ring"] = ring_to_json(ring);
    j["max_m"] = report.max_m;
    j["max_r"] = report.max_r;
    Json grid = Json::array();
    for (const auto& row : report.contained) grid.push_back(row);
    j["contained"] = std::move(grid);
    if (report.best_ratio) j["best_ratio"] = report.best_ratio->str();
    Json cells = Json::array();
    for (const auto& cell : report.best_cells) {
        Json c;
        c["m"] = cell.m;
        c["r"] = cell.r;
        c["witness"] = cell.witness.exponents();
        cells.push_back(std::move(c));
    }
    j["best_cells"] = std::move(cells);
    j["note"] = ScanReport::note;
    return j;
}

inline Json bound_report_to_json(const BoundReport& report) {
    Json j;
    j["schema"] = json_schema_version;
    j["a"] = report.a.str();
    j["b"] = report.b.str();
    j["bound"] = report.bound.str();
    j["rule"] = report.rule;
    return j;
}

inline std::string emit_text(const MonomialIdeal& ideal) { return ideal.str(); }

inline std::string emit_json(const MonomialIdeal& ideal) { return ideal_to_json(ideal).dump(2); }

inline std::string emit_json(const ContainmentCertificate& cert, const RingPtr& ring) {
    return certificate_to_json(cert, ring).dump(2);
}

inline std::string emit_json(const ScanReport& report, const RingPtr& ring) {
    return scan_report_to_json(report, ring).dump(2);
}

inline std::string emit_json(const BoundReport& report) {
    return bound_report_to_json(report).dump(2);
}

inline std::string emit_text(const ContainmentCertificate& cert) {
    std::ostringstream os;
    if (cert.contained) {
        os << "contained: I^(" << cert.m << ") lies inside I^" << cert.r
           << " (every minimal generator checked)";
    } else {
        os << "not contained: I^(" << cert.m << ") is not inside I^" << cert.r << ", witness "
           << cert.witness->str() << " (ratio " << cert.ratio().str() << ")";
    }
    return os.str();
}

inline std::string emit_text(const ScanReport& report) {
    std::ostringstream os;
    for (long m = 1; m <= report.max_m; ++m) {
        os << "m=" << m << ":";
        for (long r = 1; r <= report.max_r; ++r)
            os << " " << (report.cell(m, r) ? "C" : "-");
        os << "\n";
    }
    if (report.best_ratio) {
        os << "lower bound for the resurgence: " << report.best_ratio->str();
        for (const auto& cell : report.best_cells)
            os << "\n  attained at (" << cell.m << ", " << cell.r << "), witness "
               << cell.witness.str();
    } else {
        os << "no non-containment found on this grid";
    }
    os << "\nnote: " << ScanReport::note;
    return os.str();
}

inline std::string emit_text(const BoundReport& report) {
    std::ostringstream os;
    os << "upper bound max{" << report.a.str() << ", " << report.b.str() << ", 2("
       << report.a.str() << "+" << report.b.str() << ")/3} = " << report.bound.str()
       << " (rule: " << report.rule << ")";
    return os.str();
}

} // namespace symres
