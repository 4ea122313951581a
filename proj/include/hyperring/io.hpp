#pragma once

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hyperring/core.hpp"
#include "hyperring/partition.hpp"
#include "hyperring/quotient.hpp"
#include "hyperring/relation.hpp"

namespace hyperring {

using Json = nlohmann::ordered_json;

// ---- .hr documents ---------------------------------------------------------
//
// {
//   "q": 4,
//   "axiomMode": "strong-distributive" | "inclusive-distributive"  (optional),
//   "names": ["zero", ...]                                         (optional),
//   "plus":  q x q array of sorted, duplicate-free element arrays,
//   "times": likewise
// }

struct HyperringDocument {
    Hyperring structure;
    std::vector<std::string> names;  // empty when absent
};

namespace detail {

inline HyperOp parse_op_table(const Json& doc, const std::string& key, int q) {
    if (!doc.contains(key)) throw InputError("missing field '" + key + "'");
    const Json& rows = doc.at(key);
    if (!rows.is_array() || static_cast<int>(rows.size()) != q)
        throw InputError("field '" + key + "' must be a " + std::to_string(q) + "-row array");
    std::vector<SubsetMask> cells;
    cells.reserve(static_cast<std::size_t>(q) * q);
    for (int x = 0; x < q; ++x) {
        const Json& row = rows.at(static_cast<std::size_t>(x));
        if (!row.is_array() || static_cast<int>(row.size()) != q)
            throw InputError("row " + key + "." + std::to_string(x) + " must have " +
                             std::to_string(q) + " cells");
        for (int y = 0; y < q; ++y) {
            const std::string path = key + "." + std::to_string(x) + "." + std::to_string(y);
            const Json& cell = row.at(static_cast<std::size_t>(y));
            if (!cell.is_array()) throw InputError("cell " + path + " must be an array");
            if (cell.empty()) throw InputError("cell " + path + " is empty");
            SubsetMask m = SubsetMask::empty_set(q);
            int prev = -1;
            for (const Json& v : cell) {
                if (!v.is_number_integer()) throw InputError("cell " + path + " has a non-integer entry");
                const int z = v.get<int>();
                if (z < 0 || z >= q)
                    throw InputError("cell " + path + " entry " + std::to_string(z) + " out of range [0," +
                                     std::to_string(q) + ")");
                if (z <= prev) throw InputError("cell " + path + " entries must be sorted and duplicate-free");
                prev = z;
                m.set(z);
            }
            cells.push_back(m);
        }
    }
    return HyperOp(q, std::move(cells));
}

}  // namespace detail

inline HyperringDocument parse_document(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::parse_error& err) {
        throw InputError(err.what());  // message carries line and column
    }
    if (!doc.is_object()) throw InputError("document must be an object");
    if (!doc.contains("q") || !doc.at("q").is_number_integer())
        throw InputError("missing integer field 'q'");
    const int q = doc.at("q").get<int>();
    if (q < 1 || q > kMaxCarrier)
        throw InputError("q must lie in [1," + std::to_string(kMaxCarrier) + "]");

    AxiomMode mode = AxiomMode::StrongDistributive;
    if (doc.contains("axiomMode")) {
        const std::string m = doc.at("axiomMode").get<std::string>();
        if (m == "strong-distributive")
            mode = AxiomMode::StrongDistributive;
        else if (m == "inclusive-distributive")
            mode = AxiomMode::InclusiveDistributive;
        else
            throw InputError("axiomMode must be strong-distributive or inclusive-distributive");
    }
    HyperringDocument out;
    out.structure = Hyperring(detail::parse_op_table(doc, "plus", q),
                              detail::parse_op_table(doc, "times", q), mode);
    if (doc.contains("names")) {
        const Json& names = doc.at("names");
        if (!names.is_array() || static_cast<int>(names.size()) != q)
            throw InputError("names must list exactly q labels");
        for (const Json& n : names) out.names.push_back(n.get<std::string>());
    }
    return out;
}

inline Json op_to_json(const HyperOp& op) {
    Json rows = Json::array();
    for (int x = 0; x < op.size(); ++x) {
        Json row = Json::array();
        for (int y = 0; y < op.size(); ++y) {
            Json cell = Json::array();
            op.at(x, y).for_each([&](ElementId z) { cell.push_back(z); });
            row.push_back(std::move(cell));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

// Canonical form: one table row per line; parse(serialize(x)) == x on bytes.
inline std::string serialize_document(const HyperringDocument& doc) {
    std::ostringstream os;
    os << "{\n  \"q\": " << doc.structure.q << ",\n  \"axiomMode\": "
       << (doc.structure.axiom_mode == AxiomMode::StrongDistributive ? "\"strong-distributive\""
                                                                     : "\"inclusive-distributive\"")
       << ",\n";
    if (!doc.names.empty()) {
        os << "  \"names\": [";
        for (std::size_t i = 0; i < doc.names.size(); ++i)
            os << (i ? ", " : "") << Json(doc.names[i]).dump();
        os << "],\n";
    }
    auto write_op = [&](const char* key, const HyperOp& op, bool trailing_comma) {
        os << "  \"" << key << "\": [\n";
        for (int x = 0; x < op.size(); ++x) {
            os << "    [";
            for (int y = 0; y < op.size(); ++y) {
                os << (y ? ", [" : "[");
                bool first = true;
                op.at(x, y).for_each([&](ElementId z) {
                    os << (first ? "" : ",") << z;
                    first = false;
                });
                os << "]";
            }
            os << (x + 1 < op.size() ? "],\n" : "]\n");
        }
        os << (trailing_comma ? "  ],\n" : "  ]\n");
    };
    write_op("plus", doc.structure.plus, true);
    write_op("times", doc.structure.times, false);
    os << "}\n";
    return os.str();
}

inline HyperringDocument load_document(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_document(ss.str());
}

// ---- report scaffolding ----------------------------------------------------

inline std::string fnv1a_digest(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[24];
    std::snprintf(buf, sizeof buf, "fnv1a:%016llx", static_cast<unsigned long long>(h));
    return buf;
}

inline Json mask_to_json(const SubsetMask& m) {
    Json out = Json::array();
    m.for_each([&](ElementId x) { out.push_back(x); });
    return out;
}

inline Json relation_to_json(const Relation& rel) {
    Json pairs = Json::array();
    for (const auto& [i, j] : rel.upper_pairs()) pairs.push_back(Json::array({i, j}));
    return Json{{"q", rel.size()}, {"pairs", std::move(pairs)}};
}

inline Json partition_to_json(const Partition& p) {
    Json classes = Json::array();
    for (const SubsetMask& c : p.classes()) classes.push_back(mask_to_json(c));
    return Json{{"q", p.size()}, {"classCount", p.class_count()}, {"classes", std::move(classes)}};
}

inline Json quotient_to_json(const QuotientRing& qr) {
    Json classes = Json::array();
    for (const SubsetMask& c : qr.classes) classes.push_back(mask_to_json(c));
    Json add = Json::array(), mul = Json::array();
    for (int c = 0; c < qr.class_count; ++c) {
        Json arow = Json::array(), mrow = Json::array();
        for (int d = 0; d < qr.class_count; ++d) {
            arow.push_back(qr.add(c, d));
            mrow.push_back(qr.mul(c, d));
        }
        add.push_back(std::move(arow));
        mul.push_back(std::move(mrow));
    }
    Json out{{"classCount", qr.class_count},
             {"classes", std::move(classes)},
             {"addTable", std::move(add)},
             {"mulTable", std::move(mul)},
             {"isRing", qr.is_ring},
             {"addCommutative", qr.add_commutative},
             {"mulCommutative", qr.mul_commutative}};
    out["zeroClass"] = qr.zero_class ? Json(*qr.zero_class) : Json(nullptr);
    out["identityClass"] = qr.identity_class ? Json(*qr.identity_class) : Json(nullptr);
    return out;
}

inline Json validation_to_json(const ValidationReport& rep) {
    Json checks = Json::array();
    for (const AxiomCheck& c : rep.checks) {
        Json jc{{"axiom", axiom_name(c.axiom)}, {"pass", c.pass}};
        if (!c.pass) {
            jc["witness"] = c.witness;
            jc["detail"] = c.detail;
        }
        checks.push_back(std::move(jc));
    }
    return Json{{"allPass", rep.all_pass}, {"checks", std::move(checks)}};
}

// Every command emits this envelope. The timings object holds deterministic
// work counters only, so identical inputs give byte-identical reports;
// wall-clock time is available separately behind a CLI flag.
inline Json make_report(const std::string& command, const std::string& input_digest,
                        Json parameters, Json result, Json witnesses, Json timings) {
    Json rep;
    rep["schema"] = 1;
    rep["command"] = command;
    rep["input-digest"] = input_digest;
    rep["parameters"] = std::move(parameters);
    rep["result"] = std::move(result);
    rep["witnesses"] = std::move(witnesses);
    rep["timings"] = std::move(timings);
    return rep;
}

// Plain-text mirror of the JSON report: same content, line-oriented.
inline void render_text(const Json& value, std::ostream& os, int indent = 0,
                        const std::string& key = "") {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    const std::string label = key.empty() ? "" : key + ": ";
    if (value.is_object()) {
        if (!key.empty()) os << pad << key << ":\n";
        for (auto it = value.begin(); it != value.end(); ++it)
            render_text(it.value(), os, key.empty() ? indent : indent + 1, it.key());
    } else if (value.is_array()) {
        bool scalars = true;
        for (const Json& v : value) scalars = scalars && !v.is_structured();
        if (scalars) {
            os << pad << label << value.dump() << "\n";
        } else {
            os << pad << (key.empty() ? "-" : key + ":") << "\n";
            for (const Json& v : value) render_text(v, os, indent + 1, "-");
        }
    } else {
        os << pad << label << value.dump() << "\n";
    }
}

inline std::string to_text(const Json& report) {
    std::ostringstream ss;
    render_text(report, ss);
    return ss.str();
}

}  // namespace hyperring
