#pragma once

#include "charvar/census.hpp"
#include "charvar/groups.hpp"
#include "charvar/int_matrix.hpp"
#include "charvar/representation.hpp"
#include "charvar/root_of_unity.hpp"
#include "charvar/smith.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace charvar::io {

using json = nlohmann::ordered_json;

/// Integers ride as JSON numbers while they fit in 64 bits and as decimal
/// strings beyond that; matrix entries are always strings (schema rule).
inline json int_to_json(const exact::Int& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() &&
        v <= std::numeric_limits<std::int64_t>::max())
        return v.convert_to<std::int64_t>();
    return v.str();
}

inline exact::Int int_from_json(const json& j, const std::string& where) {
    if (j.is_number_integer()) return exact::Int(j.get<std::int64_t>());
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        try {
            if (s.empty()) throw std::runtime_error("empty");
            return exact::Int(s);
        } catch (const std::runtime_error&) {
            throw std::invalid_argument(where + ": not a decimal integer: \"" + s + "\"");
        }
    }
    throw std::invalid_argument(where + ": expected an integer or decimal string");
}

inline json to_json(const exact::IntMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
        rows.push_back(std::move(row));
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

inline exact::IntMatrix int_matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
        throw std::invalid_argument("matrix: expected {\"rows\", \"cols\", \"entries\"}");
    const auto rows = j.at("rows").get<std::int64_t>();
    const auto cols = j.at("cols").get<std::int64_t>();
    if (rows < 1 || cols < 1) throw std::invalid_argument("matrix: dimensions must be positive");
    const json& entries = j.at("entries");
    if (!entries.is_array() || entries.size() != static_cast<std::size_t>(rows))
        throw std::invalid_argument("matrix: entries must hold one array per row");
    exact::IntMatrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const json& row = entries.at(i);
        if (!row.is_array() || row.size() != static_cast<std::size_t>(cols))
            throw std::invalid_argument("matrix: row " + std::to_string(i) + " has wrong length");
        for (std::size_t c = 0; c < m.cols(); ++c)
            m(i, c) = int_from_json(row.at(c), "matrix entry");
    }
    return m;
}

inline json to_json(const exact::RootOfUnity& q) {
    return json{{"num", q.num()}, {"den", q.den()}};
}

inline exact::RootOfUnity root_from_json(const json& j) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den"))
        throw std::invalid_argument("root of unity: expected {\"num\", \"den\"}");
    return exact::RootOfUnity::from_fraction(int_from_json(j.at("num"), "root numerator"),
                                             int_from_json(j.at("den"), "root denominator"));
}

inline json to_json(const groups::GroupSpec& spec) {
    return json{{"n", spec.exponents}};
}

inline groups::GroupSpec group_spec_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.at("n").is_array())
        throw std::invalid_argument("group spec: expected {\"n\": [...]}");
    return groups::GroupSpec(j.at("n").get<std::vector<long long>>());
}

inline json to_json(const groups::Abelianization& ab) {
    json torsion = json::array();
    for (const exact::Int& d : ab.torsion) torsion.push_back(int_to_json(d));
    return json{{"free_rank", ab.free_rank}, {"torsion", std::move(torsion)}};
}

inline json to_json(const exact::SmithDecomposition& snf) {
    json factors = json::array();
    for (const exact::Int& f : snf.factors) factors.push_back(int_to_json(f));
    return json{{"factors", std::move(factors)},
                {"P", to_json(snf.P)},
                {"B", to_json(snf.B)},
                {"Q", to_json(snf.Q)}};
}

inline json to_json(const census::EigenTuple& t) {
    json entries = json::array();
    for (const exact::RootOfUnity& q : t.entries) entries.push_back(to_json(q));
    return json{{"sign", t.sign}, {"entries", std::move(entries)}};
}

inline json to_json(const census::CensusReport& report) {
    json j{{"total_orbits", report.total_orbits},
           {"exceptional_orbits", report.exceptional_orbits},
           {"component_count", report.component_count}};
    if (report.plus)
        j["plus"] = json{{"orbits", report.plus->orbits},
                         {"exceptional", report.plus->exceptional}};
    if (report.minus)
        j["minus"] = json{{"orbits", report.minus->orbits},
                          {"exceptional", report.minus->exceptional}};
    if (report.pre_quotient) j["pre_quotient"] = int_to_json(*report.pre_quotient);
    if (!report.witnesses.empty()) {
        json w = json::array();
        for (const census::EigenTuple& t : report.witnesses) w.push_back(to_json(t));
        j["witnesses"] = std::move(w);
    }
    if (!report.subset_witnesses.empty()) {
        json w = json::array();
        for (const auto& tuple : report.subset_witnesses) {
            json per_generator = json::array();
            for (const auto& subset : tuple) {
                json s = json::array();
                for (const exact::RootOfUnity& q : subset) s.push_back(to_json(q));
                per_generator.push_back(std::move(s));
            }
            w.push_back(std::move(per_generator));
        }
        j["witnesses"] = std::move(w);
    }
    return j;
}

inline json to_json(const replab::Complex& z) {
    return json::array({z.real(), z.imag()});
}

inline json to_json(const replab::ComplexMatrix& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline replab::Complex complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j.at(0).is_number() || !j.at(1).is_number())
        throw std::invalid_argument("complex number: expected [re, im]");
    return {j.at(0).get<double>(), j.at(1).get<double>()};
}

inline replab::ComplexMatrix complex_matrix_from_json(const json& j, Eigen::Index size) {
    if (!j.is_array() || j.size() != static_cast<std::size_t>(size))
        throw std::invalid_argument("matrix: expected " + std::to_string(size) + " rows");
    replab::ComplexMatrix m(size, size);
    for (Eigen::Index i = 0; i < size; ++i) {
        const json& row = j.at(static_cast<std::size_t>(i));
        if (!row.is_array() || row.size() != static_cast<std::size_t>(size))
            throw std::invalid_argument("matrix: row " + std::to_string(i) + " has wrong length");
        for (Eigen::Index c = 0; c < size; ++c)
            m(i, c) = complex_from_json(row.at(static_cast<std::size_t>(c)));
    }
    return m;
}

inline json to_json(const replab::Representation& rep) {
    json matrices = json::array();
    for (const replab::ComplexMatrix& a : rep.matrices) matrices.push_back(to_json(a));
    return json{{"n", rep.spec.exponents},
                {"m", rep.size()},
                {"matrices", std::move(matrices)},
                {"tol", rep.tolerance}};
}

inline replab::Representation representation_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("m") || !j.contains("matrices"))
        throw std::invalid_argument(
            "representation: expected {\"n\", \"m\", \"matrices\"[, \"tol\"]}");
    groups::GroupSpec spec(j.at("n").get<std::vector<long long>>());
    const auto m = j.at("m").get<std::int64_t>();
    if (m < 1) throw std::invalid_argument("representation: m must be >= 1");
    const json& matrices = j.at("matrices");
    if (!matrices.is_array() || matrices.size() != spec.rank())
        throw std::invalid_argument("representation: one matrix per generator required");
    replab::Representation rep{std::move(spec), {}, replab::kVerifyTol};
    if (j.contains("tol")) rep.tolerance = j.at("tol").get<double>();
    rep.matrices.reserve(matrices.size());
    for (const json& a : matrices)
        rep.matrices.push_back(complex_matrix_from_json(a, static_cast<Eigen::Index>(m)));
    return rep;
}

/// Build prescription: {"n": [...], "sign": +-1, "roots": [[{num,den},...],...],
/// "conjugators": optional list of matrices}.
inline replab::EigenConfig eigen_config_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("roots"))
        throw std::invalid_argument("eigen config: expected {\"n\", \"roots\"[, \"sign\", \"conjugators\"]}");
    replab::EigenConfig config{groups::GroupSpec(j.at("n").get<std::vector<long long>>()),
                               {},
                               1,
                               std::nullopt};
    if (j.contains("sign")) config.sign = j.at("sign").get<int>();
    const json& roots = j.at("roots");
    if (!roots.is_array() || roots.size() != config.spec.rank())
        throw std::invalid_argument("eigen config: one eigenvalue multiset per generator");
    for (const json& multiset : roots) {
        if (!multiset.is_array() || multiset.empty())
            throw std::invalid_argument("eigen config: eigenvalue multisets must be nonempty arrays");
        std::vector<exact::RootOfUnity> qs;
        qs.reserve(multiset.size());
        for (const json& q : multiset) qs.push_back(root_from_json(q));
        config.roots.push_back(std::move(qs));
    }
    if (j.contains("conjugators")) {
        const json& gs = j.at("conjugators");
        if (!gs.is_array() || gs.size() != config.spec.rank())
            throw std::invalid_argument("eigen config: one conjugator per generator");
        std::vector<replab::ComplexMatrix> conjugators;
        conjugators.reserve(gs.size());
        const auto m = static_cast<Eigen::Index>(config.roots.front().size());
        for (const json& g : gs) conjugators.push_back(complex_matrix_from_json(g, m));
        config.conjugators = std::move(conjugators);
    }
    return config;
}

}  // namespace charvar::io
