#include "cospec/json_io.hpp"

#include <cstdio>

namespace cospec {

namespace {

std::string double_str(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

std::string rational_str(const Rational& q) { return q.get_str(); }

nlohmann::ordered_json int_poly_to_json(const IntPoly& p) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const BigInt& c : p.coeffs) arr.push_back(c.get_str());
    return arr;
}

IntPoly int_poly_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw std::invalid_argument("polynomial: expected array");
    IntPoly p;
    for (const auto& c : j) {
        if (c.is_string())
            p.coeffs.emplace_back(c.get<std::string>());
        else if (c.is_number_integer())
            p.coeffs.emplace_back(c.get<long>());
        else
            throw std::invalid_argument("polynomial: coefficient must be string or integer");
    }
    p.trim();
    return p;
}

nlohmann::ordered_json real_matrix_to_json(const RealMatrix& m) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (int i = 0; i < m.rows; ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (int j = 0; j < m.cols; ++j) row.push_back(double_str(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

nlohmann::ordered_json rat_matrix_to_json(const RatMatrix& m) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (int i = 0; i < m.rows(); ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(rational_str(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

nlohmann::ordered_json bitvec_to_json(const BitVec& b) {
    std::string s;
    s.reserve(b.size());
    for (auto v : b) s.push_back(v ? '1' : '0');
    return s;
}

nlohmann::ordered_json certificate_to_json(const OrthogonalCertificate& cert) {
    nlohmann::ordered_json j;
    j["q"] = real_matrix_to_json(cert.q);
    j["residual_orth"] = cert.residual_orth;
    j["residual_conj"] = cert.residual_conj;
    j["residual_e"] = cert.residual_e;
    if (cert.has_bc) j["residual_b"] = cert.residual_b;
    j["verified"] = cert.verified;
    return j;
}

nlohmann::ordered_json block_certificate_to_json(const BlockCertificate& cert) {
    nlohmann::ordered_json j;
    j["inner"] = certificate_to_json(cert.inner);
    j["full"] = real_matrix_to_json(cert.full);
    j["residual_orth"] = cert.residual_orth;
    j["residual_conj"] = cert.residual_conj;
    j["residual_e"] = cert.residual_e;
    j["verified"] = cert.verified;
    return j;
}

nlohmann::ordered_json report_to_json(const CospectralityReport& rep) {
    nlohmann::ordered_json j;
    j["level"] = to_string(rep.level);
    if (rep.has_roots) j["rooted_generalized"] = rep.rooted_generalized;
    nlohmann::ordered_json polys = nlohmann::ordered_json::array();
    for (const LabeledPoly& lp : rep.witness_polys) {
        nlohmann::ordered_json p;
        p["label"] = lp.label;
        p["coefficients"] = int_poly_to_json(lp.poly);
        polys.push_back(std::move(p));
    }
    j["witness_polys"] = std::move(polys);
    return j;
}

nlohmann::ordered_json q0_certificate_to_json(const Q0Certificate& cert) {
    nlohmann::ordered_json j;
    nlohmann::ordered_json xi = nlohmann::ordered_json::array();
    for (const BigInt& v : cert.xi) xi.push_back(v.get_str());
    j["xi"] = std::move(xi);
    j["q0"] = rat_matrix_to_json(cert.q0);
    j["is_permutation"] = cert.is_permutation;
    j["symmetry_class"] = cert.symmetry_class();
    return j;
}

nlohmann::ordered_json recon_certificate_to_json(const ReconstructibilityCertificate& cert) {
    nlohmann::ordered_json j;
    j["certified"] = cert.certified;
    if (cert.witness_vertex >= 0)
        j["witness_vertex"] = cert.witness_vertex;
    else
        j["witness_vertex"] = nullptr;
    j["clause"] = to_string(cert.clause);
    nlohmann::ordered_json xi = nlohmann::ordered_json::array();
    for (const BigInt& v : cert.xi) xi.push_back(v.get_str());
    j["xi"] = std::move(xi);
    nlohmann::ordered_json q0b = nlohmann::ordered_json::array();
    for (const Rational& v : cert.q0_b) q0b.push_back(rational_str(v));
    j["q0_b"] = std::move(q0b);
    j["b"] = bitvec_to_json(cert.b);
    return j;
}

nlohmann::ordered_json mate_record_to_json(const MateRecord& rec) {
    nlohmann::ordered_json j;
    j["g6_a"] = rec.g6_a;
    j["g6_b"] = rec.g6_b;
    j["level"] = to_string(rec.level);
    if (rec.level == MateLevel::rooted) {
        j["root_a"] = rec.root_a;
        j["root_b"] = rec.root_b;
    }
    j["charpoly"] = int_poly_to_json(rec.charpoly);
    return j;
}

MateRecord mate_record_from_json(const nlohmann::json& j) {
    MateRecord rec;
    rec.g6_a = j.at("g6_a").get<std::string>();
    rec.g6_b = j.at("g6_b").get<std::string>();
    rec.level = mate_level_from_string(j.at("level").get<std::string>());
    if (rec.level == MateLevel::rooted) {
        rec.root_a = j.at("root_a").get<int>();
        rec.root_b = j.at("root_b").get<int>();
    }
    rec.charpoly = int_poly_from_json(j.at("charpoly"));
    return rec;
}

} // namespace cospec
