#pragma once

#include <nlohmann/json.hpp>

#include "cospec/control.hpp"
#include "cospec/cospectrality.hpp"
#include "cospec/exact.hpp"
#include "cospec/miner.hpp"
#include "cospec/ortho.hpp"

namespace cospec {

// JSON conventions: arbitrary-precision integers and rationals are decimal
// strings (rationals as canonical "p/q"), double matrix entries are decimal
// strings with 17 significant digits, residuals are JSON numbers. Keys keep
// insertion order (ordered_json) so identical inputs serialize identically.

std::string rational_str(const Rational& q);

nlohmann::ordered_json int_poly_to_json(const IntPoly& p);
IntPoly int_poly_from_json(const nlohmann::json& j);

nlohmann::ordered_json real_matrix_to_json(const RealMatrix& m);
nlohmann::ordered_json rat_matrix_to_json(const RatMatrix& m);

nlohmann::ordered_json bitvec_to_json(const BitVec& b); // "0101" string

nlohmann::ordered_json certificate_to_json(const OrthogonalCertificate& cert);
nlohmann::ordered_json block_certificate_to_json(const BlockCertificate& cert);
nlohmann::ordered_json report_to_json(const CospectralityReport& rep);
nlohmann::ordered_json q0_certificate_to_json(const Q0Certificate& cert);
nlohmann::ordered_json recon_certificate_to_json(const ReconstructibilityCertificate& cert);

nlohmann::ordered_json mate_record_to_json(const MateRecord& rec);
MateRecord mate_record_from_json(const nlohmann::json& j);

} // namespace cospec
