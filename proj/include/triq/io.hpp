#pragma once

// State file parsing and the fixed-column serializers used by the CLI.
// State file: a JSON array of exactly 8 two-element arrays [re, im], index
// order b = 4 q1 + 2 q2 + q3; parsed strictly (finite numbers only).

#include <iosfwd>
#include <string>

#include "triq/acin_params.hpp"
#include "triq/family.hpp"
#include "triq/invariants.hpp"
#include "triq/types.hpp"

namespace triq {

PureState3 load_state_file(const std::string& path);
PureState3 parse_state_json(const std::string& text);
std::string state_to_json(const PureState3& state);

// Fixed CSV field order for a TangleVector record:
// c12,c13,c23,tau3,tau11,tau12,tau13,i5,i6[,re_ig,im_ig]
std::string tangle_csv_header(bool with_grassl);
std::string tangle_csv_row(const TangleVector& v, const GrasslValue* ig);

std::string acin_params_json(const AcinParams& p);

// FamilyTable CSV:
// lambda4,l0,l1,l2,l3,phi,cosphi,c12,c13,c23,tau3,tau11,tau12,tau13,i5,i6,re_ig,im_ig
void write_family_csv(std::ostream& os, const FamilyTable& table);
std::string interval_json(const ValidityInterval& iv);

// Stable decimal formatting used by every CSV writer (byte-identical output
// for identical inputs).
std::string fmt(double x);

}  // namespace triq
