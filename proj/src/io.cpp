#include "triq/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "triq/statecore.hpp"

namespace triq {

using nlohmann::json;

PureState3 parse_state_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("state file is not valid JSON: ") + e.what());
    }
    if (!j.is_array() || j.size() != 8)
        throw ParseError("state file must be an array of exactly 8 entries");
    std::array<cplx, 8> a{};
    for (int b = 0; b < 8; ++b) {
        const auto& e = j[b];
        if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
            throw ParseError("entry " + std::to_string(b) +
                             " must be a [re, im] pair of numbers");
        double re = e[0].get<double>();
        double im = e[1].get<double>();
        if (!std::isfinite(re) || !std::isfinite(im))
            throw ParseError("entry " + std::to_string(b) + " is not finite");
        a[b] = cplx(re, im);
    }
    return make_state(a);
}

PureState3 load_state_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_state_json(ss.str());
}

std::string state_to_json(const PureState3& state) {
    json j = json::array();
    for (int b = 0; b < 8; ++b)
        j.push_back({state.amp[b].real(), state.amp[b].imag()});
    return j.dump();
}

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

std::string tangle_csv_header(bool with_grassl) {
    std::string h = "c12,c13,c23,tau3,tau11,tau12,tau13,i5,i6";
    if (with_grassl) h += ",re_ig,im_ig";
    return h;
}

std::string tangle_csv_row(const TangleVector& v, const GrasslValue* ig) {
    std::string row = fmt(v.c12) + "," + fmt(v.c13) + "," + fmt(v.c23) + "," +
                      fmt(v.tau3) + "," + fmt(v.tau11) + "," + fmt(v.tau12) + "," +
                      fmt(v.tau13) + "," + fmt(v.i5) + "," + fmt(v.i6);
    if (ig) row += "," + fmt(ig->re) + "," + fmt(ig->im);
    return row;
}

std::string acin_params_json(const AcinParams& p) {
    json j = {{"l0", p.l0}, {"l1", p.l1}, {"l2", p.l2},
              {"l3", p.l3}, {"l4", p.l4}, {"phi", p.phi}};
    return j.dump();
}

void write_family_csv(std::ostream& os, const FamilyTable& table) {
    os << "lambda4,l0,l1,l2,l3,phi,cosphi," << tangle_csv_header(true) << "\n";
    for (const auto& r : table.rows) {
        os << fmt(r.lambda4) << "," << fmt(r.params.l0) << "," << fmt(r.params.l1)
           << "," << fmt(r.params.l2) << "," << fmt(r.params.l3) << ","
           << fmt(r.params.phi) << "," << fmt(r.cos_phi) << ","
           << tangle_csv_row(r.tangles, &r.ig) << "\n";
    }
}

std::string interval_json(const ValidityInterval& iv) {
    json comps = json::array();
    for (const auto& [a, b] : iv.components)
        comps.push_back({{"lo", a}, {"hi", b}, {"isolated", b - a < 1e-9}});
    json log = json::array();
    for (const auto& e : iv.constraints_log)
        log.push_back({{"name", e.name}, {"lo", e.lo}, {"hi", e.hi}, {"note", e.note}});
    json j = {{"lo", iv.lo},
              {"hi", iv.hi},
              {"components", comps},
              {"constraints_log", log}};
    return j.dump(2);
}

}  // namespace triq
