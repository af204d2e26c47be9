/*
   Copyright 2026 The knotstab authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef KNOTSTAB_SERIALIZE_HPP
#define KNOTSTAB_SERIALIZE_HPP

#include <json.hpp>

#include "interlace.hpp"
#include "multivar.hpp"
#include "stability.hpp"

namespace knotstab {

// fixed wire format: verdict, n_real, n_unit, n_other, delta_max_lo,
// delta_max_hi, zeros
inline nlohmann::json report_json(const StabilityReport& r) {
    nlohmann::json j;
    j["verdict"] = verdict_name(r.verdict);
    j["n_real"] = r.n_real;
    j["n_unit"] = r.n_unit;
    j["n_other"] = r.n_other;
    if (r.delta_max) {
        j["delta_max_lo"] = r.delta_max->lo.get_d();
        j["delta_max_hi"] = r.delta_max->hi.get_d();
    } else {
        j["delta_max_lo"] = nullptr;
        j["delta_max_hi"] = nullptr;
    }
    auto zeros = nlohmann::json::array();
    for (const auto& z : r.numeric_zeros) zeros.push_back({z.real(), z.imag()});
    j["zeros"] = zeros;
    return j;
}

// [[c, i, j], ...] triples; coefficients that fit a 64-bit integer are
// numbers, larger ones decimal strings
inline nlohmann::json bilaurent_json(const BiLaurent& b) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [key, c] : b.terms()) {
        nlohmann::json triple = nlohmann::json::array();
        if (c.fits_slong_p())
            triple.push_back(c.get_si());
        else
            triple.push_back(c.get_str());
        triple.push_back(key.first);
        triple.push_back(key.second);
        arr.push_back(std::move(triple));
    }
    return arr;
}

inline BiLaurent bilaurent_from_json(const nlohmann::json& arr) {
    BiLaurent out;
    for (const auto& triple : arr) {
        Int c = triple[0].is_string() ? Int(triple[0].get<std::string>())
                                      : Int(triple[0].get<long>());
        out.add_term(c, triple[1].get<long>(), triple[2].get<long>());
    }
    return out;
}

inline nlohmann::json verdict_json(const InterlaceVerdict& v) {
    nlohmann::json j;
    j["interlaced"] = v.interlaced;
    j["direction"] = direction_name(v.direction);
    auto shared = nlohmann::json::array();
    for (const auto& iv : v.shared_roots) shared.push_back({iv.lo.get_d(), iv.hi.get_d()});
    j["shared_roots"] = shared;
    return j;
}

}  // namespace knotstab

#endif
