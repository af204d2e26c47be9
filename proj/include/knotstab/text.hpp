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

#ifndef KNOTSTAB_TEXT_HPP
#define KNOTSTAB_TEXT_HPP

#include <string>
#include <vector>

#include "cf.hpp"
#include "multivar.hpp"
#include "polyring.hpp"
#include "seifert.hpp"

namespace knotstab {

class parse_error : public error {
public:
    parse_error(const std::string& what, size_t position)
        : error(errc::parse_error, what + " at position " + std::to_string(position)),
          position_(position) {}
    size_t position() const { return position_; }

private:
    size_t position_;
};

namespace detail {

inline Int parse_int_token(const std::string& s, size_t token_start) {
    if (s.empty()) throw parse_error("empty integer", token_start);
    size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw parse_error("sign without digits", token_start);
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') throw parse_error("invalid digit", token_start + i);
    return Int(s);
}

inline std::vector<std::string> split(const std::string& s, char sep, std::vector<size_t>* starts) {
    std::vector<std::string> out;
    size_t begin = 0;
    for (size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            out.push_back(s.substr(begin, i - begin));
            if (starts) starts->push_back(begin);
            begin = i + 1;
        }
    }
    return out;
}

}  // namespace detail

// "1,-7,13,-7,1" descending by exponent
inline IntPoly parse_poly(const std::string& s) {
    std::vector<size_t> starts;
    auto tokens = detail::split(s, ',', &starts);
    std::vector<Int> desc;
    desc.reserve(tokens.size());
    for (size_t i = 0; i < tokens.size(); ++i) desc.push_back(detail::parse_int_token(tokens[i], starts[i]));
    return IntPoly::from_descending(std::move(desc));
}

// "[2,-2,-8,2]" full even entries
inline EvenCF parse_cf(const std::string& s) {
    if (s.empty() || s.front() != '[') throw parse_error("expected '['", 0);
    if (s.back() != ']') throw parse_error("expected ']'", s.size() - 1);
    std::string inner = s.substr(1, s.size() - 2);
    if (inner.empty()) throw parse_error("empty continued fraction", 1);
    std::vector<size_t> starts;
    auto tokens = detail::split(inner, ',', &starts);
    std::vector<long long> entries;
    entries.reserve(tokens.size());
    for (size_t i = 0; i < tokens.size(); ++i) {
        Int v = detail::parse_int_token(tokens[i], starts[i] + 1);
        if (v == 0) throw parse_error("zero entry", starts[i] + 1);
        if (mpz_even_p(v.get_mpz_t()) == 0) throw parse_error("odd entry", starts[i] + 1);
        entries.push_back(static_cast<long long>(v.get_si()));
    }
    return EvenCF::from_entries(entries);
}

// "1,1;0,-1" rows by ';', entries by ','
inline SeifertMatrix parse_matrix(const std::string& s) {
    std::vector<size_t> row_starts;
    auto rows = detail::split(s, ';', &row_starts);
    IMat m;
    for (size_t r = 0; r < rows.size(); ++r) {
        std::vector<size_t> starts;
        auto tokens = detail::split(rows[r], ',', &starts);
        std::vector<Int> row;
        row.reserve(tokens.size());
        for (size_t i = 0; i < tokens.size(); ++i)
            row.push_back(detail::parse_int_token(tokens[i], row_starts[r] + starts[i]));
        m.push_back(std::move(row));
    }
    if (m.empty()) throw parse_error("empty matrix", 0);
    for (size_t r = 0; r < m.size(); ++r)
        if (m[r].size() != m.size()) throw parse_error("matrix must be square", row_starts[r]);
    return SeifertMatrix(std::move(m), SeifertForm::user);
}

// "beta/alpha"
inline Fraction parse_fraction(const std::string& s) {
    size_t slash = s.find('/');
    if (slash == std::string::npos) throw parse_error("expected '/'", s.size());
    Int beta = detail::parse_int_token(s.substr(0, slash), 0);
    Int alpha = detail::parse_int_token(s.substr(slash + 1), slash + 1);
    try {
        return Fraction(std::move(beta), std::move(alpha));
    } catch (const error& e) {
        throw parse_error(e.what(), 0);
    }
}

// "c:i,j;..." triples
inline BiLaurent parse_bilaurent(const std::string& s) {
    std::vector<size_t> term_starts;
    auto terms = detail::split(s, ';', &term_starts);
    BiLaurent out;
    for (size_t t = 0; t < terms.size(); ++t) {
        const std::string& term = terms[t];
        size_t colon = term.find(':');
        if (colon == std::string::npos) throw parse_error("expected ':'", term_starts[t] + term.size());
        size_t comma = term.find(',', colon);
        if (comma == std::string::npos) throw parse_error("expected ','", term_starts[t] + term.size());
        Int c = detail::parse_int_token(term.substr(0, colon), term_starts[t]);
        Int i = detail::parse_int_token(term.substr(colon + 1, comma - colon - 1), term_starts[t] + colon + 1);
        Int j = detail::parse_int_token(term.substr(comma + 1), term_starts[t] + comma + 1);
        out.add_term(c, static_cast<long>(i.get_si()), static_cast<long>(j.get_si()));
    }
    return out;
}

}  // namespace knotstab

#endif
