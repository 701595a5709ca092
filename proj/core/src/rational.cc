// Copyright 2026 The Mermin Device Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mermin/rational.h"

#include <charconv>
#include <stdexcept>

namespace mermin {

std::string to_string(const Rational &r) {
    if (r.denominator() == 1) {
        return r.numerator().str();
    }
    return r.numerator().str() + "/" + r.denominator().str();
}

double to_double(const Rational &r) {
    using boost::multiprecision::cpp_rational;
    return cpp_rational(r.numerator(), r.denominator()).convert_to<double>();
}

namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
    std::int64_t value = 0;
    if (text.empty() || text.front() == '-') {
        throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
    }
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
    }
    return value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const std::string_view whole = text;
    bool negative = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    Rational result;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        std::int64_t num = parse_int(text.substr(0, slash), whole);
        std::int64_t den = parse_int(text.substr(slash + 1), whole);
        if (den == 0) {
            throw std::invalid_argument("zero denominator in '" + std::string(whole) + "'");
        }
        result = Rational(num, den);
    } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view int_part = text.substr(0, dot);
        std::string_view frac_part = text.substr(dot + 1);
        if (frac_part.size() > 15 || (int_part.empty() && frac_part.empty())) {
            throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
        }
        std::int64_t scale = 1;
        for (size_t i = 0; i < frac_part.size(); ++i) {
            scale *= 10;
        }
        std::int64_t ip = int_part.empty() ? 0 : parse_int(int_part, whole);
        std::int64_t fp = frac_part.empty() ? 0 : parse_int(frac_part, whole);
        result = Rational(ip) + Rational(fp, scale);
    } else {
        result = Rational(parse_int(text, whole));
    }
    return negative ? -result : result;
}

}  // namespace mermin
