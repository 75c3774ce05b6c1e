#pragma once

#include <string>
#include <vector>

namespace vandiver {

// Renders sum_k coeffs[k] * var^k the way PARI/GP prints a t_POL: highest
// degree first, unit coefficients elided, " + " / " - " separators. Each
// coefficient is a decimal integer string, optionally with a leading '-'.
inline std::string render_pari_polynomial(const std::vector<std::string>& coeffs,
                                          const std::string& var = "x") {
    std::string out;
    for (std::size_t idx = coeffs.size(); idx-- > 0;) {
        std::string c = coeffs[idx];
        if (c == "0" || c == "-0" || c.empty()) continue;
        const bool negative = c.front() == '-';
        if (negative) c.erase(0, 1);
        if (out.empty()) {
            if (negative) out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        if (idx == 0) {
            out += c;
            continue;
        }
        if (c != "1") out += c + "*";
        out += var;
        if (idx > 1) out += "^" + std::to_string(idx);
    }
    return out.empty() ? "0" : out;
}

}  // namespace vandiver
