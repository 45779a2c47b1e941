// Copyright 2026 The blindrep Authors
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

#include "blindrep/css_code.h"

#include <fstream>
#include <sstream>
#include <vector>

namespace blindrep {

namespace {

// Caps the decoding table so a bad (n, t) cannot exhaust memory.
constexpr double kMaxTableEntries = 4e6;

double count_low_weight(size_t n, size_t t) {
    double total = 0;
    double binom = 1;
    for (size_t w = 0; w <= t && w <= n; w++) {
        total += binom;
        binom = binom * double(n - w) / double(w + 1);
    }
    return total;
}

/// Calls `body` on every length-n vector of weight <= t, lowest weight first.
template <typename Body>
void for_each_low_weight(size_t n, size_t t, Body body) {
    std::vector<size_t> idx;
    for (size_t w = 0; w <= t && w <= n; w++) {
        idx.resize(w);
        for (size_t k = 0; k < w; k++) {
            idx[k] = k;
        }
        while (true) {
            BitVec e(n);
            for (size_t k : idx) {
                e.set(k, true);
            }
            body(e);
            // Advance to the next combination in lexicographic order.
            size_t k = w;
            while (k > 0 && idx[k - 1] == n - w + k - 1) {
                k--;
            }
            if (k == 0) {
                break;
            }
            idx[k - 1]++;
            for (size_t j = k; j < w; j++) {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
}

std::unordered_map<BitVec, BitVec> build_table(const BitMatrix &h, size_t t, CheckType which) {
    std::unordered_map<BitVec, BitVec> table;
    for_each_low_weight(h.cols(), t, [&](const BitVec &e) {
        auto [it, inserted] = table.emplace(mat_vec_mul(h, e), e);
        if (!inserted) {
            throw CodeError(
                std::string(check_type_name(which)) + " checks give errors " + it->second.str() + " and " + e.str() +
                " the same syndrome " + it->first.str() + "; t=" + std::to_string(t) + " is too large");
        }
    });
    return table;
}

std::vector<std::string> split_lines(std::string_view text) {
    std::vector<std::string> lines;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        lines.push_back(line);
    }
    return lines;
}

bool is_blank(const std::string &line) {
    return line.find_first_not_of(" \t") == std::string::npos;
}

}  // namespace

const char *check_type_name(CheckType which) {
    return which == CheckType::Bit ? "bit" : "phase";
}

BitVec CssCode::syndrome(CheckType which, const BitVec &e) const {
    if (e.size() != n()) {
        throw std::invalid_argument(
            "syndrome: error length " + std::to_string(e.size()) + " does not match code length " +
            std::to_string(n()));
    }
    return mat_vec_mul(check(which), e);
}

std::optional<BitVec> CssCode::decode_bdd(CheckType which, const BitVec &s) const {
    if (s.size() != check(which).rows()) {
        throw std::invalid_argument(
            "decode_bdd: syndrome length " + std::to_string(s.size()) + " does not match " +
            std::to_string(check(which).rows()) + " " + check_type_name(which) + " checks");
    }
    const Table &table = which == CheckType::Bit ? bit_table_ : phase_table_;
    auto it = table.find(s);
    if (it == table.end()) {
        return std::nullopt;
    }
    return it->second;
}

CssCode build_css(BitMatrix h1, BitMatrix h2, BitMatrix g2, size_t t) {
    if (t < 1) {
        throw CodeError("error-correction capability t must be at least 1");
    }
    size_t n = h1.cols();
    if (n == 0) {
        throw CodeError("code length must be positive");
    }
    if (h2.cols() != n || (g2.rows() > 0 && g2.cols() != n)) {
        throw CodeError(
            "dimension mismatch: H1 has " + std::to_string(n) + " columns, H2 has " + std::to_string(h2.cols()) +
            ", G2 has " + std::to_string(g2.cols()));
    }
    for (size_t r = 0; r < g2.rows(); r++) {
        if (!mat_vec_mul(h1, g2.row(r)).is_zero()) {
            throw CodeError("G2 row " + std::to_string(r) + " (" + g2.row(r).str() + ") is not a codeword of C1");
        }
    }
    if (count_low_weight(n, t) > kMaxTableEntries) {
        throw CodeError(
            "decoding table for n=" + std::to_string(n) + ", t=" + std::to_string(t) + " is too large to enumerate");
    }

    CssCode code;
    code.bit_table_ = build_table(h1, t, CheckType::Bit);
    code.phase_table_ = build_table(h2, t, CheckType::Phase);
    code.h1_ = std::move(h1);
    code.h2_ = std::move(h2);
    code.g2_ = std::move(g2);
    code.t_ = t;
    return code;
}

BitMatrix hamming7_checks() {
    return BitMatrix::parse("1010101\n0110011\n0001111");
}

CssCode steane_code() {
    BitMatrix h = hamming7_checks();
    return build_css(h, h, h, 1);
}

CssCode parse_code(std::string_view text) {
    std::vector<std::vector<std::string>> blocks;
    bool in_block = false;
    for (const std::string &line : split_lines(text)) {
        if (!line.empty() && line.front() == '#') {
            continue;
        }
        if (is_blank(line)) {
            in_block = false;
            continue;
        }
        if (!in_block) {
            blocks.emplace_back();
            in_block = true;
        }
        blocks.back().push_back(line);
    }
    if (blocks.size() != 4) {
        throw CodeError(
            "code file needs 4 blank-line separated blocks (n t, H1, H2, G2), found " + std::to_string(blocks.size()));
    }

    std::istringstream header;
    std::string joined;
    for (const auto &line : blocks[0]) {
        joined += line + ' ';
    }
    header.str(joined);
    long long n = 0;
    long long t = 0;
    std::string extra;
    if (!(header >> n >> t) || (header >> extra) || n <= 0 || t < 0) {
        throw CodeError("code file header must be two non-negative integers 'n t', got: " + joined);
    }

    auto to_matrix = [](const std::vector<std::string> &rows, const char *name) {
        std::vector<BitVec> vecs;
        for (const auto &row : rows) {
            std::string trimmed;
            for (char c : row) {
                if (c != ' ' && c != '\t') {
                    trimmed += c;
                }
            }
            try {
                vecs.push_back(BitVec::parse(trimmed));
            } catch (const std::invalid_argument &ex) {
                throw CodeError(std::string(name) + ": " + ex.what());
            }
        }
        try {
            return BitMatrix(std::move(vecs));
        } catch (const std::invalid_argument &ex) {
            throw CodeError(std::string(name) + ": " + ex.what());
        }
    };
    BitMatrix h1 = to_matrix(blocks[1], "H1");
    BitMatrix h2 = to_matrix(blocks[2], "H2");
    BitMatrix g2 = to_matrix(blocks[3], "G2");
    if (h1.cols() != size_t(n)) {
        throw CodeError(
            "header says n=" + std::to_string(n) + " but H1 has " + std::to_string(h1.cols()) + " columns");
    }
    return build_css(std::move(h1), std::move(h2), std::move(g2), size_t(t));
}

CssCode load_code_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open code file '" + path + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_code(buffer.str());
    } catch (const CodeError &ex) {
        throw CodeError(path + ": " + ex.what());
    }
}

std::string format_code(const CssCode &code) {
    std::string out = std::to_string(code.n()) + " " + std::to_string(code.t()) + "\n\n";
    out += code.h1().str() + "\n\n";
    out += code.h2().str() + "\n\n";
    out += code.g2().str() + "\n";
    return out;
}

}  // namespace blindrep
