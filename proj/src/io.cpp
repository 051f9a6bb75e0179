#include "schubitope/io.hpp"

#include <sstream>

namespace schub {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string part;
    std::istringstream in(text);
    while (std::getline(in, part, sep)) parts.push_back(part);
    if (!text.empty() && text.back() == sep) parts.push_back("");
    return parts;
}

int parse_int(const std::string& text) {
    std::size_t used = 0;
    int value;
    try {
        value = std::stoi(text, &used);
    } catch (const std::exception&) {
        throw input_error("expected an integer, got \"" + text + "\"");
    }
    if (used != text.size()) throw input_error("trailing characters in \"" + text + "\"");
    return value;
}

}  // namespace

Permutation parse_permutation(const std::string& text) {
    if (text.empty()) throw input_error("empty permutation");
    std::vector<int> word;
    if (text.front() == '[') {
        if (text.back() != ']') throw input_error("unterminated bracket form");
        for (const auto& part : split(text.substr(1, text.size() - 2), ','))
            word.push_back(parse_int(part));
    } else {
        for (char ch : text) {
            if (ch < '1' || ch > '9')
                throw input_error("digit form accepts only 1..9; use [a,b,...] for larger n");
            word.push_back(ch - '0');
        }
    }
    return Permutation(std::move(word));
}

std::string format_permutation(const Permutation& w) {
    if (w.size() <= 9) {
        std::string out;
        for (int v : w.word()) out += static_cast<char>('0' + v);
        return out;
    }
    std::string out = "[";
    for (int i = 0; i < w.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(w.word()[i]);
    }
    return out + "]";
}

Composition parse_composition(const std::string& text) {
    if (text.empty()) throw input_error("empty composition");
    Composition alpha;
    for (const auto& part : split(text, ',')) {
        const int v = parse_int(part);
        if (v < 0) throw input_error("composition parts must be nonnegative");
        alpha.push_back(v);
    }
    return alpha;
}

std::string format_composition(const Composition& alpha) {
    std::string out;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(alpha[i]);
    }
    return out;
}

Diagram parse_diagram(const std::string& text, int n) {
    std::vector<Subset> cols;
    for (const auto& column : split(text, ';')) {
        Subset c = 0;
        if (!column.empty())
            for (const auto& part : split(column, ',')) {
                const int row = parse_int(part);
                if (row < 1 || row > n)
                    throw input_error("row index " + std::to_string(row) +
                                      " outside ambient 1.." + std::to_string(n));
                c = with(c, row);
            }
        cols.push_back(c);
    }
    return Diagram(n, std::move(cols));
}

std::string format_diagram(const Diagram& d) {
    std::string out;
    for (int j = 1; j <= d.n(); ++j) {
        if (j > 1) out += ';';
        const auto rows = subset_elements(d.column(j));
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(rows[i]);
        }
    }
    return out;
}

}  // namespace schub
