#include "hyp/hypertuple.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

#include "hyp/errors.hpp"

namespace hyp {

int weight(const Hypertuple& u) {
    return std::accumulate(u.begin(), u.end(), 0);
}

std::string to_string(const Hypertuple& u) {
    std::string out = "(";
    for (size_t i = 0; i < u.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(u[i]);
    }
    out += ')';
    return out;
}

bool tuple_leq(const Hypertuple& u, const Hypertuple& v) {
    if (u.size() != v.size()) {
        throw validation_error("comparing tuples of different lengths");
    }
    for (size_t i = 0; i < u.size(); ++i) {
        if (u[i] > v[i]) return false;
    }
    return true;
}

Hypertuple parse_tuple(const std::string& text) {
    Hypertuple out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t pos = 0;
            int value = std::stoi(item, &pos);
            while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
            if (pos != item.size()) {
                throw validation_error("trailing characters in \"" + item + "\"");
            }
            out.push_back(value);
        } catch (const std::invalid_argument&) {
            throw validation_error("not an integer: \"" + item + "\"");
        } catch (const std::out_of_range&) {
            throw validation_error("integer out of range: \"" + item + "\"");
        }
    }
    if (out.empty()) {
        throw validation_error("empty tuple text");
    }
    return out;
}

}  // namespace hyp
