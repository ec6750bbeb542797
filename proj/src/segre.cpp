#include "hyp/segre.hpp"

#include <numeric>
#include <sstream>

#include "hyp/errors.hpp"

namespace hyp {

SegreChar SegreChar::from_parts(std::vector<int> parts) {
    if (parts.empty()) {
        throw validation_error("Segre characteristic must be non-empty");
    }
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0) {
            throw validation_error("Segre characteristic entry at index " +
                                   std::to_string(i) + " is not positive: " +
                                   std::to_string(parts[i]));
        }
        if (i > 0 && parts[i] >= parts[i - 1]) {
            throw validation_error(
                "Segre characteristic is not strictly decreasing at index " +
                std::to_string(i) + ": " + std::to_string(parts[i - 1]) +
                " followed by " + std::to_string(parts[i]));
        }
    }
    return SegreChar(std::move(parts));
}

int SegreChar::n() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

ReduceResult reduce(const std::vector<int>& raw) {
    if (raw.empty()) {
        throw validation_error("Segre characteristic must be non-empty");
    }
    std::vector<int> out;
    bool lossy = false;
    for (size_t i = 0; i < raw.size(); ++i) {
        if (raw[i] <= 0) {
            throw validation_error("Segre characteristic entry at index " +
                                   std::to_string(i) + " is not positive: " +
                                   std::to_string(raw[i]));
        }
        if (i > 0 && raw[i] > raw[i - 1]) {
            throw validation_error(
                "Segre characteristic increases at index " + std::to_string(i) +
                ": " + std::to_string(raw[i - 1]) + " followed by " +
                std::to_string(raw[i]));
        }
        if (!out.empty() && raw[i] == out.back()) {
            lossy = true;
            continue;
        }
        out.push_back(raw[i]);
    }
    return ReduceResult{SegreChar::from_parts(std::move(out)), lossy};
}

int dimension(const SegreChar& alpha) { return alpha.n(); }

namespace {

void reduced_with_sum(int largest_allowed, int remaining, std::vector<int>& prefix,
                      std::vector<SegreChar>& out) {
    // Next part p: strictly below the previous one and large enough that the
    // remaining sum can still be written with distinct parts below p.
    for (int p = std::min(largest_allowed, remaining); p >= 1; --p) {
        prefix.push_back(p);
        if (p == remaining) {
            out.push_back(SegreChar::from_parts(prefix));
        } else {
            reduced_with_sum(p - 1, remaining - p, prefix, out);
        }
        prefix.pop_back();
    }
}

}  // namespace

std::vector<SegreChar> enumerate_reduced(int n_max) {
    if (n_max < 1) {
        throw validation_error("n_max must be at least 1");
    }
    std::vector<SegreChar> out;
    for (int m = 1; m <= n_max; ++m) {
        // Descending first parts yield lexicographic-descending order within
        // each sum directly.
        std::vector<int> prefix;
        reduced_with_sum(m, m, prefix, out);
    }
    return out;
}

ReduceResult parse_segre(const std::string& text) {
    std::vector<int> parts;
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
            parts.push_back(value);
        } catch (const std::invalid_argument&) {
            throw validation_error("not an integer: \"" + item + "\"");
        } catch (const std::out_of_range&) {
            throw validation_error("integer out of range: \"" + item + "\"");
        }
    }
    if (parts.empty()) {
        throw validation_error("empty Segre characteristic text");
    }
    return reduce(parts);
}

std::string to_string(const SegreChar& alpha) {
    std::string out;
    for (int i = 0; i < alpha.r(); ++i) {
        if (i) out += ',';
        out += std::to_string(alpha.part(i));
    }
    return out;
}

}  // namespace hyp
