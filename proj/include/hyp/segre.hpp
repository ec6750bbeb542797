#pragma once

#include <compare>
#include <string>
#include <vector>

namespace hyp {

// Reduced Segre characteristic: a strictly decreasing sequence of positive
// integers a1 > a2 > ... > ar > 0.  Every lattice operation takes its
// parameter in this form; weakly decreasing input enters through reduce().
class SegreChar {
public:
    // Validates strict decrease and positivity; throws validation_error
    // naming the offending index.
    static SegreChar from_parts(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int part(int i) const { return parts_[static_cast<size_t>(i)]; }
    int r() const { return static_cast<int>(parts_.size()); }
    int n() const;  // dimension: sum of the parts

    auto operator<=>(const SegreChar&) const = default;

private:
    explicit SegreChar(std::vector<int> parts) : parts_(std::move(parts)) {}
    std::vector<int> parts_;
};

struct ReduceResult {
    SegreChar segre;
    bool lossy;  // deduplication removed entries, so the dimension changed
};

// Deduplicates a weakly decreasing positive sequence to reduced form.
// Throws validation_error on empty input, a non-positive entry, or an
// increase, naming the offending index.
ReduceResult reduce(const std::vector<int>& raw);

int dimension(const SegreChar& alpha);

// Every strictly decreasing positive sequence with sum <= n_max, each
// exactly once, ordered by sum and lexicographically descending within
// equal sum.  Throws validation_error when n_max < 1.
std::vector<SegreChar> enumerate_reduced(int n_max);

// "5,3,1" -> reduce({5,3,1}).  Throws validation_error on malformed text.
ReduceResult parse_segre(const std::string& text);

// "5,3,1"
std::string to_string(const SegreChar& alpha);

}  // namespace hyp
