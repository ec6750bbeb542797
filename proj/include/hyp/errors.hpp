#pragma once

#include <stdexcept>
#include <string>

namespace hyp {

// Invalid input: malformed Segre characteristic, tuple outside its lattice,
// mismatched lengths, congruence precondition not met.
class validation_error : public std::runtime_error {
public:
    explicit validation_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A configurable safety bound was exceeded (lattice too large to materialize,
// search beyond its node budget).
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace hyp
