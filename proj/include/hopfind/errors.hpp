#pragma once

#include <stdexcept>
#include <string>

namespace hopfind {

struct field_mismatch_error : std::runtime_error {
    explicit field_mismatch_error(const std::string& what) : std::runtime_error(what) {}
};

struct division_by_zero_error : std::runtime_error {
    explicit division_by_zero_error(const std::string& what) : std::runtime_error(what) {}
};

struct singular_matrix_error : std::runtime_error {
    explicit singular_matrix_error(const std::string& what) : std::runtime_error(what) {}
};

/* Target of a coordinate solve is not in the span of the given basis.
 * Downstream this signals a broken invariance, not bad user input. */
struct outside_span_error : std::runtime_error {
    explicit outside_span_error(const std::string& what) : std::runtime_error(what) {}
};

struct not_semisimple_error : std::runtime_error {
    explicit not_semisimple_error(const std::string& what) : std::runtime_error(what) {}
};

struct not_absolutely_simple_error : std::runtime_error {
    explicit not_absolutely_simple_error(const std::string& what) : std::runtime_error(what) {}
};

struct no_pivotal_iso_error : std::runtime_error {
    explicit no_pivotal_iso_error(const std::string& what) : std::runtime_error(what) {}
};

/* The antipode does not stabilize the annihilator ideal; the quotient trace
 * is undefined (module not self-dual). */
struct annihilator_not_stable_error : std::runtime_error {
    explicit annihilator_not_stable_error(const std::string& what) : std::runtime_error(what) {}
};

struct normalization_error : std::runtime_error {
    explicit normalization_error(const std::string& what) : std::runtime_error(what) {}
};

struct validation_error : std::runtime_error {
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace hopfind
