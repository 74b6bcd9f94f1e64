#pragma once

#include <stdexcept>
#include <string>

namespace qentropy {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct negative_probability : error {
    using error::error;
};

struct not_normalized : error {
    using error::error;
};

struct empty_input : error {
    using error::error;
};

struct ragged_matrix : error {
    using error::error;
};

struct invalid_parameter : error {
    using error::error;
};

struct domain_error : error {
    using error::error;
};

struct length_mismatch : error {
    using error::error;
};

} // namespace qentropy
