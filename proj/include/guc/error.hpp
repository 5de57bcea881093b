#pragma once

#include <stdexcept>
#include <string>

namespace guc {

/// Scheme parameters (n, k) outside the range the scheme supports.
struct invalid_params : std::invalid_argument {
    explicit invalid_params(const std::string& what) : std::invalid_argument(what) {}
};

/// Integer outside 0..max_value for the scheme.
struct value_out_of_range : std::out_of_range {
    explicit value_out_of_range(const std::string& what) : std::out_of_range(what) {}
};

/// Word that the encoder never emits for the given scheme and parameters.
struct invalid_codeword : std::invalid_argument {
    explicit invalid_codeword(const std::string& what) : std::invalid_argument(what) {}
};

struct width_mismatch : std::invalid_argument {
    explicit width_mismatch(const std::string& what) : std::invalid_argument(what) {}
};

/// Codeword text that is empty or contains characters other than '0' and '1'.
struct invalid_text : std::invalid_argument {
    explicit invalid_text(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace guc
