#pragma once

#include <stdexcept>
#include <string>

namespace rcc {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct not_admissible : error { using error::error; };
struct no_marked_minus_one : error { using error::error; };
struct invalid_pair : error { using error::error; };
struct non_standard : error { using error::error; };
struct not_contractible : error { using error::error; };
struct multiple_minus_ones : error { using error::error; };
struct malformed_forest : error { using error::error; };
struct missing_variable : error { using error::error; };
struct unsupported_lambda : error { using error::error; };
struct invalid_args : error { using error::error; };
// Raised when a maximal-twig decomposition is not well defined (e.g. a
// connected component that is itself an admissible chain, so the notion of
// "twig of the rest" has no anchor).
struct unsupported_divisor : error { using error::error; };

} // namespace rcc
