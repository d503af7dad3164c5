#ifndef LSA_ERRORS_HPP
#define LSA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lsa {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Vector/labeling length does not match the energy it is used with.
struct dimension_error : error {
  using error::error;
};

// Invalid argument value (negative lambda, bad density, ...).
struct parameter_error : error {
  using error::error;
};

// Energy handed to the graph-cut path has a positive pairwise coefficient.
struct not_submodular_error : error {
  using error::error;
};

struct parse_error : error {
  using error::error;
};

struct io_error : error {
  using error::error;
};

}

#endif
