#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace grasscw {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define GRASSCW_ERROR(name)                  \
  struct name : error {                      \
    using error::error;                      \
  }

GRASSCW_ERROR(not_involution);
GRASSCW_ERROR(sign_mismatch);
GRASSCW_ERROR(bad_sign);
GRASSCW_ERROR(index_out_of_range);
GRASSCW_ERROR(type_mismatch);
GRASSCW_ERROR(not_covering);
GRASSCW_ERROR(d_not_stable);
GRASSCW_ERROR(singular_xi);
GRASSCW_ERROR(bad_variant);
GRASSCW_ERROR(complex_invalid);
GRASSCW_ERROR(not_rank1_cell);
GRASSCW_ERROR(cholesky_failure);
GRASSCW_ERROR(rank_ambiguous);
GRASSCW_ERROR(wrong_cell);
GRASSCW_ERROR(antipodal_input);
GRASSCW_ERROR(bad_cover);
GRASSCW_ERROR(off_curve);
GRASSCW_ERROR(degenerate_frame);

#undef GRASSCW_ERROR

struct parse_error : error {
  parse_error(const std::string& what, std::size_t pos)
      : error(what + " at position " + std::to_string(pos)), position(pos) {}
  std::size_t position;
};

}  // namespace grasscw
