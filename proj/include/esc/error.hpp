#pragma once

#include <stdexcept>
#include <string>

namespace esc {

class error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

#define ESC_DEFINE_ERROR(name)                                                 \
  class name : public error {                                                  \
  public:                                                                      \
    using error::error;                                                        \
  }

ESC_DEFINE_ERROR(parameter_error);
ESC_DEFINE_ERROR(invalid_triple_error);
ESC_DEFINE_ERROR(degenerate_triple_error);
ESC_DEFINE_ERROR(degenerate_tuple_error);
ESC_DEFINE_ERROR(capacity_error);
ESC_DEFINE_ERROR(unrealizable_pattern_error);
ESC_DEFINE_ERROR(template_error);
ESC_DEFINE_ERROR(subcube_error);
ESC_DEFINE_ERROR(collinear_error);
ESC_DEFINE_ERROR(point_set_error);
ESC_DEFINE_ERROR(emission_error);
ESC_DEFINE_ERROR(parse_error);
ESC_DEFINE_ERROR(config_error);

#undef ESC_DEFINE_ERROR

} // namespace esc
