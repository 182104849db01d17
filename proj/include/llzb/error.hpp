#pragma once

#include <stdexcept>
#include <string>

namespace llzb {

enum class errc {
  invalid_generator,
  group_too_large,
  not_normal,
  invalid_action,
  unknown_catalog_entry,
  catalog_certification_failed,
  not_prime,
  dimension_mismatch,
  field_mismatch,
  field_too_small,
  not_nilpotent,
  not_idempotent,
  not_primitive,
  not_ideal,
  not_p_group,
  not_abelian,
  not_coprime,
  domination_failure,
  correspondence_failure,
  classification_violation,
  internal_inconsistency,
  config_error,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw error(code, msg); }

inline void require(bool cond, errc code, const std::string& msg) {
  if (!cond) fail(code, msg);
}

}  // namespace llzb
