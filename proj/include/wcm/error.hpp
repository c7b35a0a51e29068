#pragma once

#include <stdexcept>
#include <string>

namespace wcm {

// Error categories map to CLI exit codes: input errors exit 2,
// verification failures exit 1.
enum class errc {
    ambient_mismatch,
    disjointness,
    separation,
    parity,
    size,
    negative_box,
    parameter,
    malformed_profile,
    not_in_m,
    decomposable,
    non_square,
    truncation_too_small,
    not_closed,
    rank_degenerate,
    invalid_web,
    relation_failure,
    spec_mismatch,
    validation_failure,
    io,
};

class error : public std::runtime_error {
  public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

inline void require(bool cond, errc code, const std::string& what) {
    if (!cond)
        fail(code, what);
}

} // namespace wcm
