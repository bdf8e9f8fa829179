#pragma once

#include <stdexcept>
#include <string>

namespace qpp {

/// Machine-checkable failure categories. Every qpp::Error carries one,
/// so callers can branch without parsing messages.
enum class Errc {
  invalid_argument,    // structural parameter out of range (n, M, samples, ...)
  wrong_length,        // a sequence has the wrong element count
  duplicate_value,     // mapping contains a repeated value
  value_out_of_range,  // a word or mapping entry exceeds 2^n - 1
  word_size_mismatch,  // two objects with different n were combined
  insufficient_key,    // key material exhausted
  overflow,            // arithmetic would not fit the result type
  too_large,           // exact/dense computation requested beyond its cap
  bad_magic,           // file does not start with the expected magic
  bad_version,         // unsupported format version
  truncated,           // byte stream ended early
  corrupt_header,      // header field out of range
  corrupt_table,       // serialized table is not a bijection
  length_mismatch,     // declared lengths inconsistent with actual data
  io_error,            // underlying stream failure
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

} // namespace qpp
