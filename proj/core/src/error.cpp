#include "qpp/error.hpp"

namespace qpp {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::invalid_argument: return "invalid_argument";
    case Errc::wrong_length: return "wrong_length";
    case Errc::duplicate_value: return "duplicate_value";
    case Errc::value_out_of_range: return "value_out_of_range";
    case Errc::word_size_mismatch: return "word_size_mismatch";
    case Errc::insufficient_key: return "insufficient_key";
    case Errc::overflow: return "overflow";
    case Errc::too_large: return "too_large";
    case Errc::bad_magic: return "bad_magic";
    case Errc::bad_version: return "bad_version";
    case Errc::truncated: return "truncated";
    case Errc::corrupt_header: return "corrupt_header";
    case Errc::corrupt_table: return "corrupt_table";
    case Errc::length_mismatch: return "length_mismatch";
    case Errc::io_error: return "io_error";
  }
  return "unknown";
}

} // namespace qpp
