#include "gridlink/error.hpp"

namespace gridlink {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::duplicate_entry: return "DuplicateEntry";
    case ErrorKind::out_of_range: return "OutOfRange";
    case ErrorKind::odd_length: return "OddLength";
    case ErrorKind::too_short: return "TooShort";
    case ErrorKind::length_mismatch: return "LengthMismatch";
    case ErrorKind::index_out_of_range: return "IndexOutOfRange";
    case ErrorKind::half_sum_not_integer: return "HalfSumNotInteger";
    case ErrorKind::cyclic_chain: return "CyclicChain";
    case ErrorKind::entry_out_of_range: return "EntryOutOfRange";
    case ErrorKind::invalid_argument: return "InvalidArgument";
    case ErrorKind::order_mismatch: return "OrderMismatch";
    case ErrorKind::too_many_symbols: return "TooManySymbols";
    case ErrorKind::odd_order: return "OddOrder";
    case ErrorKind::odd_moment_nonzero: return "OddMomentNonzero";
    case ErrorKind::too_large: return "TooLarge";
    case ErrorKind::cross_check_mismatch: return "CrossCheckMismatch";
    case ErrorKind::parse_error: return "ParseError";
    case ErrorKind::io_error: return "IoError";
  }
  return "Unknown";
}

}  // namespace gridlink
