#ifndef RINGTK_RING_IO_HPP
#define RINGTK_RING_IO_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "ringtk/finite_ring.hpp"

namespace ringtk {

/// Ring file format:
///   ring <name> order <n>
///   <n rows of n indices>      addition table
///   mul
///   <n rows of n indices>      multiplication table
///   names                      optional; followed by n whitespace-separated
///   <n display strings>        labels (no spaces inside a label)
///
/// The parser normalizes the additive identity to index 0 (relabeling if the
/// file puts it elsewhere), then validates; a file whose tables fail
/// validation is rejected. Parse errors throw RingParseError, axiom failures
/// throw RingValidationError carrying the report.
struct RingParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct RingValidationError : std::runtime_error {
    RingValidationError(std::string msg, ValidationReport rep)
        : std::runtime_error(std::move(msg)), report(std::move(rep)) {}
    ValidationReport report;
};

FiniteRing parse_ring(std::istream& in);
FiniteRing parse_ring_file(const std::string& path);

/// Serializes in the file format above (always includes the names section).
std::string format_ring(const FiniteRing& ring);

} // namespace ringtk

#endif
