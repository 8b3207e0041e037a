#pragma once

#include "tanaka/algebra.hpp"
#include "tanaka/certifier.hpp"
#include "tanaka/extension.hpp"
#include "tanaka/prolongation.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tanaka {

/// Reads the algebra text format:
///
///   algebra NAME
///   basis X:-1 Y:-1 Z:-2
///   bracket [X,Y] = Z
///   bracket [X,Z] = 3/2 A - B
///
/// `#` starts a comment. Unlisted brackets are zero. Throws ParseError.
Algebra parse_algebra(const std::string& text);
/// Reads a file; throws std::runtime_error when it cannot be opened.
Algebra load_algebra(const std::string& path);
/// Canonical document: one basis line, brackets in (i, j) order.
std::string serialize_algebra(const Algebra& a);

/// Cocycle file for `extend`:
///
///   x X
///   module Y1 Y2 Y3            # optional, defaults to Y1..Ys
///   cocycle [Z1,Z2] = Y3
///
/// Throws ParseError.
ExtensionData parse_cocycle(const std::string& text, const Algebra& base, int s);
/// Writes a cochain in the same format, with module labels Y1..Ys.
std::string serialize_cocycle(const Algebra& base, std::size_t x_index, const Cochain2& c);

/// Readable linear combination such as "3/2 A - B"; "0" when empty.
std::string format_terms(const std::vector<std::string>& labels, const Vector& coords);

struct Report {
    std::string algebra;
    std::vector<std::size_t> dims;
    int depth = 0;
    std::string kind; ///< finite, infinite, degenerate_infinite, inconclusive
    std::optional<Vector> witness;
    std::optional<std::size_t> total_dim;
    std::vector<std::size_t> layers;
    std::string version;

    // text output only
    std::vector<std::string> basis_labels;
    std::string note;
    std::optional<double> seconds;

    /// Fields that the JSON form carries.
    bool same_json_fields(const Report& other) const;
};

Report make_report(const Algebra& a, const TypeVerdict& v);
Report make_report(const Algebra& a, const IterationVerdict& v);

enum class ReportFormat { Json, Text };

std::string emit_report(const Report& r, ReportFormat format);
/// Inverse of the JSON form. Throws std::invalid_argument.
Report report_from_json(const std::string& json);

std::string version();

} // namespace tanaka
