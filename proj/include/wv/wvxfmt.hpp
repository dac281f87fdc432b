#ifndef WV_WVXFMT_HPP
#define WV_WVXFMT_HPP

#include <map>
#include <string>

#include "wv/backaction.hpp"
#include "wv/qstate.hpp"

namespace wv {

/// Parse rejection carrying the 1-based position of the offending token.
class ParseError : public Error {
public:
    ParseError(int line, int col, const std::string& message)
        : Error("line " + std::to_string(line) + ", col " + std::to_string(col) + ": " + message),
          line_(line),
          col_(col) {}
    int line() const { return line_; }
    int col() const { return col_; }

private:
    int line_;
    int col_;
};

struct SyntaxError : ParseError {
    using ParseError::ParseError;
};
struct IndexOutOfRange : ParseError {
    using ParseError::ParseError;
};
struct ZeroState : ParseError {
    using ParseError::ParseError;
};
struct DuplicateDirective : ParseError {
    using ParseError::ParseError;
};

/// One pre-/post-selected experiment on a finite path basis, as described
/// by a .wvx file. Amplitudes are stored normalized; indices missing from
/// the sparse maps are zero.
struct ExperimentSpec {
    int dim = 0;
    std::string name;
    std::map<int, cdouble> pre_amplitudes;
    std::map<int, cdouble> post_amplitudes;
    ComponentSet components;

    StateVector pre_state() const;
    StateVector post_state() const;
};

/// Parse the line-oriented .wvx grammar:
///
///   # comment to end of line
///   dim <positive-int>              required, once, before indexed lines
///   name <string-to-eol>            optional
///   pre  <index> <re> <im>          repeatable
///   post <index> <re> <im>          repeatable
///   component <index> phase <theta>
///   component <index> atten <alpha>
///   component <index> cnum <re> <im>
///
/// LF or CRLF line ends; unknown directives are errors. Amplitudes are
/// normalized at load; stacked component lines on one path compose
/// multiplicatively (one line per (path, kind)).
ExperimentSpec parse_experiment(const std::string& text);

/// Canonical text form: dim, name, pre ascending, post ascending,
/// components ascending by path; shortest round-trip numerals.
/// parse(serialize(s)) structurally equals s.
std::string serialize_experiment(const ExperimentSpec& spec);

}  // namespace wv

#endif  // WV_WVXFMT_HPP
