#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace steptab {

struct Table;

// ---------------------------------------------------------------------------
// Step-program AST.
//
// A program is a sequence of tagged steps. The first step is always the
// PLAN comment and carries no operation; every other step carries exactly
// one, and the last step is the single ANSWER step.
//
// Canonical text form, one tag comment line per step followed by one
// operation line (PLAN excepted):
//
//   # PLAN: Filter the relevant rows and average the attendance.
//   # FILTER: Keep iterations in range.
//   filter Iteration ge "GameStorm 10"
//   # PARSING: Attendance holds numbers as text.
//   parse_numeric Attendance
//   # AGGREGATE: Average attendance.
//   aggregate mean Attendance
//   # ANSWER:
//   answer scalar
//
// Tokens: bare words, "double-quoted string literals" and [bracketed column
// names] (for names containing spaces). In column positions a quoted token
// is also accepted as a column name; the canonical printer always emits
// brackets there. In `answer`, a quoted token is a literal, `scalar` refers
// to the value of the last aggregate, and anything else is a column.
// ---------------------------------------------------------------------------

enum class StepTag { Plan, Filter, Parsing, Aggregate, Select, Sort, Limit, Compute, Group, Answer };

std::string_view tag_name(StepTag tag);

enum class Comparator { Eq, Ne, Lt, Le, Gt, Ge, Contains, IsMissing, NotMissing };
enum class AggregateFn { Sum, Mean, Min, Max, Count, CountDistinct };
enum class SortOrder { Asc, Desc };
enum class LimitAnchor { FromStart, FromEnd };
enum class ArithOp { Add, Sub, Mul, Div };

/// A string or number literal appearing in an operation.
struct Literal {
    std::variant<std::string, double> value;

    bool operator==(const Literal&) const = default;
    bool is_number() const { return value.index() == 1; }
    std::string render() const;  // canonical value rendering (no quotes)
};

struct FilterOp {
    std::string column;
    Comparator cmp;
    std::optional<Literal> literal;  // absent iff cmp is is-missing/not-missing
    bool operator==(const FilterOp&) const = default;
};

struct ParseNumericOp {
    std::string column;
    bool operator==(const ParseNumericOp&) const = default;
};

struct ParseDateOp {
    std::string column;
    bool operator==(const ParseDateOp&) const = default;
};

struct AggregateOp {
    AggregateFn fn;
    std::string column;
    bool operator==(const AggregateOp&) const = default;
};

struct SelectOp {
    std::vector<std::string> columns;
    bool operator==(const SelectOp&) const = default;
};

struct SortOp {
    std::string column;
    SortOrder order;
    bool operator==(const SortOp&) const = default;
};

struct LimitOp {
    std::int64_t count;
    LimitAnchor anchor;
    bool operator==(const LimitOp&) const = default;
};

struct ComputeOp {
    std::string new_column;
    std::string left;  // column
    ArithOp op;
    std::variant<std::string, double> right;  // column name or number literal
    bool operator==(const ComputeOp&) const = default;
};

struct GroupAggregateOp {
    std::string key_column;
    AggregateFn fn;
    std::string value_column;
    bool operator==(const GroupAggregateOp&) const = default;
};

struct AnswerOp {
    enum class Kind { Column, Scalar, Literals };
    Kind kind;
    std::string column;             // Kind::Column
    std::vector<Literal> literals;  // Kind::Literals
    bool operator==(const AnswerOp&) const = default;
};

using Operation = std::variant<FilterOp, ParseNumericOp, ParseDateOp, AggregateOp, SelectOp,
                               SortOp, LimitOp, ComputeOp, GroupAggregateOp, AnswerOp>;

struct Step {
    StepTag tag;
    std::string comment;  // single line, emitted verbatim after "# TAG:"
    std::optional<Operation> op;

    bool operator==(const Step&) const = default;
};

struct StepProgram {
    std::vector<Step> steps;

    bool operator==(const StepProgram&) const = default;

    /// Number of operation-bearing steps (the paper's K).
    std::size_t operation_count() const;
};

class ProgramParseError : public std::runtime_error {
  public:
    enum class Kind {
        MissingPlan,
        UnknownTag,
        UnknownOperation,
        ArityError,
        MissingAnswer,
        MissingOperation,
        TrailingGarbage,
    };

    ProgramParseError(Kind kind, std::size_t line, std::string message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message),
          kind_(kind),
          line_(line) {}

    Kind kind() const { return kind_; }
    std::size_t line() const { return line_; }

  private:
    Kind kind_;
    std::size_t line_;
};

/// Parses canonical program text into a validated StepProgram. Blank lines
/// are ignored. parse_program(render_program(p)) == p for every valid p.
StepProgram parse_program(std::string_view source);

/// Canonical, deterministic text form. render_program(parse_program(t)) is
/// byte-identical to t for canonical t.
std::string render_program(const StepProgram& p);

/// Renders a single operation line (used for traces and error messages).
std::string render_operation(const Operation& op);

struct SchemaDiagnostic {
    std::size_t step_index;  // index into StepProgram::steps
    std::string column;

    bool operator==(const SchemaDiagnostic&) const = default;
};

/// Pre-execution column check: walks the steps tracking the effect of
/// select/compute/group on the live column set and reports every reference
/// to a column that does not exist at its point of use. Diagnostics, not
/// failures — an empty list means the program is schema-clean.
std::vector<SchemaDiagnostic> validate_against_schema(const StepProgram& p, const Table& t);

/// Name that a group_aggregate step gives its aggregated output column.
std::string group_output_column(const GroupAggregateOp& op);

}  // namespace steptab
