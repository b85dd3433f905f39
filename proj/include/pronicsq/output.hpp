#ifndef PRONICSQ_OUTPUT_HPP
#define PRONICSQ_OUTPUT_HPP

#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "pronicsq/arith.hpp"

namespace pronicsq::output {

enum class Format { table, json, csv };

enum class RecordKind {
    witness,
    factor_pair,
    representation,
    circle_sample,
    scan_row,
    scan_summary,
    run,
    multiplicity_row,
};

// Empty fields render as "" in CSV and null in JSON (prime scan rows).
struct Empty {};

// Integers print in decimal, reals with 12 significant digits; the rendered
// text is byte-identical between the JSON and CSV writers.
using Value = std::variant<Empty, u64, long double, std::string>;

struct Field {
    std::string key;
    Value value;
};

struct Record {
    RecordKind kind;
    std::vector<Field> fields;
};

std::string render_value(const Value& v);

const char* kind_name(RecordKind kind);

// Fixed CSV header for a record kind ("u,t,n", "u,m,k,f1,f2", ...).
std::string csv_header(RecordKind kind);

std::string to_csv_line(const Record& r);
std::string to_json_object(const Record& r);

// Incremental writers so large scans stream instead of buffering.
class JsonArrayWriter {
public:
    explicit JsonArrayWriter(std::ostream& os);
    ~JsonArrayWriter();
    void add(const Record& r);
    void add_raw(const std::string& json_object);
    void close();

private:
    std::ostream& os_;
    bool first_ = true;
    bool closed_ = false;
};

class CsvWriter {
public:
    explicit CsvWriter(std::ostream& os);
    void add(const Record& r);  // emits the header before the first row

private:
    std::ostream& os_;
    bool header_written_ = false;
};

std::string json_escape(const std::string& s);
std::string format_real(long double v);  // 12 significant digits

}  // namespace pronicsq::output

#endif
