// CSV output: comma separated, '.' decimal point, 17 significant digits so
// every double round-trips exactly, mandatory header row.

#ifndef BOUNCER_CSV_HPP
#define BOUNCER_CSV_HPP

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

namespace bouncer {

inline std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

class CsvWriter {
public:
    CsvWriter(std::ostream& out, const std::vector<std::string>& header)
        : out_(out), columns_(header.size()) {
        for (std::size_t i = 0; i < header.size(); ++i) {
            if (i) out_ << ',';
            out_ << header[i];
        }
        out_ << '\n';
    }

    void row(const std::vector<double>& values) {
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (i) out_ << ',';
            out_ << format_double(values[i]);
        }
        out_ << '\n';
    }

    void row_mixed(const std::vector<std::string>& values) {
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (i) out_ << ',';
            out_ << values[i];
        }
        out_ << '\n';
    }

    std::size_t columns() const { return columns_; }

private:
    std::ostream& out_;
    std::size_t columns_;
};

}  // namespace bouncer

#endif  // BOUNCER_CSV_HPP
