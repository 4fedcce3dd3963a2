#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "pcf/api.hpp"

namespace pcf::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kDomain = 2,
    kConvergence = 3,
    kSelftest = 4,
};

struct Range {
    double lo = 0.0, hi = 0.0, step = 1.0;
};

enum class Format { Csv, Json };

struct TableSpec {
    Func func = Func::U;
    bool derivative = false;
    Range a_range, x_range;
    Format format = Format::Csv;
    bool scaled = false;
    double tol = kDefaultTol;
};

inline constexpr long kMaxRows = 10'000'000;

// Default tolerance, overridden by the PCF_TOL environment variable.
double default_tol();

// "%.17g" with a period decimal separator.
std::string fmt(double v);

int cmd_eval(const EvalRequest& req, std::ostream& out, std::ostream& err);
int cmd_table(const TableSpec& spec, std::ostream& out, std::ostream& err);
int cmd_contour(const std::string& regime, double t, int samples, std::ostream& out, std::ostream& err);

struct SelftestCell {
    std::string family;
    double a = 0.0, t = 0.0;
    double residual = 0.0;
    double limit = 0.0;
    std::string note;
    bool pass() const { return residual <= limit; }
};

struct SelftestReport {
    std::vector<SelftestCell> cells;
    bool pass() const;
};

SelftestReport run_selftest(double gamma_perturbation = 0.0);
int cmd_selftest(double gamma_perturbation, std::ostream& out, std::ostream& err);

// Full command line; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pcf::cli
