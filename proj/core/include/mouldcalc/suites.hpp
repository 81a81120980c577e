#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "mouldcalc/word.hpp"

namespace mouldcalc {

// Bounds for the verification sweeps. Defaults are sized so that `all`
// finishes in minutes on a laptop.
struct Bounds {
    int max_len = 4;                              // single-word sweeps
    std::vector<Letter> letters = {Letter{1}, Letter{2}, Letter{3}};
    int pair_total = 6;                           // |u|+|v| (+|t|) for cheap pair/triple laws
    int heavy_pair_total = 5;                     // for internal-coproduct and antipode products
    long long max_weight = 6;                     // symmetrel generator certification
    long long growth_weight = 8;                  // growth audits
    int max_vertices = 4;                         // forest sweeps
    std::vector<Letter> forest_letters = {Letter{1}, Letter{2}};
    int wqsh_total = 6;                           // p+q for weak quasi-shuffle sweeps
    int paquets_total = 5;                        // |u|+|v| for the block-product identity
    int num_seeds = 5;                            // random-mould repetitions

    std::string text() const;
};

enum class CheckStatus { Pass, Fail, ExpectedFail };

struct CheckLine {
    std::string name;
    CheckStatus status = CheckStatus::Pass;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    Bounds bounds;
    std::uint64_t seed = 0;
    std::vector<CheckLine> lines;
    double duration_seconds = 0;  // never rendered, so reports stay reproducible

    bool ok() const;  // no genuine failures; expected failures count as pass
    std::string render() const;
};

struct SuiteBoundsError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// words-hopf, gamma-bialgebra, comodule, wqsh, qsym-oracle, mould-algebra,
// growth, forest-hopf, forest-gamma, arborification, arbomould-algebra,
// s-series. "all" runs every one of them in this order.
std::vector<std::string> suite_names();

// Throws std::invalid_argument on an unknown name and SuiteBoundsError when
// the estimated basis size exceeds one million elements.
SuiteReport run_suite(const std::string& name, const Bounds& bounds, std::uint64_t seed);

// Expands "all"; otherwise a single report.
std::vector<SuiteReport> run_suites(const std::string& name, const Bounds& bounds,
                                    std::uint64_t seed);

std::string render_reports(const std::vector<SuiteReport>& reports);

}  // namespace mouldcalc
