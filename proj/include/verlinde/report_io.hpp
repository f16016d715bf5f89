#ifndef VERLINDE_REPORT_IO_HPP
#define VERLINDE_REPORT_IO_HPP

#include <string>
#include <vector>

#include "verlinde/verlinde.hpp"

namespace verlinde {

// Wire form of a decomposition query result. Rationals and big integers
// travel as strings ("p/q", integers as "n"); summands are ordered by
// torsion order ascending, then lexicographically by character, so
// identical queries serialize identically.
struct SummandRecord {
    unsigned order = 1;
    unsigned char_a = 0;
    unsigned char_b = 0;
    unsigned rank = 1;
    long det_degree = 0;
    Rat multiplicity;
    unsigned num_characters = 1;

    friend bool operator==(const SummandRecord&, const SummandRecord&) = default;
};

struct OutputRecord {
    std::string schema_version = "1";
    std::string query;  // echo of the request, e.g. "decompose rank=2 level=2"
    std::string status = "ok";
    unsigned moduli_rank = 1;
    unsigned level = 1;
    unsigned h = 1, r = 1, k = 1;
    bool has_q = false;
    unsigned q = 0;
    bool line_bundle_split = false;
    std::string theta_label;
    bool has_theta_shift = false;
    int theta_shift = 0;
    Int rank_total;
    std::vector<SummandRecord> summands;

    friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

OutputRecord make_output_record(const DecompositionReport& rep, const std::string& query);

std::string to_json(const OutputRecord& rec);
OutputRecord from_json(const std::string& text);
std::string to_csv(const OutputRecord& rec);
std::string to_text(const OutputRecord& rec);

}  // namespace verlinde

#endif
