#pragma once

#include <iosfwd>

#include "hopfind/adjoint.hpp"

namespace hopfind {

/*
 * The N = 27 gauge-invariant sweep: nu_{1,r} of the adjoint object for
 * r in {1, 3, 9} over all 18 valid m, plus the residue of nu_{-1}^KMN
 * under both sign readings (omega^e = nu_{-1} gives e_text; e_table is
 * its negation mod N).
 */
struct Table1Row {
    long m = 0;
    Cyc nu_1_1, nu_1_3, nu_1_9;
    long center_dim = 0;
    Cyc kmn_m1;            // nu_{-1}^KMN = scalar of S^2 on the integral
    long e_table = 0;      // (-e_text) mod N
    long e_text = 0;       // discrete log of kmn_m1 in omega
};

struct TableOptions {
    long N = 27;
    long threads = 0;           // 0 = hardware concurrency
    std::ostream* progress = nullptr;   // diagnostic stream, never the data stream
};

std::vector<Table1Row> table1_rows(const TableOptions& opts = {});

// CSV: header + one row per m, byte-stable across runs and thread counts
std::string table1_csv(const std::vector<Table1Row>& rows);

// note attached to human/JSON output describing the two e-residue readings
std::string table1_e_note();

// exact rendering used by the CLI: integer/rational when the value is
// rational, "zetaN^k" for pure root-of-unity powers, polynomial form otherwise
std::string render_value(const Cyc& c);

} // namespace hopfind
