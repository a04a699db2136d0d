#include "hopfind/table.hpp"

#include <atomic>
#include <future>
#include <numeric>
#include <ostream>
#include <sstream>
#include <thread>

namespace hopfind {

std::string render_value(const Cyc& c) {
    if (auto q = c.as_rational()) return to_string(*q);
    if (auto e = c.as_zeta_power())
        return "zeta" + std::to_string(c.field().order()) + "^" + std::to_string(*e);
    return c.str();
}

std::vector<Table1Row> table1_rows(const TableOptions& opts) {
    const long N = opts.N;
    std::vector<long> ms;
    for (long m = 1; m < N; ++m)
        if (std::gcd(N, m) == 1) ms.push_back(m);

    auto cell = [N](long m) {
        HopfAlgebra h = book_hopf(N, m);
        Table1Row row;
        row.m = m;
        auto center = center_basis(h);
        row.center_dim = static_cast<long>(center.size());
        Mat e = indicator_e_on_basis(h.field(), center, h.dim(), 1, h.antipode_sq());
        row.nu_1_1 = trace(e);
        row.nu_1_3 = trace(mat_pow(e, 3));
        row.nu_1_9 = trace(mat_pow(e, 9));
        row.kmn_m1 = s2_integral_scalar(h);
        auto dlog = row.kmn_m1.as_zeta_power();
        if (!dlog)
            throw validation_error("nu_{-1} is not a power of zeta_N");
        row.e_text = *dlog;
        row.e_table = mod_pos(-row.e_text, N);
        return row;
    };

    long threads = opts.threads > 0 ? opts.threads
                                    : static_cast<long>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;

    std::vector<Table1Row> rows(ms.size());
    if (threads == 1) {
        for (size_t i = 0; i < ms.size(); ++i) {
            rows[i] = cell(ms[i]);
            if (opts.progress)
                *opts.progress << "table1: m=" << ms[i] << " done (center dim "
                               << rows[i].center_dim << ")" << std::endl;
        }
    } else {
        // independent cells; ordered assembly keeps output deterministic
        std::vector<std::packaged_task<Table1Row()>> tasks;
        std::vector<std::future<Table1Row>> futs;
        tasks.reserve(ms.size());
        futs.reserve(ms.size());
        for (long m : ms) {
            tasks.emplace_back([m, &cell]() { return cell(m); });
            futs.push_back(tasks.back().get_future());
        }
        std::atomic<size_t> cursor{0};
        std::vector<std::thread> pool;
        for (long t = 0; t < threads; ++t)
            pool.emplace_back([&]() {
                for (;;) {
                    size_t i = cursor.fetch_add(1);
                    if (i >= tasks.size()) return;
                    tasks[i]();
                }
            });
        for (auto& t : pool) t.join();
        for (size_t i = 0; i < ms.size(); ++i) {
            rows[i] = futs[i].get();
            if (opts.progress)
                *opts.progress << "table1: m=" << ms[i] << " done (center dim "
                               << rows[i].center_dim << ")" << std::endl;
        }
    }
    return rows;
}

std::string table1_csv(const std::vector<Table1Row>& rows) {
    std::ostringstream os;
    os << "m,nu_1_1,nu_1_3,nu_1_9,e_table_reading,e_text_reading\n";
    for (const Table1Row& r : rows)
        os << r.m << "," << render_value(r.nu_1_1) << "," << render_value(r.nu_1_3) << ","
           << render_value(r.nu_1_9) << "," << r.e_table << "," << r.e_text << "\n";
    return os.str();
}

std::string table1_e_note() {
    return "e_table_reading = (-e_text_reading) mod N: the tabulated residue follows the "
           "(m^2-1) mod N convention, while the defining relation omega^e = nu_{-1} gives "
           "(1-m^2) mod N; the two readings differ by sign.";
}

} // namespace hopfind
