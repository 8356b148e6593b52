#include "wwlab/csv.hpp"
#include "wwlab/dno/dno.hpp"
#include "wwlab/errors.hpp"
#include "wwlab/spectral/norms.hpp"

namespace wwlab {

DnoCompareReport dno_compare(const SpectralField& h_shape, const SpectralField& psi_shape, int order,
                             const std::vector<double>& epsilons, const BieOptions& opt) {
    require_same_grid(h_shape.grid(), psi_shape.grid());
    if (epsilons.empty()) throw ConfigError("amplitude sweep is empty");
    DnoCompareReport report;
    std::vector<std::pair<double, double>> series;
    for (double eps : epsilons) {
        const SurfaceState s{eps * h_shape, eps * psi_shape, 2.0};
        const auto diff = dno_series(s, order, ProductRule::exact) - dno_bie(s, opt);
        const DnoCompareRow row{eps, order, l2_norm(diff), lebesgue_norm(diff, kInf)};
        report.rows.push_back(row);
        if (row.l2_err > 0.0) series.emplace_back(eps, row.l2_err);
    }
    if (series.size() >= 2) report.fit = loglog_fit(series);
    return report;
}

void write_csv(std::ostream& os, const DnoCompareReport& report) {
    CsvWriter csv(os, {"epsilon", "order", "l2_err", "linf_err"});
    for (const auto& r : report.rows) {
        csv << r.epsilon << r.order << r.l2_err << r.linf_err;
        csv.end_row();
    }
}

}  // namespace wwlab
